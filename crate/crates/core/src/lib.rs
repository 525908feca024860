//! Exact-arithmetic toolkit for shifted polynomial coefficient sequences.
//!
//! Given a polynomial `P(x) = sum a_i x^i` with nonnegative non-decreasing
//! coefficients and a rational `d > 0`, the coefficients `b_j` of
//! `P(x + d) = sum b_j x^j` form a unimodal sequence. This crate computes
//! that shift exactly (by two independent algorithms), classifies sequences
//! (unimodality, mode sets, log-concavity, internal zeros), predicts mode
//! locations from closed forms, and machine-verifies the whole catalog of
//! mode-location statements over large parameter sweeps — including an
//! evidence scanner for the open conjecture that modes move monotonically
//! in `d`.
//!
//! Everything is exact: coefficients and shifts are arbitrary-precision
//! rationals in canonical form, and there is no tolerance parameter
//! anywhere.
//!
//! All operations are pure functions on immutable values and safe to call
//! concurrently; the sweep engine parallelizes across instances and merges
//! results in instance order, so reports are deterministic.

pub mod error;
pub mod modes;
pub mod rational;
pub mod sequence;
pub mod shift;
pub mod verifier;

pub use error::{Error, Result};
pub use modes::{
    check_basic_inequality, m_bar, m_under, modes_of_power, predict_general, predict_q_modes,
    PolyShape, Prediction, PredictionKind, Rule,
};
pub use rational::{format_rational, parse_rational, Rational};
pub use sequence::{analyze, CoeffSeq, ModeAnalysis, ModeInterval};
pub use shift::{
    binomial, difference_identity, horner_shift, q_coeffs, q_difference, shift, shift_with,
    ShiftAlgorithm, ShiftResult,
};
pub use verifier::{
    check, find_near_one_threshold, scan_conjecture, sweep, ClaimId, DGridSpec, Instance,
    MonotonicityReport, Outcome, PolySource, Profile, SweepConfig, SweepReport, VerdictRecord,
};
