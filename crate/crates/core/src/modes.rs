//! Closed-form mode predictors for shifted coefficient sequences.
//!
//! For a degree-`m` polynomial and a shift `d > 0`, the two index anchors
//!
//! ```text
//! m_bar(d)   = ceil((m - d) / (d + 1))
//! m_under(d) = floor(m / (d + 1))
//! ```
//!
//! locate the modes of `P(x + d)`. Each statement in the claim catalog
//! (see [`crate::verifier::ClaimId`]) that predicts mode locations is
//! exposed here as a checkable [`Prediction`]: an exact mode set, a
//! candidate superset, bounds on the smallest/greatest mode, or a tail
//! shape, tagged with the rule that produced it. The verifier confronts
//! every prediction with ground truth computed by the shift engine.
//!
//! Predictors for generic polynomials take structural flags rather than
//! coefficients: the statements depend on `P` only through membership in
//! the monic non-decreasing class and the two exceptional members `x^m`
//! and `Q_m = 1 + x + ... + x^m`. All integrality side conditions are
//! decided exactly on rationals; floors and ceilings go through Euclidean
//! division, never floating point.

use num::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::{ceil_int, floor_int, format_rational, int, is_positive_integer, Rational};
use crate::sequence::{CoeffSeq, ModeAnalysis, ModeInterval};
use crate::shift::q_coeffs;

fn require_positive(d: &Rational) -> Result<()> {
    if d.is_positive() {
        Ok(())
    } else {
        Err(Error::NonPositiveShift(format_rational(d)))
    }
}

/// `ceil((m - d) / (d + 1))`, exactly. Always lands in `0..=m`.
pub fn m_bar(m: usize, d: &Rational) -> Result<usize> {
    require_positive(d)?;
    let value = (int(m as i64) - d) / (d + Rational::one());
    Ok(ceil_int(&value).to_usize().expect("m_bar lies in 0..=m"))
}

/// `floor(m / (d + 1))`, exactly. Always lands in `0..=m`.
pub fn m_under(m: usize, d: &Rational) -> Result<usize> {
    require_positive(d)?;
    let value = int(m as i64) / (d + Rational::one());
    Ok(floor_int(&value).to_usize().expect("m_under lies in 0..=m"))
}

/// The anchor inequality `m - d <= (d + 1) * m_bar < m + 1`, evaluated
/// exactly. This is a theorem; the verifier sweeps it anyway.
pub fn check_basic_inequality(m: usize, d: &Rational) -> Result<bool> {
    let mb = int(m_bar(m, d)? as i64);
    let mid = (d + Rational::one()) * mb;
    Ok(int(m as i64) - d <= mid && mid < int(m as i64 + 1))
}

/// Citation tag naming the rule that produced a prediction. The tags match
/// the claim catalog ids used by the verifier and the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    Lem2_2,
    Cor2_1,
    Prop3_1,
    Prop3_3,
    Prop3_4,
    Cor3_5,
    Prop3_6,
    Cor3_7i,
    Cor3_7ii,
    Prop3_8i,
    Prop3_8ii,
    Prop3_8iii,
    Rem3_1,
    Thm4_1,
    Cor4_2,
    Cor4_3,
    Cor4_4,
    Thm4_5,
}

impl std::fmt::Display for Rule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Rule::Lem2_2 => "Lem2.2",
            Rule::Cor2_1 => "Cor2.1",
            Rule::Prop3_1 => "Prop3.1",
            Rule::Prop3_3 => "Prop3.3",
            Rule::Prop3_4 => "Prop3.4",
            Rule::Cor3_5 => "Cor3.5",
            Rule::Prop3_6 => "Prop3.6",
            Rule::Cor3_7i => "Cor3.7i",
            Rule::Cor3_7ii => "Cor3.7ii",
            Rule::Prop3_8i => "Prop3.8i",
            Rule::Prop3_8ii => "Prop3.8ii",
            Rule::Prop3_8iii => "Prop3.8iii",
            Rule::Rem3_1 => "Rem3.1",
            Rule::Thm4_1 => "Thm4.1",
            Rule::Cor4_2 => "Cor4.2",
            Rule::Cor4_3 => "Cor4.3",
            Rule::Cor4_4 => "Cor4.4",
            Rule::Thm4_5 => "Thm4.5",
        };
        write!(f, "{s}")
    }
}

/// What a prediction claims about the mode structure of the shifted
/// sequence `b_0, ..., b_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PredictionKind {
    /// The mode set is exactly this interval.
    ExactModes(ModeInterval),
    /// The mode set is contained in this index set.
    ModeSubset(Vec<usize>),
    /// This index is a mode.
    ContainsMode(usize),
    /// The smallest mode is at least this index.
    MinModeAtLeast(usize),
    /// The smallest mode is at most this index.
    MinModeAtMost(usize),
    /// The greatest mode is at most this index.
    MaxModeAtMost(usize),
    /// `lo <= M_* <= M^* <= hi`.
    Sandwich { lo: usize, hi: usize },
    /// `b_from >= b_{from+1} >= ... >= b_m` (no unimodality claim).
    TailNonIncreasing { from: usize },
    /// The rule's hypotheses do not hold for this `(m, d)` (see `reason`).
    NotApplicable,
}

impl std::fmt::Display for PredictionKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PredictionKind::ExactModes(iv) => write!(f, "exact modes {iv}"),
            PredictionKind::ModeSubset(s) => {
                let parts: Vec<String> = s.iter().map(|i| i.to_string()).collect();
                write!(f, "modes within {{{}}}", parts.join(", "))
            }
            PredictionKind::ContainsMode(i) => write!(f, "{i} is a mode"),
            PredictionKind::MinModeAtLeast(b) => write!(f, "smallest mode >= {b}"),
            PredictionKind::MinModeAtMost(b) => write!(f, "smallest mode <= {b}"),
            PredictionKind::MaxModeAtMost(b) => write!(f, "greatest mode <= {b}"),
            PredictionKind::Sandwich { lo, hi } => {
                write!(f, "{lo} <= smallest mode <= greatest mode <= {hi}")
            }
            PredictionKind::TailNonIncreasing { from } => {
                write!(f, "non-increasing from index {from}")
            }
            PredictionKind::NotApplicable => write!(f, "not applicable"),
        }
    }
}

/// A theory-derived statement about the modes of a shifted sequence,
/// tagged with the rule that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prediction {
    pub kind: PredictionKind,
    pub rule: Rule,
    pub preconditions_met: bool,
    pub reason: String,
}

impl Prediction {
    fn applicable(kind: PredictionKind, rule: Rule, reason: impl Into<String>) -> Self {
        Prediction {
            kind,
            rule,
            preconditions_met: true,
            reason: reason.into(),
        }
    }

    fn not_applicable(rule: Rule, reason: impl Into<String>) -> Self {
        Prediction {
            kind: PredictionKind::NotApplicable,
            rule,
            preconditions_met: false,
            reason: reason.into(),
        }
    }

    pub fn is_applicable(&self) -> bool {
        self.preconditions_met
    }

    /// True iff the prediction claims an exact mode set.
    pub fn exact_modes(&self) -> Option<ModeInterval> {
        match self.kind {
            PredictionKind::ExactModes(iv) => Some(iv),
            _ => None,
        }
    }

    /// Confront the prediction with ground truth. `seq` is the shifted
    /// coefficient sequence and `analysis` its classification. Every mode
    /// claim presupposes (and therefore asserts) unimodality.
    pub fn holds_for(&self, analysis: &ModeAnalysis, seq: &[Rational]) -> bool {
        let modes = analysis.mode_set;
        match &self.kind {
            PredictionKind::ExactModes(iv) => modes == Some(*iv),
            PredictionKind::ModeSubset(allowed) => {
                modes.is_some_and(|s| s.subset_of(allowed))
            }
            PredictionKind::ContainsMode(i) => modes.is_some_and(|s| s.contains(*i)),
            PredictionKind::MinModeAtLeast(b) => modes.is_some_and(|s| s.lo >= *b),
            PredictionKind::MinModeAtMost(b) => modes.is_some_and(|s| s.lo <= *b),
            PredictionKind::MaxModeAtMost(b) => modes.is_some_and(|s| s.hi <= *b),
            PredictionKind::Sandwich { lo, hi } => {
                modes.is_some_and(|s| s.lo >= *lo && s.hi <= *hi)
            }
            PredictionKind::TailNonIncreasing { from } => {
                let from = (*from).min(seq.len() - 1);
                (from + 1..seq.len()).all(|i| seq[i - 1] >= seq[i])
            }
            PredictionKind::NotApplicable => true,
        }
    }
}

impl std::fmt::Display for Prediction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} [{}]", self.kind, self.rule)
    }
}

/// Is `(m + 1) / (d + 1)` a positive integer? The side condition shared by
/// several exact rules.
pub fn succ_ratio_integral(m: usize, d: &Rational) -> bool {
    is_positive_integer(&(int(m as i64 + 1) / (d + Rational::one())))
}

/// Modes of `(x + d)^m`: two modes `{m_bar, m_bar + 1}` when
/// `(m + 1)/(d + 1)` is a positive integer, otherwise the unique mode
/// `m_bar`.
pub fn modes_of_power(m: usize, d: &Rational) -> Result<Prediction> {
    let mb = m_bar(m, d)?;
    Ok(if succ_ratio_integral(m, d) {
        Prediction::applicable(
            PredictionKind::ExactModes(ModeInterval { lo: mb, hi: mb + 1 }),
            Rule::Prop3_1,
            "(m+1)/(d+1) is a positive integer",
        )
    } else {
        Prediction::applicable(
            PredictionKind::ExactModes(ModeInterval::single(mb)),
            Rule::Prop3_1,
            "(m+1)/(d+1) is not a positive integer",
        )
    })
}

/// The window `1/C(m,2) < d < 1/m` in which the modes of `Q_m(x + d)`
/// avoid both `m_bar - 1` and `m_bar` (empty for m <= 3).
pub fn remark31_window(m: usize, d: &Rational) -> bool {
    if m < 2 {
        return false;
    }
    let pairs = int((m * (m - 1) / 2) as i64);
    let lo = pairs.recip();
    let hi = int(m as i64).recip();
    lo < *d && *d < hi
}

// Per-rule predictors for Q_m(x + d). Each validates its own hypotheses
// and reports NotApplicable outside them.

/// `d = 1`: two modes `{m/2 - 1, m/2}` for even m, else the unique mode
/// `(m - 1)/2`.
pub fn q_rule_d_one(m: usize, d: &Rational) -> Prediction {
    if !d.is_one() {
        return Prediction::not_applicable(Rule::Prop3_3, "requires d = 1");
    }
    let kind = if m % 2 == 0 && m >= 2 {
        PredictionKind::ExactModes(ModeInterval {
            lo: m / 2 - 1,
            hi: m / 2,
        })
    } else if m % 2 == 0 {
        // m = 0: the single coefficient is the only mode.
        PredictionKind::ExactModes(ModeInterval::single(0))
    } else {
        PredictionKind::ExactModes(ModeInterval::single((m - 1) / 2))
    };
    Prediction::applicable(kind, Rule::Prop3_3, "d = 1")
}

/// `d >= 1`: at most two modes `{m_bar - 1, m_bar}`; the unique mode is
/// `m_bar` whenever the degree-(m+1) anchor exceeds the degree-m anchor.
pub fn q_rule_d_ge_one(m: usize, d: &Rational) -> Prediction {
    if *d < Rational::one() {
        return Prediction::not_applicable(Rule::Prop3_4, "requires d >= 1");
    }
    let mb = m_bar(m, d).expect("d > 0");
    let mb_succ = m_bar(m + 1, d).expect("d > 0");
    if mb_succ == mb + 1 {
        Prediction::applicable(
            PredictionKind::ExactModes(ModeInterval::single(mb)),
            Rule::Prop3_4,
            "anchor for degree m+1 exceeds the degree-m anchor by one",
        )
    } else {
        let allowed: Vec<usize> = if mb == 0 { vec![0] } else { vec![mb - 1, mb] };
        Prediction::applicable(
            PredictionKind::ModeSubset(allowed),
            Rule::Prop3_4,
            "d >= 1",
        )
    }
}

/// `d >= 1` and `(m + 1)/(d + 1)` a positive integer: unique mode `m_bar`.
pub fn q_rule_succ_integral(m: usize, d: &Rational) -> Prediction {
    if *d < Rational::one() {
        return Prediction::not_applicable(Rule::Cor3_5, "requires d >= 1");
    }
    if !succ_ratio_integral(m, d) {
        return Prediction::not_applicable(Rule::Cor3_5, "requires (m+1)/(d+1) integral");
    }
    let mb = m_bar(m, d).expect("d > 0");
    Prediction::applicable(
        PredictionKind::ExactModes(ModeInterval::single(mb)),
        Rule::Cor3_5,
        "(m+1)/(d+1) is a positive integer",
    )
}

/// `d > 1` and `d * m_bar` a positive integer: unique mode `m_bar`.
pub fn q_rule_anchor_integral(m: usize, d: &Rational) -> Prediction {
    if *d <= Rational::one() {
        return Prediction::not_applicable(Rule::Prop3_6, "requires d > 1");
    }
    let mb = m_bar(m, d).expect("d > 0");
    if !is_positive_integer(&(d * int(mb as i64))) {
        return Prediction::not_applicable(Rule::Prop3_6, "requires d*m_bar a positive integer");
    }
    Prediction::applicable(
        PredictionKind::ExactModes(ModeInterval::single(mb)),
        Rule::Prop3_6,
        "d*m_bar is a positive integer",
    )
}

/// Integer `d > 1`: unique mode `m_bar`.
pub fn q_rule_integer_d(m: usize, d: &Rational) -> Prediction {
    if *d <= Rational::one() || !d.is_integer() {
        return Prediction::not_applicable(Rule::Cor3_7i, "requires integer d > 1");
    }
    let mb = m_bar(m, d).expect("d > 0");
    Prediction::applicable(
        PredictionKind::ExactModes(ModeInterval::single(mb)),
        Rule::Cor3_7i,
        "d is an integer greater than one",
    )
}

/// `d > 1` and `m/(d + 1)` a positive integer: unique mode `m_bar`.
pub fn q_rule_ratio_integral(m: usize, d: &Rational) -> Prediction {
    if *d <= Rational::one() {
        return Prediction::not_applicable(Rule::Cor3_7ii, "requires d > 1");
    }
    if !is_positive_integer(&(int(m as i64) / (d + Rational::one()))) {
        return Prediction::not_applicable(Rule::Cor3_7ii, "requires m/(d+1) integral");
    }
    let mb = m_bar(m, d).expect("d > 0");
    Prediction::applicable(
        PredictionKind::ExactModes(ModeInterval::single(mb)),
        Rule::Cor3_7ii,
        "m/(d+1) is a positive integer",
    )
}

/// `0 < d < 1`: `floor(m/2) <= M_* <= M^* <= min(m - 1, m_bar)`.
pub fn q_rule_small_d_bounds(m: usize, d: &Rational) -> Prediction {
    if !d.is_positive() || *d >= Rational::one() || m == 0 {
        return Prediction::not_applicable(Rule::Prop3_8i, "requires 0 < d < 1 and m >= 1");
    }
    let mb = m_bar(m, d).expect("d > 0");
    Prediction::applicable(
        PredictionKind::Sandwich {
            lo: m / 2,
            hi: (m - 1).min(mb),
        },
        Rule::Prop3_8i,
        "0 < d < 1",
    )
}

/// `0 < d < 1/C(m,2)`: unique mode `m - 1` (and only then — the converse
/// is part of the statement and is checked by the verifier).
pub fn q_rule_tiny_d(m: usize, d: &Rational) -> Prediction {
    if m < 2 {
        return Prediction::not_applicable(Rule::Prop3_8ii, "requires m >= 2");
    }
    if !d.is_positive() || *d >= Rational::one() {
        return Prediction::not_applicable(Rule::Prop3_8ii, "requires 0 < d < 1");
    }
    let threshold = int((m * (m - 1) / 2) as i64).recip();
    if *d >= threshold {
        return Prediction::not_applicable(Rule::Prop3_8ii, "requires d < 1/C(m,2)");
    }
    Prediction::applicable(
        PredictionKind::ExactModes(ModeInterval::single(m - 1)),
        Rule::Prop3_8ii,
        "0 < d < 1/C(m,2)",
    )
}

/// `0 < 1 - d <= 1/m`: at most two modes `{m_bar - 1, m_bar}`, unique
/// `m_bar` when `(m + 1)/(d + 1)` is a positive integer.
pub fn q_rule_near_one(m: usize, d: &Rational) -> Prediction {
    if m == 0 {
        return Prediction::not_applicable(Rule::Prop3_8iii, "requires m >= 1");
    }
    let gap = Rational::one() - d;
    if !gap.is_positive() || gap > int(m as i64).recip() {
        return Prediction::not_applicable(Rule::Prop3_8iii, "requires 0 < 1 - d <= 1/m");
    }
    let mb = m_bar(m, d).expect("d > 0");
    if succ_ratio_integral(m, d) {
        Prediction::applicable(
            PredictionKind::ExactModes(ModeInterval::single(mb)),
            Rule::Prop3_8iii,
            "0 < 1 - d <= 1/m and (m+1)/(d+1) integral",
        )
    } else {
        let allowed: Vec<usize> = if mb == 0 { vec![0] } else { vec![mb - 1, mb] };
        Prediction::applicable(
            PredictionKind::ModeSubset(allowed),
            Rule::Prop3_8iii,
            "0 < 1 - d <= 1/m",
        )
    }
}

/// Inside the window `1/C(m,2) < d < 1/m` every mode of `Q_m(x + d)` is
/// below `m - 1` even though the anchor sits at `m_bar = m`.
pub fn q_rule_window(m: usize, d: &Rational) -> Prediction {
    if !remark31_window(m, d) {
        return Prediction::not_applicable(Rule::Rem3_1, "requires 1/C(m,2) < d < 1/m");
    }
    Prediction::applicable(
        PredictionKind::MaxModeAtMost(m - 2),
        Rule::Rem3_1,
        "1/C(m,2) < d < 1/m",
    )
}

/// All per-rule predictions for `Q_m(x + d)` (applicable or not), in
/// dispatch priority order. Exact rules that apply simultaneously must
/// agree; the verifier tests that coherence.
pub fn q_mode_rules(m: usize, d: &Rational) -> Result<Vec<Prediction>> {
    require_positive(d)?;
    Ok(vec![
        q_rule_d_one(m, d),
        q_rule_d_ge_one(m, d),
        q_rule_succ_integral(m, d),
        q_rule_anchor_integral(m, d),
        q_rule_integer_d(m, d),
        q_rule_ratio_integral(m, d),
        q_rule_tiny_d(m, d),
        q_rule_near_one(m, d),
        q_rule_window(m, d),
        q_rule_small_d_bounds(m, d),
    ])
}

/// The strongest applicable statement about the modes of `Q_m(x + d)`.
///
/// Dispatch order: the `d = 1` exact rule; then for `d >= 1` the unique-mode
/// rules ahead of the two-candidate fallback; for `0 < d < 1` the tiny-`d`
/// exact rule, the near-one rules, the window refinement, and finally the
/// generic small-`d` sandwich.
pub fn predict_q_modes(m: usize, d: &Rational) -> Result<Prediction> {
    require_positive(d)?;
    let one = Rational::one();
    if d.is_one() {
        return Ok(q_rule_d_one(m, d));
    }
    if *d > one {
        for p in [
            q_rule_d_ge_one(m, d),
            q_rule_succ_integral(m, d),
            q_rule_anchor_integral(m, d),
            q_rule_integer_d(m, d),
            q_rule_ratio_integral(m, d),
        ] {
            if p.is_applicable() && p.exact_modes().is_some() {
                return Ok(p);
            }
        }
        return Ok(q_rule_d_ge_one(m, d));
    }
    // 0 < d < 1.
    let tiny = q_rule_tiny_d(m, d);
    if tiny.is_applicable() {
        return Ok(tiny);
    }
    let near = q_rule_near_one(m, d);
    if near.is_applicable() {
        return Ok(near);
    }
    let window = q_rule_window(m, d);
    if window.is_applicable() {
        // Keep the small-d lower bound, refine the upper bound to m - 2.
        return Ok(Prediction::applicable(
            PredictionKind::Sandwich { lo: m / 2, hi: m - 2 },
            Rule::Rem3_1,
            "window 1/C(m,2) < d < 1/m refines the small-d sandwich",
        ));
    }
    Ok(q_rule_small_d_bounds(m, d))
}

/// Structural facts about a polynomial that the general predictors depend
/// on; the statements see `P` only through these.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolyShape {
    /// `P = x^m` (all coefficients below the leading one vanish).
    pub is_pure_power: bool,
    /// `a_{m-1} != 0`.
    pub has_nonzero_subleading: bool,
    /// `P = Q_m` (all coefficients equal one).
    pub is_all_ones: bool,
    /// All coefficients from index `ceil(m/2) - 1` up are equal. For
    /// non-decreasing `P` this is just `a_{ceil(m/2)-1} = a_m`. This is
    /// the exact family on which the unit-shift mode of even-degree
    /// polynomials ties with its left neighbor; the all-ones polynomial
    /// belongs to it, the pure power does not.
    pub flat_upper_half: bool,
}

impl PolyShape {
    pub fn new(
        is_pure_power: bool,
        has_nonzero_subleading: bool,
        is_all_ones: bool,
        flat_upper_half: bool,
    ) -> Result<Self> {
        if is_pure_power && has_nonzero_subleading {
            return Err(Error::InconsistentShape(
                "a pure power has a zero subleading coefficient".into(),
            ));
        }
        if is_all_ones && is_pure_power {
            return Err(Error::InconsistentShape(
                "the all-ones polynomial of positive degree is not a pure power".into(),
            ));
        }
        if is_all_ones && !has_nonzero_subleading {
            return Err(Error::InconsistentShape(
                "the all-ones polynomial has subleading coefficient one".into(),
            ));
        }
        if is_all_ones && !flat_upper_half {
            return Err(Error::InconsistentShape(
                "the all-ones polynomial has a flat upper half".into(),
            ));
        }
        if is_pure_power && flat_upper_half {
            return Err(Error::InconsistentShape(
                "a pure power of positive degree has no flat upper half".into(),
            ));
        }
        Ok(PolyShape {
            is_pure_power,
            has_nonzero_subleading,
            is_all_ones,
            flat_upper_half,
        })
    }

    pub fn of(p: &CoeffSeq) -> Self {
        let m = p.degree();
        let center = m.div_ceil(2).saturating_sub(1);
        PolyShape {
            is_pure_power: p.is_pure_power() && m >= 1,
            has_nonzero_subleading: m >= 1 && !p[m - 1].is_zero(),
            is_all_ones: p.is_all_ones(),
            flat_upper_half: m >= 1 && (center..m).all(|i| p[i] == p[m]),
        }
    }
}

/// `P != x^m` in the monic non-decreasing class: no mode above `m_bar`.
pub fn rule_anchor_cap(shape: &PolyShape, m: usize, d: &Rational) -> Result<Prediction> {
    let mb = m_bar(m, d)?;
    if shape.is_pure_power {
        return Ok(Prediction::not_applicable(Rule::Cor2_1, "requires P != x^m"));
    }
    Ok(Prediction::applicable(
        PredictionKind::MaxModeAtMost(mb),
        Rule::Cor2_1,
        "P != x^m",
    ))
}

/// Any nonnegative `P`: the shifted sequence is non-increasing from index
/// `m_bar`; if `d >= (m-1)/2` some mode lies at 0 or 1; if `d >= m` the
/// whole sequence is non-increasing.
pub fn rule_tail(m: usize, d: &Rational) -> Result<Vec<Prediction>> {
    let mb = m_bar(m, d)?;
    let mut out = vec![Prediction::applicable(
        PredictionKind::TailNonIncreasing { from: mb },
        Rule::Lem2_2,
        "any nonnegative P",
    )];
    if d * int(2) >= int(m as i64 - 1) {
        out.push(Prediction::applicable(
            PredictionKind::MinModeAtMost(1),
            Rule::Lem2_2,
            "d >= (m-1)/2",
        ));
    }
    if *d >= int(m as i64) {
        out.push(Prediction::applicable(
            PredictionKind::TailNonIncreasing { from: 0 },
            Rule::Lem2_2,
            "d >= m",
        ));
    }
    Ok(out)
}

/// `d >= 1`, monic non-decreasing `P`: at most two modes, `{m_bar,
/// m_bar + 1}` for `x^m` and `{m_bar - 1, m_bar}` otherwise.
pub fn rule_two_candidates(shape: &PolyShape, m: usize, d: &Rational) -> Result<Prediction> {
    require_positive(d)?;
    if *d < Rational::one() {
        return Ok(Prediction::not_applicable(Rule::Cor4_2, "requires d >= 1"));
    }
    let mb = m_bar(m, d)?;
    let allowed: Vec<usize> = if shape.is_pure_power {
        vec![mb, mb + 1]
    } else if mb == 0 {
        vec![0]
    } else {
        vec![mb - 1, mb]
    };
    Ok(Prediction::applicable(
        PredictionKind::ModeSubset(allowed),
        Rule::Cor4_2,
        if shape.is_pure_power { "d >= 1, P = x^m" } else { "d >= 1, P != x^m" },
    ))
}

/// `d = 1`: `ceil((m-1)/2)` is always a mode. The exact mode set follows
/// from the sandwich plus the center difference:
///
/// * odd `m`: `{(m-1)/2, (m+1)/2}` for the pure power, else the unique
///   mode `(m-1)/2`;
/// * even `m`: `{m/2 - 1, m/2}` exactly when the upper half is flat
///   (`a_{m/2-1} = a_m`, which includes the all-ones polynomial), else
///   the unique mode `m/2`.
///
/// The classical form of this rule claims a unique mode whenever `P` is
/// neither the pure power nor the all-ones polynomial; that overstates
/// uniqueness for even degrees, where any flat-upper-half member ties the
/// center with its left neighbor. The branch on `flat_upper_half` is the
/// exact repair, and the verifier exercises both sides of it.
pub fn rule_unit_shift(shape: &PolyShape, m: usize, d: &Rational) -> Result<Prediction> {
    require_positive(d)?;
    if !d.is_one() {
        return Ok(Prediction::not_applicable(Rule::Cor4_3, "requires d = 1"));
    }
    let center = m / 2; // ceil((m-1)/2) = floor(m/2)
    let kind = if m % 2 == 1 && shape.is_pure_power {
        PredictionKind::ExactModes(ModeInterval { lo: center, hi: center + 1 })
    } else if m >= 2 && m % 2 == 0 && shape.flat_upper_half {
        PredictionKind::ExactModes(ModeInterval { lo: center - 1, hi: center })
    } else {
        PredictionKind::ExactModes(ModeInterval::single(center))
    };
    Ok(Prediction::applicable(kind, Rule::Cor4_3, "d = 1"))
}

/// The five side conditions under which `P(x + d)` has the unique mode
/// `m_bar` for `d > 1` and `P != x^m`:
/// (i) the degree-(m+1) anchor exceeds the degree-m anchor by one,
/// (ii) `(m+1)/(d+1)` integral, (iii) `d * m_bar` integral,
/// (iv) `d` integral, (v) `m/(d+1)` integral.
pub fn unique_mode_conditions(m: usize, d: &Rational) -> Result<[bool; 5]> {
    let mb = m_bar(m, d)?;
    let mb_succ = m_bar(m + 1, d)?;
    Ok([
        mb_succ == mb + 1,
        succ_ratio_integral(m, d),
        is_positive_integer(&(d * int(mb as i64))),
        is_positive_integer(d),
        is_positive_integer(&(int(m as i64) / (d + Rational::one()))),
    ])
}

/// `d > 1`, `P != x^m`, and any of the five side conditions: unique mode
/// `m_bar`.
pub fn rule_unique_anchor(shape: &PolyShape, m: usize, d: &Rational) -> Result<Prediction> {
    require_positive(d)?;
    if *d <= Rational::one() {
        return Ok(Prediction::not_applicable(Rule::Cor4_4, "requires d > 1"));
    }
    if shape.is_pure_power {
        return Ok(Prediction::not_applicable(Rule::Cor4_4, "requires P != x^m"));
    }
    let conds = unique_mode_conditions(m, d)?;
    if !conds.iter().any(|&c| c) {
        return Ok(Prediction::not_applicable(
            Rule::Cor4_4,
            "none of the five side conditions holds",
        ));
    }
    let fired: Vec<String> = ["i", "ii", "iii", "iv", "v"]
        .iter()
        .zip(conds.iter())
        .filter(|(_, &c)| c)
        .map(|(n, _)| format!("({n})"))
        .collect();
    let mb = m_bar(m, d)?;
    Ok(Prediction::applicable(
        PredictionKind::ExactModes(ModeInterval::single(mb)),
        Rule::Cor4_4,
        format!("conditions {}", fired.join(",")),
    ))
}

/// `0 < d < 1`, `P != x^m`: `floor(m/2) <= M_* <= M^* <= m_bar`.
pub fn rule_small_shift(shape: &PolyShape, m: usize, d: &Rational) -> Result<Prediction> {
    require_positive(d)?;
    if *d >= Rational::one() {
        return Ok(Prediction::not_applicable(Rule::Thm4_5, "requires 0 < d < 1"));
    }
    if shape.is_pure_power {
        return Ok(Prediction::not_applicable(Rule::Thm4_5, "requires P != x^m"));
    }
    let mb = m_bar(m, d)?;
    Ok(Prediction::applicable(
        PredictionKind::Sandwich { lo: m / 2, hi: mb },
        Rule::Thm4_5,
        "0 < d < 1, P != x^m",
    ))
}

/// The comparison sandwich: `M_*` of the all-ones polynomial below,
/// `M^*` of the pure power above. Both ends are computed exactly.
pub fn rule_comparison(m: usize, d: &Rational) -> Result<Prediction> {
    let q_modes = q_coeffs(m, d)?.analyze();
    let q_lo = q_modes
        .min_mode()
        .expect("shifted all-ones sequence is unimodal");
    let power_hi = match modes_of_power(m, d)?.kind {
        PredictionKind::ExactModes(iv) => iv.hi,
        _ => unreachable!("power rule always predicts exact modes"),
    };
    Ok(Prediction::applicable(
        PredictionKind::Sandwich { lo: q_lo, hi: power_hi },
        Rule::Thm4_1,
        "smallest all-ones mode below, greatest pure-power mode above",
    ))
}

/// The strongest statement the general rules make about `P(x + d)` for a
/// monic non-decreasing `P` described by `shape`: the conjunction of every
/// applicable bound, reported as an exact set when the bounds pin one.
///
/// The rule tag is the decisive contributor; `reason` lists all of them.
pub fn predict_general(shape: &PolyShape, m: usize, d: &Rational) -> Result<Prediction> {
    require_positive(d)?;
    PolyShape::new(
        shape.is_pure_power,
        shape.has_nonzero_subleading,
        shape.is_all_ones,
        shape.flat_upper_half,
    )?;

    let mut lo = 0usize;
    let mut hi = m;
    let mut exact: Option<(ModeInterval, Rule)> = None;
    let mut contributors: Vec<(Rule, String)> = Vec::new();

    let mut fold = |p: &Prediction| {
        if !p.is_applicable() {
            return;
        }
        match &p.kind {
            PredictionKind::ExactModes(iv) => {
                lo = lo.max(iv.lo);
                hi = hi.min(iv.hi);
                if exact.is_none() {
                    exact = Some((*iv, p.rule));
                }
            }
            PredictionKind::ModeSubset(s) => {
                // Mode sets are contiguous, so a candidate set bounds both ends.
                lo = lo.max(*s.iter().min().expect("nonempty candidate set"));
                hi = hi.min(*s.iter().max().expect("nonempty candidate set"));
            }
            PredictionKind::MinModeAtLeast(b) => lo = lo.max(*b),
            PredictionKind::MaxModeAtMost(b) => hi = hi.min(*b),
            PredictionKind::Sandwich { lo: l, hi: h } => {
                lo = lo.max(*l);
                hi = hi.min(*h);
            }
            _ => {}
        }
        contributors.push((p.rule, p.reason.clone()));
    };

    // Exact rules first so the decisive tag prefers them.
    fold(&rule_unique_anchor(shape, m, d)?);
    fold(&rule_unit_shift(shape, m, d)?);
    fold(&rule_two_candidates(shape, m, d)?);
    fold(&rule_small_shift(shape, m, d)?);
    fold(&rule_anchor_cap(shape, m, d)?);
    let comparison = rule_comparison(m, d)?;
    fold(&comparison);

    // Mode transfer: when the all-ones polynomial has the mode m_bar, so
    // does P; when that mode is unique, it transfers exactly except to the
    // pure power with (m+1)/(d+1) integral.
    let q_modes = q_coeffs(m, d)?.analyze().mode_set.expect("unimodal");
    let mb = m_bar(m, d)?;
    if q_modes.contains(mb) {
        let integral_power = shape.is_pure_power && succ_ratio_integral(m, d);
        if q_modes.len() == 1 && q_modes.lo == mb && !integral_power {
            fold(&Prediction::applicable(
                PredictionKind::ExactModes(ModeInterval::single(mb)),
                Rule::Thm4_1,
                "unique all-ones mode at the anchor transfers to P",
            ));
        } else {
            fold(&Prediction::applicable(
                PredictionKind::ContainsMode(mb),
                Rule::Thm4_1,
                "all-ones mode at the anchor transfers to P",
            ));
        }
    }

    let reason = contributors
        .iter()
        .map(|(r, why)| format!("{r}: {why}"))
        .collect::<Vec<_>>()
        .join("; ");

    if let Some((iv, rule)) = exact {
        return Ok(Prediction::applicable(
            PredictionKind::ExactModes(iv),
            rule,
            reason,
        ));
    }
    let decisive = [
        Rule::Cor4_2,
        Rule::Thm4_5,
        Rule::Thm4_1,
        Rule::Cor2_1,
    ]
    .into_iter()
    .find(|r| contributors.iter().any(|(c, _)| c == r))
    .unwrap_or(Rule::Thm4_1);
    let kind = if lo == hi {
        PredictionKind::ExactModes(ModeInterval::single(lo))
    } else {
        PredictionKind::Sandwich { lo, hi }
    };
    Ok(Prediction::applicable(kind, decisive, reason))
}
