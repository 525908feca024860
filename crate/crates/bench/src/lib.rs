//! Shared fixtures for the benchmark targets.

use shiftmodes::rational::{rat, Rational};
use shiftmodes::sequence::CoeffSeq;
use shiftmodes::verifier::generate::{gen_poly, Profile};

/// A deterministic degree-`m` instance with a moderately sized rational
/// shift, matching the profile mix the verifier sweeps use.
pub fn fixture(m: usize, seed: u64) -> (CoeffSeq, Rational) {
    let p = gen_poly(m, Profile::UniformSteps, true, seed);
    let d = rat(3 + (seed % 11) as i64, 1 + (seed % 7) as i64);
    (p, d)
}
