//! Deterministic instance generators for the sweep engine.
//!
//! Everything is seeded: the same `(m, profile, monic, seed)` always yields
//! the same polynomial, so sweep reports can be replayed bit-exactly from
//! their embedded configuration.

use num::{One, Zero};
use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::rational::{int, rat, Rational};
use crate::sequence::CoeffSeq;

/// Shapes of nonnegative non-decreasing coefficient sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Profile {
    /// Cumulative sums of random nonnegative steps.
    UniformSteps,
    /// A zero prefix followed by a non-decreasing positive tail.
    Sparse,
    /// A geometric ramp `q^(m-i)` with ratio `q` in (0, 1].
    Geometric,
    /// The all-ones polynomial `1 + x + ... + x^m`.
    AllOnes,
    /// The pure power `x^m`.
    PurePower,
    /// Long constant runs to stress plateau handling.
    Boundary,
}

impl Profile {
    pub const ALL: [Profile; 6] = [
        Profile::UniformSteps,
        Profile::Sparse,
        Profile::Geometric,
        Profile::AllOnes,
        Profile::PurePower,
        Profile::Boundary,
    ];
}

impl std::fmt::Display for Profile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Profile::UniformSteps => "uniform-steps",
            Profile::Sparse => "sparse",
            Profile::Geometric => "geometric",
            Profile::AllOnes => "all-ones",
            Profile::PurePower => "pure-power",
            Profile::Boundary => "boundary",
        };
        write!(f, "{s}")
    }
}

impl std::str::FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "uniform-steps" => Ok(Profile::UniformSteps),
            "sparse" => Ok(Profile::Sparse),
            "geometric" => Ok(Profile::Geometric),
            "all-ones" => Ok(Profile::AllOnes),
            "pure-power" => Ok(Profile::PurePower),
            "boundary" => Ok(Profile::Boundary),
            other => Err(Error::UnknownProfile(other.to_string())),
        }
    }
}

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A nonnegative rational with numerator in `0..=num_max` and denominator
/// in `1..=den_max`.
fn small_rational(rng: &mut ChaCha8Rng, num_max: u64, den_max: u64) -> Rational {
    let n = rng.random_range(0..=num_max);
    let d = rng.random_range(1..=den_max);
    rat(n as i64, d as i64)
}

/// A nonnegative non-decreasing coefficient sequence of degree `m` with
/// the requested shape; monic output has `a_m = 1` and all entries `<= 1`
/// (exact normalization by the leading coefficient).
pub fn gen_poly(m: usize, profile: Profile, monic: bool, rng_seed: u64) -> CoeffSeq {
    let mut rng = rng_for(rng_seed);
    let coeffs: Vec<Rational> = match profile {
        Profile::AllOnes => return CoeffSeq::all_ones(m),
        Profile::PurePower => return CoeffSeq::pure_power(m),
        Profile::UniformSteps => {
            let mut acc = Rational::zero();
            let mut out = Vec::with_capacity(m + 1);
            for _ in 0..=m {
                acc += small_rational(&mut rng, 24, 8);
                out.push(acc.clone());
            }
            if out[m].is_zero() {
                out[m] = Rational::one();
            }
            out
        }
        Profile::Sparse => {
            let zeros = if m == 0 { 0 } else { rng.random_range(1..=m) };
            let mut out = vec![Rational::zero(); zeros];
            let mut acc = small_rational(&mut rng, 23, 8) + Rational::one();
            for _ in zeros..=m {
                out.push(acc.clone());
                acc += small_rational(&mut rng, 24, 8);
            }
            out
        }
        Profile::Geometric => {
            let den = rng.random_range(1..=9u64);
            let num = rng.random_range(1..=den);
            let ratio = rat(num as i64, den as i64);
            let mut out = vec![Rational::one(); m + 1];
            for i in (0..m).rev() {
                out[i] = &out[i + 1] * &ratio;
            }
            if !monic {
                let scale = int(rng.random_range(1..=9) as i64);
                for c in &mut out {
                    *c *= &scale;
                }
            }
            out
        }
        Profile::Boundary => {
            let levels = rng.random_range(1..=3usize).min(m + 1);
            let mut values: Vec<Rational> = (0..levels)
                .map(|_| small_rational(&mut rng, 6, 3))
                .collect();
            values.sort();
            if values[levels - 1].is_zero() {
                values[levels - 1] = Rational::one();
            }
            let mut out = Vec::with_capacity(m + 1);
            let mut remaining = m + 1;
            for (idx, v) in values.iter().enumerate() {
                let slots_left = levels - idx - 1;
                let take = if slots_left == 0 {
                    remaining
                } else {
                    rng.random_range(1..=remaining - slots_left)
                };
                out.extend(std::iter::repeat_with(|| v.clone()).take(take));
                remaining -= take;
            }
            out
        }
    };
    let p = CoeffSeq::new(coeffs).expect("generator invariants keep the sequence valid");
    if monic {
        p.to_monic()
    } else {
        p
    }
}

/// A unimodal sequence of positive rationals: a random peak position with
/// sorted values ascending on the left and descending on the right.
pub fn gen_unimodal(m: usize, rng_seed: u64) -> CoeffSeq {
    let mut rng = rng_for(rng_seed);
    let mut values: Vec<Rational> = (0..=m)
        .map(|_| small_rational(&mut rng, 23, 8) + Rational::one())
        .collect();
    values.sort();
    let peak = values.pop().expect("nonempty");
    let t = rng.random_range(0..=m);
    let left = values[..t].to_vec();
    let mut right = values[t..].to_vec();
    right.reverse();
    let mut out = left;
    out.push(peak);
    out.extend(right);
    CoeffSeq::new(out).expect("positive entries")
}

/// An arbitrary nonnegative sequence of degree `m` (leading entry forced
/// positive), with no monotonicity constraint.
pub fn gen_nonneg(m: usize, rng_seed: u64) -> CoeffSeq {
    let mut rng = rng_for(rng_seed);
    let mut out: Vec<Rational> = (0..=m).map(|_| small_rational(&mut rng, 24, 8)).collect();
    if out[m].is_zero() {
        out[m] = small_rational(&mut rng, 23, 8) + Rational::one();
    }
    CoeffSeq::new(out).expect("leading entry positive")
}

/// Deterministically mix a base seed with instance coordinates; used to
/// derive independent per-instance seeds inside a sweep.
pub fn mix_seed(base: u64, a: u64, b: u64, c: u64) -> u64 {
    let mut x = base
        .wrapping_mul(0x9e37_79b9_7f4a_7c15)
        .wrapping_add(a.wrapping_mul(0xbf58_476d_1ce4_e5b9))
        .wrapping_add(b.wrapping_mul(0x94d0_49bb_1331_11eb))
        .wrapping_add(c.wrapping_add(0x2545_f491_4f6c_dd1d));
    x ^= x >> 30;
    x = x.wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x ^= x >> 27;
    x = x.wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^= x >> 31;
    x
}

/// Seeded random rationals for grid construction: `count` distinct positive
/// values with numerator and denominator at most `bound`.
pub fn seeded_rationals(seed: u64, count: usize, bound: u64) -> Vec<Rational> {
    let mut rng = SmallRng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.random_range(1..=bound) as i64;
        let d = rng.random_range(1..=bound) as i64;
        let r = rat(n, d);
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out
}
