//! Coefficient sequences and their exact order-theoretic predicates:
//! non-decrease, unimodality, log-concavity, internal zeros, mode sets.
//!
//! A sequence `a_0, ..., a_m` of nonnegative rationals is *unimodal* if
//! there is an index `t` with `a_0 <= ... <= a_t >= ... >= a_m`; every such
//! `t` is a *mode*. It is *log-concave* if `a_{i-1} * a_{i+1} <= a_i^2` for
//! all interior `i` (strictly, with `<`). It *has internal zeros* if some
//! zero entry sits strictly between two nonzero entries.
//!
//! For a unimodal sequence the set of modes equals the argmax plateau and is
//! a contiguous interval; [`analyze`] computes it that way, and the
//! equivalence with the chain definition is pinned by exhaustive tests
//! rather than assumed.

use std::fmt;
use std::ops::Index;

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A contiguous interval of sequence indices; the mode set of a unimodal
/// sequence always has this form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModeInterval {
    pub lo: usize,
    pub hi: usize,
}

impl ModeInterval {
    pub fn single(i: usize) -> Self {
        ModeInterval { lo: i, hi: i }
    }

    pub fn contains(&self, i: usize) -> bool {
        self.lo <= i && i <= self.hi
    }

    pub fn len(&self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn is_empty(&self) -> bool {
        false // an interval value always holds at least one index
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        self.lo..=self.hi
    }

    /// True iff the interval is exactly the given index set.
    pub fn is_exactly(&self, indices: &[usize]) -> bool {
        self.len() == indices.len() && indices.iter().all(|&i| self.contains(i))
    }

    /// True iff every index in the interval appears in `allowed`.
    pub fn subset_of(&self, allowed: &[usize]) -> bool {
        self.iter().all(|i| allowed.contains(&i))
    }
}

impl fmt::Display for ModeInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{{{}}}", self.lo)
        } else {
            let all: Vec<String> = self.iter().map(|i| i.to_string()).collect();
            write!(f, "{{{}}}", all.join(", "))
        }
    }
}

/// Full classification of a nonnegative sequence.
///
/// `violation_witness` carries an index triple documenting the first failed
/// predicate: a valley `(i, j, k)` with `a_i > a_j < a_k` when not unimodal,
/// otherwise the first log-concavity violation `(i-1, i, i+1)`, otherwise an
/// internal-zero triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModeAnalysis {
    pub is_unimodal: bool,
    pub mode_set: Option<ModeInterval>,
    pub is_log_concave: bool,
    pub is_strictly_log_concave: bool,
    pub has_internal_zeros: bool,
    pub violation_witness: Option<[usize; 3]>,
}

impl ModeAnalysis {
    /// The smallest mode, when unimodal.
    pub fn min_mode(&self) -> Option<usize> {
        self.mode_set.map(|s| s.lo)
    }

    /// The greatest mode, when unimodal.
    pub fn max_mode(&self) -> Option<usize> {
        self.mode_set.map(|s| s.hi)
    }
}

/// Index of the first entry that breaks `a_{i-1} <= a_i`, or `None` when the
/// sequence is non-decreasing.
pub fn nondecreasing_violation(seq: &[Rational]) -> Option<usize> {
    (1..seq.len()).find(|&i| seq[i - 1] > seq[i])
}

pub fn is_nondecreasing(seq: &[Rational]) -> bool {
    nondecreasing_violation(seq).is_none()
}

/// Classify a nonnegative sequence in one left-to-right pass for
/// unimodality (rise phase, then fall phase), plus exact log-concavity and
/// internal-zero scans.
///
/// Errors if any entry is negative; every other input is in-domain,
/// including all-zero sequences and sequences with trailing zeros (which are
/// not valid polynomials but are still sequences).
pub fn analyze(seq: &[Rational]) -> Result<ModeAnalysis> {
    if seq.is_empty() {
        return Err(Error::EmptyCoefficients);
    }
    if let Some(i) = seq.iter().position(|c| c.is_negative()) {
        return Err(Error::NegativeCoefficient(i));
    }
    let m = seq.len() - 1;

    // Rise phase then fall phase. On the first strict descent remember the
    // peak; a later strict ascent is a valley witness (peak, j, j+1).
    let mut is_unimodal = true;
    let mut unimodal_witness = None;
    let mut peak = 0usize;
    let mut falling = false;
    for i in 1..=m {
        if !falling {
            if seq[i - 1] > seq[i] {
                peak = i - 1;
                falling = true;
            }
        } else if seq[i - 1] < seq[i] {
            is_unimodal = false;
            unimodal_witness = Some([peak, i - 1, i]);
            break;
        }
    }

    // Mode set = argmax plateau, only meaningful for unimodal sequences.
    let mode_set = if is_unimodal {
        let max = seq.iter().max().expect("nonempty");
        let lo = seq.iter().position(|c| c == max).expect("max exists");
        let hi = seq.iter().rposition(|c| c == max).expect("max exists");
        Some(ModeInterval { lo, hi })
    } else {
        None
    };

    let mut is_log_concave = true;
    let mut is_strictly_log_concave = true;
    let mut log_concavity_witness = None;
    for i in 1..m {
        let outer = &seq[i - 1] * &seq[i + 1];
        let inner = &seq[i] * &seq[i];
        if outer > inner {
            is_log_concave = false;
            is_strictly_log_concave = false;
            if log_concavity_witness.is_none() {
                log_concavity_witness = Some([i - 1, i, i + 1]);
            }
        } else if outer == inner {
            is_strictly_log_concave = false;
        }
    }

    let mut has_internal_zeros = false;
    let mut internal_zero_witness = None;
    let first_nonzero = seq.iter().position(|c| !c.is_zero());
    let last_nonzero = seq.iter().rposition(|c| !c.is_zero());
    if let (Some(f), Some(l)) = (first_nonzero, last_nonzero) {
        if let Some(j) = (f + 1..l).find(|&j| seq[j].is_zero()) {
            has_internal_zeros = true;
            internal_zero_witness = Some([f, j, l]);
        }
    }

    let violation_witness = unimodal_witness
        .or(log_concavity_witness)
        .or(internal_zero_witness);

    Ok(ModeAnalysis {
        is_unimodal,
        mode_set,
        is_log_concave,
        is_strictly_log_concave,
        has_internal_zeros,
        violation_witness,
    })
}

/// The coefficient sequence `a_0, ..., a_m` of a nonzero polynomial
/// `P(x) = sum a_i x^i` with nonnegative coefficients.
///
/// Construction rejects negative entries, the empty sequence, and a zero
/// leading coefficient (so the zero polynomial and padded representations
/// are unrepresentable).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffSeq {
    coeffs: Vec<Rational>,
}

impl CoeffSeq {
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyCoefficients);
        }
        if let Some(i) = coeffs.iter().position(|c| c.is_negative()) {
            return Err(Error::NegativeCoefficient(i));
        }
        if coeffs.last().expect("nonempty").is_zero() {
            return Err(Error::ZeroLeadingCoefficient);
        }
        Ok(CoeffSeq { coeffs })
    }

    pub fn from_integers(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| crate::rational::int(c)).collect())
    }

    /// The all-ones polynomial `1 + x + ... + x^m`.
    pub fn all_ones(m: usize) -> Self {
        CoeffSeq {
            coeffs: vec![Rational::one(); m + 1],
        }
    }

    /// The pure power `x^m`.
    pub fn pure_power(m: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); m + 1];
        coeffs[m] = Rational::one();
        CoeffSeq { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction guarantees at least one coefficient
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> &Rational {
        self.coeffs.last().expect("nonempty")
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn is_nondecreasing(&self) -> bool {
        is_nondecreasing(&self.coeffs)
    }

    pub fn is_all_ones(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_one())
    }

    pub fn is_pure_power(&self) -> bool {
        self.coeffs[..self.degree()].iter().all(|c| c.is_zero())
    }

    /// Membership in the class of monic polynomials with nonnegative
    /// non-decreasing coefficients (derived, never stored).
    pub fn in_upward_class(&self) -> bool {
        self.is_monic() && self.is_nondecreasing()
    }

    /// Same polynomial scaled to leading coefficient one. Exact, hence
    /// lossless; mode structure is invariant under positive scaling.
    pub fn to_monic(&self) -> Self {
        if self.is_monic() {
            return self.clone();
        }
        let lead = self.leading().clone();
        CoeffSeq {
            coeffs: self.coeffs.iter().map(|c| c / &lead).collect(),
        }
    }

    /// Exact Horner evaluation at a rational point.
    pub fn evaluate(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn analyze(&self) -> ModeAnalysis {
        analyze(&self.coeffs).expect("construction guarantees nonnegative entries")
    }

    /// Coefficients of `(x + d) * self` for `d > 0`:
    /// `out_0 = d c_0`, `out_k = c_{k-1} + d c_k`, `out_{n+1} = c_n`.
    pub fn multiply_by_linear(&self, d: &Rational) -> Result<CoeffSeq> {
        if !d.is_positive() {
            return Err(Error::NonPositiveShift(crate::rational::format_rational(d)));
        }
        let n = self.degree();
        let mut out = Vec::with_capacity(n + 2);
        out.push(d * &self.coeffs[0]);
        for k in 1..=n {
            out.push(&self.coeffs[k - 1] + d * &self.coeffs[k]);
        }
        out.push(self.coeffs[n].clone());
        Ok(CoeffSeq { coeffs: out })
    }
}

impl Index<usize> for CoeffSeq {
    type Output = Rational;

    fn index(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }
}

impl fmt::Display for CoeffSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(crate::rational::format_rational)
            .collect();
        write!(f, "[{}]", parts.join(", "))
    }
}
