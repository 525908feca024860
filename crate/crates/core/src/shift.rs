//! Exact computation of the coefficient sequence of `P(x + d)`.
//!
//! Two genuinely independent algorithms compute the same transform:
//!
//! * [`shift`] evaluates the direct binomial sum
//!   `b_j = sum_{i=j}^{m} a_i d^{i-j} C(i,j)`, with binomial coefficients
//!   built row by row from the Pascal recurrence (no factorials).
//! * [`horner_shift`] performs repeated synthetic division, accumulating the
//!   Taylor coefficients of `P` at `d` in place.
//!
//! They share nothing beyond rational arithmetic and serve as each other's
//! oracle. Also here: the closed forms special to the all-ones polynomial
//! `Q_m = 1 + x + ... + x^m`, and the first-difference identities used by
//! the mode-location checks.

use num::bigint::BigInt;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rational, Rational};
use crate::sequence::CoeffSeq;

/// Which algorithm produced a [`ShiftResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftAlgorithm {
    BinomialSum,
    HornerShift,
}

impl std::fmt::Display for ShiftAlgorithm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ShiftAlgorithm::BinomialSum => write!(f, "binomial-sum"),
            ShiftAlgorithm::HornerShift => write!(f, "horner-shift"),
        }
    }
}

/// A shift computation together with its provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftResult {
    pub input: CoeffSeq,
    pub d: Rational,
    pub output: CoeffSeq,
    pub algorithm: ShiftAlgorithm,
}

/// Exact binomial coefficient `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut res = BigInt::one();
    for i in 0..k {
        // Division is exact at every step: the running product of j
        // consecutive integers is divisible by j!.
        res = res * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    res
}

fn require_positive(d: &Rational) -> Result<()> {
    if d.is_positive() {
        Ok(())
    } else {
        Err(Error::NonPositiveShift(format_rational(d)))
    }
}

/// Powers `d^0, d^1, ..., d^max`.
fn powers(d: &Rational, max: usize) -> Vec<Rational> {
    let mut pows = Vec::with_capacity(max + 1);
    pows.push(Rational::one());
    for _ in 0..max {
        pows.push(pows.last().expect("nonempty") * d);
    }
    pows
}

/// Advance one row of Pascal's triangle: `C(i, .)` from `C(i-1, .)`.
fn next_pascal_row(row: &[BigInt]) -> Vec<BigInt> {
    let mut next = Vec::with_capacity(row.len() + 1);
    next.push(BigInt::one());
    for j in 1..row.len() {
        next.push(&row[j - 1] + &row[j]);
    }
    next.push(BigInt::one());
    next
}

/// Coefficients `b_0, ..., b_m` of `P(x + d)` by the direct binomial sum
/// `b_j = sum_{i=j}^{m} a_i d^{i-j} C(i,j)`, for `d > 0`.
///
/// O(m^2) rational multiplications; every intermediate value is a canonical
/// rational.
pub fn shift(a: &CoeffSeq, d: &Rational) -> Result<CoeffSeq> {
    require_positive(d)?;
    let m = a.degree();
    let d_pows = powers(d, m);
    let mut b = vec![Rational::zero(); m + 1];
    let mut row = vec![BigInt::one()]; // C(0, .)
    for i in 0..=m {
        if i > 0 {
            row = next_pascal_row(&row);
        }
        let a_i = &a[i];
        if a_i.is_zero() {
            continue;
        }
        for j in 0..=i {
            let term = a_i * &d_pows[i - j] * Rational::from_integer(row[j].clone());
            b[j] += term;
        }
    }
    CoeffSeq::new(b)
}

/// Coefficients of `P(x + d)` by repeated synthetic division: pass `k`
/// leaves the `k`-th Taylor coefficient of `P` at `d` in place `k`.
///
/// Independent of [`shift`]; shares only rational arithmetic with it.
pub fn horner_shift(a: &CoeffSeq, d: &Rational) -> Result<CoeffSeq> {
    require_positive(d)?;
    let m = a.degree();
    let mut c: Vec<Rational> = a.coeffs().to_vec();
    for k in 0..m {
        for i in (k..m).rev() {
            let add = d * &c[i + 1];
            c[i] += add;
        }
    }
    CoeffSeq::new(c)
}

/// Run the chosen algorithm and package the result.
pub fn shift_with(algorithm: ShiftAlgorithm, a: &CoeffSeq, d: &Rational) -> Result<ShiftResult> {
    let output = match algorithm {
        ShiftAlgorithm::BinomialSum => shift(a, d)?,
        ShiftAlgorithm::HornerShift => horner_shift(a, d)?,
    };
    Ok(ShiftResult {
        input: a.clone(),
        d: d.clone(),
        output,
        algorithm,
    })
}

/// The closed-form right-hand side of the first-difference identity
/// `(j+1) d^{j+1} (b_{j+1} - b_j) =
///  sum_{i=j}^{m} a_i d^i C(i,j) [(i+1) - (d+1)(j+1)]`,
/// evaluated directly from the input coefficients for `0 <= j <= m-1`.
pub fn difference_identity(a: &CoeffSeq, d: &Rational, j: usize) -> Result<Rational> {
    require_positive(d)?;
    let m = a.degree();
    if m == 0 || j > m - 1 {
        return Err(Error::IndexOutOfRange {
            index: j,
            lo: 0,
            hi: m.saturating_sub(1),
        });
    }
    let d_pows = powers(d, m);
    let scale = (d + Rational::one()) * Rational::from_integer(BigInt::from(j as u64 + 1));
    let mut sum = Rational::zero();
    for i in j..=m {
        let a_i = &a[i];
        if a_i.is_zero() {
            continue;
        }
        let bracket = Rational::from_integer(BigInt::from(i as u64 + 1)) - &scale;
        sum += a_i * &d_pows[i] * Rational::from_integer(binomial(i as u64, j as i64)) * bracket;
    }
    Ok(sum)
}

/// Coefficients `d_j = sum_{i=j}^{m} d^{i-j} C(i,j)` of `Q_m(x + d)` where
/// `Q_m = 1 + x + ... + x^m`, evaluated from the closed form. Agreement
/// with `shift(all-ones, d)` is a tested contract, not an implementation
/// shortcut.
pub fn q_coeffs(m: usize, d: &Rational) -> Result<CoeffSeq> {
    require_positive(d)?;
    let d_pows = powers(d, m);
    let mut out = vec![Rational::zero(); m + 1];
    let mut row = vec![BigInt::one()];
    for i in 0..=m {
        if i > 0 {
            row = next_pascal_row(&row);
        }
        for j in 0..=i {
            out[j] += &d_pows[i - j] * Rational::from_integer(row[j].clone());
        }
    }
    CoeffSeq::new(out)
}

/// The closed-form first difference of the `Q_m(x + d)` coefficients,
/// `d_j - d_{j-1} = sum_{i=j}^{m-1} C(i,j) d^{i-j+1} - C(m, j-1) d^{m-j+1}`,
/// for `1 <= j <= m`.
pub fn q_difference(m: usize, d: &Rational, j: usize) -> Result<Rational> {
    require_positive(d)?;
    if j < 1 || j > m {
        return Err(Error::IndexOutOfRange { index: j, lo: 1, hi: m });
    }
    let d_pows = powers(d, m + 1);
    let mut sum = Rational::zero();
    for i in j..m {
        sum += Rational::from_integer(binomial(i as u64, j as i64)) * &d_pows[i - j + 1];
    }
    sum -= Rational::from_integer(binomial(m as u64, j as i64 - 1)) * &d_pows[m - j + 1];
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn poly(v: &[i64]) -> CoeffSeq {
        CoeffSeq::from_integers(v).unwrap()
    }

    fn rats(v: &[(i64, i64)]) -> CoeffSeq {
        CoeffSeq::new(v.iter().map(|&(p, q)| rat(p, q)).collect()).unwrap()
    }

    #[test]
    fn binomial_basics() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(4, 0), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(binomial(3, -1), BigInt::from(0));
        assert_eq!(binomial(60, 30), "118264581564861424".parse().unwrap());
    }

    #[test]
    fn shift_worked_examples() {
        // P = 1 + 2x + 3x^2 at d = 1/2:
        // b_0 = 1 + 2/2 + 3/4, b_1 = 2 + 3, b_2 = 3.
        let b = shift(&poly(&[1, 2, 3]), &rat(1, 2)).unwrap();
        assert_eq!(b, rats(&[(11, 4), (5, 1), (3, 1)]));

        // P = 1 + x + x^2 at d = 2: non-increasing output (d >= m).
        let b = shift(&poly(&[1, 1, 1]), &int(2)).unwrap();
        assert_eq!(b, poly(&[7, 5, 1]));

        // x^5 at d = 1 is the binomial row.
        let b = shift(&CoeffSeq::pure_power(5), &int(1)).unwrap();
        assert_eq!(b, poly(&[1, 5, 10, 10, 5, 1]));
    }

    #[test]
    fn horner_shift_matches_on_worked_examples() {
        for (p, d) in [
            (poly(&[1, 2, 3]), rat(1, 2)),
            (poly(&[1, 1, 1]), int(2)),
            (CoeffSeq::pure_power(5), int(1)),
        ] {
            assert_eq!(horner_shift(&p, &d).unwrap(), shift(&p, &d).unwrap());
        }
        // Constants are shift-invariant.
        assert_eq!(horner_shift(&poly(&[1]), &rat(9, 7)).unwrap(), poly(&[1]));
        // x -> x + 3.
        assert_eq!(horner_shift(&poly(&[0, 1]), &int(3)).unwrap(), poly(&[3, 1]));
    }

    #[test]
    fn shift_rejects_nonpositive_d() {
        for d in [int(0), int(-1), rat(-2, 3)] {
            assert!(matches!(
                shift(&poly(&[1, 1]), &d),
                Err(Error::NonPositiveShift(_))
            ));
            assert!(matches!(
                horner_shift(&poly(&[1, 1]), &d),
                Err(Error::NonPositiveShift(_))
            ));
        }
    }

    #[test]
    fn shift_with_tags_the_algorithm() {
        let r = shift_with(ShiftAlgorithm::HornerShift, &poly(&[0, 1]), &int(3)).unwrap();
        assert_eq!(r.algorithm, ShiftAlgorithm::HornerShift);
        assert_eq!(r.output, poly(&[3, 1]));
        assert_eq!(r.input, poly(&[0, 1]));
    }

    #[test]
    fn difference_identity_worked_examples() {
        // a = [1,2,3], d = 1/2, j = 0: equals 1 * (1/2) * (b_1 - b_0) = 9/8.
        let v = difference_identity(&poly(&[1, 2, 3]), &rat(1, 2), 0).unwrap();
        assert_eq!(v, rat(9, 8));

        // a = x^2, d = 1, j = 1: b = [1,2,1], so 2 * 1 * (1 - 2) = -2.
        let v = difference_identity(&poly(&[0, 0, 1]), &int(1), 1).unwrap();
        assert_eq!(v, int(-2));

        // a = x^m, d = 1/m, j = m-1: the single surviving bracket vanishes.
        for m in 2..=6 {
            let v =
                difference_identity(&CoeffSeq::pure_power(m), &rat(1, m as i64), m - 1).unwrap();
            assert_eq!(v, int(0));
        }
    }

    #[test]
    fn difference_identity_checks_range() {
        assert!(matches!(
            difference_identity(&poly(&[1, 2, 3]), &int(1), 2),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            difference_identity(&poly(&[1]), &int(1), 0),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn q_coeffs_worked_examples() {
        assert_eq!(q_coeffs(4, &int(1)).unwrap(), poly(&[5, 10, 10, 5, 1]));
        assert_eq!(
            q_coeffs(4, &rat(1, 2)).unwrap(),
            rats(&[(31, 16), (13, 4), (4, 1), (3, 1), (1, 1)])
        );
        assert_eq!(q_coeffs(0, &rat(17, 3)).unwrap(), poly(&[1]));
        // Contract: q_coeffs(m, d) = shift(all-ones, d).
        for (m, d) in [(4usize, int(1)), (4, rat(1, 2)), (7, rat(5, 3)), (1, int(9))] {
            assert_eq!(
                q_coeffs(m, &d).unwrap(),
                shift(&CoeffSeq::all_ones(m), &d).unwrap()
            );
        }
    }

    #[test]
    fn q_difference_worked_examples() {
        // m=5, d=1/8: d_4 - d_3 = 13/8 - 53/32 = -1/32 (modes sit below m-1).
        assert_eq!(q_difference(5, &rat(1, 8), 4).unwrap(), rat(-1, 32));
        // m=5, d=1/16: 21/16 - 330/256 = 3/128 > 0 (unique mode m-1).
        assert_eq!(q_difference(5, &rat(1, 16), 4).unwrap(), rat(3, 128));
        // m=1, d=1: Q_1(x+1) = [2, 1].
        assert_eq!(q_difference(1, &int(1), 1).unwrap(), int(-1));
    }

    #[test]
    fn q_difference_matches_q_coeffs() {
        for (m, d) in [(5usize, rat(1, 8)), (6, int(2)), (9, rat(7, 5))] {
            let q = q_coeffs(m, &d).unwrap();
            for j in 1..=m {
                assert_eq!(q_difference(m, &d, j).unwrap(), &q[j] - &q[j - 1]);
            }
        }
        assert!(matches!(
            q_difference(4, &int(1), 0),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            q_difference(4, &int(1), 5),
            Err(Error::IndexOutOfRange { .. })
        ));
    }
}
