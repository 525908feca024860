//! Exact rational arithmetic helpers.
//!
//! Every coefficient, shift parameter and intermediate value in this crate is
//! a [`Rational`]: an arbitrary-precision fraction kept in canonical reduced
//! form (positive denominator, gcd(|p|, q) = 1) after every operation.
//! Equality is structural equality of canonical forms. There is no tolerance
//! parameter anywhere; comparisons are exact.
//!
//! Floor and ceiling are computed by Euclidean division on the numerator and
//! denominator — values never round-trip through floating point.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational in canonical reduced form.
pub type Rational = BigRational;

/// `n/d` from machine integers. Panics if `d == 0`; intended for literals
/// in tests and grid construction.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact floor as a big integer, via Euclidean division.
pub fn floor_int(r: &Rational) -> BigInt {
    r.numer().div_floor(r.denom())
}

/// Exact ceiling as a big integer, via Euclidean division.
pub fn ceil_int(r: &Rational) -> BigInt {
    r.numer().div_ceil(r.denom())
}

/// True iff `r` is a positive integer (an element of Z+ = {1, 2, ...}).
pub fn is_positive_integer(r: &Rational) -> bool {
    r.is_integer() && r.numer().is_positive()
}

/// Parse `"p"` or `"p/q"` into a canonical rational.
///
/// Decimal notation is rejected outright so that inexact inputs can never
/// slip in silently.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::RationalParse(s.to_string()));
    }
    if t.contains(['.', 'e', 'E']) {
        return Err(Error::DecimalRejected(s.to_string()));
    }
    let (num_str, den_str) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let numer: BigInt = num_str
        .parse()
        .map_err(|_| Error::RationalParse(s.to_string()))?;
    let denom: BigInt = match den_str {
        Some(d) => d.parse().map_err(|_| Error::RationalParse(s.to_string()))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(Error::ZeroDenominator(s.to_string()));
    }
    Ok(Rational::new(numer, denom))
}

/// Format as `"p/q"`, or `"p"` when the denominator is one. Round-trips
/// losslessly through [`parse_rational`].
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
