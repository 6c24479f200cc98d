//! Scalar arithmetic: arbitrary-precision rationals and their string form.
//!
//! `Rational` is the base field for every symbolic computation in this
//! crate. `num_rational::BigRational` already keeps values reduced with a
//! positive denominator, which is exactly the canonical form we need.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

pub type Int = BigInt;
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer in rational literal: {0}")]
    BadInteger(String),
    #[error("zero denominator in rational literal")]
    ZeroDenominator,
}

/// Shorthand for `n/d` from machine integers. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(Int::from(n), Int::from(d))
}

/// The integer `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(Int::from(n))
}

/// Parses `"p"` or `"p/q"` with optional sign, rejecting `q = 0`.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let num: Int = num_str
        .parse()
        .map_err(|_| ParseRationalError::BadInteger(num_str.to_string()))?;
    let den: Int = match den_str {
        Some(d) => d
            .parse()
            .map_err(|_| ParseRationalError::BadInteger(d.to_string()))?,
        None => Int::from(1),
    };
    if den.is_zero() {
        return Err(ParseRationalError::ZeroDenominator);
    }
    Ok(Rational::new(num, den))
}

/// Canonical fraction string: `"-11"`, `"-2/5"`. Integers drop the `/1`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom() == &Int::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Best-effort conversion to `f64` for display and numeric cross-checks.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}
