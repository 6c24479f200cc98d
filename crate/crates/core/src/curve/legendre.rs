//! Floating-point cross-check of the exact j-invariant through the
//! Legendre normal form.
//!
//! The quartic model has roots 0 and
//!   alpha, beta = (a^2+6a-3)/8 +- (a+1)/8 * sqrt((a+1)(a+9)),
//! and rescaling to v^2 = u(u-1)(u-lambda) with lambda = alpha/beta gives
//!   j = 2^8 (lambda^2-lambda+1)^3 / (lambda^2-lambda)^2.
//! For -9 < a < -1 the square root goes complex; everything here runs in
//! complex double precision with the principal branch, and correctness is
//! anchored by agreement with the exact formula rather than by branch
//! bookkeeping (lambda and its five anharmonic partners share the same j).

use num_complex::Complex64;

use super::family::j_function;
use super::CurveError;
use crate::rational::{to_f64, Rational};

/// j of the Legendre parameter: 256 (l^2 - l + 1)^3 / (l^2 - l)^2.
pub fn j_of_lambda(lambda: Complex64) -> Complex64 {
    let t = lambda * lambda - lambda;
    let num = (t + 1.0).powu(3);
    256.0 * num / (t * t)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LegendreCheck {
    /// The numeric j computed through the Legendre route.
    pub j_numeric: Complex64,
    /// The exact j rounded to double precision.
    pub j_exact: f64,
    /// |j_numeric - j_exact| / max(1, |j_exact|).
    pub relative_error: f64,
}

/// Computes j numerically through the Legendre normal form and compares
/// it with the exact value; fails if the relative deviation exceeds `tol`.
pub fn legendre_check(a: &Rational, tol: f64) -> Result<LegendreCheck, CurveError> {
    let j_exact_rat = j_function(a).ok_or(CurveError::NotElliptic)?;
    let j_exact = to_f64(&j_exact_rat);
    let af = to_f64(a);
    let disc = Complex64::new((af + 1.0) * (af + 9.0), 0.0);
    let root = disc.sqrt();
    let mean = Complex64::new((af * af + 6.0 * af - 3.0) / 8.0, 0.0);
    let offset = root * ((af + 1.0) / 8.0);
    let alpha = mean + offset;
    let beta = mean - offset;
    let lambda = alpha / beta;
    let j_numeric = j_of_lambda(lambda);
    let denom = j_exact.abs().max(1.0);
    let relative_error = (j_numeric - j_exact).norm() / denom;
    if relative_error > tol {
        return Err(CurveError::ToleranceExceeded {
            relative_error,
            tolerance: tol,
        });
    }
    Ok(LegendreCheck {
        j_numeric,
        j_exact,
        relative_error,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    #[test]
    fn matches_the_exact_value_on_the_real_branch() {
        let check = legendre_check(&rat_int(1), 1e-9).unwrap();
        assert!((check.j_exact - 3276.8).abs() < 1e-9);
        assert!(check.relative_error < 1e-12);
    }

    #[test]
    fn matches_on_the_complex_branch() {
        // (a+1)(a+9) = -16 < 0 at a = -5
        let check = legendre_check(&rat_int(-5), 1e-9).unwrap();
        assert!((check.j_exact - 851.84).abs() < 1e-9);
        assert!(check.j_numeric.im.abs() < 1e-9);
        assert!(check.relative_error < 1e-12);
    }

    #[test]
    fn rejects_non_elliptic_parameters() {
        assert_eq!(
            legendre_check(&rat_int(-9), 1e-9).unwrap_err(),
            CurveError::NotElliptic
        );
    }

    #[test]
    fn reports_tolerance_violations() {
        match legendre_check(&rat_int(1), 1e-18) {
            Err(CurveError::ToleranceExceeded { .. }) | Ok(_) => {}
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn lambda_symmetry() {
        for (re, im) in [(0.3, 0.0), (2.5, 0.0), (0.4, 1.2)] {
            let l = Complex64::new(re, im);
            let j = j_of_lambda(l);
            for partner in [1.0 - l, 1.0 / l] {
                assert!((j_of_lambda(partner) - j).norm() <= 1e-9 * j.norm().max(1.0));
            }
        }
    }

    #[test]
    fn survives_random_rationals_in_range() {
        // deterministic small sweep across both branches
        for n in -40i64..=40 {
            if n % 7 == 0 {
                continue;
            }
            let a = rat(n, 4);
            if a == rat_int(0) || a == rat_int(-1) || a == rat_int(-9) {
                continue;
            }
            let check = legendre_check(&a, 1e-9).unwrap();
            assert!(check.relative_error <= 1e-9, "a = {a}: {check:?}");
        }
    }
}
