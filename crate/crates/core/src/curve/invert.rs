//! Inversion of the j-map: all real parameters `a` with j(E_a) = j0.
//!
//! Clearing the denominator of j(E_a) - j0 gives one degree-12 polynomial
//!   (a+3)^3 (a^3+9a^2+3a+3)^3 - j0 * a^2 (a+1)^3 (a+9),
//! whose real roots are isolated exactly with Sturm sequences and refined
//! by bisection. The poles a = 0, -1, -9 are never roots: the numerator
//! factor takes the values 729, 4096, and 2985984 there, independent of
//! j0, so no exclusion step is needed.

use num_traits::Zero;

use crate::rational::Rational;
use crate::roots::{isolate_roots_to_width, IsolatingInterval, RatPolynomial, RootError};

/// The polynomial whose real roots are the parameters with j(E_a) = j0.
pub fn j_inversion_polynomial(j0: &Rational) -> RatPolynomial {
    let t = RatPolynomial::x();
    let c = |n: i64| RatPolynomial::from_int_coeffs(&[n]);
    let cubic = RatPolynomial::from_int_coeffs(&[3, 3, 9, 1]);
    let numerator = &(&t + &c(3)).pow(3) * &cubic.pow(3);
    let denominator = &(&(&t * &t) * &(&t + &c(1)).pow(3)) * &(&t + &c(9));
    &numerator - &denominator.scale(j0)
}

/// All real `a` with j(E_a) = j0, as disjoint isolating intervals refined
/// to width at most `precision`. Nonempty for every real j0: the j-map is
/// onto the reals.
pub fn j_invert(
    j0: &Rational,
    precision: &Rational,
) -> Result<Vec<IsolatingInterval>, RootError> {
    let p = j_inversion_polynomial(j0);
    debug_assert!(
        [0i64, -1, -9]
            .iter()
            .all(|&c| !p.eval(&Rational::from_integer(c.into())).is_zero()),
        "the poles of the j-map cannot be roots"
    );
    isolate_roots_to_width(&p, precision)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::family::j_function;
    use crate::rational::{rat, rat_int};
    use num_traits::Zero;

    fn prec() -> Rational {
        rat(1, 1_000_000_000_000)
    }

    #[test]
    fn polynomial_has_degree_twelve_and_avoids_the_poles() {
        for j0 in [rat_int(0), rat_int(1728), rat(-22, 7)] {
            let p = j_inversion_polynomial(&j0);
            assert_eq!(p.degree(), Some(12));
            assert_eq!(p.eval(&rat_int(0)), rat_int(729));
            assert_eq!(p.eval(&rat_int(-1)), rat_int(4096));
            assert_eq!(p.eval(&rat_int(-9)), rat_int(2985984));
        }
    }

    #[test]
    fn j_1728_has_the_four_radical_roots() {
        let roots = j_invert(&rat_int(1728), &prec()).unwrap();
        assert_eq!(roots.len(), 4);
        let s3 = 3.0_f64.sqrt();
        let inner = (9.0 + 6.0 * s3).sqrt();
        let expected = [
            -3.0 - s3 - inner,
            -3.0 - 2.0 * s3,
            -3.0 - s3 + inner,
            -3.0 + 2.0 * s3,
        ];
        for (iv, e) in roots.iter().zip(expected) {
            assert!(
                (iv.approx() - e).abs() < 1e-10,
                "expected {e}, got {}",
                iv.approx()
            );
        }
    }

    #[test]
    fn j_zero_contains_minus_three_and_the_cubic_root() {
        let roots = j_invert(&rat_int(0), &prec()).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots[1].contains(&rat_int(-3)));
        // the other root solves a^3 + 9a^2 + 3a + 3 = 0; check by signs
        let cubic = RatPolynomial::from_int_coeffs(&[3, 3, 9, 1]);
        let lo = cubic.eval(roots[0].lo());
        let hi = cubic.eval(roots[0].hi());
        assert!(lo.is_zero() || hi.is_zero() || (lo * hi) < Rational::zero());
    }

    #[test]
    fn round_trips_through_the_exact_j() {
        for a in [rat_int(1), rat_int(-5), rat(7, 3), rat(-13, 2)] {
            let j0 = j_function(&a).unwrap();
            let roots = j_invert(&j0, &prec()).unwrap();
            assert!(
                roots.iter().any(|iv| iv.contains(&a)),
                "j_invert(j({a})) must recover {a}"
            );
        }
        let roots = j_invert(&rat(16384, 5), &prec()).unwrap();
        assert!(roots.iter().any(|iv| iv.contains(&rat_int(1))));
    }

    #[test]
    fn never_empty_on_a_sweep() {
        for n in -30i64..=30 {
            let j0 = rat(n * n * n, 5) - rat_int(40 * n);
            let roots = j_invert(&j0, &rat(1, 1024)).unwrap();
            assert!(!roots.is_empty(), "no real parameter found for j0 = {j0}");
        }
    }
}
