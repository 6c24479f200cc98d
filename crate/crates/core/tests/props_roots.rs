//! Property tests for root isolation: certification, coverage, and
//! refinement soundness.

use proptest::prelude::*;

use cevia_core::rational::{rat, rat_int, Rational};
use cevia_core::roots::{
    count_real_roots, count_roots_between, isolate_roots, refine, sturm_sequence, RatPolynomial,
};
use num_traits::{Signed, Zero};

fn poly() -> impl Strategy<Value = RatPolynomial> {
    proptest::collection::vec(-9i64..=9, 1..=7)
        .prop_map(|c| RatPolynomial::from_int_coeffs(&c))
        .prop_filter("nonzero polynomial", |p| !p.is_zero())
}

/// A polynomial with known rational roots, to stress exact-hit handling.
fn poly_with_rational_roots() -> impl Strategy<Value = RatPolynomial> {
    proptest::collection::vec((-6i64..=6, 1i64..=3), 1..=4).prop_map(|roots| {
        let mut p = RatPolynomial::from_int_coeffs(&[1]);
        for (n, d) in roots {
            let factor = RatPolynomial::from_coeffs(vec![rat(-n, d), rat_int(1)]);
            p = &p * &factor;
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn intervals_are_disjoint_and_cover_all_roots(p in poly()) {
        let intervals = isolate_roots(&p).unwrap();
        let total = count_real_roots(&p).unwrap();
        prop_assert_eq!(intervals.len(), total);
        for w in intervals.windows(2) {
            prop_assert!(w[0].hi() <= w[1].lo());
        }
        // each interval holds exactly one root of the square-free part
        let q = p.square_free_part().unwrap();
        let chain = sturm_sequence(&q).unwrap();
        for iv in &intervals {
            prop_assert_eq!(count_roots_between(&chain, iv.lo(), iv.hi()), 1);
            prop_assert!(!q.eval(iv.lo()).is_zero());
            prop_assert!(!q.eval(iv.hi()).is_zero());
            // opposite signs at the endpoints of a simple-root interval
            prop_assert!((q.eval(iv.lo()) * q.eval(iv.hi())).is_negative());
        }
    }

    #[test]
    fn refinement_never_loses_the_root(p in poly()) {
        let width = rat(1, 4096);
        for iv in isolate_roots(&p).unwrap() {
            let fine = refine(&p, &iv, &width).unwrap();
            prop_assert!(fine.width() <= width);
            prop_assert!(iv.lo() <= fine.lo() && fine.hi() <= iv.hi());
            let q = p.square_free_part().unwrap();
            let chain = sturm_sequence(&q).unwrap();
            prop_assert_eq!(count_roots_between(&chain, fine.lo(), fine.hi()), 1);
        }
    }

    #[test]
    fn known_rational_roots_are_each_isolated(p in poly_with_rational_roots()) {
        let intervals = isolate_roots(&p).unwrap();
        let q = p.square_free_part().unwrap();
        prop_assert_eq!(intervals.len(), q.degree().unwrap());
        let width = rat(1, 1 << 20);
        for iv in &intervals {
            let fine = refine(&p, iv, &width).unwrap();
            prop_assert!(fine.width() <= width);
        }
    }

    #[test]
    fn global_count_matches_variation_difference(p in poly()) {
        let q = p.square_free_part().unwrap();
        if q.degree().is_none_or(|d| d == 0) {
            return Ok(());
        }
        let chain = sturm_sequence(&q).unwrap();
        let bound = cevia_core::roots::cauchy_bound(&q).unwrap();
        let lo = -&bound;
        let inside = count_roots_between(&chain, &lo, &bound);
        prop_assert_eq!(inside, count_real_roots(&p).unwrap());
    }
}

#[test]
fn zero_width_refinement_is_rejected() {
    let p = RatPolynomial::from_int_coeffs(&[-2, 0, 1]);
    let iv = isolate_roots(&p).unwrap().pop().unwrap();
    assert!(refine(&p, &iv, &Rational::zero()).is_err());
}
