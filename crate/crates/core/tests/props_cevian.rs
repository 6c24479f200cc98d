//! Seeded sweeps of the full cevian identity suite plus standalone
//! conjugation properties on less constrained points.

use cevia_core::cevian::{anticomplement, complement, isotomcomplement, isotomic, CevianContext};
use cevia_core::sample::{random_nondegenerate_point, random_point, rng_from_seed};
use cevia_core::verify::{check_cevian_identities, Recorder};

#[test]
fn identity_suite_holds_on_two_hundred_seeded_points() {
    let mut rng = rng_from_seed(2024);
    let mut rec = Recorder::default();
    for _ in 0..200 {
        let p = random_nondegenerate_point(&mut rng);
        let ctx = CevianContext::new(&p).expect("sampled points are non-degenerate");
        check_cevian_identities(&ctx, &mut rng, &mut rec);
    }
    assert!(
        rec.ok(),
        "failing identities: {:?}",
        rec.checks()
            .iter()
            .filter(|c| c.failed > 0)
            .collect::<Vec<_>>()
    );
    // every named identity must have been exercised
    assert!(rec.checks().len() >= 20);
}

#[test]
fn conjugations_behave_on_arbitrary_off_sideline_points() {
    let mut rng = rng_from_seed(99);
    let mut tried = 0;
    while tried < 100 {
        let p = random_point(&mut rng);
        let Ok(pp) = isotomic(&p) else { continue };
        tried += 1;
        assert_eq!(isotomic(&pp).unwrap(), p, "involution at {p}");
        assert_eq!(anticomplement(&complement(&p)), p);
        assert_eq!(complement(&anticomplement(&p)), p);
        assert_eq!(isotomcomplement(&p).unwrap(), complement(&pp));
    }
}

#[test]
fn ratio_reports_are_consistent_across_a_seeded_sweep() {
    let mut rng = rng_from_seed(5);
    for _ in 0..200 {
        let p = random_nondegenerate_point(&mut rng);
        let ctx = CevianContext::new(&p).unwrap();
        let r = ctx.ratio_report();
        // a = 9 gz_zv and gs_sv = -a/3 and the k identity, all exact
        assert_eq!(&r.a, &(&r.gz_zv * cevia_core::rational::rat_int(9)));
        assert_eq!(&r.gs_sv, &(-&r.a / cevia_core::rational::rat_int(3)));
        let k = r.k.expect("sampled points have a != 3");
        assert_eq!(
            k,
            cevia_core::rational::rat_int(4) / (&r.a + cevia_core::rational::rat_int(1))
        );
        assert_eq!(k, r.sq_so);
        assert_eq!(r.cross_gvsz, Some(cevia_core::rational::rat_int(-3)));
    }
}
