//! Acceptance suite: one test per criterion, each printing a PASS line
//! with its measurements. Exact identities carry zero tolerance; numeric
//! cross-checks pin the stated bounds.

use std::time::{Duration, Instant};

use num_traits::{Signed, Zero};

use cevia_core::cevian::CevianContext;
use cevia_core::curve::{
    disc_d, f_eval, f_partials, j_function, j_invariant, j_invert, legendre_check, plane_forward,
    plane_inverse, singularity_analysis, to_weierstrass, torsion_set, CurveFamilyMember,
    WeierstrassPoint,
};
use cevia_core::rational::{rat, rat_int, to_f64};
use cevia_core::sample::{random_nondegenerate_point, random_rational, rng_from_seed};
use cevia_core::verify::{
    check_cevian_identities, check_extremal_critical_points, check_group_law, Recorder,
};
use cevia_core::BaryPoint;
use rand::Rng;

fn assert_recorder(rec: &Recorder, what: &str) {
    assert!(
        rec.ok(),
        "{what}: failing identities: {:?}",
        rec.checks()
            .iter()
            .filter(|c| c.failed > 0)
            .collect::<Vec<_>>()
    );
}

#[test]
fn criterion_01_identity_suite_on_1000_points() {
    let start = Instant::now();
    let mut rng = rng_from_seed(101);
    let mut rec = Recorder::default();
    for _ in 0..1000 {
        let p = random_nondegenerate_point(&mut rng);
        let ctx = CevianContext::new(&p).expect("sampled points are non-degenerate");
        check_cevian_identities(&ctx, &mut rng, &mut rec);
    }
    assert_recorder(&rec, "criterion 1");
    for name in [
        "matrix_product_s",
        "matrix_product_lambda",
        "matrix_product_m",
        "fixed_point_x_eigenfactor",
        "fixed_point_z_eigenfactor",
        "fixed_point_s_eigenfactor",
        "midpoint_q_qprime",
        "circumcenter_relation",
        "m_of_o_is_q",
        "cross_ratio_gvsz",
        "k_three_routes",
        "signed_ratio_routes",
    ] {
        let check = rec
            .checks()
            .iter()
            .find(|c| c.name == name)
            .unwrap_or_else(|| panic!("identity {name} was never exercised"));
        assert_eq!(check.passed, 1000, "{name} must run once per sample");
    }
    for name in ["affine_identity_s", "affine_identity_m"] {
        let check = rec.checks().iter().find(|c| c.name == name).unwrap();
        assert_eq!(check.passed, 3000, "{name} runs for three Y per sample");
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    println!("criterion 1: PASS (1000 points, all identities exact, {elapsed:?})");
}

#[test]
fn criterion_02_curve_membership() {
    let start = Instant::now();
    let mut rng = rng_from_seed(202);
    for _ in 0..1000 {
        let p = random_nondegenerate_point(&mut rng);
        let a = cevia_core::curve::a_of_point(&p).expect("off the sidelines");
        assert!(f_eval(&a, &p).is_zero(), "P = {p} misses its own curve");
    }
    for _ in 0..100 {
        let a = random_rational(&mut rng);
        for t in torsion_set() {
            assert!(f_eval(&a, &t).is_zero(), "torsion point {t} off E_{a}");
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    println!("criterion 2: PASS (1000 membership round trips, 100 torsion sweeps, {elapsed:?})");
}

#[test]
fn criterion_03_j_invariant_values() {
    assert_eq!(j_invariant(&rat_int(-3)).unwrap(), rat_int(0));
    assert_eq!(j_invariant(&rat_int(1)).unwrap(), rat(16384, 5));
    assert_eq!(j_invariant(&rat_int(-5)).unwrap(), rat(21296, 25));
    println!("criterion 3: PASS (j(E_-3) = 0, j(E_1) = 16384/5, j(E_-5) = 21296/25, exact)");
}

#[test]
fn criterion_04_legendre_cross_check() {
    let start = Instant::now();
    let mut rng = rng_from_seed(404);
    let mut complex_branch = 0;
    let mut checked = 0;
    while checked < 100 {
        let a = random_rational(&mut rng);
        if a.is_zero() || a == rat_int(-1) || a == rat_int(-9) {
            continue;
        }
        checked += 1;
        if a > rat_int(-9) && a < rat_int(-1) {
            complex_branch += 1;
        }
        let check = legendre_check(&a, 1e-9).unwrap_or_else(|e| panic!("a = {a}: {e}"));
        assert!(check.relative_error <= 1e-9);
    }
    // make sure the complex region was genuinely exercised
    for a in [rat_int(-5), rat(-7, 2), rat(-17, 2)] {
        legendre_check(&a, 1e-9).unwrap();
        complex_branch += 1;
    }
    assert!(complex_branch >= 3);
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!(
        "criterion 4: PASS (100 samples within 1e-9, {complex_branch} on the complex branch, {elapsed:?})"
    );
}

#[test]
fn criterion_05_j_1728_inversion() {
    let start = Instant::now();
    let prec = rat(1, 1_000_000_000_000);
    let roots = j_invert(&rat_int(1728), &prec).unwrap();
    assert_eq!(roots.len(), 4, "j = 1728 must have exactly four parameters");
    // radicals evaluated independently
    let s3 = 3.0_f64.sqrt();
    let inner = (9.0 + 6.0 * s3).sqrt();
    let expected = [
        -3.0 - s3 - inner,
        -3.0 - 2.0 * s3,
        -3.0 - s3 + inner,
        -3.0 + 2.0 * s3,
    ];
    for (iv, e) in roots.iter().zip(expected) {
        assert!(iv.width() <= prec);
        assert!(
            (iv.approx() - e).abs() <= 1e-10,
            "expected {e}, got {}",
            iv.approx()
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("criterion 5: PASS (four intervals matching the radicals to 1e-10, {elapsed:?})");
}

#[test]
fn criterion_06_singular_members() {
    for a in [rat_int(0), rat_int(-1), rat_int(-9)] {
        assert!(disc_d(&a).is_zero(), "d({a}) must vanish");
    }
    let minus1 = singularity_analysis(&rat_int(-1));
    let expected: Vec<BaryPoint> = [(1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
        .iter()
        .map(|&(x, y, z)| BaryPoint::from_integers(x, y, z).unwrap())
        .collect();
    assert_eq!(minus1.len(), 3);
    for p in &expected {
        assert!(minus1.contains(p), "missing singular point {p}");
    }
    let minus9 = singularity_analysis(&rat_int(-9));
    assert_eq!(minus9, vec![BaryPoint::centroid()]);
    assert!(singularity_analysis(&rat_int(0)).is_empty());
    // exact vanishing of all three partials at every reported point
    for (a, pts) in [(rat_int(-1), &minus1), (rat_int(-9), &minus9)] {
        for p in pts {
            let grads = f_partials(&a, p);
            assert!(grads.iter().all(|g| g.is_zero()), "a = {a}, p = {p}");
            assert!(f_eval(&a, p).is_zero());
        }
    }
    println!("criterion 6: PASS (singular members and their real singular points, exact)");
}

#[test]
fn criterion_07_torsion_group() {
    let start = Instant::now();
    let mut rng = rng_from_seed(707);
    let mut rec = Recorder::default();
    for _ in 0..20 {
        let a = cevia_core::sample::random_elliptic_parameter(&mut rng);
        check_group_law(&a, &mut rec);
    }
    assert_recorder(&rec, "criterion 7");
    for name in [
        "group_law_closure",
        "group_law_identity",
        "group_law_commutative",
        "group_law_inverses",
        "group_law_associative",
        "group_law_cyclic_of_order_6",
    ] {
        let check = rec.checks().iter().find(|c| c.name == name).unwrap();
        assert_eq!(check.passed, 20, "{name}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    println!("criterion 7: PASS (20 members, full group structure incl. 216-triple associativity, {elapsed:?})");
}

#[test]
fn criterion_08_weierstrass_map() {
    let e = CurveFamilyMember::new(rat_int(-3));
    // exact bijection of the six torsion points
    let expected = [
        WeierstrassPoint::Infinity,
        WeierstrassPoint::Affine(rat_int(0), rat_int(-1)),
        WeierstrassPoint::Affine(rat_int(0), rat_int(1)),
        WeierstrassPoint::Affine(rat_int(-1), rat_int(0)),
        WeierstrassPoint::Affine(rat_int(2), rat_int(3)),
        WeierstrassPoint::Affine(rat_int(2), rat_int(-3)),
    ];
    let mut images = Vec::new();
    for t in e.torsion_points().unwrap() {
        let w = to_weierstrass(&t).unwrap();
        assert!(w.on_curve());
        let back = cevia_core::curve::from_weierstrass(&w).unwrap();
        assert_eq!(back.point(), t.point(), "round trip of {w:?}");
        images.push(w);
    }
    for w in &expected {
        assert_eq!(images.iter().filter(|i| *i == w).count(), 1, "{w:?}");
    }

    // 100 random curve points: rational x in the real locus, y numeric;
    // the round trip is the identity within 1e-9 (exact where rational)
    let mut rng = rng_from_seed(808);
    let mut done = 0;
    while done < 100 {
        let xr = random_rational(&mut rng);
        let x = to_f64(&xr);
        // real branches need (3x-1)(x-1) >= 0; keep clear of the branch
        // points so the square root is well-conditioned
        if !!(0.25..=1.1).contains(&x) {
            continue;
        }
        let (c2, c1, c0) = (-3.0 * x + 1.0, (-3.0 * x + 1.0) * (x - 1.0), x * x - x);
        if c2.abs() < 1e-9 {
            continue;
        }
        let disc = c1 * c1 - 4.0 * c2 * c0;
        assert!(disc >= 0.0, "locus guarantees a real branch at x = {x}");
        let y = (-c1 + if done % 2 == 0 { 1.0 } else { -1.0 } * disc.sqrt()) / (2.0 * c2);
        // on-curve residual of the sampled point
        let residual = c2 * y * y + c1 * y + c0;
        assert!(residual.abs() <= 1e-6 * (1.0 + y * y));
        let u = 2.0 * x / (x - 1.0);
        let v = (3.0 * x - 1.0) * (2.0 * y + x - 1.0) / ((x - 1.0) * (x - 1.0));
        let w_res = v * v - (u * u * u + 1.0);
        let scale = 1.0 + v * v + u.abs().powi(3);
        assert!(w_res.abs() <= 1e-8 * scale, "x = {x}: residual {w_res}");
        // inverse
        let x2 = u / (u - 2.0);
        let y2 = (-(3.0 * x2 - 1.0) * (x2 - 1.0) + v * (x2 - 1.0) * (x2 - 1.0))
            / (2.0 * (3.0 * x2 - 1.0));
        assert!((x2 - x).abs() <= 1e-9 * (1.0 + x.abs()), "x = {x}");
        assert!((y2 - y).abs() <= 1e-9 * (1.0 + y.abs()), "x = {x}");
        done += 1;
    }

    // where everything is rational the round trip is exact
    let mut exact_done = 0;
    while exact_done < 100 {
        let x = random_rational(&mut rng);
        let y = random_rational(&mut rng);
        if x == rat_int(1) || x == rat(1, 3) {
            continue;
        }
        let (u, v) = plane_forward(&x, &y).unwrap();
        assert_eq!(plane_inverse(&u, &v).unwrap(), (x, y));
        exact_done += 1;
    }
    println!("criterion 8: PASS (torsion bijection exact, 100 numeric + 100 exact round trips)");
}

#[test]
fn criterion_09_extremal_values_of_f() {
    let start = Instant::now();
    let threshold = rat_int(1728);
    let mut rng = rng_from_seed(909);
    // left region: 10,000 samples of (-109, -9)
    for _ in 0..10_000 {
        let num = rng.gen_range(1i64..=10_000);
        let den = rng.gen_range(1i64..=100);
        let a = rat_int(-9) - rat(num, den);
        let j = j_function(&a).unwrap();
        assert!(j >= threshold, "f({a}) = {j} dips below 1728");
    }
    // middle region: 10,000 samples of (-9, -1)
    for _ in 0..10_000 {
        let den = rng.gen_range(2i64..=10_000);
        let num = rng.gen_range(1..den);
        let a = rat_int(-9) + rat(8 * num, den);
        assert!(a > rat_int(-9) && a < rat_int(-1));
        let j = j_function(&a).unwrap();
        assert!(j <= threshold, "f({a}) = {j} exceeds 1728");
    }
    // equality exactly at the j = 1728 parameters lying in the regions
    let prec = rat(1, 1_000_000_000_000);
    let roots = j_invert(&rat_int(1728), &prec).unwrap();
    let left: Vec<_> = roots.iter().filter(|iv| *iv.hi() < rat_int(-9)).collect();
    let middle: Vec<_> = roots
        .iter()
        .filter(|iv| *iv.lo() > rat_int(-9) && *iv.hi() < rat_int(-1))
        .collect();
    assert_eq!(left.len(), 1, "one extremal parameter left of -9");
    assert_eq!(middle.len(), 1, "one extremal parameter in (-9, -1)");
    for iv in left.iter().chain(middle.iter()) {
        let j_mid = j_function(&iv.midpoint()).unwrap();
        let deviation = (&j_mid - &threshold).abs();
        assert!(
            deviation < rat(1, 1_000_000),
            "f at the refined extremum should touch 1728"
        );
    }
    // the derivative factors have no other roots in the sampled regions
    let mut rec = Recorder::default();
    check_extremal_critical_points(&rat_int(-109), &mut rec);
    assert_recorder(&rec, "criterion 9");
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    println!("criterion 9: PASS (20000 exact samples, extremum = 1728 at the inverted roots, {elapsed:?})");
}
