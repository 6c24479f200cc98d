//! The birational map between E_{-3} and the Weierstrass curve
//! v^2 = u^3 + 1.
//!
//! In the affine chart (x, y) = (X/W, Y/W) with W = X+Y+Z the map is
//!   u = 2x/(x-1),  v = (3x-1)(2y+x-1)/(x-1)^2,
//! with inverse
//!   x = u/(u-2),   y = (-(3x-1)(x-1) + v(x-1)^2) / (2(3x-1)).
//! Written homogeneously, u = 2X/(X-W) and
//! v = (3X-W)(2Y+X-W)/(X-W)^2, which also covers the infinite points of
//! the curve except the base point. The two points where the formulas
//! break are pinned by the curve itself: the vertex (1,0,0) is the unique
//! curve point with X = W and goes to the point at infinity, and the base
//! point (0,1,-1) is the unique preimage of (-1,0), the point the inverse
//! formula misses (its x would be 1/3, where the y-denominator vanishes).

use num_traits::{One, Signed, Zero};

use super::family::{f_eval, CurvePoint};
use super::CurveError;
use crate::geometry::BaryPoint;
use crate::rational::{rat_int, Rational};

/// A point of v^2 = u^3 + 1, with the usual single point at infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeierstrassPoint {
    Affine(Rational, Rational),
    Infinity,
}

impl WeierstrassPoint {
    pub fn on_curve(&self) -> bool {
        match self {
            WeierstrassPoint::Infinity => true,
            WeierstrassPoint::Affine(u, v) => v * v == u * u * u + Rational::one(),
        }
    }
}

fn vertex_a() -> BaryPoint {
    BaryPoint::from_integers(1, 0, 0).unwrap()
}

fn base_point() -> BaryPoint {
    BaryPoint::from_integers(0, 1, -1).unwrap()
}

/// Maps a point of E_{-3} to v^2 = u^3 + 1.
pub fn to_weierstrass(p: &CurvePoint) -> Result<WeierstrassPoint, CurveError> {
    if *p.a() != rat_int(-3) {
        return Err(CurveError::WrongCurve);
    }
    let pt = p.point();
    if *pt == vertex_a() {
        return Ok(WeierstrassPoint::Infinity);
    }
    if *pt == base_point() {
        return Ok(WeierstrassPoint::Affine(rat_int(-1), Rational::zero()));
    }
    let [x, y, z] = pt.raw();
    let w = &x + &y + &z;
    let denom = &x - &w; // -(y+z), nonzero off the two special points
    debug_assert!(!denom.is_zero());
    let u = rat_int(2) * &x / &denom;
    let v = (rat_int(3) * &x - &w) * (rat_int(2) * &y + &x - &w) / (&denom * &denom);
    let image = WeierstrassPoint::Affine(u, v);
    assert!(image.on_curve(), "image must satisfy v^2 = u^3 + 1");
    Ok(image)
}

/// Maps a point of v^2 = u^3 + 1 back to E_{-3}.
pub fn from_weierstrass(wp: &WeierstrassPoint) -> Result<CurvePoint, CurveError> {
    if !wp.on_curve() {
        return Err(CurveError::NotOnCurve);
    }
    let a = rat_int(-3);
    let point = match wp {
        WeierstrassPoint::Infinity => vertex_a(),
        WeierstrassPoint::Affine(u, v) => {
            if *u == rat_int(-1) {
                base_point()
            } else if *u == rat_int(2) {
                // v^2 = 9 here, so v = 3 or v = -3
                if v.is_positive() {
                    BaryPoint::from_integers(1, 0, -1).unwrap()
                } else {
                    BaryPoint::from_integers(1, -1, 0).unwrap()
                }
            } else {
                let (x, y) = plane_inverse(u, v).expect("poles handled above");
                let z = Rational::one() - &x - &y;
                BaryPoint::new([x, y, z])?
            }
        }
    };
    assert!(f_eval(&a, &point).is_zero(), "preimage must lie on E_{{-3}}");
    Ok(CurvePoint::certified(point, a))
}

/// The chart map as a plane rational map, with no curve membership
/// required; `None` at the pole x = 1. Together with `plane_inverse` this
/// is a birational pair: each composition is the identity off the poles.
pub fn plane_forward(x: &Rational, y: &Rational) -> Option<(Rational, Rational)> {
    if *x == Rational::one() {
        return None;
    }
    let xm1 = x - Rational::one();
    let u = rat_int(2) * x / &xm1;
    let v = (rat_int(3) * x - rat_int(1)) * (rat_int(2) * y + &xm1) / (&xm1 * &xm1);
    Some((u, v))
}

/// Inverse chart map; `None` at the poles u = 2 and u = -1.
pub fn plane_inverse(u: &Rational, v: &Rational) -> Option<(Rational, Rational)> {
    if *u == rat_int(2) || *u == rat_int(-1) {
        return None;
    }
    let x = u / (u - rat_int(2));
    let tx = rat_int(3) * &x - Rational::one(); // zero only at u = -1
    let xm1 = &x - Rational::one();
    let y = (-&tx * &xm1 + v * &xm1 * &xm1) / (rat_int(2) * &tx);
    Some((x, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::family::CurveFamilyMember;
    use crate::rational::rat;

    fn e_minus3() -> CurveFamilyMember {
        CurveFamilyMember::new(rat_int(-3))
    }

    fn pt(x: i64, y: i64, z: i64) -> BaryPoint {
        BaryPoint::from_integers(x, y, z).unwrap()
    }

    #[test]
    fn torsion_points_map_to_the_six_rational_points() {
        let e = e_minus3();
        let expected = [
            (pt(1, 0, 0), WeierstrassPoint::Infinity),
            (pt(0, 1, 0), WeierstrassPoint::Affine(rat_int(0), rat_int(-1))),
            (pt(0, 0, 1), WeierstrassPoint::Affine(rat_int(0), rat_int(1))),
            (pt(0, 1, -1), WeierstrassPoint::Affine(rat_int(-1), rat_int(0))),
            (pt(1, 0, -1), WeierstrassPoint::Affine(rat_int(2), rat_int(3))),
            (pt(1, -1, 0), WeierstrassPoint::Affine(rat_int(2), rat_int(-3))),
        ];
        for (p, w) in expected {
            let cp = e.membership(&p).unwrap();
            assert_eq!(to_weierstrass(&cp).unwrap(), w, "image of {p}");
            assert_eq!(from_weierstrass(&w).unwrap().point(), &p, "preimage of {w:?}");
            assert!(w.on_curve());
        }
    }

    #[test]
    fn images_satisfy_the_weierstrass_equation() {
        // (2,3): 9 = 8 + 1
        let w = WeierstrassPoint::Affine(rat_int(2), rat_int(3));
        assert!(w.on_curve());
        let off = WeierstrassPoint::Affine(rat_int(1), rat_int(1));
        assert!(!off.on_curve());
        assert_eq!(from_weierstrass(&off).unwrap_err(), CurveError::NotOnCurve);
    }

    #[test]
    fn wrong_member_is_rejected() {
        let e = CurveFamilyMember::new(rat_int(-11));
        let p = e.membership(&pt(1, 2, 3)).unwrap();
        assert_eq!(to_weierstrass(&p).unwrap_err(), CurveError::WrongCurve);
    }

    #[test]
    fn plane_maps_are_birational_inverses() {
        let samples = [
            (rat(2, 3), rat(-5, 7)),
            (rat(-4, 5), rat(9, 2)),
            (rat(11, 6), rat(1, 3)),
            (rat(-7, 2), rat(0, 1)),
        ];
        for (x, y) in samples {
            let (u, v) = plane_forward(&x, &y).unwrap();
            let (x2, y2) = plane_inverse(&u, &v).unwrap();
            assert_eq!((x2, y2), (x, y));
        }
        let (u, v) = (rat(5, 4), rat(-2, 9));
        let (x, y) = plane_inverse(&u, &v).unwrap();
        let (u2, v2) = plane_forward(&x, &y).unwrap();
        assert_eq!((u2, v2), (u, v));
    }

    #[test]
    fn plane_maps_report_their_poles() {
        assert_eq!(plane_forward(&rat_int(1), &rat_int(5)), None);
        assert_eq!(plane_inverse(&rat_int(2), &rat_int(3)), None);
        assert_eq!(plane_inverse(&rat_int(-1), &rat_int(0)), None);
    }

    #[test]
    fn base_point_image_is_the_limit_along_the_curve() {
        // approach (0,1,-1) along the curve in floating point and watch
        // (u,v) tend to (-1,0); confirms the special case is the right
        // resolution of the 0/0 in the homogeneous formulas
        let mut s = 1e-3_f64;
        let mut last_dist = f64::INFINITY;
        for _ in 0..4 {
            // point (s, 1, -1 + w) with F(-3) = 0; solve the quadratic in w:
            // w^2 (1+s) + w (s^2 - 1 - 2s) + 2s = 0, taking the small root
            // in its cancellation-free form 2c / (-b + sqrt(b^2 - 4ac))
            let qa = 1.0 + s;
            let qb = s * s - 1.0 - 2.0 * s;
            let qc = 2.0 * s;
            let w = 2.0 * qc / (-qb + (qb * qb - 4.0 * qa * qc).sqrt());
            // at (x, y, z) = (s, 1, -1 + w) the coordinate sum is s + w, so
            // the map reduces to u = -2s/w, v = (2s - w)(2 - w)/w^2; the
            // reduced forms dodge the cancellation in forming x + y + z
            let u = -2.0 * s / w;
            let v = (2.0 * s - w) * (2.0 - w) / (w * w);
            let dist = ((u + 1.0).powi(2) + v * v).sqrt();
            assert!(dist < 0.5 * last_dist, "images should approach (-1, 0)");
            last_dist = dist;
            s /= 10.0;
        }
        assert!(last_dist < 1e-5);
    }

    #[test]
    fn round_trip_on_curve_points_is_exact() {
        let e = e_minus3();
        for p in e.torsion_points().unwrap() {
            let w = to_weierstrass(&p).unwrap();
            let back = from_weierstrass(&w).unwrap();
            assert_eq!(back.point(), p.point());
        }
    }
}
