//! The curve family itself: evaluation, membership, parameter recovery,
//! the geometric normal form, quartic model, discriminant, singular
//! members, and the exact j-invariant.

use num_traits::{One, Zero};

use super::CurveError;
use crate::geometry::BaryPoint;
use crate::rational::{rat_int, Rational};
use crate::roots::RatPolynomial;

/// F(a) = x^2(y+z) + y^2(x+z) + z^2(x+y) + (a+3)xyz at the canonical
/// coordinates of `p`. Homogeneous of degree 3 in the coordinates, so the
/// zero test is scale-invariant.
pub fn f_eval(a: &Rational, p: &BaryPoint) -> Rational {
    let [x, y, z] = p.raw();
    let sq = |v: &Rational| v * v;
    sq(&x) * (&y + &z)
        + sq(&y) * (&x + &z)
        + sq(&z) * (&x + &y)
        + (a + rat_int(3)) * &x * &y * &z
}

/// The gradient of F(a) at `p`:
/// (2x(y+z) + y^2 + z^2 + (a+3)yz, and cyclic permutations).
pub fn f_partials(a: &Rational, p: &BaryPoint) -> [Rational; 3] {
    let [x, y, z] = p.raw();
    let sq = |v: &Rational| v * v;
    let c = a + rat_int(3);
    let two = rat_int(2);
    [
        &two * &x * (&y + &z) + sq(&y) + sq(&z) + &c * &y * &z,
        &two * &y * (&x + &z) + sq(&x) + sq(&z) + &c * &x * &z,
        &two * &z * (&x + &y) + sq(&x) + sq(&y) + &c * &x * &y,
    ]
}

/// Recovers the unique parameter `a` with `p` on `E_a`:
/// a = -(x+y+z)(xy+yz+zx)/(xyz).
///
/// Off the sidelines the parameter always exists. On a sideline either no
/// member passes through `p`, or (for the six torsion points) every member
/// does and the parameter is indeterminate.
pub fn a_of_point(p: &BaryPoint) -> Result<Rational, CurveError> {
    let [x, y, z] = p.raw();
    let s3 = &x * &y * &z;
    let f0 = (&x + &y + &z) * (&x * &y + &y * &z + &z * &x);
    if s3.is_zero() {
        return if f0.is_zero() {
            Err(CurveError::IndeterminateA)
        } else {
            Err(CurveError::OnSideline)
        };
    }
    Ok(-f0 / s3)
}

/// d = 256 a^2 (a+1)^3 (a+9), the discriminant of the quartic model;
/// zero exactly for the three non-elliptic members.
pub fn disc_d(a: &Rational) -> Rational {
    let one = Rational::one();
    let a1 = a + &one;
    rat_int(256) * a * a * (&a1 * &a1 * &a1) * (a + rat_int(9))
}

/// j(E_a) as a function: `None` at the poles a = 0, -1, -9.
pub fn j_function(a: &Rational) -> Option<Rational> {
    if a.is_zero() || *a == rat_int(-1) || *a == rat_int(-9) {
        return None;
    }
    let cube = |v: &Rational| v * v * v;
    let a2 = a * a;
    let a3 = &a2 * a;
    let num = cube(&(a + rat_int(3))) * cube(&(&a3 + rat_int(9) * &a2 + rat_int(3) * a + rat_int(3)));
    let den = &a2 * cube(&(a + rat_int(1))) * (a + rat_int(9));
    Some(num / den)
}

/// The exact j-invariant
/// j(E_a) = (a+3)^3 (a^3+9a^2+3a+3)^3 / (a^2 (a+1)^3 (a+9)).
pub fn j_invariant(a: &Rational) -> Result<Rational, CurveError> {
    j_function(a).ok_or(CurveError::NotElliptic)
}

/// The geometric normal form in the affine chart (x, y, 1-x-y):
/// `y2(x) * y^2 + y1(x) * y + y0(x) = 0` with
/// y2 = ax+1, y1 = (ax+1)(x-1), y0 = x^2-x.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub y2: RatPolynomial,
    pub y1: RatPolynomial,
    pub y0: RatPolynomial,
}

impl NormalForm {
    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.y2.eval(x) * y * y + self.y1.eval(x) * y + self.y0.eval(x)
    }

    /// Discriminant with respect to y: y1^2 - 4 y2 y0, quartic in x.
    pub fn discriminant_poly(&self) -> RatPolynomial {
        &(&self.y1 * &self.y1) - &(&RatPolynomial::constant(rat_int(4)) * &(&self.y2 * &self.y0))
    }
}

pub fn affine_normal_form(a: &Rational) -> NormalForm {
    let ax1 = RatPolynomial::from_coeffs(vec![Rational::one(), a.clone()]);
    let xm1 = RatPolynomial::from_int_coeffs(&[-1, 1]);
    NormalForm {
        y1: &ax1 * &xm1,
        y2: ax1,
        y0: RatPolynomial::from_int_coeffs(&[0, -1, 1]),
    }
}

/// The quartic model Y^2 = (ax+1)(x-1)(ax^2-(a+3)x-1), stored both
/// expanded and in factored form; construction checks the expansion
/// against the normal form's discriminant, which is the same polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuarticModel {
    coeffs: [Rational; 5],
    factors: [RatPolynomial; 3],
}

impl QuarticModel {
    pub fn coeffs(&self) -> &[Rational; 5] {
        &self.coeffs
    }

    pub fn factors(&self) -> &[RatPolynomial; 3] {
        &self.factors
    }

    pub fn rhs_poly(&self) -> RatPolynomial {
        RatPolynomial::from_coeffs(self.coeffs.to_vec())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.rhs_poly().eval(x)
    }
}

pub fn quartic_model(a: &Rational) -> QuarticModel {
    let ax1 = RatPolynomial::from_coeffs(vec![Rational::one(), a.clone()]);
    let xm1 = RatPolynomial::from_int_coeffs(&[-1, 1]);
    let quad = RatPolynomial::from_coeffs(vec![rat_int(-1), -(a + rat_int(3)), a.clone()]);
    let product = &(&ax1 * &xm1) * &quad;
    let disc = affine_normal_form(a).discriminant_poly();
    assert_eq!(product, disc, "factored quartic vs normal-form discriminant");
    let mut coeffs: [Rational; 5] = Default::default();
    for (i, c) in coeffs.iter_mut().enumerate() {
        *c = product.coeff(i);
    }
    QuarticModel {
        coeffs,
        factors: [ax1, xm1, quad],
    }
}

/// The six points lying on every member of the family: the vertices and
/// the infinite points of the three sides.
pub fn torsion_set() -> [BaryPoint; 6] {
    let p = |x: i64, y: i64, z: i64| BaryPoint::from_integers(x, y, z).unwrap();
    [
        p(1, 0, 0),
        p(0, 1, 0),
        p(0, 0, 1),
        p(0, 1, -1),
        p(1, 0, -1),
        p(1, -1, 0),
    ]
}

/// Real singular points of F(a) = 0.
///
/// Nonsingular (hence elliptic, given the rational points) exactly for
/// a outside {0, -1, -9}. For a = -1 the cubic splits into the three
/// anticomplementary sides, whose pairwise meets are singular; for a = -9
/// the centroid is singular; for a = 0 the singular points are not real.
pub fn singularity_analysis(a: &Rational) -> Vec<BaryPoint> {
    let pts: Vec<BaryPoint> = if *a == rat_int(-1) {
        [(1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
            .iter()
            .map(|&(x, y, z)| BaryPoint::from_integers(x, y, z).unwrap())
            .collect()
    } else if *a == rat_int(-9) {
        vec![BaryPoint::centroid()]
    } else {
        Vec::new()
    };
    for p in &pts {
        debug_assert!(f_partials(a, p).iter().all(|d| d.is_zero()));
        debug_assert!(f_eval(a, p).is_zero());
    }
    pts
}

/// One member E_a of the family with its derived invariants.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveFamilyMember {
    a: Rational,
    disc_d: Rational,
    is_elliptic: bool,
    torsion: [BaryPoint; 6],
    singular_points: Vec<BaryPoint>,
}

impl CurveFamilyMember {
    pub fn new(a: Rational) -> Self {
        let d = disc_d(&a);
        let singular_points = singularity_analysis(&a);
        Self {
            is_elliptic: !d.is_zero(),
            disc_d: d,
            torsion: torsion_set(),
            singular_points,
            a,
        }
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn disc_d(&self) -> &Rational {
        &self.disc_d
    }

    pub fn is_elliptic(&self) -> bool {
        self.is_elliptic
    }

    pub fn singular_points(&self) -> &[BaryPoint] {
        &self.singular_points
    }

    /// The six shared rational points; they satisfy F(a) = 0 for every a.
    pub fn torsion_candidates(&self) -> &[BaryPoint; 6] {
        &self.torsion
    }

    pub fn contains(&self, p: &BaryPoint) -> bool {
        f_eval(&self.a, p).is_zero()
    }

    /// Wraps `p` as a point of this curve after checking the equation.
    pub fn membership(&self, p: &BaryPoint) -> Result<CurvePoint, CurveError> {
        if self.contains(p) {
            Ok(CurvePoint {
                point: p.clone(),
                a: self.a.clone(),
            })
        } else {
            Err(CurveError::NotOnCurve)
        }
    }

    /// The torsion points as curve points; requires an elliptic member for
    /// the group structure to make sense.
    pub fn torsion_points(&self) -> Result<[CurvePoint; 6], CurveError> {
        if !self.is_elliptic {
            return Err(CurveError::NotElliptic);
        }
        Ok(self.torsion.clone().map(|point| CurvePoint {
            point,
            a: self.a.clone(),
        }))
    }

    pub fn j_invariant(&self) -> Result<Rational, CurveError> {
        j_invariant(&self.a)
    }
}

/// A point certified to lie on a specific member of the family.
#[derive(Debug, Clone, PartialEq)]
pub struct CurvePoint {
    point: BaryPoint,
    a: Rational,
}

impl CurvePoint {
    pub fn point(&self) -> &BaryPoint {
        &self.point
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub(super) fn certified(point: BaryPoint, a: Rational) -> Self {
        debug_assert!(f_eval(&a, &point).is_zero());
        Self { point, a }
    }
}
