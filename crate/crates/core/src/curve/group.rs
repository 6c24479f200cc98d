//! Chord-tangent group law on elliptic members, based at (0,1,-1).
//!
//! The line through two points r, s is parametrized as r + t*s; restricting
//! F(a) to it gives a cubic in t whose t^0 and t^3 coefficients vanish when
//! both points lie on the curve, leaving the known roots t = 0 (r) and
//! t = infinity (s) plus one more. Tangents reuse the same expansion with a
//! second point taken on the tangent line, which forces a double root at
//! t = 0. Infinite barycentric points need no special case.

use num_traits::Zero;

use super::family::{f_eval, f_partials, CurveFamilyMember, CurvePoint};
use super::CurveError;
use crate::geometry::{BaryLine, BaryPoint};
use crate::rational::Rational;

/// The base point of the group law: the infinite point of the side BC.
pub fn base_point() -> BaryPoint {
    BaryPoint::from_integers(0, 1, -1).unwrap()
}

fn combine(r: &BaryPoint, t: &Rational, s: &BaryPoint) -> BaryPoint {
    let rr = r.raw();
    let sr = s.raw();
    BaryPoint::new([
        &rr[0] + t * &sr[0],
        &rr[1] + t * &sr[1],
        &rr[2] + t * &sr[2],
    ])
    .expect("r + t*s vanishes only if r and s coincide projectively")
}

impl CurveFamilyMember {
    /// Third intersection of the line rs with the curve, both points on
    /// the curve and distinct. Multiplicities work out automatically: a
    /// zero linear coefficient means the line is tangent at r, a zero
    /// quadratic coefficient means it is tangent at s.
    fn third_intersection(&self, r: &BaryPoint, s: &BaryPoint) -> BaryPoint {
        debug_assert!(r != s);
        debug_assert!(self.contains(r) && self.contains(s));
        // F(r + t s) = a1 t + a2 t^2 by the cubic polarization identity
        let grad_r = f_partials(self.a(), r);
        let grad_s = f_partials(self.a(), s);
        let dot = |g: &[Rational; 3], p: &BaryPoint| -> Rational {
            let v = p.raw();
            &g[0] * &v[0] + &g[1] * &v[1] + &g[2] * &v[2]
        };
        let a1 = dot(&grad_r, s);
        let a2 = dot(&grad_s, r);
        if a2.is_zero() {
            assert!(!a1.is_zero(), "a line cannot lie inside an elliptic cubic");
            return s.clone();
        }
        combine(r, &(-a1 / a2), s)
    }

    /// Third intersection of the tangent line at r with the curve.
    fn tangent_third(&self, r: &BaryPoint) -> Result<BaryPoint, CurveError> {
        debug_assert!(self.contains(r));
        let grad = f_partials(self.a(), r);
        if grad.iter().all(|d| d.is_zero()) {
            return Err(CurveError::SingularAt);
        }
        let tangent = BaryLine::new(grad.clone())?;
        let [l0, l1, l2] = tangent.coeffs().clone().map(Rational::from_integer);
        let candidates = [
            [Rational::zero(), l2.clone(), -&l1],
            [-&l2, Rational::zero(), l0.clone()],
            [l1.clone(), -&l0, Rational::zero()],
        ];
        let s0 = candidates
            .iter()
            .filter_map(|c| BaryPoint::new(c.clone()).ok())
            .find(|c| c != r)
            .expect("a line carries at least two distinct coordinate points");
        debug_assert!(tangent.contains(&s0));
        // F(r + t s0) = a2 t^2 + a3 t^3: double root at t = 0 by tangency
        let grad_s0 = f_partials(self.a(), &s0);
        let v = r.raw();
        let a2 = &grad_s0[0] * &v[0] + &grad_s0[1] * &v[1] + &grad_s0[2] * &v[2];
        let a3 = f_eval(self.a(), &s0);
        if a3.is_zero() {
            assert!(!a2.is_zero(), "a line cannot lie inside an elliptic cubic");
            return Ok(s0);
        }
        Ok(combine(r, &(-a2 / a3), &s0))
    }

    /// p + q in the additive group with identity (0,1,-1): reflect the
    /// third intersection of pq through the base point.
    pub fn chord_tangent_add(
        &self,
        p: &CurvePoint,
        q: &CurvePoint,
    ) -> Result<CurvePoint, CurveError> {
        if !self.is_elliptic() {
            return Err(CurveError::NotElliptic);
        }
        if p.a() != self.a() || q.a() != self.a() {
            return Err(CurveError::WrongCurve);
        }
        let first = if p.point() == q.point() {
            self.tangent_third(p.point())?
        } else {
            self.third_intersection(p.point(), q.point())
        };
        let o = base_point();
        let sum = if first == o {
            self.tangent_third(&o)?
        } else {
            self.third_intersection(&o, &first)
        };
        assert!(self.contains(&sum), "group law must stay on the curve");
        Ok(CurvePoint::certified(sum, self.a().clone()))
    }

    /// Addition table of the six torsion points, as indices into
    /// `torsion_points()`. Errs if some sum leaves the torsion set, which
    /// would contradict closure.
    pub fn torsion_table(&self) -> Result<[[usize; 6]; 6], CurveError> {
        let pts = self.torsion_points()?;
        let mut table = [[0usize; 6]; 6];
        for i in 0..6 {
            for j in 0..6 {
                let sum = self.chord_tangent_add(&pts[i], &pts[j])?;
                let k = pts
                    .iter()
                    .position(|t| t.point() == sum.point())
                    .ok_or(CurveError::NotOnCurve)?;
                table[i][j] = k;
            }
        }
        Ok(table)
    }
}
