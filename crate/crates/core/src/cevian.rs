//! Cevian constructions driven by a point P: isotomic conjugates,
//! complements, traces, the affine maps T_P, T_P', S, lambda, M, their
//! fixed points X, Z, S, the auxiliary points V and O, and the signed-ratio
//! identities tying them together.
//!
//! A `CevianContext` classifies the degeneracies of P once, then caches
//! every derived point both in canonical form and as the raw closed-form
//! coordinate triple, because the linear identities between the
//! constructions hold for those specific representatives.

use thiserror::Error;

use num_traits::Zero;

use crate::geometry::{
    cross_ratio, division_ratio, line_through, meet, signed_ratio, BaryPoint, GeomError, ProjMap,
};
use crate::rational::{rat_int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CevianError {
    #[error("point lies on a side of the reference triangle")]
    OnSideline,
    #[error("vertices have no cevian trace triple")]
    VertexInput,
    #[error("context is degenerate: {0}")]
    DegenerateContext(&'static str),
    #[error("fixed point Z is undefined: its coordinate triple vanishes at the centroid")]
    ZUndefined,
    #[error(transparent)]
    Geom(#[from] GeomError),
}

/// Degeneracy classification of a driving point, computed eagerly.
///
/// The first two flags make a `CevianContext` unconstructible; the rest are
/// carried along so each operation can declare what it tolerates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct DegeneracyFlags {
    /// xyz = 0
    pub on_sideline: bool,
    /// (x+y)(x+z)(y+z) = 0
    pub on_anticomplementary_side: bool,
    /// x + y + z = 0
    pub at_infinity: bool,
    /// xy + yz + zx = 0 (the Steiner circumellipse)
    pub on_steiner_circumellipse: bool,
    /// x = y, y = z, or z = x
    pub on_median: bool,
    /// F(3) = 0, equivalently a = 3: S is infinite and M is a translation
    pub s_infinite: bool,
}

impl DegeneracyFlags {
    pub fn classify(p: &BaryPoint) -> Self {
        let [x, y, z] = p.raw();
        let s1 = &x + &y + &z;
        let s2 = &x * &y + &y * &z + &z * &x;
        let s3 = &x * &y * &z;
        let f3 = &s1 * &s2 + rat_int(3) * &s3;
        Self {
            on_sideline: s3.is_zero(),
            on_anticomplementary_side: (&s1 * &s2 - &s3).is_zero(),
            at_infinity: s1.is_zero(),
            on_steiner_circumellipse: s2.is_zero(),
            on_median: x == y || y == z || z == x,
            s_infinite: f3.is_zero(),
        }
    }

    /// Degeneracies that prevent the construction outright.
    pub fn hard(&self) -> bool {
        self.on_sideline || self.on_anticomplementary_side
    }

    pub fn any(&self) -> bool {
        self.hard()
            || self.at_infinity
            || self.on_steiner_circumellipse
            || self.on_median
            || self.s_infinite
    }

    pub fn names(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.on_sideline {
            out.push("on_sideline");
        }
        if self.on_anticomplementary_side {
            out.push("on_anticomplementary_side");
        }
        if self.at_infinity {
            out.push("at_infinity");
        }
        if self.on_steiner_circumellipse {
            out.push("on_steiner_circumellipse");
        }
        if self.on_median {
            out.push("on_median");
        }
        if self.s_infinite {
            out.push("s_infinite");
        }
        out
    }
}

/// Isotomic conjugate (yz, xz, xy); an involution off the sidelines.
pub fn isotomic(p: &BaryPoint) -> Result<BaryPoint, CevianError> {
    let [x, y, z] = p.raw();
    if (&x * &y * &z).is_zero() {
        return Err(CevianError::OnSideline);
    }
    Ok(BaryPoint::new([&y * &z, &x * &z, &x * &y])?)
}

/// Complement: the homothety through the centroid with ratio -1/2.
pub fn complement(p: &BaryPoint) -> BaryPoint {
    let [x, y, z] = p.raw();
    BaryPoint::new([&y + &z, &x + &z, &x + &y]).expect("complement map is nonsingular")
}

/// Anticomplement, the inverse of the complement.
pub fn anticomplement(p: &BaryPoint) -> BaryPoint {
    let [x, y, z] = p.raw();
    BaryPoint::new([-&x + &y + &z, &x - &y + &z, &x + &y - &z])
        .expect("anticomplement map is nonsingular")
}

/// The complement as a matrix.
pub fn complement_map() -> ProjMap {
    ProjMap::from_int_rows([[0, 1, 1], [1, 0, 1], [1, 1, 0]]).unwrap()
}

/// The anticomplement as a matrix.
pub fn anticomplement_map() -> ProjMap {
    ProjMap::from_int_rows([[-1, 1, 1], [1, -1, 1], [1, 1, -1]]).unwrap()
}

/// Isotomcomplement: the complement of the isotomic conjugate, with closed
/// form (x(y+z), y(x+z), z(x+y)).
pub fn isotomcomplement(p: &BaryPoint) -> Result<BaryPoint, CevianError> {
    let [x, y, z] = p.raw();
    if (&x * &y * &z).is_zero() {
        return Err(CevianError::OnSideline);
    }
    Ok(BaryPoint::new([
        &x * (&y + &z),
        &y * (&x + &z),
        &z * (&x + &y),
    ])?)
}

fn is_vertex(p: &BaryPoint) -> bool {
    p.coords().iter().filter(|c| c.is_zero()).count() == 2
}

/// Traces of P on the sides: D = (0,y,z), E = (x,0,z), F = (x,y,0).
pub fn traces(p: &BaryPoint) -> Result<[BaryPoint; 3], CevianError> {
    if is_vertex(p) {
        return Err(CevianError::VertexInput);
    }
    let [x, y, z] = p.raw();
    let zero = Rational::zero();
    Ok([
        BaryPoint::new([zero.clone(), y.clone(), z.clone()])?,
        BaryPoint::new([x.clone(), zero.clone(), z.clone()])?,
        BaryPoint::new([x.clone(), y.clone(), zero])?,
    ])
}

/// Traces of the isotomic conjugate: D3 = (0,z,y), E3 = (z,0,x),
/// F3 = (y,x,0).
pub fn cotraces(p: &BaryPoint) -> Result<[BaryPoint; 3], CevianError> {
    if is_vertex(p) {
        return Err(CevianError::VertexInput);
    }
    let [x, y, z] = p.raw();
    let zero = Rational::zero();
    Ok([
        BaryPoint::new([zero.clone(), z.clone(), y.clone()])?,
        BaryPoint::new([z.clone(), zero.clone(), x.clone()])?,
        BaryPoint::new([y.clone(), x.clone(), zero])?,
    ])
}

/// Exact ratio data attached to a context.
///
/// Closed forms are total for every constructible context; the optional
/// fields drop out exactly where the underlying geometry degenerates
/// (Z needs P away from the centroid, the homothety ratio needs a != 3).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioReport {
    /// a = -(x+y+z)(xy+yz+zx)/(xyz) = 9 GZ/ZV
    pub a: Rational,
    pub gz_zv: Rational,
    pub gs_sv: Rational,
    pub sq_so: Rational,
    /// Homothety ratio k = 4/(a+1) of the map M; `None` when a = 3 and M
    /// degenerates to a translation.
    pub k: Option<Rational>,
    /// Cross ratio (GV,SZ); `None` only when P is the centroid.
    pub cross_gvsz: Option<Rational>,
    /// S lies on the line at infinity (a = 3).
    pub s_infinite: bool,
}

/// All constructions of the cevian configuration for one driving point.
#[derive(Debug, Clone)]
pub struct CevianContext {
    p: BaryPoint,
    flags: DegeneracyFlags,
    x: Rational,
    y: Rational,
    z: Rational,
    s1: Rational,
    s2: Rational,
    s3: Rational,
    /// x^2(y+z) + y^2(x+z) + z^2(x+y)
    base: Rational,
    raw_p_prime: [Rational; 3],
    raw_q: [Rational; 3],
    raw_q_prime: [Rational; 3],
    raw_x: [Rational; 3],
    raw_z: [Rational; 3],
    raw_s: [Rational; 3],
    raw_v: [Rational; 3],
    raw_o: [Rational; 3],
    p_prime: BaryPoint,
    q: BaryPoint,
    q_prime: BaryPoint,
    trace_pts: [BaryPoint; 3],
    cotrace_pts: [BaryPoint; 3],
    x_point: BaryPoint,
    z_point: Option<BaryPoint>,
    s_point: BaryPoint,
    v_point: BaryPoint,
    o_point: BaryPoint,
}

impl CevianContext {
    /// Builds the full configuration. Fails when P is on a side of the
    /// reference triangle or of its anticomplementary triangle; all other
    /// degeneracies are recorded as flags.
    pub fn new(p: &BaryPoint) -> Result<Self, CevianError> {
        let flags = DegeneracyFlags::classify(p);
        if flags.on_sideline {
            return Err(CevianError::DegenerateContext("on_sideline"));
        }
        if flags.on_anticomplementary_side {
            return Err(CevianError::DegenerateContext("on_anticomplementary_side"));
        }
        let [x, y, z] = p.raw();
        let s1 = &x + &y + &z;
        let s2 = &x * &y + &y * &z + &z * &x;
        let s3 = &x * &y * &z;
        let sq = |v: &Rational| v * v;
        let base = sq(&x) * (&y + &z) + sq(&y) * (&x + &z) + sq(&z) * (&x + &y);

        let raw_p_prime = [&y * &z, &x * &z, &x * &y];
        let raw_q = [&x * (&y + &z), &y * (&x + &z), &z * (&x + &y)];
        let raw_q_prime = [&y + &z, &x + &z, &x + &y];
        let raw_x = [sq(&x) * (&y + &z), sq(&y) * (&x + &z), sq(&z) * (&x + &y)];
        let diff_yz = &y - &z;
        let diff_zx = &z - &x;
        let diff_xy = &x - &y;
        let raw_z = [&x * sq(&diff_yz), &y * sq(&diff_zx), &z * sq(&diff_xy)];
        let sum_yz = &y + &z;
        let sum_xz = &x + &z;
        let sum_xy = &x + &y;
        let raw_s = [&x * sq(&sum_yz), &y * sq(&sum_xz), &z * sq(&sum_xy)];
        let raw_v = [
            &x * (sq(&y) + &y * &z + sq(&z)),
            &y * (sq(&x) + &x * &z + sq(&z)),
            &z * (sq(&x) + &x * &y + sq(&y)),
        ];
        let xdd = &s2 - sq(&x);
        let ydd = &s2 - sq(&y);
        let zdd = &s2 - sq(&z);
        let raw_o = [
            &x * sq(&sum_yz) * xdd,
            &y * sq(&sum_xz) * ydd,
            &z * sq(&sum_xy) * zdd,
        ];

        let z_point = BaryPoint::new(raw_z.clone()).ok();
        Ok(Self {
            p_prime: BaryPoint::new(raw_p_prime.clone())?,
            q: BaryPoint::new(raw_q.clone())?,
            q_prime: BaryPoint::new(raw_q_prime.clone())?,
            trace_pts: traces(p)?,
            cotrace_pts: cotraces(p)?,
            x_point: BaryPoint::new(raw_x.clone())?,
            z_point,
            s_point: BaryPoint::new(raw_s.clone())?,
            v_point: BaryPoint::new(raw_v.clone())?,
            o_point: BaryPoint::new(raw_o.clone())?,
            p: p.clone(),
            flags,
            x,
            y,
            z,
            s1,
            s2,
            s3,
            base,
            raw_p_prime,
            raw_q,
            raw_q_prime,
            raw_x,
            raw_z,
            raw_s,
            raw_v,
            raw_o,
        })
    }

    pub fn p(&self) -> &BaryPoint {
        &self.p
    }

    pub fn flags(&self) -> &DegeneracyFlags {
        &self.flags
    }

    /// F(a) = x^2(y+z) + y^2(x+z) + z^2(x+y) + (a+3)xyz evaluated at P.
    pub fn f_of(&self, a: &Rational) -> Rational {
        &self.base + (a + rat_int(3)) * &self.s3
    }

    /// Elementary symmetric functions (x+y+z, xy+yz+zx, xyz) of P.
    pub fn symmetric_functions(&self) -> (&Rational, &Rational, &Rational) {
        (&self.s1, &self.s2, &self.s3)
    }

    pub fn p_prime(&self) -> &BaryPoint {
        &self.p_prime
    }

    pub fn q(&self) -> &BaryPoint {
        &self.q
    }

    pub fn q_prime(&self) -> &BaryPoint {
        &self.q_prime
    }

    pub fn traces(&self) -> &[BaryPoint; 3] {
        &self.trace_pts
    }

    pub fn cotraces(&self) -> &[BaryPoint; 3] {
        &self.cotrace_pts
    }

    pub fn fixed_point_x(&self) -> &BaryPoint {
        &self.x_point
    }

    /// Fixed point Z of lambda; undefined exactly at the centroid, where
    /// all three squared differences vanish.
    pub fn fixed_point_z(&self) -> Result<&BaryPoint, CevianError> {
        self.z_point.as_ref().ok_or(CevianError::ZUndefined)
    }

    pub fn fixed_point_s(&self) -> &BaryPoint {
        &self.s_point
    }

    pub fn point_v(&self) -> &BaryPoint {
        &self.v_point
    }

    pub fn point_o(&self) -> &BaryPoint {
        &self.o_point
    }

    pub fn p_prime_raw(&self) -> [Rational; 3] {
        self.raw_p_prime.clone()
    }

    pub fn q_raw(&self) -> [Rational; 3] {
        self.raw_q.clone()
    }

    pub fn q_prime_raw(&self) -> [Rational; 3] {
        self.raw_q_prime.clone()
    }

    pub fn x_raw(&self) -> [Rational; 3] {
        self.raw_x.clone()
    }

    pub fn z_raw(&self) -> [Rational; 3] {
        self.raw_z.clone()
    }

    pub fn s_raw(&self) -> [Rational; 3] {
        self.raw_s.clone()
    }

    pub fn v_raw(&self) -> [Rational; 3] {
        self.raw_v.clone()
    }

    pub fn o_raw(&self) -> [Rational; 3] {
        self.raw_o.clone()
    }

    /// The affine map taking ABC to the cevian triangle DEF of P.
    pub fn t_p(&self) -> ProjMap {
        let [xp, yp, zp] = &self.raw_q; // x', y', z'
        let (x, y, z) = (&self.x, &self.y, &self.z);
        let zero = Rational::zero();
        ProjMap::new([
            [zero.clone(), xp * &(x + y), xp * &(x + z)],
            [yp * &(x + y), zero.clone(), yp * &(y + z)],
            [zp * &(x + z), zp * &(y + z), zero],
        ])
        .expect("nonzero by construction")
    }

    /// The affine map taking ABC to the cevian triangle of P'.
    pub fn t_p_prime(&self) -> ProjMap {
        let [xp, yp, zp] = &self.raw_q;
        let (x, y, z) = (&self.x, &self.y, &self.z);
        let zero = Rational::zero();
        ProjMap::new([
            [zero.clone(), zp * &(y + z), yp * &(y + z)],
            [zp * &(x + z), zero.clone(), xp * &(x + z)],
            [yp * &(x + y), xp * &(x + y), zero],
        ])
        .expect("nonzero by construction")
    }

    /// The homothety/translation S = T_P after T_P', in its closed form.
    pub fn map_s(&self) -> ProjMap {
        let [xp, yp, zp] = &self.raw_q;
        let (x, y, z) = (&self.x, &self.y, &self.z);
        ProjMap::new([
            [x * &(yp + zp), x * xp, x * xp],
            [y * yp, y * &(xp + zp), y * yp],
            [z * zp, z * zp, z * &(xp + yp)],
        ])
        .expect("nonzero by construction")
    }

    /// The map lambda = T_P' after the inverse of T_P, in its closed form.
    pub fn map_lambda(&self) -> ProjMap {
        let (x, y, z) = (&self.x, &self.y, &self.z);
        ProjMap::new([
            [y * z * &(y + z), x * z * &(y - z), x * y * &(z - y)],
            [y * z * &(x - z), x * z * &(x + z), x * y * &(z - x)],
            [y * z * &(x - y), x * z * &(y - x), x * y * &(x + y)],
        ])
        .expect("nonzero by construction")
    }

    /// The homothety/translation M = T_P after anticomplement after T_P',
    /// in its closed form.
    pub fn map_m(&self) -> ProjMap {
        let (x, y, z) = (&self.x, &self.y, &self.z);
        let sq = |v: Rational| -> Rational { &v * &v };
        ProjMap::new([
            [x * sq(y - z), x * sq(y + z), x * sq(y + z)],
            [y * sq(x + z), y * sq(x - z), y * sq(x + z)],
            [z * sq(x + y), z * sq(x + y), z * sq(x - y)],
        ])
        .expect("nonzero by construction")
    }

    /// Ratio identities of the configuration, all exact.
    ///
    /// Each quantity that admits both a closed form and a constructive
    /// route (signed ratios on the actual points) is computed both ways
    /// whenever the constructive route is defined; disagreement would be a
    /// bug in the engine and panics.
    pub fn ratio_report(&self) -> RatioReport {
        let g = BaryPoint::centroid();
        let f0 = self.f_of(&Rational::zero()); // (x+y+z)(xy+yz+zx)
        let a = -&f0 / &self.s3;
        let gz_zv = &a / rat_int(9);
        let gs_sv = &f0 / (rat_int(3) * &self.s3);
        let f_minus1 = self.f_of(&rat_int(-1));
        let sq_so = rat_int(-4) * &self.s3 / &f_minus1;
        let s_infinite = self.flags.s_infinite;
        let k = if a == rat_int(3) {
            None
        } else {
            let k = rat_int(4) / (&a + rat_int(1));
            assert_eq!(k, sq_so, "homothety ratio identity k = 4/(a+1) = SQ/SO");
            Some(k)
        };

        let f_minus9 = self.f_of(&rat_int(-9));
        if let Ok(z_pt) = self.fixed_point_z() {
            // constructive routes exist away from the centroid
            if !f_minus9.is_zero() && !f0.is_zero() {
                let route = signed_ratio(&g, z_pt, &self.v_point)
                    .expect("G, Z, V are collinear and ordinary here");
                assert_eq!(route, gz_zv, "GZ/ZV closed form vs signed ratio");
            }
            if !self.flags.s_infinite && !f0.is_zero() {
                let route = signed_ratio(&g, &self.s_point, &self.v_point)
                    .expect("G, S, V are collinear and ordinary here");
                assert_eq!(route, gs_sv, "GS/SV closed form vs signed ratio");
            }
            if !self.flags.s_infinite && !self.s2.is_zero() {
                let route = division_ratio(&self.s_point, &self.q, &self.o_point)
                    .expect("S, Q, O are collinear and ordinary here");
                assert_eq!(route, sq_so, "SQ/SO closed form vs division ratio");
            }
        }
        let cross_gvsz = match self.fixed_point_z() {
            Ok(z_pt) => {
                let cross = cross_ratio(&g, &self.v_point, &self.s_point, z_pt)
                    .expect("(G,V;S,Z) is non-degenerate away from the centroid");
                assert_eq!(cross, rat_int(-3), "cross ratio (GV,SZ)");
                Some(cross)
            }
            Err(_) => None,
        };
        RatioReport {
            a,
            gz_zv,
            gs_sv,
            sq_so,
            k,
            cross_gvsz,
            s_infinite,
        }
    }

    /// V as the intersection of the lines PQ and P'Q'. Defined off the
    /// medians; on a median the two lines coincide.
    pub fn v_by_intersection(&self) -> Result<BaryPoint, CevianError> {
        if self.flags.on_median {
            return Err(CevianError::DegenerateContext("on_median"));
        }
        let pq = line_through(&self.p, &self.q)?;
        let pq_prime = line_through(&self.p_prime, &self.q_prime)?;
        Ok(meet(&pq, &pq_prime)?)
    }

    /// O constructed as the inverse of T_P' applied to the complement of Q,
    /// the route that defines the generalized circumcenter.
    pub fn o_by_construction(&self) -> Result<BaryPoint, CevianError> {
        let inv = self.t_p_prime().inverse()?;
        Ok(inv.apply(&complement(&self.q))?)
    }
}
