//! JSON report shapes. Rationals cross the boundary as canonical fraction
//! strings, never as floats; decimal approximations ride along in
//! explicitly named `approx` fields.

use serde::Serialize;

use cevia_core::cevian::{CevianContext, DegeneracyFlags};
use cevia_core::curve::{
    legendre_check, to_weierstrass, CurveFamilyMember, WeierstrassPoint,
};
use cevia_core::rational::{format_rational, rat_int, Rational};
use cevia_core::roots::IsolatingInterval;
use cevia_core::BaryPoint;

pub fn point_strings(p: &BaryPoint) -> [String; 3] {
    p.coord_strings()
}

#[derive(Serialize)]
pub struct ConstructReport {
    #[serde(rename = "P")]
    pub p: [String; 3],
    #[serde(rename = "Pprime")]
    pub p_prime: Option<[String; 3]>,
    #[serde(rename = "Q")]
    pub q: Option<[String; 3]>,
    #[serde(rename = "Qprime")]
    pub q_prime: Option<[String; 3]>,
    #[serde(rename = "D")]
    pub d: Option<[String; 3]>,
    #[serde(rename = "E")]
    pub e: Option<[String; 3]>,
    #[serde(rename = "F")]
    pub f: Option<[String; 3]>,
    #[serde(rename = "D3")]
    pub d3: Option<[String; 3]>,
    #[serde(rename = "E3")]
    pub e3: Option<[String; 3]>,
    #[serde(rename = "F3")]
    pub f3: Option<[String; 3]>,
    #[serde(rename = "X")]
    pub x: Option<[String; 3]>,
    #[serde(rename = "Z")]
    pub z: Option<[String; 3]>,
    #[serde(rename = "S")]
    pub s: Option<[String; 3]>,
    #[serde(rename = "V")]
    pub v: Option<[String; 3]>,
    #[serde(rename = "O")]
    pub o: Option<[String; 3]>,
    pub a: Option<String>,
    pub gz_zv: Option<String>,
    pub gs_sv: Option<String>,
    pub sq_so: Option<String>,
    pub k: Option<String>,
    pub cross_gvsz: Option<String>,
    pub flags: Vec<&'static str>,
}

impl ConstructReport {
    /// Report for a point whose context cannot be built: everything null
    /// except the input and the flags that explain why.
    pub fn degenerate(p: &BaryPoint, flags: &DegeneracyFlags) -> Self {
        Self {
            p: point_strings(p),
            p_prime: None,
            q: None,
            q_prime: None,
            d: None,
            e: None,
            f: None,
            d3: None,
            e3: None,
            f3: None,
            x: None,
            z: None,
            s: None,
            v: None,
            o: None,
            a: None,
            gz_zv: None,
            gs_sv: None,
            sq_so: None,
            k: None,
            cross_gvsz: None,
            flags: flags.names(),
        }
    }

    pub fn from_context(ctx: &CevianContext) -> Self {
        let report = ctx.ratio_report();
        let fr = |r: &Rational| format_rational(r);
        let [d, e, f] = ctx.traces().clone();
        let [d3, e3, f3] = ctx.cotraces().clone();
        Self {
            p: point_strings(ctx.p()),
            p_prime: Some(point_strings(ctx.p_prime())),
            q: Some(point_strings(ctx.q())),
            q_prime: Some(point_strings(ctx.q_prime())),
            d: Some(point_strings(&d)),
            e: Some(point_strings(&e)),
            f: Some(point_strings(&f)),
            d3: Some(point_strings(&d3)),
            e3: Some(point_strings(&e3)),
            f3: Some(point_strings(&f3)),
            x: Some(point_strings(ctx.fixed_point_x())),
            z: ctx.fixed_point_z().ok().map(point_strings),
            s: Some(point_strings(ctx.fixed_point_s())),
            v: Some(point_strings(ctx.point_v())),
            o: Some(point_strings(ctx.point_o())),
            a: Some(fr(&report.a)),
            gz_zv: Some(fr(&report.gz_zv)),
            gs_sv: Some(fr(&report.gs_sv)),
            sq_so: Some(fr(&report.sq_so)),
            k: report.k.as_ref().map(fr),
            cross_gvsz: report.cross_gvsz.as_ref().map(fr),
            flags: ctx.flags().names(),
        }
    }
}

#[derive(Serialize)]
pub struct CurveInfoReport {
    pub a: String,
    pub disc_d: String,
    pub is_elliptic: bool,
    pub j: Option<String>,
    pub torsion: Vec<[String; 3]>,
    pub singular_points: Vec<[String; 3]>,
    /// Relative deviation of the numeric Legendre j from the exact value.
    pub legendre_residual: Option<f64>,
    /// Images of the torsion points on v^2 = u^3 + 1; present for a = -3.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weierstrass_torsion: Option<Vec<String>>,
}

impl CurveInfoReport {
    pub fn build(curve: &CurveFamilyMember, tol: f64) -> Self {
        let residual = legendre_check(curve.a(), tol)
            .ok()
            .map(|c| c.relative_error);
        let weierstrass_torsion = if *curve.a() == rat_int(-3) {
            curve.torsion_points().ok().map(|pts| {
                pts.iter()
                    .map(|t| match to_weierstrass(t) {
                        Ok(WeierstrassPoint::Affine(u, v)) => {
                            format!("({}, {})", format_rational(&u), format_rational(&v))
                        }
                        Ok(WeierstrassPoint::Infinity) => "inf".to_string(),
                        Err(_) => "error".to_string(),
                    })
                    .collect()
            })
        } else {
            None
        };
        Self {
            a: format_rational(curve.a()),
            disc_d: format_rational(curve.disc_d()),
            is_elliptic: curve.is_elliptic(),
            j: curve.j_invariant().ok().map(|j| format_rational(&j)),
            torsion: curve.torsion_candidates().iter().map(point_strings).collect(),
            singular_points: curve.singular_points().iter().map(point_strings).collect(),
            legendre_residual: residual,
            weierstrass_torsion,
        }
    }
}

#[derive(Serialize)]
pub struct IntervalReport {
    pub lo: String,
    pub hi: String,
    pub approx: f64,
}

impl IntervalReport {
    pub fn from_interval(iv: &IsolatingInterval) -> Self {
        Self {
            lo: format_rational(iv.lo()),
            hi: format_rational(iv.hi()),
            approx: iv.approx(),
        }
    }
}
