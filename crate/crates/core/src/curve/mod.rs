//! The one-parameter family of plane cubics
//! `E_a: x^2(y+z) + y^2(x+z) + z^2(x+y) + (a+3)xyz = 0`:
//! membership, normal forms, discriminants, singularity classification,
//! the exact j-invariant with a numeric Legendre cross-check, inversion of
//! the j-map, the chord-tangent group law based at (0,1,-1), and the
//! explicit birational map between `E_{-3}` and `v^2 = u^3 + 1`.

mod family;
mod group;
mod invert;
mod legendre;
mod weierstrass;

pub use family::{
    a_of_point, affine_normal_form, disc_d, f_eval, f_partials, j_function, j_invariant,
    quartic_model, singularity_analysis, torsion_set, CurveFamilyMember, CurvePoint, NormalForm,
    QuarticModel,
};
pub use invert::{j_inversion_polynomial, j_invert};
pub use legendre::{j_of_lambda, legendre_check, LegendreCheck};
pub use weierstrass::{
    from_weierstrass, plane_forward, plane_inverse, to_weierstrass, WeierstrassPoint,
};

use thiserror::Error;

use crate::geometry::GeomError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CurveError {
    #[error("point does not satisfy the curve equation")]
    NotOnCurve,
    #[error("point lies on a side of the reference triangle")]
    OnSideline,
    #[error("every curve of the family passes through this point")]
    IndeterminateA,
    #[error("curve is not elliptic for this parameter")]
    NotElliptic,
    #[error("point belongs to a different member of the family")]
    WrongCurve,
    #[error("numeric j-invariant deviates from the exact value: {relative_error} > {tolerance}")]
    ToleranceExceeded { relative_error: f64, tolerance: f64 },
    #[error("gradient vanishes at the point; the tangent line is undefined")]
    SingularAt,
    #[error(transparent)]
    Geom(#[from] GeomError),
}
