//! Projective/affine substrate over exact rationals: homogeneous points and
//! lines in barycentric coordinates, 3x3 projective maps, and the metric-free
//! ratio operations (signed ratio, cross ratio, midpoint).

mod map;
mod point;
mod ratios;

pub use map::ProjMap;
pub use point::{collinear, line_through, meet, BaryLine, BaryPoint};
pub use ratios::{cross_ratio, division_ratio, midpoint, signed_ratio};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("coordinate triple is the zero vector")]
    ZeroVector,
    #[error("matrix is the zero matrix")]
    ZeroMatrix,
    #[error("points coincide; the joining line is undefined")]
    CoincidentPoints,
    #[error("lines coincide; the intersection point is undefined")]
    CoincidentLines,
    #[error("point lies in the kernel of a degenerate map")]
    MapsToZero,
    #[error("operation requires ordinary points but received an infinite one")]
    InfinitePoint,
    #[error("points are not collinear")]
    NotCollinear,
    #[error("signed ratio undefined: the reference points coincide")]
    UndefinedRatio,
    #[error("cross ratio undefined for this configuration")]
    DegenerateConfiguration,
    #[error("map is singular and cannot be inverted")]
    SingularMap,
}
