//! Exact-arithmetic engine for cevian constructions in homogeneous
//! barycentric coordinates and for the family of plane cubics `E_a` that
//! the constructions sweep out.
//!
//! Everything symbolic is computed over arbitrary-precision rationals;
//! floating point appears only in the Legendre cross-check and in the
//! decimal approximations attached to reported intervals.

pub mod cevian;
pub mod curve;
pub mod geometry;
pub mod rational;
pub mod roots;
pub mod sample;
pub mod verify;

pub use geometry::{BaryLine, BaryPoint, GeomError, ProjMap};
pub use rational::{Int, Rational};
