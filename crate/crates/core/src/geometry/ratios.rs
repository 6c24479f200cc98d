//! Signed ratios, cross ratios, and midpoints on lines.
//!
//! Signed ratios are computed in absolute barycentric coordinates on the
//! first coordinate where the reference difference is nonzero; collinearity
//! is pre-checked by an exact determinant, so no division can surprise us.

use num_traits::Zero;

use super::{collinear, BaryPoint, GeomError};
use crate::rational::Rational;

/// The rational `t` with `B - A = t * (C - B)` in absolute coordinates,
/// i.e. the directed ratio AB/BC on the common line.
pub fn signed_ratio(a: &BaryPoint, b: &BaryPoint, c: &BaryPoint) -> Result<Rational, GeomError> {
    if b == c {
        return Err(GeomError::UndefinedRatio);
    }
    if !collinear(a, b, c) {
        return Err(GeomError::NotCollinear);
    }
    let (a, b, c) = (a.to_absolute()?, b.to_absolute()?, c.to_absolute()?);
    for i in 0..3 {
        let denom = &c[i] - &b[i];
        if !denom.is_zero() {
            return Ok((&b[i] - &a[i]) / denom);
        }
    }
    // distinct absolute triples always differ somewhere
    unreachable!("coincident absolute coordinates for distinct points");
}

/// The rational `t` with `B - A = t * (C - A)`: where B divides the segment
/// from A to C. Used for ratios that share their first endpoint, such as
/// SQ/SO.
pub fn division_ratio(a: &BaryPoint, b: &BaryPoint, c: &BaryPoint) -> Result<Rational, GeomError> {
    if a == c {
        return Err(GeomError::UndefinedRatio);
    }
    if !collinear(a, b, c) {
        return Err(GeomError::NotCollinear);
    }
    let (a, b, c) = (a.to_absolute()?, b.to_absolute()?, c.to_absolute()?);
    for i in 0..3 {
        let denom = &c[i] - &a[i];
        if !denom.is_zero() {
            return Ok((&b[i] - &a[i]) / denom);
        }
    }
    unreachable!("coincident absolute coordinates for distinct points");
}

/// Cross ratio (AB,CD) = (AC/CB)/(AD/DB) of four collinear points.
///
/// Computed through projective parameters on the line, so infinite points
/// are handled uniformly and the value is invariant under every invertible
/// projective map. Any coincidence between {a,b} and {c,d} is rejected:
/// the value would degenerate to 0, infinity, or 0/0.
pub fn cross_ratio(
    a: &BaryPoint,
    b: &BaryPoint,
    c: &BaryPoint,
    d: &BaryPoint,
) -> Result<Rational, GeomError> {
    let pts = [a, b, c, d];
    // all four on one line
    for i in 1..3 {
        for j in (i + 1)..4 {
            if !collinear(pts[0], pts[i], pts[j]) {
                return Err(GeomError::NotCollinear);
            }
        }
    }
    let r1 = a;
    let Some(r2) = pts.iter().find(|p| **p != r1) else {
        return Err(GeomError::DegenerateConfiguration);
    };
    // coordinate pair giving an invertible 2x2 system for (alpha, beta)
    let (v1, v2) = (r1.raw(), r2.raw());
    let mut pair = None;
    'outer: for i in 0..3 {
        for j in (i + 1)..3 {
            if !(&v1[i] * &v2[j] - &v1[j] * &v2[i]).is_zero() {
                pair = Some((i, j));
                break 'outer;
            }
        }
    }
    let (i, j) = pair.expect("independent points span a rank-2 coordinate pair");
    let param = |p: &BaryPoint| -> (Rational, Rational) {
        let v = p.raw();
        let alpha = &v[i] * &v2[j] - &v[j] * &v2[i];
        let beta = &v1[i] * &v[j] - &v1[j] * &v[i];
        (alpha, beta)
    };
    let ps: Vec<(Rational, Rational)> = pts.iter().map(|p| param(p)).collect();
    let det2 = |x: &(Rational, Rational), y: &(Rational, Rational)| -> Rational {
        &x.0 * &y.1 - &y.0 * &x.1
    };
    let d13 = det2(&ps[0], &ps[2]);
    let d24 = det2(&ps[1], &ps[3]);
    let d23 = det2(&ps[1], &ps[2]);
    let d14 = det2(&ps[0], &ps[3]);
    if d13.is_zero() || d24.is_zero() || d23.is_zero() || d14.is_zero() {
        return Err(GeomError::DegenerateConfiguration);
    }
    Ok((d13 * d24) / (d23 * d14))
}

/// Midpoint of two ordinary points: the average of absolute coordinates.
pub fn midpoint(a: &BaryPoint, b: &BaryPoint) -> Result<BaryPoint, GeomError> {
    let (a, b) = (a.to_absolute()?, b.to_absolute()?);
    BaryPoint::new([&a[0] + &b[0], &a[1] + &b[1], &a[2] + &b[2]])
}
