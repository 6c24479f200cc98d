//! Homogeneous points and lines with a bit-exact canonical form.
//!
//! A triple is canonicalized by clearing denominators to coprime integers
//! and making the first nonzero coordinate positive, so projective equality
//! is plain structural equality.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::GeomError;
use crate::rational::{Int, Rational};

/// Clears denominators, divides by the content, fixes the leading sign.
fn canonical_triple(v: &[Rational; 3]) -> Result<[Int; 3], GeomError> {
    if v.iter().all(|c| c.is_zero()) {
        return Err(GeomError::ZeroVector);
    }
    let lcm = v
        .iter()
        .fold(Int::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<Int> = v
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let gcd = ints
        .iter()
        .fold(Int::zero(), |acc, c| acc.gcd(c));
    for c in ints.iter_mut() {
        *c = &*c / &gcd;
    }
    if ints.iter().find(|c| !c.is_zero()).unwrap().is_negative() {
        for c in ints.iter_mut() {
            *c = -&*c;
        }
    }
    Ok([ints[0].clone(), ints[1].clone(), ints[2].clone()])
}

fn cross(a: &[Int; 3], b: &[Int; 3]) -> [Rational; 3] {
    [
        Rational::from_integer(&a[1] * &b[2] - &a[2] * &b[1]),
        Rational::from_integer(&a[2] * &b[0] - &a[0] * &b[2]),
        Rational::from_integer(&a[0] * &b[1] - &a[1] * &b[0]),
    ]
}

/// A point in homogeneous barycentric coordinates, stored in canonical form.
///
/// Ordinary points have nonzero coordinate sum; points with sum zero lie on
/// the line at infinity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BaryPoint {
    coords: [Int; 3],
}

impl BaryPoint {
    /// Canonicalizes a raw coordinate triple. Idempotent.
    pub fn new(coords: [Rational; 3]) -> Result<Self, GeomError> {
        Ok(Self {
            coords: canonical_triple(&coords)?,
        })
    }

    pub fn from_integers(x: i64, y: i64, z: i64) -> Result<Self, GeomError> {
        Self::new([
            Rational::from_integer(Int::from(x)),
            Rational::from_integer(Int::from(y)),
            Rational::from_integer(Int::from(z)),
        ])
    }

    pub fn from_ints(coords: [Int; 3]) -> Result<Self, GeomError> {
        Self::new(coords.map(Rational::from_integer))
    }

    pub fn centroid() -> Self {
        Self::from_integers(1, 1, 1).unwrap()
    }

    pub fn coords(&self) -> &[Int; 3] {
        &self.coords
    }

    /// The canonical integer coordinates as a rational triple, for exact
    /// linear-combination identities on specific representatives.
    pub fn raw(&self) -> [Rational; 3] {
        self.coords.clone().map(Rational::from_integer)
    }

    pub fn coordinate_sum(&self) -> Int {
        &self.coords[0] + &self.coords[1] + &self.coords[2]
    }

    pub fn is_ordinary(&self) -> bool {
        !self.coordinate_sum().is_zero()
    }

    pub fn is_infinite(&self) -> bool {
        !self.is_ordinary()
    }

    /// Absolute barycentric coordinates: each coordinate divided by the sum,
    /// so the result sums to one. Rejects infinite points.
    pub fn to_absolute(&self) -> Result<[Rational; 3], GeomError> {
        let sum = self.coordinate_sum();
        if sum.is_zero() {
            return Err(GeomError::InfinitePoint);
        }
        Ok([
            Rational::new(self.coords[0].clone(), sum.clone()),
            Rational::new(self.coords[1].clone(), sum.clone()),
            Rational::new(self.coords[2].clone(), sum),
        ])
    }

    /// Barycentric product (componentwise multiplication of coordinates).
    pub fn product(&self, other: &BaryPoint) -> Result<BaryPoint, GeomError> {
        BaryPoint::new([
            Rational::from_integer(&self.coords[0] * &other.coords[0]),
            Rational::from_integer(&self.coords[1] * &other.coords[1]),
            Rational::from_integer(&self.coords[2] * &other.coords[2]),
        ])
    }

    /// Canonical coordinates as decimal strings, the JSON wire form.
    pub fn coord_strings(&self) -> [String; 3] {
        [
            self.coords[0].to_string(),
            self.coords[1].to_string(),
            self.coords[2].to_string(),
        ]
    }
}

impl fmt::Debug for BaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({} : {} : {})",
            self.coords[0], self.coords[1], self.coords[2]
        )
    }
}

impl fmt::Display for BaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A line `lx + my + nz = 0`, canonicalized the same way as points.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BaryLine {
    coeffs: [Int; 3],
}

impl BaryLine {
    pub fn new(coeffs: [Rational; 3]) -> Result<Self, GeomError> {
        Ok(Self {
            coeffs: canonical_triple(&coeffs)?,
        })
    }

    pub fn from_integers(l: i64, m: i64, n: i64) -> Result<Self, GeomError> {
        Self::new([
            Rational::from_integer(Int::from(l)),
            Rational::from_integer(Int::from(m)),
            Rational::from_integer(Int::from(n)),
        ])
    }

    pub fn coeffs(&self) -> &[Int; 3] {
        &self.coeffs
    }

    /// The incidence pairing `l*x + m*y + n*z`; its zero test is
    /// scale-invariant.
    pub fn incidence(&self, p: &BaryPoint) -> Int {
        self.coeffs
            .iter()
            .zip(p.coords().iter())
            .map(|(c, x)| c * x)
            .sum()
    }

    pub fn contains(&self, p: &BaryPoint) -> bool {
        self.incidence(p).is_zero()
    }

    /// The line at infinity `x + y + z = 0`.
    pub fn at_infinity() -> Self {
        Self::from_integers(1, 1, 1).unwrap()
    }
}

impl fmt::Debug for BaryLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{} : {} : {}]",
            self.coeffs[0], self.coeffs[1], self.coeffs[2]
        )
    }
}

/// The line joining two distinct points.
pub fn line_through(p: &BaryPoint, q: &BaryPoint) -> Result<BaryLine, GeomError> {
    if p == q {
        return Err(GeomError::CoincidentPoints);
    }
    BaryLine::new(cross(p.coords(), q.coords())).map_err(|_| GeomError::CoincidentPoints)
}

/// The intersection point of two distinct lines.
pub fn meet(l: &BaryLine, m: &BaryLine) -> Result<BaryPoint, GeomError> {
    if l == m {
        return Err(GeomError::CoincidentLines);
    }
    BaryPoint::new(cross(l.coeffs(), m.coeffs())).map_err(|_| GeomError::CoincidentLines)
}

/// Exact collinearity test via the 3x3 coordinate determinant.
pub fn collinear(a: &BaryPoint, b: &BaryPoint, c: &BaryPoint) -> bool {
    let (a, b, c) = (a.coords(), b.coords(), c.coords());
    let det = &a[0] * (&b[1] * &c[2] - &b[2] * &c[1])
        - &a[1] * (&b[0] * &c[2] - &b[2] * &c[0])
        + &a[2] * (&b[0] * &c[1] - &b[1] * &c[0]);
    det.is_zero()
}
