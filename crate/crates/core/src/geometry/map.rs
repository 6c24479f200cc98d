//! 3x3 projective maps over exact rationals.
//!
//! Entries are kept exactly as constructed (no rescaling): the cevian maps
//! carry meaningful eigenfactors such as `2xyz` that a silent normalization
//! would destroy. Projective equality is the separate `proportional_to`.

use std::fmt;

use num_traits::Zero;

use super::{BaryPoint, GeomError};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq)]
pub struct ProjMap {
    entries: [[Rational; 3]; 3],
}

impl ProjMap {
    pub fn new(entries: [[Rational; 3]; 3]) -> Result<Self, GeomError> {
        if entries.iter().flatten().all(|e| e.is_zero()) {
            return Err(GeomError::ZeroMatrix);
        }
        Ok(Self { entries })
    }

    pub fn from_int_rows(rows: [[i64; 3]; 3]) -> Result<Self, GeomError> {
        Self::new(rows.map(|r| r.map(|e| Rational::from_integer(e.into()))))
    }

    pub fn identity() -> Self {
        Self::from_int_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]]).unwrap()
    }

    pub fn entries(&self) -> &[[Rational; 3]; 3] {
        &self.entries
    }

    /// Matrix-vector product on a raw homogeneous triple, no normalization.
    pub fn apply_raw(&self, v: &[Rational; 3]) -> [Rational; 3] {
        let row = |i: usize| -> Rational {
            &self.entries[i][0] * &v[0] + &self.entries[i][1] * &v[1] + &self.entries[i][2] * &v[2]
        };
        [row(0), row(1), row(2)]
    }

    /// Image of a point, normalized. Errors when the point lies in the
    /// kernel of a degenerate map.
    pub fn apply(&self, p: &BaryPoint) -> Result<BaryPoint, GeomError> {
        BaryPoint::new(self.apply_raw(&p.raw())).map_err(|_| GeomError::MapsToZero)
    }

    /// `self` after `other` (matrix product `self * other`).
    pub fn compose(&self, other: &ProjMap) -> ProjMap {
        let mut entries: [[Rational; 3]; 3] = Default::default();
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = (0..3)
                    .map(|k| &self.entries[i][k] * &other.entries[k][j])
                    .sum();
            }
        }
        ProjMap { entries }
    }

    pub fn det(&self) -> Rational {
        let m = &self.entries;
        &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
    }

    pub fn is_degenerate(&self) -> bool {
        self.det().is_zero()
    }

    /// Exact inverse via the adjugate. Errors on singular maps.
    pub fn inverse(&self) -> Result<ProjMap, GeomError> {
        let det = self.det();
        if det.is_zero() {
            return Err(GeomError::SingularMap);
        }
        let m = &self.entries;
        let cof = |r0: usize, r1: usize, c0: usize, c1: usize| -> Rational {
            &m[r0][c0] * &m[r1][c1] - &m[r0][c1] * &m[r1][c0]
        };
        // adjugate = transposed cofactor matrix
        let adj = [
            [cof(1, 2, 1, 2), -cof(0, 2, 1, 2), cof(0, 1, 1, 2)],
            [-cof(1, 2, 0, 2), cof(0, 2, 0, 2), -cof(0, 1, 0, 2)],
            [cof(1, 2, 0, 1), -cof(0, 2, 0, 1), cof(0, 1, 0, 1)],
        ];
        Ok(ProjMap {
            entries: adj.map(|row| row.map(|e| e / &det)),
        })
    }

    pub fn scale(&self, c: &Rational) -> Result<ProjMap, GeomError> {
        if c.is_zero() {
            return Err(GeomError::ZeroMatrix);
        }
        Ok(ProjMap {
            entries: self.entries.clone().map(|row| row.map(|e| e * c)),
        })
    }

    /// Whether `self = c * other` for some nonzero rational `c`.
    pub fn proportional_to(&self, other: &ProjMap) -> bool {
        let a: Vec<&Rational> = self.entries.iter().flatten().collect();
        let b: Vec<&Rational> = other.entries.iter().flatten().collect();
        let Some(k) = a.iter().position(|e| !e.is_zero()) else {
            return false;
        };
        if b[k].is_zero() {
            return false;
        }
        let c = a[k] / b[k];
        a.iter().zip(b.iter()).all(|(x, y)| **x == &c * *y)
    }

    /// The exact scalar `c` with `M * p = c * p` on p's canonical
    /// coordinates, if `p` is a fixed point (eigenvector) of the map.
    pub fn eigenfactor(&self, p: &BaryPoint) -> Option<Rational> {
        let v = p.raw();
        let w = self.apply_raw(&v);
        let k = v.iter().position(|e| !e.is_zero())?;
        let c = &w[k] / &v[k];
        for i in 0..3 {
            if w[i] != &c * &v[i] {
                return None;
            }
        }
        Some(c)
    }
}

impl fmt::Debug for ProjMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            writeln!(f, "[{} {} {}]", row[0], row[1], row[2])?;
        }
        Ok(())
    }
}
