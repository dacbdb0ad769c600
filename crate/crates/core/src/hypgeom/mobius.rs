use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{ExtendedComplex, GeomError};

/// `z -> (m00 z + m01) / (m10 z + m11)`, stored as a matrix up to scale.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MobiusMap {
    m: [[Complex64; 2]; 2],
}

impl MobiusMap {
    pub fn identity() -> Self {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        MobiusMap {
            m: [[one, zero], [zero, one]],
        }
    }

    pub fn new(m: [[Complex64; 2]; 2]) -> Result<Self, GeomError> {
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        let scale = m.iter().flatten().map(|x| x.norm()).fold(0.0, f64::max);
        if scale == 0.0 || det.norm() <= 1e-14 * scale * scale {
            return Err(GeomError::Singular);
        }
        Ok(MobiusMap { m }.normalized())
    }

    pub fn matrix(&self) -> [[Complex64; 2]; 2] {
        self.m
    }

    pub fn determinant(&self) -> Complex64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    /// Scale to unit determinant.
    fn normalized(self) -> Self {
        let s = self.determinant().sqrt();
        let mut m = self.m;
        for row in &mut m {
            for x in row.iter_mut() {
                *x /= s;
            }
        }
        MobiusMap { m }
    }

    pub fn apply(&self, p: ExtendedComplex) -> ExtendedComplex {
        let (a, b) = p.homogeneous();
        let x = self.m[0][0] * a + self.m[0][1] * b;
        let y = self.m[1][0] * a + self.m[1][1] * b;
        ExtendedComplex::new(x, y).expect("invertible map sends a point to a point")
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &MobiusMap) -> MobiusMap {
        let (a, b) = (&self.m, &other.m);
        let mut m = [[Complex64::new(0.0, 0.0); 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        MobiusMap { m }.normalized()
    }

    pub fn inverse(&self) -> MobiusMap {
        let m = &self.m;
        MobiusMap {
            m: [[m[1][1], -m[0][1]], [-m[1][0], m[0][0]]],
        }
        .normalized()
    }
}

/// The unique map sending `a -> 0`, `b -> 1`, `c -> ∞`.
pub fn mobius_from_triple(
    a: ExtendedComplex,
    b: ExtendedComplex,
    c: ExtendedComplex,
) -> Result<MobiusMap, GeomError> {
    if a.same_point(&b) || b.same_point(&c) || a.same_point(&c) {
        return Err(GeomError::Coincident);
    }
    let det = ExtendedComplex::det;
    let (a1, a2) = a.homogeneous();
    let (c1, c2) = c.homogeneous();
    let k1 = det(&b, &c);
    let k2 = det(&b, &a);
    MobiusMap::new([[a2 * k1, -a1 * k1], [c2 * k2, -c1 * k2]])
}
