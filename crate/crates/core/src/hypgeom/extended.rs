use std::fmt;

use nalgebra::Vector3;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::GeomError;

/// A point of the Riemann sphere in homogeneous coordinates `a : b`.
/// Infinity is exactly `b = 0`.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct ExtendedComplex {
    a: Complex64,
    b: Complex64,
}

/// Relative tolerance under which two homogeneous points are treated as the
/// same point.
const SAME_POINT: f64 = 1e-14;

impl ExtendedComplex {
    pub const INFINITY: ExtendedComplex = ExtendedComplex {
        a: Complex64::new(1.0, 0.0),
        b: Complex64::new(0.0, 0.0),
    };

    pub fn new(a: Complex64, b: Complex64) -> Result<Self, GeomError> {
        if a == Complex64::new(0.0, 0.0) && b == Complex64::new(0.0, 0.0) {
            return Err(GeomError::ZeroVector);
        }
        Ok(ExtendedComplex { a, b }.rescaled())
    }

    pub fn finite(z: Complex64) -> Self {
        ExtendedComplex {
            a: z,
            b: Complex64::new(1.0, 0.0),
        }
    }

    pub fn real(x: f64) -> Self {
        Self::finite(Complex64::new(x, 0.0))
    }

    pub fn homogeneous(&self) -> (Complex64, Complex64) {
        (self.a, self.b)
    }

    pub fn is_infinite(&self) -> bool {
        self.b == Complex64::new(0.0, 0.0)
    }

    /// `None` at infinity.
    pub fn value(&self) -> Option<Complex64> {
        if self.is_infinite() {
            None
        } else {
            Some(self.a / self.b)
        }
    }

    /// `|b / a|`: zero exactly at infinity, infinite at zero.
    pub fn reciprocal_norm(&self) -> f64 {
        self.b.norm() / self.a.norm()
    }

    /// Keep coordinates of moderate size so repeated products stay finite.
    fn rescaled(self) -> Self {
        let s = self.a.norm().max(self.b.norm());
        if s == 0.0 || !s.is_finite() {
            return self;
        }
        ExtendedComplex {
            a: self.a / s,
            b: self.b / s,
        }
    }

    pub(crate) fn det(p: &Self, q: &Self) -> Complex64 {
        p.a * q.b - q.a * p.b
    }

    /// Projective equality up to a relative tolerance.
    pub fn same_point(&self, other: &Self) -> bool {
        let scale = (self.a.norm() + self.b.norm()) * (other.a.norm() + other.b.norm());
        Self::det(self, other).norm() <= SAME_POINT * scale
    }
}

impl fmt::Display for ExtendedComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            None => f.write_str("inf"),
            Some(z) => write!(f, "{z}"),
        }
    }
}

/// `R(p, q, r, s) = (p - r)(q - s) / ((p - s)(q - r))`, computed
/// projectively so infinite arguments and results are exact.
pub fn cross_ratio(
    p: ExtendedComplex,
    q: ExtendedComplex,
    r: ExtendedComplex,
    s: ExtendedComplex,
) -> Result<ExtendedComplex, GeomError> {
    let pts = [p, q, r, s];
    let mut distinct: Vec<ExtendedComplex> = Vec::with_capacity(4);
    for x in pts {
        if !distinct.iter().any(|y| y.same_point(&x)) {
            distinct.push(x);
        }
    }
    if distinct.len() < 3 {
        return Err(GeomError::TooFewDistinct(distinct.len()));
    }
    let det = ExtendedComplex::det;
    let num = det(&p, &r) * det(&q, &s);
    let den = det(&p, &s) * det(&q, &r);
    ExtendedComplex::new(num, den)
}

/// Stereographic projection from the north pole `(0, 0, 1)`, identifying the
/// Klein-model sphere at infinity with the extended plane.
pub fn klein_to_boundary(v: &Vector3<f64>) -> Result<ExtendedComplex, GeomError> {
    let norm = v.norm();
    if (norm - 1.0).abs() > 1e-12 {
        return Err(GeomError::NotUnit(norm));
    }
    let (x, y, z) = (v.x, v.y, v.z);
    // (x + iy) / (1 - z) == (1 + z) / (x - iy) on the sphere; use whichever
    // denominator is far from zero.
    if z <= 0.0 {
        ExtendedComplex::new(Complex64::new(x, y), Complex64::new(1.0 - z, 0.0))
    } else {
        ExtendedComplex::new(Complex64::new(1.0 + z, 0.0), Complex64::new(x, -y))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> ExtendedComplex {
        ExtendedComplex::finite(Complex64::new(re, im))
    }

    #[test]
    fn square_cross_ratio_is_two() {
        let r = cross_ratio(c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0), c(0.0, -1.0)).unwrap();
        let v = r.value().unwrap();
        assert!((v - Complex64::new(2.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn repeated_endpoint_gives_infinity() {
        let v0 = c(0.3, -1.0);
        let r = cross_ratio(v0, c(2.0, 0.5), c(-1.0, 4.0), v0).unwrap();
        assert!(r.is_infinite());
    }

    #[test]
    fn infinity_argument() {
        // R(inf, 0, 1, s) = s.
        let s = Complex64::new(0.25, 1.5);
        let r = cross_ratio(
            ExtendedComplex::INFINITY,
            c(0.0, 0.0),
            c(1.0, 0.0),
            ExtendedComplex::finite(s),
        )
        .unwrap();
        assert!((r.value().unwrap() - s).norm() < 1e-15);
    }

    #[test]
    fn too_few_points() {
        let a = c(1.0, 0.0);
        let b = c(2.0, 0.0);
        assert_eq!(
            cross_ratio(a, b, a, b).unwrap_err(),
            GeomError::TooFewDistinct(2)
        );
        assert_eq!(
            cross_ratio(ExtendedComplex::INFINITY, ExtendedComplex::INFINITY, a, a).unwrap_err(),
            GeomError::TooFewDistinct(2)
        );
    }

    #[test]
    fn stereographic_examples() {
        let north = klein_to_boundary(&Vector3::new(0.0, 0.0, 1.0)).unwrap();
        assert!(north.is_infinite());
        let south = klein_to_boundary(&Vector3::new(0.0, 0.0, -1.0)).unwrap();
        assert_eq!(south.value(), Some(Complex64::new(0.0, 0.0)));
        let east = klein_to_boundary(&Vector3::new(1.0, 0.0, 0.0)).unwrap();
        assert_eq!(east.value(), Some(Complex64::new(1.0, 0.0)));
        let v = Vector3::new(0.6, 0.0, 0.8);
        let up = klein_to_boundary(&v).unwrap().value().unwrap();
        assert!((up - Complex64::new(3.0, 0.0)).norm() < 1e-12);
        assert!(matches!(
            klein_to_boundary(&Vector3::new(1.0, 1.0, 0.0)),
            Err(GeomError::NotUnit(_))
        ));
    }

    #[test]
    fn zero_vector_rejected() {
        let z = Complex64::new(0.0, 0.0);
        assert_eq!(
            ExtendedComplex::new(z, z).unwrap_err(),
            GeomError::ZeroVector
        );
    }
}
