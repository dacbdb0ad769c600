use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{cross_ratio, ExtendedComplex, GeomError};

pub const DEFAULT_REGULARITY_TOL: f64 = 1e-9;

/// A cyclic sequence of at least three distinct ideal points.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdealPolygon {
    vertices: Vec<ExtendedComplex>,
}

impl IdealPolygon {
    pub fn new(vertices: Vec<ExtendedComplex>) -> Result<Self, GeomError> {
        if vertices.len() < 3 {
            return Err(GeomError::TooFewVertices(vertices.len()));
        }
        for (i, p) in vertices.iter().enumerate() {
            if vertices[..i].iter().any(|q| q.same_point(p)) {
                return Err(GeomError::RepeatedVertex);
            }
        }
        Ok(IdealPolygon { vertices })
    }

    /// The `n`-th roots of unity, in order.
    pub fn roots_of_unity(n: usize) -> Result<Self, GeomError> {
        if n < 3 {
            return Err(GeomError::BadNgon(n));
        }
        Self::new(
            (0..n)
                .map(|k| {
                    ExtendedComplex::finite(Complex64::from_polar(
                        1.0,
                        2.0 * PI * k as f64 / n as f64,
                    ))
                })
                .collect(),
        )
    }

    pub fn vertices(&self) -> &[ExtendedComplex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Cross ratios of all cyclically consecutive quadruples, starting at each
    /// vertex in turn.
    pub fn consecutive_cross_ratios(&self) -> Vec<ExtendedComplex> {
        let n = self.len();
        let v = &self.vertices;
        (0..n)
            .map(|i| {
                cross_ratio(v[i], v[(i + 1) % n], v[(i + 2) % n], v[(i + 3) % n])
                    .expect("polygon vertices are distinct")
            })
            .collect()
    }
}

/// `1 + 1/(2cos(2π/n) + 1)`; exactly infinity for the triangle.
pub fn regular_ngon_target(n: usize) -> Result<ExtendedComplex, GeomError> {
    match n {
        0..=2 => Err(GeomError::BadNgon(n)),
        3 => Ok(ExtendedComplex::INFINITY),
        4 => Ok(ExtendedComplex::real(2.0)),
        _ => {
            let c = 2.0 * (2.0 * PI / n as f64).cos() + 1.0;
            Ok(ExtendedComplex::real(1.0 + 1.0 / c))
        }
    }
}

/// Largest deviation of a consecutive cross ratio from the regular target.
/// Against the infinite target the deviation is `|1/R|`.
pub fn regularity_residual(poly: &IdealPolygon) -> f64 {
    let target = regular_ngon_target(poly.len()).expect("polygon has n >= 3");
    poly.consecutive_cross_ratios()
        .into_iter()
        .map(|r| match (target.value(), r.value()) {
            (None, _) => r.reciprocal_norm(),
            (Some(_), None) => f64::INFINITY,
            (Some(t), Some(x)) => (x - t).norm(),
        })
        .fold(0.0, f64::max)
}

pub fn is_regular_polygon(poly: &IdealPolygon, tol: f64) -> bool {
    regularity_residual(poly) <= tol
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypgeom::mobius_from_triple;

    fn c(re: f64, im: f64) -> ExtendedComplex {
        ExtendedComplex::finite(Complex64::new(re, im))
    }

    #[test]
    fn targets() {
        assert!(regular_ngon_target(3).unwrap().is_infinite());
        assert_eq!(
            regular_ngon_target(4).unwrap().value(),
            Some(Complex64::new(2.0, 0.0))
        );
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let t5 = regular_ngon_target(5).unwrap().value().unwrap();
        assert!((t5.re - phi).abs() < 1e-14 && t5.im == 0.0);
        assert_eq!(regular_ngon_target(2).unwrap_err(), GeomError::BadNgon(2));
    }

    #[test]
    fn square_target_matches_cross_ratio_exactly() {
        let r = cross_ratio(c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0), c(0.0, -1.0)).unwrap();
        assert_eq!(r.value(), regular_ngon_target(4).unwrap().value());
    }

    #[test]
    fn roots_of_unity_are_regular() {
        for n in 3..=12 {
            let p = IdealPolygon::roots_of_unity(n).unwrap();
            assert!(is_regular_polygon(&p, DEFAULT_REGULARITY_TOL), "n = {n}");
        }
    }

    #[test]
    fn mobius_images_stay_regular() {
        let m = mobius_from_triple(c(0.2, 3.0), c(-2.0, 0.0), c(1.0, 1.0)).unwrap();
        for n in 3..=12 {
            let p = IdealPolygon::roots_of_unity(n).unwrap();
            let q = IdealPolygon::new(p.vertices().iter().map(|&v| m.apply(v)).collect()).unwrap();
            assert!(is_regular_polygon(&q, DEFAULT_REGULARITY_TOL), "n = {n}");
        }
    }

    #[test]
    fn generic_quadrilateral_fails() {
        let p =
            IdealPolygon::new(vec![c(0.0, 0.0), c(1.0, 0.0), c(2.0, 1.0), c(4.0, 0.0)]).unwrap();
        assert!(!is_regular_polygon(&p, 1e-9));
    }

    #[test]
    fn perturbation_is_detected() {
        for n in 4..=12 {
            let mut v = IdealPolygon::roots_of_unity(n).unwrap().vertices().to_vec();
            v[1] =
                ExtendedComplex::finite(v[1].value().unwrap() * Complex64::from_polar(1.0, 1e-3));
            let p = IdealPolygon::new(v).unwrap();
            assert!(!is_regular_polygon(&p, 1e-9), "n = {n}");
        }
    }

    #[test]
    fn every_ideal_triangle_is_regular() {
        let p = IdealPolygon::new(vec![c(0.0, 0.0), c(1.0, 0.0), c(2.0, 1.0)]).unwrap();
        assert!(is_regular_polygon(&p, 1e-12));
    }

    #[test]
    fn invalid_polygons() {
        assert_eq!(
            IdealPolygon::new(vec![c(0.0, 0.0), c(1.0, 0.0)]).unwrap_err(),
            GeomError::TooFewVertices(2)
        );
        assert_eq!(
            IdealPolygon::new(vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]).unwrap_err(),
            GeomError::RepeatedVertex
        );
    }
}
