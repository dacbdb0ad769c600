//! Numeric hyperbolic geometry on the sphere at infinity.

mod extended;
mod lobachevsky;
mod mobius;
mod polygon;

use thiserror::Error;

pub use extended::{cross_ratio, klein_to_boundary, ExtendedComplex};
pub use lobachevsky::{ideal_tet_volume, lobachevsky, signed_tet_volume, TetShape};
pub use mobius::{mobius_from_triple, MobiusMap};
pub use polygon::{
    is_regular_polygon, regular_ngon_target, regularity_residual, IdealPolygon,
    DEFAULT_REGULARITY_TOL,
};

pub use num_complex::Complex64;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("homogeneous coordinates (0, 0) do not name a point")]
    ZeroVector,
    #[error("cross ratio needs at least 3 distinct points, got {0}")]
    TooFewDistinct(usize),
    #[error("Möbius map is singular (determinant 0)")]
    Singular,
    #[error("points must be pairwise distinct")]
    Coincident,
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("polygon vertices must be pairwise distinct")]
    RepeatedVertex,
    #[error("n-gon needs n >= 3, got {0}")]
    BadNgon(usize),
    #[error("point is not on the unit sphere (|v| = {0})")]
    NotUnit(f64),
    #[error("shape parameter {0} is real: degenerate tetrahedron")]
    DegenerateTetrahedron(Complex64),
}
