//! The three admissible solids and their inscribed coordinates.

use std::fmt;
use std::str::FromStr;

use nalgebra::Vector3;
use serde::{Deserialize, Serialize};

use crate::diagram::RotationSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ReferenceSolid {
    Octahedron,
    Cuboctahedron,
    Icosidodecahedron,
}

impl ReferenceSolid {
    pub const ALL: [ReferenceSolid; 3] = [
        ReferenceSolid::Octahedron,
        ReferenceSolid::Cuboctahedron,
        ReferenceSolid::Icosidodecahedron,
    ];

    pub fn vertex_count(self) -> usize {
        match self {
            ReferenceSolid::Octahedron => 6,
            ReferenceSolid::Cuboctahedron => 12,
            ReferenceSolid::Icosidodecahedron => 30,
        }
    }

    /// Size of the non-triangular faces (3 for the octahedron).
    pub fn ngon(self) -> usize {
        match self {
            ReferenceSolid::Octahedron => 3,
            ReferenceSolid::Cuboctahedron => 4,
            ReferenceSolid::Icosidodecahedron => 5,
        }
    }

    pub fn from_ngon(n: usize) -> Option<Self> {
        Self::ALL.into_iter().find(|s| s.ngon() == n)
    }

    pub fn name(self) -> &'static str {
        match self {
            ReferenceSolid::Octahedron => "octahedron",
            ReferenceSolid::Cuboctahedron => "cuboctahedron",
            ReferenceSolid::Icosidodecahedron => "icosidodecahedron",
        }
    }

    /// Vertices on the unit sphere.
    pub fn ideal_vertices(self) -> Vec<Vector3<f64>> {
        match self {
            ReferenceSolid::Octahedron => vec![
                Vector3::new(1.0, 0.0, 0.0),
                Vector3::new(-1.0, 0.0, 0.0),
                Vector3::new(0.0, 1.0, 0.0),
                Vector3::new(0.0, -1.0, 0.0),
                Vector3::new(0.0, 0.0, 1.0),
                Vector3::new(0.0, 0.0, -1.0),
            ],
            ReferenceSolid::Cuboctahedron => {
                let h = std::f64::consts::FRAC_1_SQRT_2;
                let mut out = Vec::with_capacity(12);
                for (a, b) in [(h, h), (h, -h), (-h, h), (-h, -h)] {
                    out.push(Vector3::new(a, b, 0.0));
                    out.push(Vector3::new(a, 0.0, b));
                    out.push(Vector3::new(0.0, a, b));
                }
                out
            }
            ReferenceSolid::Icosidodecahedron => {
                let ico = icosahedron();
                let mut out = Vec::with_capacity(30);
                for i in 0..ico.len() {
                    for j in i + 1..ico.len() {
                        if ((ico[i] - ico[j]).norm() - 2.0).abs() < 1e-9 {
                            out.push(((ico[i] + ico[j]) / 2.0).normalize());
                        }
                    }
                }
                out
            }
        }
    }

    /// The 1-skeleton with counterclockwise rotations seen from outside.
    /// Vertex `i` is `ideal_vertices()[i]`.
    pub fn rotation_system(self) -> RotationSystem {
        rotation_from_points(&self.ideal_vertices())
            .expect("reference solids have 4-valent skeletons")
    }
}

impl fmt::Display for ReferenceSolid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ReferenceSolid::Octahedron => "Octahedron",
            ReferenceSolid::Cuboctahedron => "Cuboctahedron",
            ReferenceSolid::Icosidodecahedron => "Icosidodecahedron",
        };
        f.write_str(name)
    }
}

impl FromStr for ReferenceSolid {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        Self::ALL
            .into_iter()
            .find(|x| x.name() == lower)
            .ok_or_else(|| {
                format!("unknown solid '{s}' (octahedron, cuboctahedron, icosidodecahedron)")
            })
    }
}

/// Regular icosahedron with edge length 2.
fn icosahedron() -> Vec<Vector3<f64>> {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let mut out = Vec::with_capacity(12);
    for a in [1.0, -1.0] {
        for b in [phi, -phi] {
            out.push(Vector3::new(0.0, a, b));
            out.push(Vector3::new(a, b, 0.0));
            out.push(Vector3::new(b, 0.0, a));
        }
    }
    out
}

/// Nearest-neighbor graph of points on the sphere, rotations sorted by angle
/// around the outward normal.
fn rotation_from_points(
    points: &[Vector3<f64>],
) -> Result<RotationSystem, crate::diagram::GraphError> {
    let mut min = f64::INFINITY;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            min = min.min((points[i] - points[j]).norm());
        }
    }
    let adj: Vec<Vec<usize>> = points
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let mut nbrs: Vec<usize> = (0..points.len())
                .filter(|&j| j != i && (points[j] - v).norm() < min * (1.0 + 1e-9))
                .collect();
            let Some(&first) = nbrs.first() else {
                return nbrs;
            };
            let e1 = (points[first] - v * v.dot(&points[first])).normalize();
            let e2 = v.cross(&e1);
            let angle = |j: usize| {
                let w = points[j];
                w.dot(&e2).atan2(w.dot(&e1))
            };
            nbrs.sort_by(|&a, &b| angle(a).total_cmp(&angle(b)));
            nbrs
        })
        .collect();
    RotationSystem::from_adjacency(&adj)
}
