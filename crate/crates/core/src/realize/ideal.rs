use nalgebra::{Matrix3, SymmetricEigen, Vector3};
use serde::{Deserialize, Serialize};

use crate::classify::reference_diagram;
use crate::hypgeom::{klein_to_boundary, regularity_residual, IdealPolygon};
use crate::solid::ReferenceSolid;

use super::{checkerboard_polyhedra, CombinatorialPolyhedron, RealizeError};

pub const UNIT_TOL: f64 = 1e-12;
pub const COPLANAR_TOL: f64 = 1e-10;

/// The plane `{x : x·normal = offset}` with `normal` outward and of unit length.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FacePlane {
    pub normal: Vector3<f64>,
    pub offset: f64,
}

impl FacePlane {
    /// Unit spacelike normal in Minkowski space `R^{3,1}`.
    pub fn minkowski_normal(&self) -> (Vector3<f64>, f64) {
        let s = (1.0 - self.offset * self.offset).sqrt();
        (self.normal / s, self.offset / s)
    }
}

/// Least-squares plane through `points`, oriented along `outward`. Returns the
/// plane and the largest distance of a point from it.
pub fn fit_plane(points: &[Vector3<f64>], outward: Vector3<f64>) -> (FacePlane, f64) {
    let n = points.len() as f64;
    let centroid = points.iter().sum::<Vector3<f64>>() / n;
    let mut cov = Matrix3::zeros();
    for p in points {
        let q = p - centroid;
        cov += q * q.transpose();
    }
    let eig = SymmetricEigen::new(cov);
    let k = eig.eigenvalues.imin();
    let mut normal: Vector3<f64> = eig.eigenvectors.column(k).into_owned();
    if normal.dot(&outward) < 0.0 {
        normal = -normal;
    }
    let offset = normal.dot(&centroid);
    let residual = points
        .iter()
        .map(|p| (p.dot(&normal) - offset).abs())
        .fold(0.0, f64::max);
    (FacePlane { normal, offset }, residual)
}

/// Newell normal of a polygon; points outward for a counterclockwise cycle.
fn newell(points: &[Vector3<f64>]) -> Vector3<f64> {
    let k = points.len();
    (0..k).map(|i| points[i].cross(&points[(i + 1) % k])).sum()
}

/// Ideal polyhedron in the Klein model.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdealPolyhedron {
    vertices: Vec<Vector3<f64>>,
    combinatorics: CombinatorialPolyhedron,
    planes: Vec<FacePlane>,
}

impl IdealPolyhedron {
    pub fn new(
        vertices: Vec<Vector3<f64>>,
        combinatorics: CombinatorialPolyhedron,
    ) -> Result<Self, RealizeError> {
        if vertices.len() != combinatorics.vertex_count() {
            return Err(RealizeError::VertexCount {
                positions: vertices.len(),
                vertices: combinatorics.vertex_count(),
            });
        }
        for (i, v) in vertices.iter().enumerate() {
            if (v.norm() - 1.0).abs() > UNIT_TOL {
                return Err(RealizeError::NotIdeal {
                    vertex: i,
                    norm: v.norm(),
                });
            }
        }
        let mut planes = Vec::with_capacity(combinatorics.face_count());
        for (f, face) in combinatorics.faces().iter().enumerate() {
            let pts: Vec<_> = face.vertices.iter().map(|&v| vertices[v]).collect();
            let (plane, residual) = fit_plane(&pts, newell(&pts));
            if residual > COPLANAR_TOL {
                return Err(RealizeError::NotCoplanar { face: f, residual });
            }
            if plane.offset.abs() >= 1.0 {
                return Err(RealizeError::PlaneMissesBall { face: f });
            }
            for (v, x) in vertices.iter().enumerate() {
                let excess = x.dot(&plane.normal) - plane.offset;
                if excess > COPLANAR_TOL {
                    return Err(RealizeError::NotConvex { face: f, vertex: v });
                }
            }
            planes.push(plane);
        }
        Ok(IdealPolyhedron {
            vertices,
            combinatorics,
            planes,
        })
    }

    pub fn vertices(&self) -> &[Vector3<f64>] {
        &self.vertices
    }

    pub fn combinatorics(&self) -> &CombinatorialPolyhedron {
        &self.combinatorics
    }

    pub fn planes(&self) -> &[FacePlane] {
        &self.planes
    }

    /// Reflection in the `xy`-plane, with face orientations reversed so they
    /// stay counterclockwise from outside.
    pub fn mirror(&self) -> IdealPolyhedron {
        let vertices = self
            .vertices
            .iter()
            .map(|v| Vector3::new(v.x, v.y, -v.z))
            .collect();
        IdealPolyhedron::new(vertices, self.combinatorics.mirrored())
            .expect("reflection of a valid polyhedron is valid")
    }
}

/// The solid with vertex `i` at `s.ideal_vertices()[i]` and the combinatorics
/// of its alternating diagram.
pub fn inscribe_solid(s: ReferenceSolid) -> IdealPolyhedron {
    let (plus, _, _) =
        checkerboard_polyhedra(&reference_diagram(s)).expect("reference diagrams are reduced");
    IdealPolyhedron::new(s.ideal_vertices(), plus).expect("reference coordinates are inscribed")
}

/// Interior dihedral angle between two faces sharing an edge.
pub fn dihedral_angle(p: &IdealPolyhedron, f: usize, g: usize) -> Result<f64, RealizeError> {
    let faces = p.combinatorics.faces();
    if f >= faces.len() || g >= faces.len() {
        return Err(RealizeError::NotAdjacent(f, g));
    }
    let shared = faces[f].edges.iter().any(|e| faces[g].edges.contains(e));
    if f == g || !shared {
        return Err(RealizeError::NotAdjacent(f, g));
    }
    Ok(plane_angle(&p.planes[f], &p.planes[g]))
}

fn plane_angle(a: &FacePlane, b: &FacePlane) -> f64 {
    let (u, s) = a.minkowski_normal();
    let (v, t) = b.minkowski_normal();
    let inner = u.dot(&v) - s * t;
    (-inner).clamp(-1.0, 1.0).acos()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EdgeAngle {
    pub edge: usize,
    pub faces: [usize; 2],
    pub angle: f64,
}

/// Dihedral angle at every edge, in edge order.
pub fn dihedral_angles(p: &IdealPolyhedron) -> Vec<EdgeAngle> {
    p.combinatorics
        .edge_faces()
        .into_iter()
        .enumerate()
        .map(|(edge, [(f, _), (g, _)])| EdgeAngle {
            edge,
            faces: [f, g],
            angle: plane_angle(&p.planes[f], &p.planes[g]),
        })
        .collect()
}

/// Cross-ratio regularity residual of each face, with faces given as cycles
/// of indices into `vertices`. Works on arbitrary (even non-planar) faces.
pub fn face_regularity_residuals(
    vertices: &[Vector3<f64>],
    faces: &[Vec<usize>],
) -> Result<Vec<f64>, RealizeError> {
    faces
        .iter()
        .map(|face| {
            let pts = face
                .iter()
                .map(|&v| klein_to_boundary(&vertices[v]))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(regularity_residual(&IdealPolygon::new(pts)?))
        })
        .collect()
}

pub fn face_residuals(p: &IdealPolyhedron) -> Vec<f64> {
    let faces: Vec<Vec<usize>> = p
        .combinatorics
        .faces()
        .iter()
        .map(|f| f.vertices.clone())
        .collect();
    face_regularity_residuals(&p.vertices, &faces).expect("validated polyhedron")
}

pub fn verify_face_regularity(p: &IdealPolyhedron, tol: f64) -> bool {
    face_residuals(p).into_iter().all(|r| r <= tol)
}
