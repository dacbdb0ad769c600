//! Checkerboard polyhedra and the right-angled realizations of the three
//! solids.

mod combinatorial;
mod cusp;
mod ideal;
mod volume;

use nalgebra::Vector3;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypgeom::GeomError;
use crate::solid::ReferenceSolid;

pub use combinatorial::{
    checkerboard_polyhedra, edge_classes, CombinatorialPolyhedron, FacePairing, Gluing, PolyFace,
    Side,
};
pub use cusp::{cusp_sections, CuspSection};
pub use ideal::{
    dihedral_angle, dihedral_angles, face_regularity_residuals, face_residuals, fit_plane,
    inscribe_solid, verify_face_regularity, EdgeAngle, FacePlane, IdealPolyhedron, COPLANAR_TOL,
    UNIT_TOL,
};
pub use volume::{polyhedron_volume, polyhedron_volume_from, right_angled_volume};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RealizeError {
    #[error("diagram prerequisite failed: {0}")]
    Prerequisite(&'static str),
    #[error("face pairing is not a bijection")]
    NotBijection,
    #[error("{positions} positions given for {vertices} vertices")]
    VertexCount { positions: usize, vertices: usize },
    #[error("vertex {vertex} is not on the unit sphere (|v| = {norm})")]
    NotIdeal { vertex: usize, norm: f64 },
    #[error("face {face} is not planar (residual {residual:e})")]
    NotCoplanar { face: usize, residual: f64 },
    #[error("plane of face {face} misses the open ball")]
    PlaneMissesBall { face: usize },
    #[error("vertex {vertex} lies outside the plane of face {face}")]
    NotConvex { face: usize, vertex: usize },
    #[error("faces {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
    #[error("no vertex {0}")]
    NoSuchVertex(usize),
    #[error("cone tetrahedron has negative volume {0}")]
    NegativeTetrahedron(f64),
    #[error("polyhedron is degenerate")]
    Degenerate,
    #[error(transparent)]
    Geom(#[from] GeomError),
}

/// Everything certified about one realized solid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolidReport {
    pub solid: ReferenceSolid,
    pub vertices: Vec<[f64; 3]>,
    pub dihedral_angles: Vec<EdgeAngle>,
    pub face_residuals: Vec<f64>,
    pub cusps: Vec<CuspSection>,
    pub edge_class_sizes: Vec<usize>,
    pub volume: f64,
    pub vol_perp: f64,
    pub checks: SolidChecks,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolidChecks {
    pub right_angles: bool,
    pub regular_faces: bool,
    pub rectangular_cusps: bool,
    pub edge_classes_of_four: bool,
}

impl SolidChecks {
    pub fn all(&self) -> bool {
        self.right_angles
            && self.regular_faces
            && self.rectangular_cusps
            && self.edge_classes_of_four
    }
}

pub fn solid_report(s: ReferenceSolid, tol: f64) -> SolidReport {
    let p = inscribe_solid(s);
    let angles = dihedral_angles(&p);
    let residuals = face_residuals(&p);
    let cusps = cusp_sections(&p);
    let (_, _, gluing) = checkerboard_polyhedra(&crate::classify::reference_diagram(s))
        .expect("reference diagrams are reduced");
    let classes = edge_classes(&gluing);
    let volume = polyhedron_volume(&p).expect("reference solids are convex");
    let checks = SolidChecks {
        right_angles: angles
            .iter()
            .all(|a| (a.angle - std::f64::consts::FRAC_PI_2).abs() <= tol),
        regular_faces: residuals.iter().all(|&r| r <= tol),
        rectangular_cusps: cusps
            .iter()
            .all(|c| c.right_angle_defect() <= tol && c.opposite_side_defect() <= tol),
        edge_classes_of_four: classes.iter().all(|c| c.len() == 4)
            && classes.len() == s.vertex_count(),
    };
    SolidReport {
        solid: s,
        vertices: p
            .vertices()
            .iter()
            .map(|v: &Vector3<f64>| [v.x, v.y, v.z])
            .collect(),
        dihedral_angles: angles,
        face_residuals: residuals,
        cusps,
        edge_class_sizes: classes.iter().map(Vec::len).collect(),
        volume,
        vol_perp: 2.0 * volume,
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reports_pass() {
        for s in ReferenceSolid::ALL {
            let r = solid_report(s, 1e-9);
            assert!(r.checks.all(), "{s}: {:?}", r.checks);
            assert!((r.vol_perp - 2.0 * r.volume).abs() < 1e-15);
        }
    }

    #[test]
    fn report_json_round_trip() {
        let r = solid_report(ReferenceSolid::Octahedron, 1e-9);
        let text = serde_json::to_string(&r).unwrap();
        let back: SolidReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
    }
}
