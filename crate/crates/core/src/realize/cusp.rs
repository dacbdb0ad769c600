use serde::{Deserialize, Serialize};

use crate::hypgeom::{klein_to_boundary, mobius_from_triple, Complex64};

use super::IdealPolyhedron;

/// Cross-section of the cusp at one ideal vertex by a horosphere at height 1
/// in the upper half-space, after the vertex is moved to infinity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CuspSection {
    pub vertex: usize,
    /// `sides[i]` runs from corner `i` to corner `i + 1`.
    pub sides: [f64; 4],
    pub angles: [f64; 4],
}

impl CuspSection {
    pub fn angle_sum(&self) -> f64 {
        self.angles.iter().sum()
    }

    /// Largest deviation of an angle from a right angle.
    pub fn right_angle_defect(&self) -> f64 {
        self.angles
            .iter()
            .map(|a| (a - std::f64::consts::FRAC_PI_2).abs())
            .fold(0.0, f64::max)
    }

    /// Largest difference between opposite sides.
    pub fn opposite_side_defect(&self) -> f64 {
        (self.sides[0] - self.sides[2])
            .abs()
            .max((self.sides[1] - self.sides[3]).abs())
    }
}

/// Corners are the images of the four neighbours; the vertex goes to
/// infinity and its first neighbour to 0.
pub fn cusp_sections(p: &IdealPolyhedron) -> Vec<CuspSection> {
    let c = p.combinatorics();
    let bound = |v: usize| klein_to_boundary(&p.vertices()[v]).expect("validated polyhedron");
    (0..c.vertex_count())
        .map(|v| {
            let nb = c.neighbours(v);
            let m = mobius_from_triple(bound(nb[0]), bound(nb[1]), bound(v))
                .expect("distinct ideal vertices");
            let corners: [Complex64; 4] = nb.map(|w| {
                m.apply(bound(w))
                    .value()
                    .expect("only the cusp vertex goes to infinity")
            });
            let sides = [0, 1, 2, 3].map(|i| (corners[(i + 1) % 4] - corners[i]).norm());
            let angles = [0, 1, 2, 3].map(|i| {
                let prev = corners[(i + 3) % 4] - corners[i];
                let next = corners[(i + 1) % 4] - corners[i];
                (prev / next).arg().abs()
            });
            CuspSection {
                vertex: v,
                sides,
                angles,
            }
        })
        .collect()
}
