use crate::hypgeom::{cross_ratio, klein_to_boundary, signed_tet_volume, ExtendedComplex};
use crate::solid::ReferenceSolid;

use super::{inscribe_solid, IdealPolyhedron, RealizeError};

/// Stereographic projection from the north pole reverses orientation relative
/// to outward-facing counterclockwise faces, so cone tetrahedra come out with
/// negative shape parameters.
const ORIENTATION: f64 = -1.0;

/// Volume by coning from vertex `apex`; every face not containing the apex is
/// fanned from its vertex at position `fan_root` (mod face size).
pub fn polyhedron_volume_from(
    p: &IdealPolyhedron,
    apex: usize,
    fan_root: usize,
) -> Result<f64, RealizeError> {
    let c = p.combinatorics();
    if apex >= c.vertex_count() {
        return Err(RealizeError::NoSuchVertex(apex));
    }
    let pts: Vec<ExtendedComplex> = p
        .vertices()
        .iter()
        .map(klein_to_boundary)
        .collect::<Result<_, _>>()?;
    let mut total = 0.0;
    for face in c.faces() {
        if face.vertices.contains(&apex) {
            continue;
        }
        let k = face.size();
        let r = fan_root % k;
        let at = |i: usize| pts[face.vertices[(r + i) % k]];
        for i in 1..k - 1 {
            let z = cross_ratio(pts[apex], at(0), at(i), at(i + 1))?;
            let v = match z.value() {
                Some(z) => ORIENTATION * signed_tet_volume(z),
                None => 0.0,
            };
            if v < 0.0 {
                return Err(RealizeError::NegativeTetrahedron(v));
            }
            total += v;
        }
    }
    if total <= 0.0 {
        return Err(RealizeError::Degenerate);
    }
    Ok(total)
}

pub fn polyhedron_volume(p: &IdealPolyhedron) -> Result<f64, RealizeError> {
    polyhedron_volume_from(p, 0, 0)
}

/// Twice the volume of the inscribed solid.
pub fn right_angled_volume(s: ReferenceSolid) -> f64 {
    2.0 * polyhedron_volume(&inscribe_solid(s)).expect("reference solids are convex")
}
