//! Link diagrams given as planar diagram (PD) codes.
//!
//! A crossing `X(a,b,c,d)` lists the four edge labels counterclockwise,
//! starting at the incoming under-strand. Slots 0 and 2 therefore carry the
//! under-strand and slots 1 and 3 the over-strand. Faces are traced by
//! following an edge and turning left at the next crossing; the outer region
//! is a face like any other.

mod analysis;
mod generate;
mod pd;
mod rotation;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use analysis::{analyze, DiagramReport};
pub use generate::{
    alternating_from_graph, random_alternating_diagram, random_bigon_free_diagram, GenerateError,
    MAX_ATTEMPTS,
};
pub use pd::{emit_pd, parse_pd, parse_pd_lines};
pub use rotation::{Dart, GraphError, RotationSystem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("empty diagram")]
    Empty,
    #[error("malformed token {token} at byte {offset}: {reason}")]
    Malformed {
        token: usize,
        offset: usize,
        reason: String,
    },
    #[error("label {label} in token {token} is outside 1..={max}")]
    LabelOutOfRange { label: u32, token: usize, max: u32 },
    #[error("{}", multiplicity_message(.0))]
    LabelMultiplicity(Vec<LabelIssue>),
    #[error("diagram is not planar: {0}")]
    NonPlanar(GraphError),
}

/// A label that does not occur exactly twice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelIssue {
    pub label: u32,
    pub count: usize,
    /// First token (0-based crossing index) containing the label.
    pub token: usize,
}

fn multiplicity_message(issues: &[LabelIssue]) -> String {
    let parts: Vec<String> = issues
        .iter()
        .map(|i| format!("{} x{} (token {})", i.label, i.count, i.token))
        .collect();
    format!("labels must appear exactly twice: {}", parts.join(", "))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Crossing {
    labels: [u32; 4],
}

impl Crossing {
    pub fn new(labels: [u32; 4]) -> Self {
        Crossing { labels }
    }

    pub fn labels(&self) -> [u32; 4] {
        self.labels
    }

    pub fn label(&self, slot: usize) -> u32 {
        self.labels[slot % 4]
    }

    /// Slots 0 and 2 are the under-strand.
    pub fn is_under(slot: usize) -> bool {
        slot.is_multiple_of(2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    crossings: Vec<Crossing>,
    graph: RotationSystem,
}

impl Diagram {
    /// Validate label multiplicities and planarity. `token` indices in errors
    /// are crossing positions.
    pub fn new(crossings: Vec<Crossing>) -> Result<Self, DiagramError> {
        if crossings.is_empty() {
            return Err(DiagramError::Empty);
        }
        let max = 2 * crossings.len() as u32;
        let mut seen: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for (c, x) in crossings.iter().enumerate() {
            for slot in 0..4 {
                let label = x.labels[slot];
                if label == 0 || label > max {
                    return Err(DiagramError::LabelOutOfRange {
                        label,
                        token: c,
                        max,
                    });
                }
                seen.entry(label).or_default().push(4 * c + slot);
            }
        }
        let issues: Vec<LabelIssue> = seen
            .iter()
            .filter(|(_, darts)| darts.len() != 2)
            .map(|(&label, darts)| LabelIssue {
                label,
                count: darts.len(),
                token: darts[0] / 4,
            })
            .collect();
        if !issues.is_empty() {
            return Err(DiagramError::LabelMultiplicity(issues));
        }
        // With 4n slots and every present label used exactly twice, all 2n
        // labels are present.
        let mut partner = vec![0; 4 * crossings.len()];
        for darts in seen.values() {
            partner[darts[0]] = darts[1];
            partner[darts[1]] = darts[0];
        }
        let graph = RotationSystem::from_darts(partner).map_err(DiagramError::NonPlanar)?;
        graph.check_planar().map_err(DiagramError::NonPlanar)?;
        Ok(Diagram { crossings, graph })
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// The projection graph with its embedding.
    pub fn projection(&self) -> &RotationSystem {
        &self.graph
    }

    pub fn label(&self, d: Dart) -> u32 {
        self.crossings[d.vertex()].label(d.slot())
    }
}

/// A region of the diagram; `boundary` is its cycle of darts, each leaving the
/// crossing it sits at with the face on its left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub boundary: Vec<Dart>,
}

impl Face {
    /// Number of crossings on the boundary, counted with multiplicity.
    pub fn size(&self) -> usize {
        self.boundary.len()
    }

    pub fn crossings(&self) -> impl Iterator<Item = usize> + '_ {
        self.boundary.iter().map(|d| d.vertex())
    }
}

pub fn trace_faces(d: &Diagram) -> Vec<Face> {
    d.graph
        .faces()
        .into_iter()
        .map(|boundary| Face { boundary })
        .collect()
}

/// Histogram of face sizes.
pub fn face_vector(faces: &[Face]) -> BTreeMap<usize, usize> {
    let mut v = BTreeMap::new();
    for f in faces {
        *v.entry(f.size()).or_insert(0) += 1;
    }
    v
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

/// Colors indexed like [`trace_faces`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<Color>,
}

impl Coloring {
    pub fn color(&self, face: usize) -> Color {
        self.colors[face]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn count(&self, color: Color) -> usize {
        self.colors.iter().filter(|&&c| c == color).count()
    }
}

/// Proper 2-coloring of the faces. In each connected piece the face holding
/// the lowest dart is black.
pub fn checkerboard_color(d: &Diagram) -> Coloring {
    color_rotation_system(&d.graph).expect("faces of a planar 4-valent map are 2-colorable")
}

pub(crate) fn color_rotation_system(g: &RotationSystem) -> Option<Coloring> {
    let faces = g.faces();
    let face_of = g.face_index();
    let mut colors: Vec<Option<Color>> = vec![None; faces.len()];
    for root in 0..faces.len() {
        if colors[root].is_some() {
            continue;
        }
        colors[root] = Some(Color::Black);
        let mut stack = vec![root];
        while let Some(f) = stack.pop() {
            let c = colors[f].expect("set before push");
            for &d in &faces[f] {
                let g2 = face_of[g.partner(d).0];
                match colors[g2] {
                    None => {
                        colors[g2] = Some(c.other());
                        stack.push(g2);
                    }
                    Some(existing) if existing == c => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(Coloring {
        colors: colors
            .into_iter()
            .map(|c| c.expect("all visited"))
            .collect(),
    })
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::solid::ReferenceSolid;

    #[test]
    fn trefoil_faces() {
        let d = parse_pd(TREFOIL).unwrap();
        let faces = trace_faces(&d);
        let mut sizes: Vec<_> = faces.iter().map(Face::size).collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 2, 2, 3, 3]);
        assert_eq!(sizes.iter().sum::<usize>(), 4 * d.crossing_count());
    }

    #[test]
    fn every_dart_in_one_face() {
        let d = parse_pd(FIGURE_EIGHT).unwrap();
        let mut hits = vec![0; 4 * d.crossing_count()];
        for f in trace_faces(&d) {
            for dart in f.boundary {
                hits[dart.index()] += 1;
            }
        }
        assert!(hits.iter().all(|&h| h == 1));
    }

    #[test]
    fn coloring_is_proper_and_deterministic() {
        for text in [TREFOIL, FIGURE_EIGHT, TWO_TREFOILS] {
            let d = parse_pd(text).unwrap();
            let c = checkerboard_color(&d);
            let g = d.projection();
            let face_of = g.face_index();
            for dart in g.darts() {
                assert_ne!(
                    c.color(face_of[dart.index()]),
                    c.color(face_of[g.partner(dart).index()])
                );
            }
            assert_eq!(c.color(face_of[0]), Color::Black);
            assert_eq!(c, checkerboard_color(&d));
        }
    }

    #[test]
    fn trefoil_coloring_splits_bigons_from_triangles() {
        let d = parse_pd(TREFOIL).unwrap();
        let faces = trace_faces(&d);
        let c = checkerboard_color(&d);
        let tri: Vec<_> = (0..faces.len()).filter(|&f| faces[f].size() == 3).collect();
        // The two triangles are opposite at every crossing, hence same color.
        assert_eq!(c.color(tri[0]), c.color(tri[1]));
    }

    #[test]
    fn solid_colorings() {
        let cases = [
            (ReferenceSolid::Octahedron, 4, 4),
            (ReferenceSolid::Cuboctahedron, 8, 6),
            (ReferenceSolid::Icosidodecahedron, 20, 12),
        ];
        for (s, a, b) in cases {
            let d = crate::classify::reference_diagram(s);
            let c = checkerboard_color(&d);
            let mut counts = [c.count(Color::Black), c.count(Color::White)];
            counts.sort();
            let mut want = [a, b];
            want.sort();
            assert_eq!(counts, want, "{s:?}");
        }
    }

    #[test]
    fn face_vector_totals() {
        let d = parse_pd(TREFOIL).unwrap();
        let fv = face_vector(&trace_faces(&d));
        assert_eq!(fv.get(&2), Some(&3));
        assert_eq!(fv.get(&3), Some(&2));
        assert_eq!(fv.values().sum::<usize>(), 5);
    }
}
