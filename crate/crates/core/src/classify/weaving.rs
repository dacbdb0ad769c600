//! Weaving links: alternating closures of the braid (s_1 s_2 ... s_{p-1})^q.

use crate::diagram::{alternating_from_graph, Dart, Diagram, RotationSystem};

use super::ClassifyError;

// Slots of a braid crossing drawn with time running upward.
const NE: usize = 0;
const NW: usize = 1;
const SW: usize = 2;
const SE: usize = 3;

/// Standard diagram of the weaving link W(p, q), with `(p - 1) q` crossings.
pub fn weaving_diagram(p: usize, q: usize) -> Result<Diagram, ClassifyError> {
    if p < 3 || q < 2 {
        return Err(ClassifyError::WeavingRange { p, q });
    }
    let word: Vec<usize> = (0..q).flat_map(|_| 1..p).collect();
    let mut partner = vec![usize::MAX; 4 * word.len()];
    for pos in 1..=p {
        // (bottom dart, top dart) of every crossing this position passes.
        let events: Vec<(Dart, Dart)> = word
            .iter()
            .enumerate()
            .filter_map(|(c, &i)| {
                if pos == i {
                    Some((Dart::new(c, SW), Dart::new(c, NW)))
                } else if pos == i + 1 {
                    Some((Dart::new(c, SE), Dart::new(c, NE)))
                } else {
                    None
                }
            })
            .collect();
        for t in 0..events.len() {
            let top = events[t].1;
            let bottom = events[(t + 1) % events.len()].0;
            partner[top.index()] = bottom.index();
            partner[bottom.index()] = top.index();
        }
    }
    let g = RotationSystem::from_darts(partner).map_err(ClassifyError::Graph)?;
    alternating_from_graph(&g).map_err(|e| ClassifyError::Generate(e.to_string()))
}
