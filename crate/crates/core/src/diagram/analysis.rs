use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{face_vector, trace_faces, Dart, Diagram, RotationSystem};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramReport {
    pub crossings: usize,
    pub alternating: bool,
    pub reduced: bool,
    pub split: bool,
    pub prime: bool,
    pub torus2q: bool,
    pub components: usize,
    pub face_vector: BTreeMap<usize, usize>,
    pub has_bigon: bool,
    pub has_triangle: bool,
}

pub fn analyze(d: &Diagram) -> DiagramReport {
    let g = d.projection();
    let faces = trace_faces(d);
    let fv = face_vector(&faces);
    DiagramReport {
        crossings: d.crossing_count(),
        alternating: is_alternating(g),
        reduced: g.is_reduced(),
        split: g.component_count() > 1,
        prime: is_prime(g),
        torus2q: is_torus_2q(g, &fv),
        components: link_components(g),
        has_bigon: fv.get(&2).is_some_and(|&c| c > 0),
        has_triangle: fv.get(&3).is_some_and(|&c| c > 0),
        face_vector: fv,
    }
}

/// Every edge runs from an under slot to an over slot, so consecutive
/// crossings along each strand alternate.
fn is_alternating(g: &RotationSystem) -> bool {
    g.edges().iter().all(|&(a, b)| a.slot() % 2 != b.slot() % 2)
}

/// No pair of edges whose removal disconnects the projection further.
fn is_prime(g: &RotationSystem) -> bool {
    let base = g.component_count();
    let edges = g.edges();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let comp = g.components_without(&[edges[i].0, edges[j].0]);
            let count = comp.into_iter().max().map_or(0, |m| m + 1);
            if count > base {
                return false;
            }
        }
    }
    true
}

/// The standard (2,q) picture: a necklace of bigons between two q-gons.
fn is_torus_2q(g: &RotationSystem, fv: &BTreeMap<usize, usize>) -> bool {
    let n = g.vertex_count();
    if n < 2 || g.component_count() != 1 {
        return false;
    }
    let mut expected = BTreeMap::new();
    *expected.entry(2).or_insert(0) += n;
    *expected.entry(n).or_insert(0) += 2;
    if *fv != expected {
        return false;
    }
    let want = if n == 2 { 1 } else { 2 };
    (0..n).all(|v| {
        let nbrs: BTreeSet<usize> = (0..4)
            .map(|s| g.partner(Dart::new(v, s)).vertex())
            .collect();
        nbrs.len() == want && !nbrs.contains(&v)
    })
}

/// Number of link components, found by running straight through crossings.
fn link_components(g: &RotationSystem) -> usize {
    let mut seen = vec![false; g.dart_count()];
    let mut count = 0;
    for start in g.darts() {
        if seen[start.index()] {
            continue;
        }
        count += 1;
        let mut d = start;
        while !seen[d.index()] {
            let p = g.partner(d);
            seen[d.index()] = true;
            seen[p.index()] = true;
            d = p.opposite();
        }
    }
    count
}
