//! 4-valent rotation systems (combinatorial maps on the sphere).
//!
//! Darts are numbered `4 * vertex + slot`; slots run counterclockwise around
//! the vertex. A map is fully described by the involution pairing each dart
//! with the dart at the other end of its edge.

use std::collections::VecDeque;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("dart count {0} is not a multiple of 4")]
    NotFourValent(usize),
    #[error("vertex {vertex} has degree {degree}, expected 4")]
    Degree { vertex: usize, degree: usize },
    #[error("dart {0} is paired with an out-of-range dart")]
    DartOutOfRange(usize),
    #[error("dart pairing is not a fixed-point-free involution at dart {0}")]
    NotInvolution(usize),
    #[error("adjacency between {0} and {1} is not symmetric")]
    Asymmetric(usize, usize),
    #[error("graph has no vertices")]
    Empty,
    #[error("graph is disconnected ({0} components)")]
    Disconnected(usize),
    #[error("rotation system is not planar: V - E + F = {euler}, expected {expected}")]
    NonPlanar { euler: i64, expected: i64 },
}

/// Index of a dart: `4 * crossing + slot`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart(pub usize);

impl Dart {
    pub fn new(vertex: usize, slot: usize) -> Self {
        Dart(4 * vertex + (slot % 4))
    }
    pub fn vertex(self) -> usize {
        self.0 / 4
    }
    pub fn slot(self) -> usize {
        self.0 % 4
    }
    pub fn index(self) -> usize {
        self.0
    }
    /// Next dart counterclockwise around the same vertex.
    pub fn ccw(self) -> Dart {
        Dart::new(self.vertex(), self.slot() + 1)
    }
    /// Next dart clockwise around the same vertex.
    pub fn cw(self) -> Dart {
        Dart::new(self.vertex(), self.slot() + 3)
    }
    /// The dart straight across the vertex (the strand continues through it).
    pub fn opposite(self) -> Dart {
        Dart(self.0 ^ 2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RotationSystem {
    partner: Vec<usize>,
}

impl RotationSystem {
    /// Build from an explicit dart pairing. Planarity is not checked here.
    pub fn from_darts(partner: Vec<usize>) -> Result<Self, GraphError> {
        if partner.is_empty() {
            return Err(GraphError::Empty);
        }
        if !partner.len().is_multiple_of(4) {
            return Err(GraphError::NotFourValent(partner.len()));
        }
        for (d, &p) in partner.iter().enumerate() {
            if p >= partner.len() {
                return Err(GraphError::DartOutOfRange(d));
            }
            if p == d || partner[p] != d {
                return Err(GraphError::NotInvolution(d));
            }
        }
        Ok(RotationSystem { partner })
    }

    /// Build from counterclockwise neighbor lists of a simple graph.
    pub fn from_adjacency(adj: &[Vec<usize>]) -> Result<Self, GraphError> {
        if adj.is_empty() {
            return Err(GraphError::Empty);
        }
        for (v, nbrs) in adj.iter().enumerate() {
            if nbrs.len() != 4 {
                return Err(GraphError::Degree {
                    vertex: v,
                    degree: nbrs.len(),
                });
            }
        }
        let mut partner = vec![usize::MAX; 4 * adj.len()];
        for (v, nbrs) in adj.iter().enumerate() {
            for (i, &w) in nbrs.iter().enumerate() {
                let back = adj
                    .get(w)
                    .and_then(|wn| wn.iter().position(|&x| x == v))
                    .ok_or(GraphError::Asymmetric(v, w))?;
                partner[4 * v + i] = 4 * w + back;
            }
        }
        Self::from_darts(partner)
    }

    pub fn vertex_count(&self) -> usize {
        self.partner.len() / 4
    }

    pub fn dart_count(&self) -> usize {
        self.partner.len()
    }

    pub fn edge_count(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn partner(&self, d: Dart) -> Dart {
        Dart(self.partner[d.0])
    }

    pub fn darts(&self) -> impl Iterator<Item = Dart> + '_ {
        (0..self.partner.len()).map(Dart)
    }

    /// Face permutation: follow the edge, then take the sharpest left turn.
    /// The face traced from a dart lies on its left (the corner between the
    /// dart and its counterclockwise successor).
    pub fn face_next(&self, d: Dart) -> Dart {
        self.partner(d).cw()
    }

    /// Orbits of [`Self::face_next`], each starting at its smallest dart,
    /// ordered by that dart.
    pub fn faces(&self) -> Vec<Vec<Dart>> {
        let mut seen = vec![false; self.dart_count()];
        let mut faces = Vec::new();
        for start in self.darts() {
            if seen[start.0] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut d = start;
            while !seen[d.0] {
                seen[d.0] = true;
                cycle.push(d);
                d = self.face_next(d);
            }
            faces.push(cycle);
        }
        faces
    }

    /// Face index of every dart, consistent with [`Self::faces`].
    pub fn face_index(&self) -> Vec<usize> {
        let mut index = vec![0; self.dart_count()];
        for (f, face) in self.faces().iter().enumerate() {
            for d in face {
                index[d.0] = f;
            }
        }
        index
    }

    /// Edges as dart pairs `(d, partner(d))` with `d < partner(d)`.
    pub fn edges(&self) -> Vec<(Dart, Dart)> {
        self.darts()
            .filter(|d| d.0 < self.partner[d.0])
            .map(|d| (d, self.partner(d)))
            .collect()
    }

    /// Connected component id per vertex, numbered in order of first vertex.
    pub fn components(&self) -> Vec<usize> {
        self.components_without(&[])
    }

    /// Component labelling after deleting the given edges (by dart).
    pub fn components_without(&self, removed: &[Dart]) -> Vec<usize> {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut next = 0;
        let mut queue = VecDeque::new();
        for root in 0..n {
            if comp[root] != usize::MAX {
                continue;
            }
            comp[root] = next;
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                for slot in 0..4 {
                    let d = Dart::new(v, slot);
                    let p = self.partner(d);
                    if removed.iter().any(|&r| r == d || r == p) {
                        continue;
                    }
                    let w = p.vertex();
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn component_count(&self) -> usize {
        self.components().into_iter().max().map_or(0, |m| m + 1)
    }

    /// Checks `V - E + F = 2C`: every component embeds in its own sphere.
    pub fn check_planar(&self) -> Result<(), GraphError> {
        let v = self.vertex_count() as i64;
        let e = self.edge_count() as i64;
        let f = self.faces().len() as i64;
        let c = self.component_count() as i64;
        let euler = v - e + f;
        if euler != 2 * c {
            return Err(GraphError::NonPlanar {
                euler,
                expected: 2 * c,
            });
        }
        Ok(())
    }

    /// True when no face touches a vertex at two different corners, i.e. no
    /// vertex is nugatory.
    pub fn is_reduced(&self) -> bool {
        let face = self.face_index();
        (0..self.vertex_count()).all(|v| {
            let corners = [
                face[4 * v],
                face[4 * v + 1],
                face[4 * v + 2],
                face[4 * v + 3],
            ];
            (0..4).all(|i| (i + 1..4).all(|j| corners[i] != corners[j]))
        })
    }

    /// Apply a vertex permutation and per-vertex rotation of slots. Used to
    /// produce isomorphic copies under relabelling.
    pub fn relabeled(&self, vertex_perm: &[usize], slot_shift: &[usize]) -> RotationSystem {
        let n = self.vertex_count();
        assert_eq!(vertex_perm.len(), n);
        assert_eq!(slot_shift.len(), n);
        let map = |d: Dart| Dart::new(vertex_perm[d.vertex()], d.slot() + slot_shift[d.vertex()]);
        let mut partner = vec![0; self.dart_count()];
        for d in self.darts() {
            partner[map(d).0] = map(self.partner(d)).0;
        }
        RotationSystem { partner }
    }

    /// Reverse the cyclic order at every vertex (reflection of the sphere).
    pub fn mirrored(&self) -> RotationSystem {
        let map = |d: Dart| Dart::new(d.vertex(), 4 - d.slot());
        let mut partner = vec![0; self.dart_count()];
        for d in self.darts() {
            partner[map(d).0] = map(self.partner(d)).0;
        }
        RotationSystem { partner }
    }

    /// Insert a new vertex inside the face to the left of `d1` and `d2` by
    /// pinching their two edges together. Requires `d1` and `d2` to lie on the
    /// same face and belong to different edges.
    pub(crate) fn pinch(&self, d1: Dart, d2: Dart) -> RotationSystem {
        let x = self.vertex_count();
        let p1 = self.partner(d1);
        let p2 = self.partner(d2);
        let mut partner = self.partner.clone();
        partner.extend_from_slice(&[0; 4]);
        let link = |partner: &mut Vec<usize>, a: Dart, b: Dart| {
            partner[a.0] = b.0;
            partner[b.0] = a.0;
        };
        link(&mut partner, Dart::new(x, 0), d1);
        link(&mut partner, Dart::new(x, 1), p1);
        link(&mut partner, Dart::new(x, 2), d2);
        link(&mut partner, Dart::new(x, 3), p2);
        RotationSystem { partner }
    }
}
