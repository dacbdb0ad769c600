use serde::{Deserialize, Serialize};

use crate::diagram::{analyze, checkerboard_color, trace_faces, Color, Dart, Diagram};

use super::RealizeError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyFace {
    /// Vertex cycle, counterclockwise seen from outside.
    pub vertices: Vec<usize>,
    /// `edges[i]` joins `vertices[i]` to `vertices[i + 1]`.
    pub edges: Vec<usize>,
    pub color: Color,
}

impl PolyFace {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    fn reversed(&self) -> PolyFace {
        let k = self.size();
        PolyFace {
            vertices: (0..k).map(|i| self.vertices[(k - i) % k]).collect(),
            edges: (0..k).map(|i| self.edges[k - 1 - i]).collect(),
            color: self.color,
        }
    }
}

/// A 4-valent polyhedral map with colored faces. Vertices are crossings and
/// edges are diagram edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombinatorialPolyhedron {
    edges: Vec<[usize; 2]>,
    faces: Vec<PolyFace>,
    /// Neighbours of each vertex in counterclockwise order.
    neighbours: Vec<[usize; 4]>,
}

impl CombinatorialPolyhedron {
    pub fn vertex_count(&self) -> usize {
        self.neighbours.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn faces(&self) -> &[PolyFace] {
        &self.faces
    }

    pub fn neighbours(&self, v: usize) -> [usize; 4] {
        self.neighbours[v]
    }

    pub fn euler_characteristic(&self) -> isize {
        self.vertex_count() as isize - self.edge_count() as isize + self.face_count() as isize
    }

    pub fn has_bigon(&self) -> bool {
        self.faces.iter().any(|f| f.size() == 2)
    }

    /// The two faces on either side of every edge, as `(face, position)`.
    pub fn edge_faces(&self) -> Vec<[(usize, usize); 2]> {
        let mut out = vec![[(usize::MAX, 0); 2]; self.edges.len()];
        let mut filled = vec![0; self.edges.len()];
        for (f, face) in self.faces.iter().enumerate() {
            for (i, &e) in face.edges.iter().enumerate() {
                out[e][filled[e]] = (f, i);
                filled[e] += 1;
            }
        }
        out
    }

    /// Same faces with reversed orientation.
    pub fn mirrored(&self) -> CombinatorialPolyhedron {
        CombinatorialPolyhedron {
            edges: self.edges.clone(),
            faces: self.faces.iter().map(PolyFace::reversed).collect(),
            neighbours: self
                .neighbours
                .iter()
                .map(|n| [n[0], n[3], n[2], n[1]])
                .collect(),
        }
    }
}

/// Face `f` of the first polyhedron is glued to face `f` of its mirror, with
/// edge `i` going to edge `i + offset` of the mirror face (positions in the
/// first polyhedron's cyclic order).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gluing {
    pairs: Vec<FacePairing>,
    /// Face edge lists of the first polyhedron, kept so classes can be
    /// computed without the polyhedra.
    face_edges: Vec<Vec<usize>>,
    edge_count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacePairing {
    pub plus: usize,
    pub minus: usize,
    pub offset: isize,
}

impl Gluing {
    pub fn new(
        pairs: Vec<FacePairing>,
        face_edges: Vec<Vec<usize>>,
        edge_count: usize,
    ) -> Result<Self, RealizeError> {
        let n = face_edges.len();
        let mut seen_plus = vec![false; n];
        let mut seen_minus = vec![false; n];
        for p in &pairs {
            if p.plus >= n || p.minus >= n || seen_plus[p.plus] || seen_minus[p.minus] {
                return Err(RealizeError::NotBijection);
            }
            seen_plus[p.plus] = true;
            seen_minus[p.minus] = true;
        }
        if pairs.len() != n {
            return Err(RealizeError::NotBijection);
        }
        Ok(Gluing {
            pairs,
            face_edges,
            edge_count,
        })
    }

    pub fn pairs(&self) -> &[FacePairing] {
        &self.pairs
    }
}

/// The two checkerboard polyhedra of a diagram and their gluing. Black faces
/// are glued with offset +1 and white faces with offset -1.
pub fn checkerboard_polyhedra(
    d: &Diagram,
) -> Result<(CombinatorialPolyhedron, CombinatorialPolyhedron, Gluing), RealizeError> {
    let report = analyze(d);
    if report.split {
        return Err(RealizeError::Prerequisite("split diagram"));
    }
    if !report.alternating {
        return Err(RealizeError::Prerequisite("not alternating"));
    }
    if !report.reduced {
        return Err(RealizeError::Prerequisite("not reduced"));
    }
    let g = d.projection();
    let mut edge_of = vec![usize::MAX; g.dart_count()];
    let mut edges = Vec::with_capacity(g.edge_count());
    for (a, b) in g.edges() {
        edge_of[a.index()] = edges.len();
        edge_of[b.index()] = edges.len();
        edges.push([a.vertex(), b.vertex()]);
    }
    let coloring = checkerboard_color(d);
    let faces: Vec<PolyFace> = trace_faces(d)
        .iter()
        .enumerate()
        .map(|(f, face)| PolyFace {
            vertices: face.boundary.iter().map(|x| x.vertex()).collect(),
            edges: face.boundary.iter().map(|x| edge_of[x.index()]).collect(),
            color: coloring.color(f),
        })
        .collect();
    let neighbours = (0..g.vertex_count())
        .map(|v| [0, 1, 2, 3].map(|s| g.partner(Dart::new(v, s)).vertex()))
        .collect();
    let plus = CombinatorialPolyhedron {
        edges,
        faces,
        neighbours,
    };
    let minus = plus.mirrored();
    let pairs = plus
        .faces
        .iter()
        .enumerate()
        .map(|(f, face)| FacePairing {
            plus: f,
            minus: f,
            offset: if face.color == Color::Black { 1 } else { -1 },
        })
        .collect();
    let face_edges = plus.faces.iter().map(|f| f.edges.clone()).collect();
    let gluing = Gluing::new(pairs, face_edges, plus.edge_count())?;
    Ok((plus, minus, gluing))
}

/// Which polyhedron an edge belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Plus,
    Minus,
}

/// Orbits of edges of the two polyhedra under the face pairings, each sorted.
pub fn edge_classes(g: &Gluing) -> Vec<Vec<(Side, usize)>> {
    let n = g.edge_count;
    let node = |side: Side, e: usize| if side == Side::Plus { e } else { n + e };
    let mut parent: Vec<usize> = (0..2 * n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for p in &g.pairs {
        let plus = &g.face_edges[p.plus];
        let minus = &g.face_edges[p.minus];
        let k = plus.len() as isize;
        for (i, &e) in plus.iter().enumerate() {
            let j = (i as isize + p.offset).rem_euclid(k) as usize;
            let a = find(&mut parent, node(Side::Plus, e));
            let b = find(&mut parent, node(Side::Minus, minus[j]));
            parent[a] = b;
        }
    }
    let mut classes: Vec<Vec<(Side, usize)>> = Vec::new();
    let mut index = vec![usize::MAX; 2 * n];
    for side in [Side::Plus, Side::Minus] {
        for e in 0..n {
            let r = find(&mut parent, node(side, e));
            if index[r] == usize::MAX {
                index[r] = classes.len();
                classes.push(Vec::new());
            }
            classes[index[r]].push((side, e));
        }
    }
    classes
}
