//! Building alternating diagrams from projections, and random diagrams.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::{color_rotation_system, Color, Crossing, Dart, Diagram, GraphError, RotationSystem};

/// Cap on insertion attempts for the random generators.
pub const MAX_ATTEMPTS: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("need at least 3 crossings, got {0}")]
    TooFewCrossings(usize),
    #[error("invalid projection graph: {0}")]
    Graph(#[from] GraphError),
    #[error("face 2-coloring failed")]
    NotColorable,
    #[error("gave up after {0} attempts")]
    Exhausted(usize),
}

/// Assign over/under information so that the diagram alternates.
///
/// At every vertex the dart whose counterclockwise corner is black becomes
/// an under-strand dart. The face holding dart 0 is black, so dart 0 of the
/// input is always an under-strand; the other choice is the mirror image.
/// Edges are relabelled consecutively along each oriented link component.
pub fn alternating_from_graph(g: &RotationSystem) -> Result<Diagram, GenerateError> {
    let comps = g.component_count();
    if comps != 1 {
        return Err(GraphError::Disconnected(comps).into());
    }
    g.check_planar()?;
    let coloring = color_rotation_system(g).ok_or(GenerateError::NotColorable)?;
    let face_of = g.face_index();
    let under = |d: Dart| coloring.color(face_of[d.index()]) == Color::Black;

    let mut label = vec![0u32; g.dart_count()];
    let mut incoming = vec![false; g.dart_count()];
    let mut next = 1;
    for start in g.darts() {
        if label[start.index()] != 0 {
            continue;
        }
        let mut d = start;
        loop {
            let p = g.partner(d);
            label[d.index()] = next;
            label[p.index()] = next;
            incoming[p.index()] = true;
            next += 1;
            d = p.opposite();
            if d == start {
                break;
            }
        }
    }

    let crossings = (0..g.vertex_count())
        .map(|v| {
            let first = (0..4)
                .map(|s| Dart::new(v, s))
                .find(|&d| under(d) && incoming[d.index()])
                .expect("each vertex has an incoming under-strand");
            let mut labels = [0; 4];
            for (k, l) in labels.iter_mut().enumerate() {
                *l = label[Dart::new(v, first.slot() + k).index()];
            }
            Crossing::new(labels)
        })
        .collect();
    Ok(Diagram::new(crossings).expect("alternating relabelling preserves validity"))
}

fn trefoil_projection() -> RotationSystem {
    super::parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")
        .expect("static trefoil")
        .projection()
        .clone()
}

/// Candidate pinch: face `face`, and positions `i < j` of two of its darts.
#[derive(Clone, Copy)]
struct Pinch {
    d1: Dart,
    d2: Dart,
    /// Number of bigons after the move.
    bigons_after: usize,
}

fn candidate_pinches(g: &RotationSystem) -> Vec<Pinch> {
    let faces = g.faces();
    let face_of = g.face_index();
    let bigons = faces.iter().filter(|f| f.len() == 2).count();
    let mut out = Vec::new();
    for face in &faces {
        let k = face.len();
        for i in 0..k {
            for j in 0..k {
                if i == j {
                    continue;
                }
                let (d1, d2) = (face[i], face[j]);
                let (p1, p2) = (g.partner(d1), g.partner(d2));
                // Same edge twice, or both sides land in one face: the new
                // crossing would be nugatory.
                if d2 == p1 || face_of[p1.index()] == face_of[p2.index()] {
                    continue;
                }
                let gap = (j + k - i) % k;
                let new_sizes = [gap + 1, k - gap + 1];
                let lost = usize::from(k == 2)
                    + usize::from(faces[face_of[p1.index()]].len() == 2)
                    + usize::from(faces[face_of[p2.index()]].len() == 2);
                let gained = new_sizes.iter().filter(|&&s| s == 2).count();
                out.push(Pinch {
                    d1,
                    d2,
                    bigons_after: bigons + gained - lost,
                });
            }
        }
    }
    out
}

fn grow<R: Rng>(
    n: usize,
    rng: &mut R,
    attempts: &mut usize,
    avoid_bigons: bool,
) -> Option<RotationSystem> {
    let mut g = trefoil_projection();
    while g.vertex_count() < n {
        *attempts += 1;
        if *attempts > MAX_ATTEMPTS {
            return None;
        }
        let mut cands = candidate_pinches(&g);
        if avoid_bigons {
            // Never add bigons, and since each move removes at most two,
            // keep only moves that can still clear them in the steps left.
            let now = g.faces().iter().filter(|f| f.len() == 2).count();
            let left = n - g.vertex_count() - 1;
            cands.retain(|c| c.bigons_after <= now.min(2 * left));
        }
        if cands.is_empty() {
            return None;
        }
        let pick = cands[rng.random_range(0..cands.len())];
        let next = g.pinch(pick.d1, pick.d2);
        if next.check_planar().is_err() || !next.is_reduced() {
            continue;
        }
        g = next;
    }
    Some(g)
}

/// A reduced, connected, alternating diagram with `n` crossings, grown from
/// the trefoil projection by repeatedly pinching two edges of a face into a
/// new crossing. Deterministic per seed.
pub fn random_alternating_diagram(n: usize, seed: u64) -> Result<Diagram, GenerateError> {
    if n < 3 {
        return Err(GenerateError::TooFewCrossings(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut attempts = 0;
    loop {
        if let Some(g) = grow(n, &mut rng, &mut attempts, false) {
            return alternating_from_graph(&g);
        }
        if attempts > MAX_ATTEMPTS {
            return Err(GenerateError::Exhausted(MAX_ATTEMPTS));
        }
    }
}

/// Like [`random_alternating_diagram`] but steered toward, and rejected
/// unless, the result has no bigon faces. Fails for crossing numbers that
/// admit no such projection (below 6, and 7).
pub fn random_bigon_free_diagram(n: usize, seed: u64) -> Result<Diagram, GenerateError> {
    if n < 3 {
        return Err(GenerateError::TooFewCrossings(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut attempts = 0;
    while attempts <= MAX_ATTEMPTS {
        let Some(g) = grow(n, &mut rng, &mut attempts, true) else {
            continue;
        };
        if g.faces().iter().all(|f| f.len() > 2) {
            return alternating_from_graph(&g);
        }
    }
    Err(GenerateError::Exhausted(MAX_ATTEMPTS))
}
