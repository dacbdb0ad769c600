//! Classification against the octahedral, cuboctahedral and
//! icosidodecahedral projections.
//!
//! A diagram that passes the hyperbolicity prerequisites (alternating,
//! reduced, non-split, prime, not a (2,q)-torus diagram) has both checkerboard
//! surfaces totally geodesic exactly when its embedded projection graph is
//! one of the three solids' 1-skeleta.

mod canon;
mod weaving;

use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{
    alternating_from_graph, analyze, checkerboard_color, trace_faces, Diagram, GraphError,
    RotationSystem,
};
use crate::solid::ReferenceSolid;

pub use canon::CanonicalCode;
pub use weaving::weaving_diagram;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("weaving link needs p >= 3 and q >= 2, got p={p}, q={q}")]
    WeavingRange { p: usize, q: usize },
    #[error("census needs max p >= 3 and max q >= 2, got {p}, {q}")]
    CensusRange { p: usize, q: usize },
    #[error("invalid graph: {0}")]
    Graph(GraphError),
    #[error("could not build diagram: {0}")]
    Generate(String),
}

/// All `(n, V)` with `3 <= n <= n_max`, `V >= 1` and `2 = V (2/n - 1/3)`,
/// in exact integers: `V (6 - n) = 6 n`. No solution exists once `n >= 6`.
pub fn face_equation_solutions(n_max: usize) -> Vec<(usize, usize)> {
    (3..=n_max)
        .filter_map(|n| {
            let (n, lhs) = (n as i64, 6 - n as i64);
            (lhs > 0 && (6 * n) % lhs == 0).then(|| (n as usize, (6 * n / lhs) as usize))
        })
        .collect()
}

pub fn canonical_code(d: &Diagram) -> Result<CanonicalCode, ClassifyError> {
    canonical_code_of_graph(d.projection())
}

pub fn canonical_code_of_graph(g: &RotationSystem) -> Result<CanonicalCode, ClassifyError> {
    canon::canonical_code_of(g).ok_or(ClassifyError::Disconnected)
}

/// Alternating diagram on the solid's 1-skeleton; crossing `i` sits at
/// vertex `i` of [`ReferenceSolid::ideal_vertices`].
pub fn reference_diagram(s: ReferenceSolid) -> Diagram {
    alternating_from_graph(&s.rotation_system()).expect("solid skeletons are planar and connected")
}

fn reference_codes() -> &'static [(ReferenceSolid, CanonicalCode)] {
    static CODES: OnceLock<Vec<(ReferenceSolid, CanonicalCode)>> = OnceLock::new();
    CODES.get_or_init(|| {
        ReferenceSolid::ALL
            .into_iter()
            .map(|s| {
                let code = canonical_code_of_graph(&s.rotation_system()).expect("connected");
                (s, code)
            })
            .collect()
    })
}

/// Hyperbolicity prerequisites, in the order they are checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Prerequisite {
    Alternating,
    Reduced,
    NonSplit,
    Prime,
    NotTorus2q,
}

impl fmt::Display for Prerequisite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Prerequisite::Alternating => "not alternating",
            Prerequisite::Reduced => "not reduced",
            Prerequisite::NonSplit => "split diagram",
            Prerequisite::Prime => "not prime",
            Prerequisite::NotTorus2q => "(2,q)-torus link",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Obstruction {
    Bigon,
    GraphMismatch,
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Obstruction::Bigon => "bigon present",
            Obstruction::GraphMismatch => "graph not among the three",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    BothTotallyGeodesic(ReferenceSolid),
    NotBoth(Obstruction),
    PrerequisiteFailed(Prerequisite),
}

impl Verdict {
    pub fn is_both(&self) -> bool {
        matches!(self, Verdict::BothTotallyGeodesic(_))
    }

    /// Short tag: `BothTotallyGeodesic`, `NotBoth` or `PrerequisiteFailed`.
    pub fn kind(&self) -> &'static str {
        match self {
            Verdict::BothTotallyGeodesic(_) => "BothTotallyGeodesic",
            Verdict::NotBoth(_) => "NotBoth",
            Verdict::PrerequisiteFailed(_) => "PrerequisiteFailed",
        }
    }

    pub fn reason(&self) -> String {
        match self {
            Verdict::BothTotallyGeodesic(s) => format!("projection is the {} graph", s.name()),
            Verdict::NotBoth(o) => o.to_string(),
            Verdict::PrerequisiteFailed(p) => p.to_string(),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::BothTotallyGeodesic(s) => write!(f, "BothTotallyGeodesic({s})"),
            Verdict::NotBoth(o) => write!(f, "NotBoth({o})"),
            Verdict::PrerequisiteFailed(p) => write!(f, "PrerequisiteFailed({p})"),
        }
    }
}

/// First failing check wins, in the order alternating, reduced, split, prime,
/// torus, bigon, graph match.
pub fn classify(d: &Diagram) -> Verdict {
    let r = analyze(d);
    let failed = [
        (!r.alternating, Prerequisite::Alternating),
        (!r.reduced, Prerequisite::Reduced),
        (r.split, Prerequisite::NonSplit),
        (!r.prime, Prerequisite::Prime),
        (r.torus2q, Prerequisite::NotTorus2q),
    ]
    .into_iter()
    .find(|(bad, _)| *bad);
    if let Some((_, p)) = failed {
        return Verdict::PrerequisiteFailed(p);
    }
    if r.has_bigon {
        return Verdict::NotBoth(Obstruction::Bigon);
    }
    let n = d.crossing_count();
    let candidates: Vec<_> = reference_codes()
        .iter()
        .filter(|(s, _)| s.vertex_count() == n)
        .collect();
    if !candidates.is_empty() {
        let code = canonical_code(d).expect("non-split diagrams are connected");
        if let Some((s, _)) = candidates.iter().find(|(_, c)| *c == code) {
            return Verdict::BothTotallyGeodesic(*s);
        }
    }
    Verdict::NotBoth(Obstruction::GraphMismatch)
}

/// True iff every two same-colored faces meeting at a crossing without sharing
/// an edge have the same size.
pub fn opposite_pairs_check(d: &Diagram) -> bool {
    let g = d.projection();
    let faces = trace_faces(d);
    let coloring = checkerboard_color(d);
    let face_of = g.face_index();
    let edge_sets: Vec<HashSet<usize>> = faces
        .iter()
        .map(|f| {
            f.boundary
                .iter()
                .map(|&dart| dart.index().min(g.partner(dart).index()))
                .collect()
        })
        .collect();
    (0..d.crossing_count()).all(|c| {
        let corners: Vec<usize> = (0..4).map(|k| face_of[4 * c + k]).collect();
        (0..4).all(|i| {
            (i + 1..4).all(|j| {
                let (a, b) = (corners[i], corners[j]);
                a == b
                    || coloring.color(a) != coloring.color(b)
                    || !edge_sets[a].is_disjoint(&edge_sets[b])
                    || faces[a].size() == faces[b].size()
            })
        })
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub p: usize,
    pub q: usize,
    pub crossings: usize,
    pub verdict: Verdict,
    pub reason: String,
}

/// One row per `(p, q)` with `3 <= p <= p_max`, `2 <= q <= q_max`, ordered by
/// `p` then `q`. Rows are computed on scoped threads, one per `p`.
pub fn weaving_census(p_max: usize, q_max: usize) -> Result<Vec<CensusRow>, ClassifyError> {
    if p_max < 3 || q_max < 2 {
        return Err(ClassifyError::CensusRange { p: p_max, q: q_max });
    }
    let per_p: Vec<Result<Vec<CensusRow>, ClassifyError>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (3..=p_max)
            .map(|p| {
                scope.spawn(move || {
                    (2..=q_max)
                        .map(|q| {
                            let d = weaving_diagram(p, q)?;
                            let verdict = classify(&d);
                            Ok(CensusRow {
                                p,
                                q,
                                crossings: d.crossing_count(),
                                reason: verdict.reason(),
                                verdict,
                            })
                        })
                        .collect()
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("census worker panicked"))
            .collect()
    });
    let mut rows = Vec::new();
    for chunk in per_p {
        rows.extend(chunk?);
    }
    Ok(rows)
}

/// `p,q,crossings,verdict,reason` with a header line.
pub fn census_csv(rows: &[CensusRow]) -> String {
    let mut out = String::from("p,q,crossings,verdict,reason\n");
    for r in rows {
        let verdict = r.verdict.to_string();
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.p,
            r.q,
            r.crossings,
            csv_field(&verdict),
            csv_field(&r.reason)
        ));
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
