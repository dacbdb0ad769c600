//! Canonical codes for connected 4-valent maps on the sphere, up to
//! relabelling and reflection.
//!
//! From every starting dart and in both rotational directions, vertices are
//! renumbered in breadth-first order and the dart pairing is written down in
//! the new numbering. The lexicographically smallest sequence is the code.

use std::collections::VecDeque;
use std::fmt;

use crate::diagram::{Dart, RotationSystem};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

fn turn(d: Dart, steps: usize, reflect: bool) -> Dart {
    let s = if reflect { 4 - steps % 4 } else { steps };
    Dart::new(d.vertex(), d.slot() + s)
}

fn offset(from: Dart, to: Dart, reflect: bool) -> usize {
    let diff = (to.slot() + 4 - from.slot()) % 4;
    if reflect {
        (4 - diff) % 4
    } else {
        diff
    }
}

fn code_from(g: &RotationSystem, start: Dart, reflect: bool) -> Vec<u32> {
    let n = g.vertex_count();
    let mut number = vec![usize::MAX; n];
    let mut reference = vec![Dart(0); n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::new();
    number[start.vertex()] = 0;
    reference[start.vertex()] = start;
    order.push(start.vertex());
    queue.push_back(start.vertex());
    while let Some(v) = queue.pop_front() {
        for k in 0..4 {
            let p = g.partner(turn(reference[v], k, reflect));
            let w = p.vertex();
            if number[w] == usize::MAX {
                number[w] = order.len();
                reference[w] = p;
                order.push(w);
                queue.push_back(w);
            }
        }
    }
    let mut code = Vec::with_capacity(4 * n);
    for &v in &order {
        for k in 0..4 {
            let p = g.partner(turn(reference[v], k, reflect));
            let w = p.vertex();
            code.push((4 * number[w] + offset(reference[w], p, reflect)) as u32);
        }
    }
    code
}

/// Returns `None` for a disconnected map.
pub(crate) fn canonical_code_of(g: &RotationSystem) -> Option<CanonicalCode> {
    if g.component_count() != 1 {
        return None;
    }
    let best = g
        .darts()
        .flat_map(|d| [false, true].map(|r| code_from(g, d, r)))
        .min()
        .expect("at least one dart");
    Some(CanonicalCode(
        best.into_iter().flat_map(u32::to_be_bytes).collect(),
    ))
}
