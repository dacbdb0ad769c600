//! Alternating link diagrams whose checkerboard surfaces can be totally geodesic.
//!
//! The crate is split along the pipeline it implements:
//!
//! * [`diagram`] parses PD codes, traces faces, colors them and checks the
//!   combinatorial prerequisites (alternating, reduced, prime, non-split).
//! * [`classify`] solves the face-count equation, canonicalizes embedded
//!   4-valent graphs and decides whether a diagram is one of the three
//!   admissible projections (octahedron, cuboctahedron, icosidodecahedron).
//! * [`hypgeom`] is the numeric kernel: cross ratios on the extended plane,
//!   Möbius maps, the Lobachevsky function and ideal tetrahedron volumes.
//! * [`realize`] builds checkerboard polyhedra and certifies the right-angled
//!   ideal realizations of the three solids.
//! * [`cli`] wires all of the above into the `checkerboard` binary.

pub mod classify;
pub mod cli;
pub mod diagram;
pub mod hypgeom;
pub mod realize;
pub mod solid;

pub use classify::{classify, Verdict};
pub use diagram::{parse_pd, Diagram};
pub use solid::ReferenceSolid;
