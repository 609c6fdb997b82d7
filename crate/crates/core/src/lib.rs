//! Exact extremal graph theory for odd prisms `C_{2k+1} □ P_2`.
//!
//! The crate is organized around a compact bit-vector graph kernel and a
//! handful of exact engines built on top of it:
//!
//! * [`graph`] — the [`Graph`](graph::Graph) type, graph algebra (join,
//!   disjoint union, Cartesian product, complement) and exact invariants
//!   (minimum degree, independence number, chromatic number, automorphisms).
//! * [`graph6`] — bit-exact graph6 encoding and decoding.
//! * [`canon`] — canonical labeling; two graphs are isomorphic iff their
//!   canonical forms agree byte for byte.
//! * [`constructions`] — named generators: Turán graphs, path powers, prisms,
//!   the bipartite-plus-triangles families `H_n^i` / `F_n^{i,j}`, the small
//!   fixtures `G1..G3`, `H1..H4`, and extremal families for `P_4`.
//! * [`containment`] — exact non-induced subgraph containment.
//! * [`formulas`] — closed-form Turán values with predicted extremal families.
//! * [`decomposition`] — decomposition families `M(L)`.
//! * [`search`] — an exhaustive Turán oracle over isomorphism classes.
//! * [`verify`] — a claim harness producing machine-readable certificates.

pub mod canon;
pub mod constructions;
pub mod containment;
pub mod decomposition;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod graph6;
pub mod search;
pub mod verify;

pub use canon::CanonicalForm;
pub use error::{Error, Result};
pub use graph::Graph;

/// Version string stamped into certificates.
pub const TOOLKIT_VERSION: &str = concat!("oddprism/", env!("CARGO_PKG_VERSION"));
