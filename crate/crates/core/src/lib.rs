//! Exact graph invariants and a verification harness built around the
//! Randić index `R(G) = Σ 1/√(d_u·d_v)` and the graph diameter `D(G)`.
//!
//! Everything that feeds a verdict is computed in exact arithmetic:
//! values live in [`radical::RadicalSum`] (finite sums `Σ qₘ·√m` with
//! rational `qₘ` and squarefree `m`), where equality is decided by term
//! maps and signs by certified interval refinement. Floating point never
//! touches a verdict; it is used only to render decimals.
//!
//! The crate is organised around:
//! - [`graph`]: bitset graphs on up to 62 vertices, BFS distances, and
//!   the three surgeries (vertex deletion, edge deletion, subdivision);
//! - [`mod@format`]: graph6 and edge-list codecs;
//! - [`radical`] / [`interval`]: the exact numeric kernel;
//! - [`invariants`]: `R`, `D`, `f = R − D/2` and their closed-form bounds;
//! - [`structure`]: essential vertices/edges, blocks, layer profiles;
//! - [`reduction`]: the vertex-deletion calculus and the reduction loop;
//! - [`constants`]: the closed-form functions `h`, `φ`, the `b` sequence
//!   and the degree growth bound;
//! - [`harness`]: graph sources, the suite registry, and parallel scans.

pub mod constants;
pub mod format;
pub mod graph;
pub mod harness;
pub mod interval;
pub mod invariants;
pub mod radical;
pub mod reduction;
pub mod structure;

pub use graph::{DistanceTable, Graph, GraphError};
pub use radical::{RadicalSum, Rational};
