//! Exact decision procedures for zero forcing, Kalman (walk matrix) rank and
//! Lie-algebraic controllability of linear and quantum systems on graphs.
//!
//! Everything here runs over exact rationals backed by arbitrary precision
//! integers; there is no floating point in any decision path. The crate is
//! `no_std` and only needs `alloc`.
//!
//! Vertex labels are 1-based at every public boundary that takes or prints
//! labels (`VertexSet::from_labels`, `Graph::from_edges`, `Display`), and
//! 0-based for indices (`VertexSet::indices`, `Graph::neighbors`).

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod control;
mod error;
pub mod graph;
pub mod linalg;
#[cfg(test)]
mod oracle;
pub mod verify;
mod vertex_set;
pub mod zero_forcing;

pub use control::{
    analyze, analyze_with, kalman_controllable, lie_closure, lie_controllable, p_span_dim,
    walk_matrix, CheckKind, CheckOutcome, ConsistencyEntry, ControllabilityReport, Hypotheses,
    LieClosure, Limits, MatrixKind, PatternMatrix, SignClass,
};
pub use error::{Error, Result};
pub use graph::{EdgeProbability, Family, Graph};
pub use linalg::{MatrixSpaceBasis, RationalMatrix};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use vertex_set::VertexSet;
pub use zero_forcing::{closure, is_zfs, min_zfs, ForceChronicle, Forcing, MinimumZfs};
