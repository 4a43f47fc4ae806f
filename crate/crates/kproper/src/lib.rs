//! Partitioning undirected graphs into highly connected parts.
//!
//! A partition of `V(G)` is *k-proper* if every part induces a k-connected
//! subgraph. This crate provides:
//!
//! * a canonical simple-graph type with edge-list and DIMACS I/O,
//! * flow-based vertex connectivity with verifiable certificates,
//! * block decompositions and the block-cut-vertex tree,
//! * a constructive 2-proper partitioner driven by the block-cut tree,
//! * a greedy k-proper partitioner that repeatedly extracts a maximal
//!   k-connected subgraph, together with exact rational bound arithmetic,
//! * generators for the tight extremal families (apex over cliques, and
//!   joined cliques over a small spine),
//! * augmentation of a k-proper partition into a k-connected supergraph by
//!   chaining parts with size-k matchings,
//! * exhaustive brute-force oracles for cross-checking everything at small
//!   scale.
//!
//! All threshold comparisons use exact rational arithmetic; nothing in the
//! partitioners is trusted without a post-hoc connectivity certificate.

pub mod augment;
pub mod blocktree;
pub mod connectivity;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod greedy;
pub mod io;
pub mod oracle;
pub mod partition;
pub mod report;
pub mod two_proper;

pub use error::Error;
pub use graph::{Graph, VertexSet};
pub use partition::{HypothesisCheck, InfeasibilityReport, Partition, PartitionSource};

/// Exact rational scalar used for every degree/threshold comparison.
pub type Rational = num_rational::Rational64;
