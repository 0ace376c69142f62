//! Solvers, verifiers, and reductions for disjunctive domination.
//!
//! A set `D` of vertices is a b-disjunctive dominating set of a graph `G` if
//! every vertex outside `D` either has a neighbor in `D` or has at least `b`
//! vertices of `D` at distance exactly two. The default parameter is `b = 2`.
//!
//! The crate provides:
//! * [`graph`]: adjacency-list graphs, vertex sets, verifiers, edge-list I/O;
//! * [`ordering`]: elimination-ordering certification and proper interval
//!   graph recognition via multi-sweep lexicographic BFS;
//! * [`pig`]: cubic reference and linear-time solvers for proper interval
//!   graphs;
//! * [`exact`]: exhaustive and branch-and-bound optimal solvers used as
//!   oracles;
//! * [`greedy`]: the multicover-based greedy approximation for general
//!   graphs;
//! * [`reductions`]: the pendant, chain, and per-edge gadget transforms
//!   together with their certificate extractors;
//! * [`generators`]: seeded deterministic instance generators;
//! * [`cli`]: the `djdom` command-line front end.

pub mod cli;
pub mod error;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod greedy;
pub mod ordering;
pub mod pig;
pub mod reductions;

pub use error::{Error, Result};
