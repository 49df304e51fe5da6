//! Shortest-path algorithms on directed graphs with non-negative weights and
//! integer edge delays, plus a phase-timed benchmark harness.
//!
//! Vertices are 1-based throughout: a graph with `n` vertices uses ids
//! `1..=n`, and per-vertex arrays are indexed by `id - 1`.

pub mod algorithms;
pub mod batch;
pub mod bench;
pub mod cli;
pub mod csp;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod graph;
pub mod ksp;
pub mod oracle;
pub mod sssp;
pub mod timing;

pub use algorithms::{CspAlgorithm, SsspAlgorithm};
pub use csp::{csp_bellman_ford, csp_dijkstra, csp_matrix, CspMatrix, CspResult};
pub use error::{Error, ParseErrorKind, Result};
pub use graph::{Delay, Edge, Graph, ProblemInstance, VertexId, Weight};
pub use ksp::{k_shortest_paths, WeightedPath};
pub use sssp::{
    bellman_ford, default_delta, delta_stepping, dijkstra, BellmanFordMode, SsspResult,
};
pub use timing::PhaseTimings;
