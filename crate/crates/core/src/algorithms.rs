//! Name-addressable algorithm selectors shared by the CLI, the benchmark
//! harness and the batch helpers.

use std::fmt;
use std::str::FromStr;

use crate::csp::{csp_bellman_ford, csp_dijkstra, CspResult};
use crate::error::{Error, Result};
use crate::graph::{Graph, ProblemInstance, VertexId, Weight};
use crate::sssp::{
    bellman_ford, default_delta, delta_stepping, dijkstra, BellmanFordMode, SsspResult,
};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SsspAlgorithm {
    Dijkstra,
    BellmanFord(BellmanFordMode),
    /// `None` picks [`default_delta`] for the graph at hand.
    DeltaStepping {
        delta: Option<Weight>,
    },
}

impl SsspAlgorithm {
    /// The four algorithms compared by the single-source benchmark.
    pub const BENCHMARK_SET: [SsspAlgorithm; 4] = [
        SsspAlgorithm::Dijkstra,
        SsspAlgorithm::BellmanFord(BellmanFordMode::Naive),
        SsspAlgorithm::BellmanFord(BellmanFordMode::Yen),
        SsspAlgorithm::DeltaStepping { delta: None },
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SsspAlgorithm::Dijkstra => "dijkstra",
            SsspAlgorithm::BellmanFord(BellmanFordMode::Naive) => "bf",
            SsspAlgorithm::BellmanFord(BellmanFordMode::Yen) => "bf-yen",
            SsspAlgorithm::BellmanFord(BellmanFordMode::YenRandom { .. }) => "bf-yen-random",
            SsspAlgorithm::DeltaStepping { .. } => "delta",
        }
    }

    /// Parses a CLI name; `seed` feeds `bf-yen-random`, `delta` feeds `delta`.
    pub fn from_name(name: &str, seed: u64, delta: Option<Weight>) -> Result<Self> {
        Ok(match name {
            "dijkstra" => SsspAlgorithm::Dijkstra,
            "bf" => SsspAlgorithm::BellmanFord(BellmanFordMode::Naive),
            "bf-yen" => SsspAlgorithm::BellmanFord(BellmanFordMode::Yen),
            "bf-yen-random" => SsspAlgorithm::BellmanFord(BellmanFordMode::YenRandom { seed }),
            "delta" => SsspAlgorithm::DeltaStepping { delta },
            other => {
                return Err(Error::InvalidArgument(format!(
                    "unknown sssp algorithm `{other}` (expected dijkstra, bf, bf-yen, bf-yen-random or delta)"
                )))
            }
        })
    }

    pub fn run(&self, g: &Graph, s: VertexId, t: Option<VertexId>) -> Result<SsspResult> {
        match *self {
            SsspAlgorithm::Dijkstra => dijkstra(g, s, t),
            SsspAlgorithm::BellmanFord(mode) => bellman_ford(g, s, t, mode),
            SsspAlgorithm::DeltaStepping { delta } => {
                delta_stepping(g, s, t, delta.unwrap_or_else(|| default_delta(g)))
            }
        }
    }
}

impl fmt::Display for SsspAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CspAlgorithm {
    Dijkstra,
    BellmanFord,
}

impl CspAlgorithm {
    pub const BENCHMARK_SET: [CspAlgorithm; 2] =
        [CspAlgorithm::Dijkstra, CspAlgorithm::BellmanFord];

    /// Name used in benchmark output.
    pub fn name(&self) -> &'static str {
        match self {
            CspAlgorithm::Dijkstra => "csp-dijkstra",
            CspAlgorithm::BellmanFord => "csp-bellman-ford",
        }
    }

    pub fn run(&self, inst: &ProblemInstance, s: VertexId, t: VertexId) -> Result<CspResult> {
        match self {
            CspAlgorithm::Dijkstra => csp_dijkstra(inst, s, t),
            CspAlgorithm::BellmanFord => csp_bellman_ford(inst, s, t),
        }
    }
}

impl FromStr for CspAlgorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dijkstra" | "csp-dijkstra" => Ok(CspAlgorithm::Dijkstra),
            "bellman-ford" | "csp-bellman-ford" => Ok(CspAlgorithm::BellmanFord),
            other => Err(Error::InvalidArgument(format!(
                "unknown csp algorithm `{other}` (expected dijkstra or bellman-ford)"
            ))),
        }
    }
}

impl fmt::Display for CspAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
