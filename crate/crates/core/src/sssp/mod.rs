//! Single-source shortest paths on non-negatively weighted digraphs.
//!
//! Four algorithms share [`relax`] and [`reconstruct_path`]:
//!
//! * [`dijkstra`]: binary heap with lazy deletion and an optional early
//!   break on the target.
//! * [`bellman_ford`]: the naive `n - 1` pass version and Yen's forward /
//!   backward sweep, with either the natural or a seeded random vertex order.
//! * [`delta_stepping`]: sequential Δ-stepping over an ordered map of
//!   buckets.
//!
//! Every run reports [`PhaseTimings`]: allocation and any edge partitioning
//! count as pre-processing, the main loop as computation.

mod bellman_ford;
mod delta_stepping;
mod dijkstra;

pub use bellman_ford::{bellman_ford, BellmanFordMode};
pub use delta_stepping::{default_delta, delta_stepping};
pub use dijkstra::dijkstra;

use crate::error::{Error, Result};
use crate::graph::{VertexId, Weight};
use crate::timing::PhaseTimings;

/// Counters collected during a run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Number of edge relaxations attempted, successful or not.
    pub relax_attempts: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SsspResult {
    pub source: VertexId,
    /// `dist[v - 1]`, `f64::INFINITY` when `v` was not reached.
    pub dist: Vec<Weight>,
    /// `pred[v - 1]`, the vertex preceding `v` on its shortest path.
    pub pred: Vec<Option<VertexId>>,
    /// `[s, .., t]` when a target was requested and reached.
    pub path: Option<Vec<VertexId>>,
    pub timings: PhaseTimings,
    pub stats: SearchStats,
}

impl SsspResult {
    #[inline]
    pub fn dist(&self, v: VertexId) -> Weight {
        self.dist[v - 1]
    }

    #[inline]
    pub fn pred(&self, v: VertexId) -> Option<VertexId> {
        self.pred[v - 1]
    }
}

/// Relaxes `(u, v)` with weight `w`. Returns whether `dist[v]` strictly
/// decreased; on `false` nothing is written.
#[inline]
pub fn relax(
    u: VertexId,
    v: VertexId,
    w: Weight,
    dist: &mut [Weight],
    pred: &mut [Option<VertexId>],
) -> bool {
    let candidate = dist[u - 1] + w;
    if candidate < dist[v - 1] {
        dist[v - 1] = candidate;
        pred[v - 1] = Some(u);
        true
    } else {
        false
    }
}

/// Follows `pred` from `t` back to `s` and returns `[s, .., t]`.
pub fn reconstruct_path(
    s: VertexId,
    t: VertexId,
    pred: &[Option<VertexId>],
) -> Result<Vec<VertexId>> {
    let mut path = vec![t];
    let mut current = t;
    while current != s {
        // A valid chain visits each vertex at most once.
        if path.len() > pred.len() {
            return Err(Error::BrokenPredecessorChain { target: t });
        }
        current = pred
            .get(current.wrapping_sub(1))
            .copied()
            .flatten()
            .ok_or(Error::BrokenPredecessorChain { target: t })?;
        path.push(current);
    }
    path.reverse();
    Ok(path)
}

/// Path for `t` when it was requested and reached.
pub(crate) fn target_path(
    s: VertexId,
    t: Option<VertexId>,
    dist: &[Weight],
    pred: &[Option<VertexId>],
) -> Result<Option<Vec<VertexId>>> {
    match t {
        Some(t) if dist[t - 1].is_finite() => reconstruct_path(s, t, pred).map(Some),
        _ => Ok(None),
    }
}

pub(crate) fn init_arrays(n: usize, s: VertexId) -> (Vec<Weight>, Vec<Option<VertexId>>) {
    let mut dist = vec![f64::INFINITY; n];
    dist[s - 1] = 0.0;
    (dist, vec![None; n])
}
