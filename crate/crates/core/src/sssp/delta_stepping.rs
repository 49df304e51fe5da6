use std::collections::{BTreeMap, BTreeSet};

use super::{init_arrays, target_path, SearchStats, SsspResult};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId, Weight};
use crate::timing::PhaseClock;

/// `max(1, ceil(mean edge weight))`.
pub fn default_delta(g: &Graph) -> Weight {
    g.mean_weight().ceil().max(1.0)
}

/// Bucket index -> vertices whose tentative distance falls in
/// `[i * delta, (i + 1) * delta)`.
type Buckets = BTreeMap<u64, BTreeSet<VertexId>>;

struct State<'a> {
    delta: Weight,
    dist: &'a mut [Weight],
    pred: &'a mut [Option<VertexId>],
    buckets: Buckets,
    stats: SearchStats,
}

impl State<'_> {
    #[inline]
    fn bucket_of(&self, d: Weight) -> u64 {
        (d / self.delta).floor() as u64
    }

    /// Relaxes `edges` out of `u`, moving every improved head to the bucket
    /// of its new distance.
    fn relax_requests(&mut self, u: VertexId, edges: &[Edge]) {
        let du = self.dist[u - 1];
        for e in edges {
            self.stats.relax_attempts += 1;
            let v = e.to;
            let candidate = du + e.weight;
            let old = self.dist[v - 1];
            if candidate >= old {
                continue;
            }
            if old.is_finite() {
                let b = self.bucket_of(old);
                if let Some(set) = self.buckets.get_mut(&b) {
                    set.remove(&v);
                    if set.is_empty() {
                        self.buckets.remove(&b);
                    }
                }
            }
            self.dist[v - 1] = candidate;
            self.pred[v - 1] = Some(u);
            let b = self.bucket_of(candidate);
            self.buckets.entry(b).or_default().insert(v);
        }
    }
}

/// Sequential Δ-stepping from `s` with bucket width `delta > 0`.
pub fn delta_stepping(
    g: &Graph,
    s: VertexId,
    t: Option<VertexId>,
    delta: Weight,
) -> Result<SsspResult> {
    g.check_vertex(s)?;
    if let Some(t) = t {
        g.check_vertex(t)?;
    }
    if !(delta.is_finite() && delta > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "delta must be a positive finite number, got {delta}"
        )));
    }

    let mut clock = PhaseClock::start();
    let (mut dist, mut pred) = init_arrays(g.n(), s);
    let mut light = vec![Vec::new(); g.n()];
    let mut heavy = vec![Vec::new(); g.n()];
    for (u, e) in g.edges() {
        if e.weight <= delta {
            light[u - 1].push(*e);
        } else {
            heavy[u - 1].push(*e);
        }
    }
    let mut drained = Vec::new();
    let mut in_drained = vec![false; g.n()];
    clock.begin_computation();

    let mut state = State {
        delta,
        dist: &mut dist,
        pred: &mut pred,
        buckets: Buckets::new(),
        stats: SearchStats::default(),
    };
    state.buckets.entry(0).or_default().insert(s);

    while let Some(&i) = state.buckets.keys().next() {
        // Light edges can only land back in bucket `i` or later, so keep
        // draining it until it stays empty.
        while let Some(current) = state.buckets.remove(&i) {
            for u in current {
                if !in_drained[u - 1] {
                    in_drained[u - 1] = true;
                    drained.push(u);
                }
                state.relax_requests(u, &light[u - 1]);
            }
        }
        // Heavy edges (weight > delta) always land past bucket `i`.
        for &u in &drained {
            state.relax_requests(u, &heavy[u - 1]);
            in_drained[u - 1] = false;
        }
        drained.clear();
    }
    let stats = state.stats;
    clock.end_computation();

    let path = target_path(s, t, &dist, &pred)?;
    Ok(SsspResult {
        source: s,
        dist,
        pred,
        path,
        timings: clock.finish(),
        stats,
    })
}
