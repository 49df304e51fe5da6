use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{init_arrays, relax, target_path, SearchStats, SsspResult};
use crate::error::Result;
use crate::graph::{Edge, Graph, VertexId};
use crate::timing::PhaseClock;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BellmanFordMode {
    /// `n - 1` passes over every edge.
    Naive,
    /// Alternating sweeps over edges going up, then down, the natural vertex
    /// order, touching only vertices whose distance recently changed.
    Yen,
    /// [`BellmanFordMode::Yen`] under a seeded random vertex order.
    YenRandom { seed: u64 },
}

pub fn bellman_ford(
    g: &Graph,
    s: VertexId,
    t: Option<VertexId>,
    mode: BellmanFordMode,
) -> Result<SsspResult> {
    g.check_vertex(s)?;
    if let Some(t) = t {
        g.check_vertex(t)?;
    }
    let mut clock = PhaseClock::start();
    let (mut dist, mut pred) = init_arrays(g.n(), s);
    let mut stats = SearchStats::default();

    match mode {
        BellmanFordMode::Naive => {
            clock.begin_computation();
            for _ in 1..g.n() {
                for u in g.vertices() {
                    for e in g.out_edges(u) {
                        stats.relax_attempts += 1;
                        relax(u, e.to, e.weight, &mut dist, &mut pred);
                    }
                }
            }
        }
        BellmanFordMode::Yen | BellmanFordMode::YenRandom { .. } => {
            let mut sweep: Vec<VertexId> = g.vertices().collect();
            if let BellmanFordMode::YenRandom { seed } = mode {
                sweep.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            }
            let parts = SweepPartition::new(g, &sweep);
            clock.begin_computation();
            yen_sweeps(&parts, s, &mut dist, &mut pred, &mut stats);
        }
    }
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

/// Out-edges of each vertex split by whether they go up (`rank(u) <
/// rank(v)`) or down the sweep order.
struct SweepPartition {
    sweep: Vec<VertexId>,
    up: Vec<Vec<Edge>>,
    down: Vec<Vec<Edge>>,
}

impl SweepPartition {
    fn new(g: &Graph, sweep: &[VertexId]) -> Self {
        let mut rank = vec![0usize; g.n()];
        for (i, &v) in sweep.iter().enumerate() {
            rank[v - 1] = i;
        }
        let mut up = vec![Vec::new(); g.n()];
        let mut down = vec![Vec::new(); g.n()];
        for (u, e) in g.edges() {
            if rank[u - 1] < rank[e.to - 1] {
                up[u - 1].push(*e);
            } else {
                down[u - 1].push(*e);
            }
        }
        SweepPartition {
            sweep: sweep.to_vec(),
            up,
            down,
        }
    }
}

fn yen_sweeps(
    parts: &SweepPartition,
    s: VertexId,
    dist: &mut [f64],
    pred: &mut [Option<VertexId>],
    stats: &mut SearchStats,
) {
    let n = dist.len();
    // `to_relax`: changed during the previous half-pass.
    // `queued`: changed during the current one.
    let mut to_relax = vec![false; n];
    let mut queued = vec![false; n];
    // The source's initial distance counts as a change in the first
    // half-pass, so both of its edge sets get relaxed.
    queued[s - 1] = true;

    let mut half_pass = |order: &mut dyn Iterator<Item = &VertexId>,
                         edges: &[Vec<Edge>],
                         to_relax: &[bool],
                         queued: &mut [bool]|
     -> bool {
        let mut relaxed = false;
        for &u in order {
            if !(to_relax[u - 1] || queued[u - 1]) {
                continue;
            }
            for e in &edges[u - 1] {
                stats.relax_attempts += 1;
                if relax(u, e.to, e.weight, dist, pred) {
                    queued[e.to - 1] = true;
                    relaxed = true;
                }
            }
        }
        relaxed
    };

    loop {
        let mut relaxed = half_pass(&mut parts.sweep.iter(), &parts.up, &to_relax, &mut queued);
        std::mem::swap(&mut to_relax, &mut queued);
        queued.fill(false);

        relaxed |= half_pass(
            &mut parts.sweep.iter().rev(),
            &parts.down,
            &to_relax,
            &mut queued,
        );
        std::mem::swap(&mut to_relax, &mut queued);
        queued.fill(false);

        if !relaxed {
            break;
        }
    }
}
