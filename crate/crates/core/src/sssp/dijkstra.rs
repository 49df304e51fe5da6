use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::{init_arrays, relax, target_path, SearchStats, SsspResult};
use crate::error::Result;
use crate::graph::{Graph, VertexId, Weight};
use crate::timing::PhaseClock;

/// Heap entry ordered so that `BinaryHeap` pops the smallest distance first,
/// breaking ties on the smaller vertex id.
#[derive(Debug, Clone, Copy)]
struct Entry {
    dist: Weight,
    vertex: VertexId,
}

impl PartialEq for Entry {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Entry {}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .dist
            .total_cmp(&self.dist)
            .then_with(|| other.vertex.cmp(&self.vertex))
    }
}

/// Lazy-deletion Dijkstra from `s`.
///
/// With `t = Some(..)` the search stops the first time `t` leaves the heap;
/// `dist` is then exact for `t` and every vertex settled before it, and
/// tentative for the rest.
pub fn dijkstra(g: &Graph, s: VertexId, t: Option<VertexId>) -> Result<SsspResult> {
    g.check_vertex(s)?;
    if let Some(t) = t {
        g.check_vertex(t)?;
    }

    let mut clock = PhaseClock::start();
    let (mut dist, mut pred) = init_arrays(g.n(), s);
    let mut heap = BinaryHeap::with_capacity(g.n());
    let mut stats = SearchStats::default();
    clock.begin_computation();

    heap.push(Entry {
        dist: 0.0,
        vertex: s,
    });
    while let Some(Entry { dist: d, vertex: u }) = heap.pop() {
        // Stale entry: `u` was improved after this one was pushed.
        if d > dist[u - 1] {
            continue;
        }
        if Some(u) == t {
            break;
        }
        for e in g.out_edges(u) {
            stats.relax_attempts += 1;
            if relax(u, e.to, e.weight, &mut dist, &mut pred) {
                heap.push(Entry {
                    dist: dist[e.to - 1],
                    vertex: e.to,
                });
            }
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
