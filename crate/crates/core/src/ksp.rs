//! k lightest walks from a source by best-first extension of stored paths.
//!
//! The frontier holds complete vertex sequences. Each step pops the lightest
//! one, emits it when it has at least one edge, and pushes one extension per
//! out-neighbour of its last vertex. Walks may revisit vertices and edges;
//! two walks that use the same edges in a different order are distinct.
//!
//! Without a target the i-th emitted walk has at most i edges, so the first
//! `k` never exceed `k` edges.

use std::cmp::Ordering;
use std::collections::{BinaryHeap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, Weight};

#[derive(Debug, Clone, PartialEq)]
pub struct WeightedPath {
    pub weight: Weight,
    pub vertices: Vec<VertexId>,
}

impl WeightedPath {
    pub fn edge_count(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn last(&self) -> VertexId {
        *self.vertices.last().expect("paths are never empty")
    }
}

/// Frontier entry: lighter first, then lexicographically smaller sequence.
#[derive(Debug)]
struct Frontier(WeightedPath);

impl PartialEq for Frontier {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Frontier {}

impl PartialOrd for Frontier {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Frontier {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .0
            .weight
            .total_cmp(&self.0.weight)
            .then_with(|| other.0.vertices.cmp(&self.0.vertices))
    }
}

/// Up to `k` lightest non-empty walks from `s`, in non-decreasing weight.
///
/// With `target = Some(t)` only walks ending at `t` are emitted; every popped
/// walk is still extended, except into vertices that cannot reach `t`. Fewer
/// than `k` walks are returned when the walk space runs out.
///
/// Target mode rejects graphs with a zero-weight cycle that is reachable from
/// `s` and can reach `t`: infinitely many walks of equal weight would pop
/// before any further walk to `t`, so the search would never end.
pub fn k_shortest_paths(
    g: &Graph,
    s: VertexId,
    k: usize,
    target: Option<VertexId>,
) -> Result<Vec<WeightedPath>> {
    g.check_vertex(s)?;
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let can_reach_target = match target {
        Some(t) => {
            g.check_vertex(t)?;
            reaches(g, t)
        }
        None => vec![true; g.n()],
    };
    if !can_reach_target[s - 1] {
        return Ok(Vec::new());
    }
    if target.is_some() && has_zero_weight_cycle(g, s, &can_reach_target) {
        return Err(Error::InvalidArgument(
            "target mode needs every cycle between source and target to have positive weight"
                .into(),
        ));
    }

    let mut emitted = Vec::with_capacity(k);
    let mut frontier = BinaryHeap::new();
    frontier.push(Frontier(WeightedPath {
        weight: 0.0,
        vertices: vec![s],
    }));

    while emitted.len() < k {
        let Some(Frontier(path)) = frontier.pop() else {
            break;
        };
        let last = path.last();
        for e in g.out_edges(last) {
            if !can_reach_target[e.to - 1] {
                continue;
            }
            let mut vertices = Vec::with_capacity(path.vertices.len() + 1);
            vertices.extend_from_slice(&path.vertices);
            vertices.push(e.to);
            frontier.push(Frontier(WeightedPath {
                weight: path.weight + e.weight,
                vertices,
            }));
        }
        if path.edge_count() >= 1 && target.is_none_or(|t| t == last) {
            emitted.push(path);
        }
    }
    Ok(emitted)
}

/// `reaches[v - 1]` is true when `t` is reachable from `v`.
fn reaches(g: &Graph, t: VertexId) -> Vec<bool> {
    let mut reverse = vec![Vec::new(); g.n()];
    for (u, e) in g.edges() {
        reverse[e.to - 1].push(u);
    }
    let mut seen = vec![false; g.n()];
    seen[t - 1] = true;
    let mut queue = VecDeque::from([t]);
    while let Some(v) = queue.pop_front() {
        for &u in &reverse[v - 1] {
            if !seen[u - 1] {
                seen[u - 1] = true;
                queue.push_back(u);
            }
        }
    }
    seen
}

/// Cycle detection over zero-weight edges between vertices that are
/// reachable from `s` and satisfy `keep`, by repeatedly peeling off vertices
/// with no remaining zero-weight in-edge.
fn has_zero_weight_cycle(g: &Graph, s: VertexId, keep: &[bool]) -> bool {
    let mut live = vec![false; g.n()];
    live[s - 1] = keep[s - 1];
    let mut stack = vec![s];
    while let Some(u) = stack.pop() {
        for e in g.out_edges(u) {
            if keep[e.to - 1] && !live[e.to - 1] {
                live[e.to - 1] = true;
                stack.push(e.to);
            }
        }
    }
    let zero_edges = || {
        g.edges()
            .filter(|(u, e)| e.weight == 0.0 && live[u - 1] && live[e.to - 1])
    };
    let mut in_degree = vec![0usize; g.n()];
    for (_, e) in zero_edges() {
        in_degree[e.to - 1] += 1;
    }
    let mut zero_out = vec![Vec::new(); g.n()];
    for (u, e) in zero_edges() {
        zero_out[u - 1].push(e.to);
    }
    let mut ready: Vec<VertexId> = g
        .vertices()
        .filter(|&v| live[v - 1] && in_degree[v - 1] == 0)
        .collect();
    let mut peeled = 0;
    while let Some(u) = ready.pop() {
        peeled += 1;
        for &v in &zero_out[u - 1] {
            in_degree[v - 1] -= 1;
            if in_degree[v - 1] == 0 {
                ready.push(v);
            }
        }
    }
    peeled < live.iter().filter(|&&l| l).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{g2, g3, k1};

    fn weights(paths: &[WeightedPath]) -> Vec<f64> {
        paths.iter().map(|p| p.weight).collect()
    }

    #[test]
    fn g2_first_three() {
        let paths = k_shortest_paths(&g2().graph, 1, 3, None).unwrap();
        assert_eq!(weights(&paths), vec![1.0, 2.0, 2.0]);
        let seqs: Vec<_> = paths.iter().map(|p| p.vertices.clone()).collect();
        assert_eq!(seqs, vec![vec![1, 3], vec![1, 2], vec![1, 3, 4]]);
    }

    #[test]
    fn k1_exhausts_frontier() {
        let paths = k_shortest_paths(&k1().graph, 1, 5, None).unwrap();
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].vertices, vec![1, 2]);
        assert_eq!(paths[0].weight, 7.0);
    }

    #[test]
    fn g3_walks_with_same_edges_in_different_order() {
        let paths = k_shortest_paths(&g3().graph, 1, 10, Some(5)).unwrap();
        let c1 = vec![1, 2, 3, 2, 4, 2, 5];
        let c2 = vec![1, 2, 4, 2, 3, 2, 5];
        for walk in [&c1, &c2] {
            let p = paths
                .iter()
                .find(|p| &p.vertices == walk)
                .expect("walk emitted");
            assert_eq!(p.weight, 6.0);
        }
        assert!(paths.iter().all(|p| p.last() == 5));
    }

    #[test]
    fn target_mode_handles_unreachable_and_finite_cases() {
        // 2 cannot reach 1.
        assert!(k_shortest_paths(&g3().graph, 2, 3, Some(1))
            .unwrap()
            .is_empty());
        // Cycle 2 <-> 3 cannot reach 4, so only one walk ends at 4.
        let g = Graph::from_edges(
            4,
            &[
                (1, 2, 1.0, 0),
                (2, 3, 1.0, 0),
                (3, 2, 1.0, 0),
                (1, 4, 5.0, 0),
            ],
        )
        .unwrap();
        let paths = k_shortest_paths(&g, 1, 4, Some(4)).unwrap();
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].vertices, vec![1, 4]);
    }

    #[test]
    fn target_mode_rejects_zero_weight_cycles() {
        let cyclic =
            Graph::from_edges(3, &[(1, 2, 0.0, 0), (2, 1, 0.0, 0), (2, 3, 1.0, 0)]).unwrap();
        assert!(matches!(
            k_shortest_paths(&cyclic, 1, 2, Some(3)),
            Err(Error::InvalidArgument(_))
        ));
        // Fine without a target, and when the cycle cannot reach the target.
        assert_eq!(k_shortest_paths(&cyclic, 1, 4, None).unwrap().len(), 4);
        let aside = Graph::from_edges(
            4,
            &[
                (1, 2, 0.0, 0),
                (2, 1, 0.0, 0),
                (3, 4, 1.0, 0),
                (3, 1, 1.0, 0),
            ],
        )
        .unwrap();
        assert_eq!(k_shortest_paths(&aside, 3, 3, Some(4)).unwrap().len(), 1);
    }

    #[test]
    fn rejects_zero_k() {
        assert!(matches!(
            k_shortest_paths(&k1().graph, 1, 0, None),
            Err(Error::InvalidArgument(_))
        ));
    }
}
