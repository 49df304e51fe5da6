//! Exhaustive reference solvers for small graphs.
//!
//! These enumerate paths and walks by plain recursion and share no code with
//! the algorithms they check. They are exponential; the caps below keep the
//! test suite fast.

use crate::error::{Error, Result};
use crate::graph::{Delay, Graph, ProblemInstance, VertexId, Weight};

/// Largest graph accepted by the simple-path enumerators.
pub const PATH_VERTEX_CAP: usize = 12;
/// Largest graph accepted by the walk enumerator.
pub const WALK_VERTEX_CAP: usize = 10;
/// Largest `k` accepted by the walk enumerator.
pub const WALK_K_CAP: usize = 8;

fn cap(what: &'static str, value: usize, cap: usize) -> Result<()> {
    if value > cap {
        Err(Error::OracleCap { what, value, cap })
    } else {
        Ok(())
    }
}

/// Minimum weight over all simple `s -> v` paths, for every `v`.
pub fn oracle_sssp(g: &Graph, s: VertexId) -> Result<Vec<Weight>> {
    cap("n", g.n(), PATH_VERTEX_CAP)?;
    g.check_vertex(s)?;
    let mut best = vec![f64::INFINITY; g.n()];
    let mut on_path = vec![false; g.n()];

    fn visit(g: &Graph, u: VertexId, weight: Weight, on_path: &mut [bool], best: &mut [Weight]) {
        best[u - 1] = best[u - 1].min(weight);
        on_path[u - 1] = true;
        for e in g.out_edges(u) {
            if !on_path[e.to - 1] {
                visit(g, e.to, weight + e.weight, on_path, best);
            }
        }
        on_path[u - 1] = false;
    }

    visit(g, s, 0.0, &mut on_path, &mut best);
    Ok(best)
}

/// Lightest simple `s -> t` path with delay sum at most the instance bound,
/// as `(weight, delay)`; ties on weight go to the smaller delay. `s == t`
/// yields the empty path `(0, 0)`.
pub fn oracle_csp(
    inst: &ProblemInstance,
    s: VertexId,
    t: VertexId,
) -> Result<Option<(Weight, Delay)>> {
    let g = &inst.graph;
    cap("n", g.n(), PATH_VERTEX_CAP)?;
    g.check_vertex(s)?;
    g.check_vertex(t)?;

    struct Search<'a> {
        g: &'a Graph,
        t: VertexId,
        bound: Delay,
        on_path: Vec<bool>,
        best: Option<(Weight, Delay)>,
    }

    impl Search<'_> {
        fn visit(&mut self, u: VertexId, weight: Weight, delay: Delay) {
            if u == self.t {
                let better = match self.best {
                    None => true,
                    Some((w, d)) => weight < w || (weight == w && delay < d),
                };
                if better {
                    self.best = Some((weight, delay));
                }
                return;
            }
            self.on_path[u - 1] = true;
            for e in self.g.out_edges(u) {
                let next_delay = delay + e.delay;
                if !self.on_path[e.to - 1] && next_delay <= self.bound {
                    self.visit(e.to, weight + e.weight, next_delay);
                }
            }
            self.on_path[u - 1] = false;
        }
    }

    let mut search = Search {
        g,
        t,
        bound: inst.bound,
        on_path: vec![false; g.n()],
        best: None,
    };
    search.visit(s, 0.0, 0);
    Ok(search.best)
}

/// The `k` smallest weights, with multiplicity, over all walks from `s` with
/// between 1 and `k` edges.
pub fn oracle_ksp(g: &Graph, s: VertexId, k: usize) -> Result<Vec<Weight>> {
    cap("n", g.n(), WALK_VERTEX_CAP)?;
    cap("k", k, WALK_K_CAP)?;
    g.check_vertex(s)?;

    fn extend(g: &Graph, u: VertexId, weight: Weight, edges_left: usize, out: &mut Vec<Weight>) {
        if edges_left == 0 {
            return;
        }
        for e in g.out_edges(u) {
            let w = weight + e.weight;
            out.push(w);
            extend(g, e.to, w, edges_left - 1, out);
        }
    }

    let mut weights = Vec::new();
    extend(g, s, 0.0, k, &mut weights);
    weights.sort_by(f64::total_cmp);
    weights.truncate(k);
    Ok(weights)
}
