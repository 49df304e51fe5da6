//! Delay-constrained shortest paths.
//!
//! Every edge carries an integer delay and a path is feasible when its delay
//! sum stays within the instance bound `b`. Two solvers are provided:
//!
//! * [`csp_bellman_ford`] fills an `n x (b + 1)` matrix in which cell
//!   `(v, l)` holds the lightest `s -> v` path with total delay **at most**
//!   `l`. Columns are computed in increasing `l`; inside a column, `n - 1`
//!   Bellman-Ford passes propagate along zero-delay edges.
//! * [`csp_dijkstra`] is a label-setting search over `(vertex, delay spent)`
//!   states where cell `(v, l)` is the lightest path found with delay
//!   **exactly** `l`.
//!
//! Optimal constrained paths need not have optimal prefixes, which is why the
//! state space is indexed by delay and not by vertex alone.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::graph::{Delay, ProblemInstance, VertexId, Weight};
use crate::timing::{PhaseClock, PhaseTimings};

/// Dense `n x (b + 1)` grid indexed by `(vertex, delay level)`, stored one
/// column (delay level) after another.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelGrid<T> {
    n: usize,
    levels: usize,
    cells: Vec<T>,
}

impl<T: Clone> LevelGrid<T> {
    fn filled(n: usize, bound: Delay, value: T) -> Result<Self> {
        let levels = usize::try_from(bound)
            .ok()
            .and_then(|b| b.checked_add(1))
            .ok_or_else(|| Error::InvalidArgument(format!("bound {bound} too large")))?;
        let len = n
            .checked_mul(levels)
            .ok_or_else(|| Error::InvalidArgument(format!("{n} x {levels} matrix too large")))?;
        Ok(LevelGrid {
            n,
            levels,
            cells: vec![value; len],
        })
    }
}

impl<T: Copy> LevelGrid<T> {
    #[inline]
    pub fn get(&self, v: VertexId, level: Delay) -> T {
        self.cells[self.index(v, level)]
    }

    #[inline]
    fn set(&mut self, v: VertexId, level: Delay, value: T) {
        let i = self.index(v, level);
        self.cells[i] = value;
    }
}

impl<T> LevelGrid<T> {
    #[inline]
    fn index(&self, v: VertexId, level: Delay) -> usize {
        level as usize * self.n + (v - 1)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Largest delay level, i.e. `b`.
    pub fn bound(&self) -> Delay {
        (self.levels - 1) as Delay
    }
}

/// Predecessor `(vertex, delay level)` of each cell.
pub type PredGrid = LevelGrid<Option<(VertexId, Delay)>>;

/// Output of the dynamic program: `dist.get(v, l)` is the minimum weight over
/// `s -> v` paths with delay at most `l`.
#[derive(Debug, Clone, PartialEq)]
pub struct CspMatrix {
    pub dist: LevelGrid<Weight>,
    pub pred: PredGrid,
}

/// Label-setting state: `dist.get(v, l)` is the lightest `s -> v` path found
/// with delay exactly `l`.
#[derive(Debug, Clone, PartialEq)]
pub struct CspLabels {
    pub dist: LevelGrid<Weight>,
    pub pred: PredGrid,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CspResult {
    /// `f64::INFINITY` when no path meets the bound.
    pub weight: Weight,
    pub delay: Option<Delay>,
    pub path: Option<Vec<VertexId>>,
    pub timings: PhaseTimings,
}

impl CspResult {
    pub fn is_feasible(&self) -> bool {
        self.weight.is_finite()
    }
}

fn check_query(inst: &ProblemInstance, s: VertexId, t: VertexId) -> Result<()> {
    inst.graph.check_vertex(s)?;
    inst.graph.check_vertex(t)?;
    if s == t {
        return Err(Error::InvalidArgument(
            "source equals target; split the source with Graph::augment_source first".into(),
        ));
    }
    Ok(())
}

/// Fills the budget-indexed matrix for source `s`.
pub fn csp_matrix(inst: &ProblemInstance, s: VertexId) -> Result<CspMatrix> {
    inst.graph.check_vertex(s)?;
    let mut dist = LevelGrid::filled(inst.graph.n(), inst.bound, f64::INFINITY)?;
    let mut pred = LevelGrid::filled(inst.graph.n(), inst.bound, None)?;
    fill_matrix(inst, s, &mut dist, &mut pred);
    Ok(CspMatrix { dist, pred })
}

fn fill_matrix(
    inst: &ProblemInstance,
    s: VertexId,
    dist: &mut LevelGrid<Weight>,
    pred: &mut PredGrid,
) {
    let g = &inst.graph;
    for level in 0..=inst.bound {
        dist.set(s, level, 0.0);
        for _ in 1..g.n() {
            for u in g.vertices() {
                for e in g.out_edges(u) {
                    if e.delay > level {
                        continue;
                    }
                    let from = level - e.delay;
                    let candidate = dist.get(u, from) + e.weight;
                    if candidate < dist.get(e.to, level) {
                        dist.set(e.to, level, candidate);
                        pred.set(e.to, level, Some((u, from)));
                    }
                }
            }
        }
    }
}

/// Pseudo-polynomial dynamic program, `O(n m b)`. Requires `s != t`.
///
/// Reports the weight of `dist[t][b]` together with the smallest delay level
/// that already achieves it, which is also the delay of the returned path.
pub fn csp_bellman_ford(inst: &ProblemInstance, s: VertexId, t: VertexId) -> Result<CspResult> {
    check_query(inst, s, t)?;
    let mut clock = PhaseClock::start();
    let mut dist = LevelGrid::filled(inst.graph.n(), inst.bound, f64::INFINITY)?;
    let mut pred = LevelGrid::filled(inst.graph.n(), inst.bound, None)?;
    clock.begin_computation();
    fill_matrix(inst, s, &mut dist, &mut pred);
    clock.end_computation();

    let weight = dist.get(t, inst.bound);
    if !weight.is_finite() {
        return Ok(unreachable(clock));
    }
    let level = (0..=inst.bound)
        .find(|&l| dist.get(t, l) == weight)
        .expect("level b attains the optimum");
    let path = csp_reconstruct(&pred, s, t, level)?;
    Ok(CspResult {
        weight,
        delay: Some(level),
        path: Some(path),
        timings: clock.finish(),
    })
}

fn unreachable(clock: PhaseClock) -> CspResult {
    CspResult {
        weight: f64::INFINITY,
        delay: None,
        path: None,
        timings: clock.finish(),
    }
}

/// Label entry popped by increasing distance, then delay, then vertex id.
#[derive(Debug, Clone, Copy)]
struct Label {
    dist: Weight,
    delay: Delay,
    vertex: VertexId,
}

impl PartialEq for Label {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Label {}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .dist
            .total_cmp(&self.dist)
            .then_with(|| other.delay.cmp(&self.delay))
            .then_with(|| other.vertex.cmp(&self.vertex))
    }
}

/// Label-setting search over `(vertex, delay spent)` states. Requires
/// `s != t`.
///
/// Labels leave the queue by weight first, so the first label of `t` to be
/// popped is weight-optimal, and among equally light ones it has the least
/// delay. Ordering by delay first would return the fastest path instead of
/// the lightest.
pub fn csp_dijkstra(inst: &ProblemInstance, s: VertexId, t: VertexId) -> Result<CspResult> {
    check_query(inst, s, t)?;
    let g = &inst.graph;
    let b = inst.bound;
    let mut clock = PhaseClock::start();
    let mut labels = CspLabels {
        dist: LevelGrid::filled(g.n(), b, f64::INFINITY)?,
        pred: LevelGrid::filled(g.n(), b, None)?,
    };
    let mut queue = BinaryHeap::new();
    clock.begin_computation();

    labels.dist.set(s, 0, 0.0);
    queue.push(Label {
        dist: 0.0,
        delay: 0,
        vertex: s,
    });
    let mut found = None;
    while let Some(Label {
        dist,
        delay,
        vertex: u,
    }) = queue.pop()
    {
        if dist > labels.dist.get(u, delay) {
            continue;
        }
        if u == t {
            found = Some((dist, delay));
            break;
        }
        for e in g.out_edges(u) {
            let next = delay + e.delay;
            if next > b {
                continue;
            }
            let candidate = dist + e.weight;
            if candidate < labels.dist.get(e.to, next) {
                labels.dist.set(e.to, next, candidate);
                labels.pred.set(e.to, next, Some((u, delay)));
                queue.push(Label {
                    dist: candidate,
                    delay: next,
                    vertex: e.to,
                });
            }
        }
    }
    clock.end_computation();

    let Some((weight, delay)) = found else {
        return Ok(unreachable(clock));
    };
    let path = csp_reconstruct(&labels.pred, s, t, delay)?;
    Ok(CspResult {
        weight,
        delay: Some(delay),
        path: Some(path),
        timings: clock.finish(),
    })
}

/// Follows `(vertex, level)` predecessors from `(t, level)` back to `s`.
pub fn csp_reconstruct(
    pred: &PredGrid,
    s: VertexId,
    t: VertexId,
    level: Delay,
) -> Result<Vec<VertexId>> {
    let broken = || Error::BrokenPredecessorChain { target: t };
    if t == 0 || t > pred.vertex_count() || level > pred.bound() {
        return Err(broken());
    }
    let max_len = pred.cells.len() + 1;
    let mut path = vec![t];
    let (mut v, mut l) = (t, level);
    while v != s {
        if path.len() > max_len {
            return Err(broken());
        }
        (v, l) = pred.get(v, l).ok_or_else(broken)?;
        path.push(v);
    }
    path.reverse();
    Ok(path)
}
