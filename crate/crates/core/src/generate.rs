//! Seeded random instances for tests, sweeps and benchmark inputs.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Delay, Graph, ProblemInstance, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomInstanceSpec {
    pub n: usize,
    pub m: usize,
    /// Weights are integers drawn uniformly from `0..=max_weight`.
    pub max_weight: u32,
    /// Delays are drawn uniformly from `0..=max_delay`.
    pub max_delay: Delay,
    pub bound: Delay,
    /// Start from a random Hamiltonian cycle so every vertex reaches every
    /// other. Needs `m >= n`.
    pub strongly_connected: bool,
}

impl RandomInstanceSpec {
    pub fn new(n: usize, m: usize) -> Self {
        RandomInstanceSpec {
            n,
            m,
            max_weight: 20,
            max_delay: 0,
            bound: 0,
            strongly_connected: false,
        }
    }
}

pub fn random_instance(spec: &RandomInstanceSpec, seed: u64) -> Result<ProblemInstance> {
    let RandomInstanceSpec { n, m, .. } = *spec;
    let capacity = n.saturating_mul(n.saturating_sub(1));
    if m > capacity {
        return Err(Error::InvalidArgument(format!(
            "{m} edges do not fit in a simple digraph on {n} vertices"
        )));
    }
    if spec.strongly_connected && n > 1 && m < n {
        return Err(Error::InvalidArgument(format!(
            "a strongly connected graph on {n} vertices needs at least {n} edges"
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(VertexId, VertexId)> = Vec::with_capacity(m);
    let mut seen = HashSet::with_capacity(m);
    if spec.strongly_connected && n > 1 {
        let mut cycle: Vec<VertexId> = (1..=n).collect();
        cycle.shuffle(&mut rng);
        for i in 0..n {
            let pair = (cycle[i], cycle[(i + 1) % n]);
            seen.insert(pair);
            pairs.push(pair);
        }
    }
    while pairs.len() < m {
        let u = rng.gen_range(1..=n);
        let v = rng.gen_range(1..=n);
        if u != v && seen.insert((u, v)) {
            pairs.push((u, v));
        }
    }
    let edges: Vec<_> = pairs
        .into_iter()
        .map(|(u, v)| {
            let w = rng.gen_range(0..=spec.max_weight) as f64;
            let d = rng.gen_range(0..=spec.max_delay);
            (u, v, w, d)
        })
        .collect();
    let graph = Graph::from_edges(n, &edges)?;
    Ok(ProblemInstance::new(graph, spec.bound))
}
