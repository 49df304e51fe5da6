//! Independent queries evaluated as a batch.
//!
//! With the `parallel` feature (on by default) batches are spread over the
//! rayon thread pool; without it, and always through the `_seq` variants,
//! they run one after another on the calling thread. Each query is still a
//! single-threaded algorithm run, so results are identical either way.
//!
//! Benchmark timings never go through here: timed runs must not share the
//! machine with other work.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::algorithms::SsspAlgorithm;
use crate::error::Result;
use crate::graph::{Graph, VertexId};
use crate::sssp::SsspResult;

/// Single-source query: source and optional target.
pub type Query = (VertexId, Option<VertexId>);

/// Maps `f` over `items`, in parallel when the `parallel` feature is on.
/// Output order matches input order.
pub fn map_batch<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_batch_seq(items, f)
    }
}

pub fn map_batch_seq<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

pub fn sssp_batch(g: &Graph, algo: SsspAlgorithm, queries: &[Query]) -> Vec<Result<SsspResult>> {
    map_batch(queries, |&(s, t)| algo.run(g, s, t))
}

pub fn sssp_batch_seq(
    g: &Graph,
    algo: SsspAlgorithm,
    queries: &[Query],
) -> Vec<Result<SsspResult>> {
    map_batch_seq(queries, |&(s, t)| algo.run(g, s, t))
}

/// One disagreement found by [`cross_check`].
#[derive(Debug, Clone, PartialEq)]
pub struct Disagreement {
    pub source: VertexId,
    pub algorithm: &'static str,
    pub vertex: VertexId,
    pub expected: f64,
    pub found: f64,
}

/// Runs every algorithm from every source (full settlement) and reports
/// each vertex whose distance differs from the first algorithm's answer.
pub fn cross_check(
    g: &Graph,
    algorithms: &[SsspAlgorithm],
    sources: &[VertexId],
) -> Result<Vec<Disagreement>> {
    let per_source = map_batch(sources, |&s| -> Result<Vec<Disagreement>> {
        let Some((reference, others)) = algorithms.split_first() else {
            return Ok(Vec::new());
        };
        let expected = reference.run(g, s, None)?.dist;
        let mut found = Vec::new();
        for algo in others {
            let dist = algo.run(g, s, None)?.dist;
            for (i, (&a, &b)) in expected.iter().zip(&dist).enumerate() {
                if a != b {
                    found.push(Disagreement {
                        source: s,
                        algorithm: algo.name(),
                        vertex: i + 1,
                        expected: a,
                        found: b,
                    });
                }
            }
        }
        Ok(found)
    });
    let mut all = Vec::new();
    for r in per_source {
        all.extend(r?);
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{random_instance, RandomInstanceSpec};
    use crate::sssp::BellmanFordMode;

    #[test]
    fn parallel_and_sequential_batches_agree() {
        let inst = random_instance(&RandomInstanceSpec::new(40, 160), 11).unwrap();
        let queries: Vec<Query> = (1..=40).map(|s| (s, Some(41 - s))).collect();
        let par = sssp_batch(&inst.graph, SsspAlgorithm::Dijkstra, &queries);
        let seq = sssp_batch_seq(&inst.graph, SsspAlgorithm::Dijkstra, &queries);
        for (a, b) in par.iter().zip(&seq) {
            let (a, b) = (a.as_ref().unwrap(), b.as_ref().unwrap());
            assert_eq!(a.dist, b.dist);
            assert_eq!(a.path, b.path);
        }
    }

    #[test]
    fn cross_check_finds_no_disagreement() {
        let inst = random_instance(&RandomInstanceSpec::new(25, 80), 3).unwrap();
        let mut algos = SsspAlgorithm::BENCHMARK_SET.to_vec();
        algos.push(SsspAlgorithm::BellmanFord(BellmanFordMode::YenRandom {
            seed: 1,
        }));
        let sources: Vec<_> = inst.graph.vertices().collect();
        assert!(cross_check(&inst.graph, &algos, &sources)
            .unwrap()
            .is_empty());
    }
}
