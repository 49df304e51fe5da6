#![allow(dead_code)]

use proptest::prelude::*;

use pathbench::generate::{random_instance, RandomInstanceSpec};
use pathbench::ProblemInstance;

/// Random instance with `n` in `1..=max_n` and up to `max_m` edges.
pub fn instance(
    max_n: usize,
    max_m: usize,
    max_delay: u64,
    max_bound: u64,
) -> impl Strategy<Value = ProblemInstance> {
    (1..=max_n, any::<u64>(), 0..=max_bound, 0.0..=1.0f64).prop_map(
        move |(n, seed, bound, fill)| {
            let cap = (n * (n - 1)).min(max_m);
            let spec = RandomInstanceSpec {
                max_delay,
                bound,
                ..RandomInstanceSpec::new(n, (cap as f64 * fill).round() as usize)
            };
            random_instance(&spec, seed).expect("edge count fits")
        },
    )
}

/// Instance together with a valid source vertex.
pub fn with_source(
    max_n: usize,
    max_m: usize,
    max_delay: u64,
    max_bound: u64,
) -> impl Strategy<Value = (ProblemInstance, usize)> {
    instance(max_n, max_m, max_delay, max_bound).prop_flat_map(|inst| {
        let n = inst.graph.n();
        (Just(inst), 1..=n)
    })
}

/// Instance with a source and a distinct target (needs `n >= 2`).
pub fn with_pair(
    max_n: usize,
    max_m: usize,
    max_delay: u64,
    max_bound: u64,
) -> impl Strategy<Value = (ProblemInstance, usize, usize)> {
    instance(max_n, max_m, max_delay, max_bound)
        .prop_filter("needs two vertices", |inst| inst.graph.n() >= 2)
        .prop_flat_map(|inst| {
            let n = inst.graph.n();
            (Just(inst), 1..=n, 1..n)
        })
        .prop_map(|(inst, s, offset)| {
            let n = inst.graph.n();
            let t = (s - 1 + offset) % n + 1;
            (inst, s, t)
        })
}
