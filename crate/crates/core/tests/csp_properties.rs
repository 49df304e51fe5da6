mod common;

use proptest::prelude::*;

use pathbench::oracle::oracle_csp;
use pathbench::{csp_bellman_ford, csp_dijkstra, csp_matrix, CspResult, ProblemInstance};

fn check_result(
    inst: &ProblemInstance,
    s: usize,
    t: usize,
    r: &CspResult,
) -> Result<(), TestCaseError> {
    prop_assert!(r.timings.is_consistent());
    match (&r.path, r.delay) {
        (Some(p), Some(d)) => {
            prop_assert_eq!(p.first(), Some(&s));
            prop_assert_eq!(p.last(), Some(&t));
            prop_assert_eq!(inst.graph.walk_cost(p), Some((r.weight, d)));
            prop_assert!(d <= inst.bound);
        }
        (None, None) => prop_assert!(r.weight.is_infinite()),
        _ => prop_assert!(false, "path and delay must both be present or absent"),
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn both_algorithms_match_enumeration((inst, s, t) in common::with_pair(9, 72, 3, 10)) {
        let expected = oracle_csp(&inst, s, t).unwrap();
        let dp = csp_bellman_ford(&inst, s, t).unwrap();
        let labels = csp_dijkstra(&inst, s, t).unwrap();
        for r in [&dp, &labels] {
            check_result(&inst, s, t, r)?;
            prop_assert_eq!(r.is_feasible(), expected.is_some());
            if let Some((w, _)) = expected {
                prop_assert_eq!(r.weight, w);
            }
        }
        // The label search settles ties on weight by smaller delay.
        prop_assert_eq!(labels.delay, expected.map(|e| e.1));
    }

    #[test]
    fn algorithms_agree_on_larger_graphs((inst, s, t) in common::with_pair(40, 200, 4, 30)) {
        let dp = csp_bellman_ford(&inst, s, t).unwrap();
        let labels = csp_dijkstra(&inst, s, t).unwrap();
        check_result(&inst, s, t, &dp)?;
        check_result(&inst, s, t, &labels)?;
        prop_assert_eq!(dp.weight, labels.weight);
    }

    #[test]
    fn weight_never_increases_with_budget((inst, s, t) in common::with_pair(12, 60, 3, 0)) {
        let mut previous = f64::INFINITY;
        for b in 0..=12 {
            let inst = ProblemInstance::new(inst.graph.clone(), b);
            let w = csp_bellman_ford(&inst, s, t).unwrap().weight;
            prop_assert!(w <= previous);
            previous = w;
        }
    }

    /// Every prefix of a constrained optimum is itself optimal under a budget
    /// equal to the prefix's own delay.
    #[test]
    fn prefixes_of_optimal_paths_are_optimal((inst, s, t) in common::with_pair(9, 72, 3, 10)) {
        let r = csp_dijkstra(&inst, s, t).unwrap();
        let Some(path) = r.path else { return Ok(()) };
        for cut in 2..path.len() {
            let prefix = &path[..cut];
            let (w, d) = inst.graph.walk_cost(prefix).unwrap();
            let restricted = ProblemInstance::new(inst.graph.clone(), d);
            let best = oracle_csp(&restricted, s, prefix[cut - 1]).unwrap().unwrap();
            prop_assert_eq!(best.0, w);
        }
    }

    #[test]
    fn matrix_columns_are_monotone((inst, s) in common::with_source(10, 50, 3, 8)) {
        let m = csp_matrix(&inst, s).unwrap();
        for v in inst.graph.vertices() {
            for level in 1..=inst.bound {
                prop_assert!(m.dist.get(v, level) <= m.dist.get(v, level - 1));
            }
        }
    }
}
