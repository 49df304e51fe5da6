mod common;

use proptest::prelude::*;

use pathbench::oracle::oracle_sssp;
use pathbench::{dijkstra, Error, ParseErrorKind, ProblemInstance};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn text_round_trip(inst in common::instance(30, 120, 5, 40)) {
        let reparsed = ProblemInstance::parse(&inst.to_text()).unwrap();
        prop_assert_eq!(reparsed, inst);
    }

    #[test]
    fn splitting_preserves_edges_and_labels((inst, s) in common::with_source(30, 120, 5, 0)) {
        let g = &inst.graph;
        let (split, sink) = g.augment_source(s).unwrap();
        prop_assert_eq!(sink, g.n() + 1);
        prop_assert_eq!(split.n(), g.n() + 1);
        prop_assert_eq!(split.m(), g.m());
        prop_assert!(split.in_neighbors(s).is_empty());
        prop_assert_eq!(split.out_edges(s), g.out_edges(s));
        let labels = |h: &pathbench::Graph| {
            let mut l: Vec<(u64, u64)> = h.edges().map(|(_, e)| (e.weight.to_bits(), e.delay)).collect();
            l.sort_unstable();
            l
        };
        prop_assert_eq!(labels(&split), labels(g));
        let mut into_sink = split.in_neighbors(sink);
        let mut into_s = g.in_neighbors(s);
        into_sink.sort_unstable();
        into_s.sort_unstable();
        prop_assert_eq!(into_sink, into_s);
    }

    /// A shortest path to the split-off sink is a lightest closed walk
    /// through the source: a shortest path out to some in-neighbour plus the
    /// edge back.
    #[test]
    fn sink_distance_is_lightest_closed_walk((inst, s) in common::with_source(8, 56, 0, 0)) {
        let g = &inst.graph;
        let (split, sink) = g.augment_source(s).unwrap();
        let r = dijkstra(&split, s, Some(sink)).unwrap();
        let out = oracle_sssp(g, s).unwrap();
        let expected = g
            .in_neighbors(s)
            .into_iter()
            .map(|v| out[v - 1] + g.edge_weight(v, s).unwrap())
            .fold(f64::INFINITY, f64::min);
        prop_assert_eq!(r.dist(sink), expected);
        if let Some(p) = &r.path {
            let closed: Vec<_> = p.iter().map(|&v| if v == sink { s } else { v }).collect();
            prop_assert_eq!(g.walk_cost(&closed).map(|c| c.0), Some(expected));
        }
    }
}

type KindCheck = fn(&ParseErrorKind) -> bool;

#[test]
fn parse_errors_carry_line_numbers() {
    let cases: [(&str, usize, KindCheck); 7] = [
        ("2 1 0\n1 2 -3 0\n", 2, |k| {
            matches!(k, ParseErrorKind::NegativeWeight(_))
        }),
        ("# c\n\n2 1\n1 3 1\n", 4, |k| {
            matches!(k, ParseErrorKind::VertexOutOfRange { .. })
        }),
        ("2 2\n1 2 1\n1 2 4\n", 3, |k| {
            matches!(k, ParseErrorKind::DuplicateEdge(1, 2))
        }),
        ("2 1\n1 1 1\n", 2, |k| {
            matches!(k, ParseErrorKind::SelfLoop(1))
        }),
        ("2 1\n1 2 x\n", 2, |k| {
            matches!(k, ParseErrorKind::NonNumeric(_))
        }),
        ("2 1\n1 2 1 -1\n", 2, |k| {
            matches!(k, ParseErrorKind::NegativeDelay(-1))
        }),
        ("two 1\n", 1, |k| {
            matches!(
                k,
                ParseErrorKind::NonNumeric(_) | ParseErrorKind::MalformedHeader(_)
            )
        }),
    ];
    for (text, line, kind_ok) in cases {
        match ProblemInstance::parse(text) {
            Err(Error::Parse { line: l, kind }) => {
                assert_eq!(l, line, "{text:?}");
                assert!(kind_ok(&kind), "{text:?}: {kind:?}");
            }
            other => panic!("{text:?}: expected a parse error, got {other:?}"),
        }
    }
}

#[test]
fn optional_fields_default_to_zero() {
    let inst = ProblemInstance::parse("3 2\n1 2 1.5\n2 3 2 4\n").unwrap();
    assert_eq!(inst.bound, 0);
    assert_eq!(inst.graph.edge(1, 2).unwrap().delay, 0);
    assert_eq!(inst.graph.edge(2, 3).unwrap().delay, 4);
}
