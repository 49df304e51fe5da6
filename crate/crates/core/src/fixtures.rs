//! Small hand-checked instances used by the tests, the docs and the CLI
//! examples in the README.

use crate::graph::{Graph, ProblemInstance};

/// Four vertices `s=1, u=2, v=3, s'=4`, bound 5. The delay-feasible optimum
/// `1 -> 2 -> 3 -> 4` has a prefix that is not the unconstrained shortest
/// path to 3.
pub fn g2() -> ProblemInstance {
    let g = Graph::from_edges(
        4,
        &[
            (1, 2, 2.0, 1),
            (1, 3, 1.0, 5),
            (2, 3, 1.0, 1),
            (3, 4, 1.0, 1),
        ],
    )
    .expect("valid fixture");
    ProblemInstance::new(g, 5)
}

/// Hub vertex 2 with two 2-cycles (2<->3, 2<->4) between entry 1 and exit 5.
/// Unit weights, zero delays.
pub fn g3() -> ProblemInstance {
    let g = Graph::from_edges(
        5,
        &[
            (1, 2, 1.0, 0),
            (2, 3, 1.0, 0),
            (3, 2, 1.0, 0),
            (2, 4, 1.0, 0),
            (4, 2, 1.0, 0),
            (2, 5, 1.0, 0),
        ],
    )
    .expect("valid fixture");
    ProblemInstance::new(g, 0)
}

/// A single edge `1 -> 2` with weight 7 and delay 2.
pub fn k1() -> ProblemInstance {
    let g = Graph::from_edges(2, &[(1, 2, 7.0, 2)]).expect("valid fixture");
    ProblemInstance::new(g, 0)
}

/// Direct heavy edge `1 -> 2` (weight 10, delay 1) against a light detour
/// `1 -> 3 -> 2` (weight 2, delay 3), bound 5.
pub fn two_path_gadget() -> ProblemInstance {
    let g = Graph::from_edges(3, &[(1, 2, 10.0, 1), (1, 3, 1.0, 2), (3, 2, 1.0, 1)])
        .expect("valid fixture");
    ProblemInstance::new(g, 5)
}
