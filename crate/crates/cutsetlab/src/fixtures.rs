//! Small named graphs used throughout the test suites.

use crate::graph::Graph;

/// 5 vertices: a triangle pair sharing the edge 1-2, with a pendant path to 3.
pub fn g5() -> Graph {
    Graph::from_edges(5, &[(1, 2), (2, 3), (1, 4), (2, 4), (2, 5), (1, 5)]).unwrap()
}

/// `g5` with two extra whiskers 6 and 7 attached to vertex 3.
pub fn g7() -> Graph {
    Graph::from_edges(7, &[(3, 6), (2, 3), (1, 2), (1, 4), (2, 4), (2, 5), (1, 5), (3, 7)])
        .unwrap()
}

/// A 9-vertex accessible graph with a rich cut-set family.
pub fn g9() -> Graph {
    Graph::from_edges(
        9,
        &[
            (1, 2),
            (2, 3),
            (3, 5),
            (4, 5),
            (2, 4),
            (2, 8),
            (7, 8),
            (4, 7),
            (6, 7),
            (3, 8),
            (8, 9),
            (5, 8),
        ],
    )
    .unwrap()
}
