//! Small named graphs used as worked examples. Each one is checked against
//! every value quoted for it (see the tests below), so a wrong edge shows up
//! as a failing test rather than a silently different example.

use crate::graph::Graph;

/// Vertex of [`h7`] where the path of `H_n` is attached.
pub const H7_ATTACH: usize = 5;

/// A 7-vertex cop-win graph with one-cop capture time 3 in which `{0, 6}`
/// dominates. Attaching a path at [`H7_ATTACH`] keeps the capture time at
/// `n - 4`. It has the fewest edges (14) among such graphs.
pub fn h7() -> Graph {
    Graph::from_edges(
        7,
        [
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 2),
            (1, 3),
            (1, 6),
            (2, 4),
            (2, 6),
            (3, 5),
            (3, 6),
            (4, 5),
            (4, 6),
        ],
    )
    .expect("fixture is valid")
}

/// Spider of order 10 with legs of length 2, 3 and 4 at vertex 0:
/// `rad_1..4 = 4, 3, 2, 1` and `th_c = 5`.
pub fn fig2_tree() -> Graph {
    Graph::from_edges(10, [(0, 1), (1, 2), (0, 3), (3, 4), (4, 5), (0, 6), (6, 7), (7, 8), (8, 9)])
        .expect("fixture is valid")
}

/// Unicyclic graph of order 12: the cycle `1..=8`, a leaf 0 on 1 and the
/// path `4-9-10-11`. `th_c = 4` (cops on 8 and 9 catch in two rounds) while
/// `th_+ = 5`.
pub fn fig3_unicyclic() -> Graph {
    Graph::from_edges(
        12,
        [
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 8),
            (8, 1),
            (0, 1),
            (4, 9),
            (9, 10),
            (10, 11),
        ],
    )
    .expect("fixture is valid")
}

/// Tree of order 5 burned by `(2, 4)`: `b = 2`, `γ = 2`, `th_+ = 3`.
pub fn fig4_tree() -> Graph {
    Graph::from_edges(5, [(0, 2), (1, 2), (2, 3), (3, 4)]).expect("fixture is valid")
}
