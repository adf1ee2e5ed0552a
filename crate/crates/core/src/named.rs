//! Small named graphs used throughout the tests and the demo.

use crate::generate::{generate, FamilySpec};
use crate::graph::Graph;

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges.iter().copied()).expect("named graph is simple")
}

pub fn petersen() -> Graph {
    build(
        10,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (5, 7),
            (7, 9),
            (9, 6),
            (6, 8),
            (8, 5),
            (0, 5),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9),
        ],
    )
}

/// The Petersen graph with a pendant edge `3–10`.
pub fn z1() -> Graph {
    let p = petersen();
    Graph::new(11, p.edges().iter().copied().chain([(3, 10)])).expect("simple")
}

/// Central edge `9–1`; common neighbors induce P₃ ∪ P₂, the private
/// neighbors of 9 induce C₄ and those of 1 induce K₂ ∪ 2K₁.
pub fn z2() -> Graph {
    build(
        15,
        &[
            (9, 1),
            // common neighbors 0, 6, 7, 8, 14
            (9, 0),
            (1, 0),
            (9, 6),
            (1, 6),
            (9, 7),
            (1, 7),
            (9, 8),
            (1, 8),
            (9, 14),
            (1, 14),
            (6, 7),
            (7, 8),
            (0, 14),
            // private neighbors of 9
            (9, 10),
            (9, 11),
            (9, 12),
            (9, 13),
            (10, 11),
            (11, 12),
            (12, 13),
            (13, 10),
            // private neighbors of 1
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
            (3, 4),
        ],
    )
}

/// K₄ on {0,1,5,6} joined by the bridge 1–2 to the triangle {2,3,4}.
pub fn g_prime() -> Graph {
    build(
        7,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 2),
            (5, 6),
            (0, 5),
            (5, 1),
            (1, 6),
            (6, 0),
        ],
    )
}

/// K₄ on {1,2,5,6} with the pendant edge 0–1 and the pendant path 2–3–4.
pub fn g_double_prime() -> Graph {
    build(
        7,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (1, 5),
            (5, 6),
            (5, 2),
            (2, 6),
            (1, 6),
        ],
    )
}

/// Chain of `k` four-cycles, consecutive ones sharing a vertex.
pub fn chain_gk(k: usize) -> Graph {
    generate(&FamilySpec::ChainGk { k }).expect("k ≥ 1")
}

/// `chain_gk(5)` with the vertex labels of the usual drawing.
pub fn g5_drawing() -> Graph {
    let edges = [
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 5),
        (6, 7),
        (7, 8),
        (8, 9),
        (9, 10),
        (10, 11),
        (11, 8),
        (8, 12),
        (12, 6),
        (5, 13),
        (13, 3),
        (3, 14),
        (14, 1),
        (5, 15),
        (15, 6),
        (6, 16),
        (16, 5),
    ];
    Graph::new(16, edges.iter().map(|&(u, v)| (u - 1, v - 1))).expect("simple")
}
