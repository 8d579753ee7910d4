//! Small reference manifolds used by the tests, the examples and the CLI.

use alloc::vec;

use crate::model::{ConePoint, GluingMatrix, GraphManifold, SeifertPiece};

fn sphere(cones: &[(i64, i64)]) -> SeifertPiece {
    SeifertPiece::major(0, true, cones.iter().map(|&(p, q)| ConePoint::new(p, q)).collect())
}

/// Two pieces over a disc with two cone points of order 5, one edge.
/// Total slopes vanish at both vertices.
pub fn w1() -> GraphManifold {
    GraphManifold::new("W1")
        .with_vertex("x", sphere(&[(5, 1), (5, 1)]))
        .with_vertex("y", sphere(&[(5, -1), (5, -1)]))
        .with_edge("e", "x", "y", GluingMatrix::new(2, 1, 5, 2))
}

/// The κ = 2 partner of [`w1`].
pub fn n2() -> GraphManifold {
    GraphManifold::new("N2")
        .with_vertex("x", sphere(&[(5, 2), (5, 2)]))
        .with_vertex("y", sphere(&[(5, -3), (5, -3)]))
        .with_edge("e", "x", "y", GluingMatrix::new(6, 5, 5, 4))
}

/// [`w1`] with `δ = 3` on its edge (and `α = 3`, `β = 2` to keep det −1).
pub fn w1_delta3() -> GraphManifold {
    let mut m = w1();
    m.name = "W1-delta3".into();
    m.edges[0].matrix = GluingMatrix::new(3, 2, 5, 3);
    m
}

/// A triangle of pieces, each over an annulus with one cone point of order 2.
pub fn tri() -> GraphManifold {
    let swap = || GluingMatrix::new(0, 1, 1, 0);
    GraphManifold::new("TRI")
        .with_vertex("v1", sphere(&[(2, 1)]))
        .with_vertex("v2", sphere(&[(2, 1)]))
        .with_vertex("v3", sphere(&[(2, 1)]))
        .with_edge("e12", "v1", "v2", swap())
        .with_edge("e23", "v2", "v3", swap())
        .with_edge("e31", "v3", "v1", swap())
}

/// [`tri`] with the cone at `v1` replaced by `(2, −1)` and no compensating twist.
pub fn tri_flipped_cone() -> GraphManifold {
    let mut m = tri();
    m.name = "TRI-v1neg".into();
    m.vertices.insert("v1".into(), sphere(&[(2, -1)]));
    m
}

/// A major piece glued to the twisted I-bundle over the Klein bottle.
pub fn min() -> GraphManifold {
    GraphManifold::new("MIN")
        .with_vertex("x", sphere(&[(3, 1), (3, 1)]))
        .with_vertex("y", SeifertPiece::Minor)
        .with_edge("e", "x", "y", GluingMatrix::new(1, 1, 3, 2))
}

/// Bipartite, all slopes zero, every cone of order 2 and `γ = 1`: the unit
/// group modulo 2 is trivial.
pub fn order_two() -> GraphManifold {
    GraphManifold::new("P2")
        .with_vertex("x", sphere(&[(2, 1), (2, 1), (2, 1), (2, 1)]))
        .with_vertex("y", sphere(&[(2, 1), (2, 1), (2, 1), (2, 1)]))
        .with_edge("e", "x", "y", GluingMatrix::new(-2, -3, 1, 2))
}

/// Every fixture, in a fixed order.
pub fn all() -> alloc::vec::Vec<GraphManifold> {
    vec![w1(), n2(), tri(), min(), w1_delta3(), tri_flipped_cone(), order_two()]
}
