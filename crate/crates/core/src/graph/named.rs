//! Small named graphs used throughout tests and fixtures.

use super::{Edge, Graph};

pub fn complete(n: usize) -> Graph {
    Graph::from_edge_set(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| Edge::new(u, v))))
}

/// Cycle `0-1-...-(n-1)-0`; needs `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    Graph::from_edge_set(n, (0..n).map(|i| Edge::new(i, (i + 1) % n)))
}

/// Path on `n` vertices (`n - 1` edges).
pub fn path(n: usize) -> Graph {
    assert!(n >= 1);
    Graph::from_edge_set(n, (1..n).map(|i| Edge::new(i - 1, i)))
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edge_set(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| Edge::new(u, v))))
}

/// Outer 5-cycle on 0..5, inner pentagram on 5..10, spokes `i - (i + 5)`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push(Edge::new(i, (i + 1) % 5));
        edges.push(Edge::new(5 + i, 5 + (i + 2) % 5));
        edges.push(Edge::new(i, i + 5));
    }
    Graph::from_edge_set(10, edges)
}

/// Prism over an `k`-cycle (`2k` vertices, cubic).
pub fn prism(k: usize) -> Graph {
    assert!(k >= 3);
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push(Edge::new(i, (i + 1) % k));
        edges.push(Edge::new(k + i, k + (i + 1) % k));
        edges.push(Edge::new(i, k + i));
    }
    Graph::from_edge_set(2 * k, edges)
}

/// Two triangles joined by the single edge `2-3`.
pub fn two_triangles_bridged() -> Graph {
    Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]).unwrap()
}

/// `K_{3,3}` with the edge `0-3` subdivided by vertex 6, the only degree-2 vertex.
pub fn subdivided_k33() -> Graph {
    let mut edges: Vec<Edge> = complete_bipartite(3, 3)
        .edges()
        .iter()
        .copied()
        .filter(|&e| e != Edge::new(0, 3))
        .collect();
    edges.push(Edge::new(0, 6));
    edges.push(Edge::new(3, 6));
    Graph::from_edge_set(7, edges)
}

/// `K_4` minus the edge `1-2`, with vertex 4 joined to 1 and 2.
pub fn subdivided_k4() -> Graph {
    Graph::new(5, [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3), (1, 4), (2, 4)]).unwrap()
}
