//! Small named graphs used as oracles in tests and demos.

use alloc::vec::Vec;

use crate::graph::Graph;

/// The cycle C_n (n >= 3).
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    let edges = edges
        .into_iter()
        .map(|(u, v)| (u.min(v), u.max(v)))
        .collect::<Vec<_>>();
    Graph::from_edges(n, edges).expect("cycle edges are simple")
}

/// The path P_n on n vertices (n - 1 edges).
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, edges).expect("path edges are simple")
}

/// The complete bipartite graph K_{a,b}: sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges: Vec<_> = (0..a)
        .flat_map(|u| (a..a + b).map(move |v| (u, v)))
        .collect();
    Graph::from_edges(a + b, edges).expect("bipartite edges are simple")
}

/// The Petersen graph: 3-regular, chromatic number 3, independence number 4,
/// spectrum {3, 1^5, (-2)^4}, and famously not Hamiltonian.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5)); // outer cycle
        edges.push((i, i + 5)); // spokes
        edges.push((i + 5, (i + 2) % 5 + 5)); // inner pentagram
    }
    let edges = edges
        .into_iter()
        .map(|(u, v)| (u.min(v), u.max(v)))
        .collect::<alloc::collections::BTreeSet<_>>();
    Graph::from_edges(10, edges).expect("petersen edges are simple")
}
