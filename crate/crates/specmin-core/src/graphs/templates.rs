//! Named graph families that recur throughout the search and its tests.

use super::{canonical_form, Graph};

/// Path on n vertices, 0-1-2-...-(n-1).
pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Star K_{1,n-1} with center 0.
pub fn star_graph(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (0, i)).collect();
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Spider: center 0 with one path leg of each given length.
pub fn spider_graph(legs: &[usize]) -> Graph {
    let n = 1 + legs.iter().sum::<usize>();
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Complete graph on n vertices.
pub fn complete_graph(n: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            edges.push((i, j));
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Two adjacent centers with a and b pendant leaves: the double star T(a, b).
/// Realized as a 3-vertex path with leaves at both ends.
pub fn double_star(a: usize, b: usize) -> Graph {
    path_graph(3).attach_leaves(&[(0, a), (2, b)]).unwrap()
}

/// The tree of order n (n >= 5) with spectral radius exactly 2: a path with
/// two extra pendant leaves at each end. For n = 5 this degenerates to
/// K_{1,4}.
pub fn w_graph(n: usize) -> Graph {
    assert!(n >= 5, "w_graph needs n >= 5");
    let inner = n - 4;
    path_graph(inner)
        .attach_leaves(&[(0, 2), (inner - 1, 2)])
        .unwrap()
}

/// Path of n-2 vertices with two extra pendant leaves at one end (order n).
pub fn d_graph(n: usize) -> Graph {
    assert!(n >= 4, "d_graph needs n >= 4");
    let inner = n - 2;
    path_graph(inner).attach_leaves(&[(0, 2)]).unwrap()
}

/// Isomorphism test against the radius-2 family produced by [`w_graph`].
pub fn is_w_graph(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n < 5 || !g.is_tree() {
        return false;
    }
    canonical_form(g).unwrap() == canonical_form(&w_graph(n)).unwrap()
}
