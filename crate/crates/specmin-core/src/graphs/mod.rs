//! Undirected simple graphs with dense 0-based vertex indices, plus the tree
//! transformations used by the minimizer search: pendant-leaf attachment,
//! edge subdivision, vertex splitting, canonical forms and graph6 text.

use std::collections::VecDeque;

use thiserror::Error;

mod canon;
mod graph6;
mod independence;
mod parity;
pub mod templates;

pub use canon::canonical_form;
pub use graph6::{decode_graph6, encode_graph6, Graph6Text};
pub use independence::{independence_number, IndependenceResult};
pub use parity::ParityTree;

pub const EXACT_INDEPENDENCE_CAP: usize = 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("edge {0}-{1} does not exist")]
    MissingEdge(usize, usize),
    #[error("unknown host vertex {0}")]
    UnknownHost(usize),
    #[error("exact independence number is capped at {cap} vertices, graph has {order}")]
    IndependenceCapExceeded { order: usize, cap: usize },
    #[error("invalid vertex split: {0}")]
    InvalidSplit(String),
    #[error("malformed graph6 text: {0}")]
    BadGraph6(String),
}

/// Simple undirected graph stored as sorted per-vertex neighbor lists.
///
/// Values are immutable after construction; all transformations return a new
/// graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.vertex_count(), self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adjacency: vec![Vec::new(); n] }
    }

    /// Builds a simple graph from an edge list. Duplicate pairs collapse to a
    /// single edge; self-loops and out-of-range endpoints are rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, order: n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !adjacency[u].contains(&v) {
                adjacency[u].push(v);
                adjacency[v].push(u);
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph { adjacency })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as (u, v) with u < v, in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// BFS distances from `start`; `usize::MAX` marks unreachable vertices.
    pub fn bfs_distances(&self, start: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[start] = 0;
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return false;
        }
        self.bfs_distances(0).iter().all(|&d| d != usize::MAX)
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() == self.vertex_count().saturating_sub(1)
    }

    /// Proper 2-coloring: `side[v]` is false/true per class. Errors on odd
    /// cycles or disconnected input.
    pub fn bipartition(&self) -> Result<Vec<bool>, GraphError> {
        let n = self.vertex_count();
        if n == 0 || !self.is_connected() {
            return Err(GraphError::NotConnected);
        }
        let mut side = vec![None; n];
        let mut queue = VecDeque::new();
        side[0] = Some(false);
        queue.push_back(0);
        while let Some(u) = queue.pop_front() {
            let su = side[u].unwrap();
            for &v in &self.adjacency[u] {
                match side[v] {
                    None => {
                        side[v] = Some(!su);
                        queue.push_back(v);
                    }
                    Some(sv) if sv == su => return Err(GraphError::NotBipartite),
                    Some(_) => {}
                }
            }
        }
        Ok(side.into_iter().map(Option::unwrap).collect())
    }

    /// Degree-1 vertices (degree-0 for the single-vertex graph), sorted.
    pub fn degree_one_vertices(&self) -> Vec<usize> {
        if self.vertex_count() == 1 {
            return vec![0];
        }
        (0..self.vertex_count()).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Leaf set of a tree, with one convention: for an even-order path only
    /// the lower-indexed end counts as a leaf. Downstream uses are
    /// isomorphism-invariant, so the choice of end does not matter.
    pub fn leaf_set(&self) -> Result<Vec<usize>, GraphError> {
        if !self.is_tree() {
            return Err(GraphError::NotATree);
        }
        let leaves = self.degree_one_vertices();
        if self.vertex_count() % 2 == 0 && self.max_degree() <= 2 && self.vertex_count() >= 2 {
            return Ok(vec![leaves[0]]);
        }
        Ok(leaves)
    }

    /// Deletes the given vertices, renumbering the rest in ascending order.
    /// Returns the new graph and the old-index-to-new-index map.
    pub fn delete_vertices(&self, remove: &[usize]) -> (Graph, Vec<Option<usize>>) {
        let n = self.vertex_count();
        let mut keep = vec![true; n];
        for &v in remove {
            keep[v] = false;
        }
        let mut remap = vec![None; n];
        let mut next = 0;
        for v in 0..n {
            if keep[v] {
                remap[v] = Some(next);
                next += 1;
            }
        }
        let mut adjacency = vec![Vec::new(); next];
        for v in 0..n {
            if let Some(nv) = remap[v] {
                for &w in &self.adjacency[v] {
                    if let Some(nw) = remap[w] {
                        adjacency[nv].push(nw);
                    }
                }
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        (Graph { adjacency }, remap)
    }

    /// Longest path of a tree as a vertex sequence (double BFS).
    pub fn tree_diameter_path(&self) -> Result<Vec<usize>, GraphError> {
        if !self.is_tree() {
            return Err(GraphError::NotATree);
        }
        if self.vertex_count() == 1 {
            return Ok(vec![0]);
        }
        let far = |s: usize| -> usize {
            let dist = self.bfs_distances(s);
            (0..self.vertex_count()).max_by_key(|&v| dist[v]).unwrap()
        };
        let a = far(0);
        let b = far(a);
        // walk back from b to a along decreasing distance
        let dist = self.bfs_distances(a);
        let mut path = vec![b];
        let mut cur = b;
        while cur != a {
            let prev = *self.adjacency[cur].iter().find(|&&w| dist[w] + 1 == dist[cur]).unwrap();
            path.push(prev);
            cur = prev;
        }
        path.reverse();
        Ok(path)
    }

    pub fn tree_diameter(&self) -> Result<usize, GraphError> {
        Ok(self.tree_diameter_path()?.len() - 1)
    }

    /// Center of a tree (one or two vertices) by iterative leaf removal.
    pub fn tree_center(&self) -> Result<Vec<usize>, GraphError> {
        if !self.is_tree() {
            return Err(GraphError::NotATree);
        }
        let n = self.vertex_count();
        if n <= 2 {
            return Ok((0..n).collect());
        }
        let mut degree: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut removed = vec![false; n];
        let mut frontier: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        let mut remaining = n;
        while remaining > 2 {
            let mut next = Vec::new();
            for &v in &frontier {
                removed[v] = true;
                remaining -= 1;
                for &w in &self.adjacency[v] {
                    if !removed[w] {
                        degree[w] -= 1;
                        if degree[w] == 1 {
                            next.push(w);
                        }
                    }
                }
            }
            frontier = next;
        }
        Ok((0..n).filter(|&v| !removed[v]).collect())
    }

    /// Attaches `count` new pendant leaves at each host vertex. New vertices
    /// are appended after the existing indices, grouped by host in ascending
    /// host order, so the output labeling is reproducible.
    pub fn attach_leaves(&self, counts: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let n = self.vertex_count();
        for &(host, _) in counts {
            if host >= n {
                return Err(GraphError::UnknownHost(host));
            }
        }
        let mut sorted: Vec<(usize, usize)> = counts.to_vec();
        sorted.sort_unstable();
        let mut adjacency = self.adjacency.clone();
        let mut next = n;
        for (host, count) in sorted {
            for _ in 0..count {
                adjacency.push(vec![host]);
                adjacency[host].push(next);
                next += 1;
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph { adjacency })
    }

    /// Replaces the edge uv by a length-two path u-w-v through a fresh vertex.
    pub fn subdivide_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let n = self.vertex_count();
        if u >= n {
            return Err(GraphError::VertexOutOfRange { vertex: u, order: n });
        }
        if v >= n {
            return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
        }
        if !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge(u, v));
        }
        let w = n;
        let mut adjacency = self.adjacency.clone();
        adjacency[u].retain(|&x| x != v);
        adjacency[v].retain(|&x| x != u);
        adjacency[u].push(w);
        adjacency[v].push(w);
        adjacency.push(vec![u, v]);
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph { adjacency })
    }

    /// True when removing the edge uv disconnects the component containing it.
    pub fn is_cut_edge(&self, u: usize, v: usize) -> bool {
        if !self.has_edge(u, v) {
            return false;
        }
        // BFS from u avoiding the edge uv; v unreachable => cut edge.
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        seen[u] = true;
        queue.push_back(u);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adjacency[x] {
                if (x == u && y == v) || (x == v && y == u) {
                    continue;
                }
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        !seen[v]
    }

    /// Splits vertex `v` into v' and v'' sharing the pivot neighbor: v' keeps
    /// `left` plus the pivot, v'' takes the remaining neighbors plus the
    /// pivot. v' reuses index `v`; v'' becomes the new last vertex.
    ///
    /// Requires deg(v) >= 3, a cut edge v-pivot, and 2 <= |left|+1 <= deg(v)-1.
    pub fn split_vertex(
        &self,
        v: usize,
        left: &[usize],
        pivot: usize,
    ) -> Result<Graph, GraphError> {
        let n = self.vertex_count();
        if v >= n {
            return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
        }
        let deg = self.degree(v);
        if deg < 3 {
            return Err(GraphError::InvalidSplit(format!("deg({v}) = {deg} < 3")));
        }
        if !self.has_edge(v, pivot) {
            return Err(GraphError::InvalidSplit(format!("pivot {pivot} is not a neighbor of {v}")));
        }
        if !self.is_cut_edge(v, pivot) {
            return Err(GraphError::InvalidSplit(format!("edge {v}-{pivot} is not a cut edge")));
        }
        let mut left_sorted = left.to_vec();
        left_sorted.sort_unstable();
        left_sorted.dedup();
        for &w in &left_sorted {
            if w == pivot || !self.has_edge(v, w) {
                return Err(GraphError::InvalidSplit(format!(
                    "{w} is not a neighbor of {v} distinct from the pivot"
                )));
            }
        }
        let s = left_sorted.len() + 1;
        if s < 2 || s > deg - 1 {
            return Err(GraphError::InvalidSplit(format!(
                "side size {s} out of range [2, {}]",
                deg - 1
            )));
        }
        let v2 = n;
        let mut adjacency = self.adjacency.clone();
        let right: Vec<usize> = self.adjacency[v]
            .iter()
            .copied()
            .filter(|w| *w != pivot && left_sorted.binary_search(w).is_err())
            .collect();
        adjacency[v] = left_sorted.clone();
        adjacency[v].push(pivot);
        let mut v2_adj = right.clone();
        v2_adj.push(pivot);
        adjacency.push(v2_adj);
        adjacency[pivot].push(v2);
        for &w in &right {
            adjacency[w].retain(|&x| x != v);
            adjacency[w].push(v2);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph { adjacency })
    }

    /// Edges lying on internal paths: both ends of the maximal degree-2 chain
    /// through the edge are branch vertices (degree >= 3).
    pub fn internal_path_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, v) in self.edges() {
            if self.extends_to_branch(u, v) && self.extends_to_branch(v, u) {
                out.push((u, v));
            }
        }
        out
    }

    // follows the degree-2 chain starting at `from` away from `toward`
    fn extends_to_branch(&self, from: usize, toward: usize) -> bool {
        let mut prev = toward;
        let mut cur = from;
        loop {
            if self.degree(cur) >= 3 {
                return true;
            }
            if self.degree(cur) == 1 {
                return false;
            }
            let next = *self.adjacency[cur].iter().find(|&&w| w != prev).unwrap();
            prev = cur;
            cur = next;
            if cur == from {
                // walked around a cycle
                return false;
            }
        }
    }

    /// JSON edge-list form `{"n": int, "edges": [[u,v],...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.vertex_count(),
            "edges": self.edges().map(|(u, v)| vec![u, v]).collect::<Vec<_>>(),
        })
    }
}
