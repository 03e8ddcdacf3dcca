//! Exhaustive generation of connected graphs up to isomorphism for small
//! orders, by vertex augmentation with canonical dedup. Canonical labeling
//! maximizes the packed upper-triangle bit string over all labelings, with
//! twin skipping and prefix pruning to keep the search shallow.

use std::collections::HashSet;

use crate::graphs::Graph;

use super::OracleError;

/// Connected-graph enumeration cap (261080 graphs at n = 9).
pub const MAX_CONNECTED_N: usize = 9;

/// Adjacency bitmask form for graphs of order <= 9.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    pub n: usize,
    pub adj: [u16; MAX_CONNECTED_N],
    by_degree: [usize; MAX_CONNECTED_N],
}

impl SmallGraph {
    pub fn from_adj(n: usize, adj: [u16; MAX_CONNECTED_N]) -> Self {
        let mut by_degree = [0usize; MAX_CONNECTED_N];
        for (i, slot) in by_degree.iter_mut().enumerate() {
            *slot = i;
        }
        by_degree[..n].sort_by_key(|&v| std::cmp::Reverse(adj[v].count_ones()));
        SmallGraph { n, adj, by_degree }
    }

    pub fn from_graph(g: &Graph) -> Self {
        assert!(g.vertex_count() <= MAX_CONNECTED_N);
        let mut adj = [0u16; MAX_CONNECTED_N];
        for (u, v) in g.edges() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        SmallGraph::from_adj(g.vertex_count(), adj)
    }

    /// Decodes a packed canonical key directly.
    pub fn from_key(n: usize, key: u64) -> Self {
        let total = n * (n - 1) / 2;
        let mut adj = [0u16; MAX_CONNECTED_N];
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if key & (1u64 << (total - 1 - bit)) != 0 {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
                bit += 1;
            }
        }
        SmallGraph::from_adj(n, adj)
    }

    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.adj[u] & (1 << v) != 0 {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edge_list(self.n, &edges).unwrap()
    }

    /// Child graph: one new vertex adjacent to the neighbor set `mask`.
    pub fn extend(&self, mask: u16) -> SmallGraph {
        let mut adj = self.adj;
        let v = self.n;
        adj[v] = mask;
        let mut bits = mask;
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            adj[u] |= 1 << v;
        }
        SmallGraph::from_adj(self.n + 1, adj)
    }

    fn total_bits(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    /// Canonical key: maximum packed bit string over all vertex labelings.
    /// Bit b of the column-order triangle sits at shift total-1-b, so the
    /// integer order equals the lexicographic order of the bit strings and
    /// prefix pruning against the incumbent is sound.
    pub fn canonical_key(&self) -> u64 {
        let n = self.n;
        if n <= 1 {
            return 0;
        }
        let mut best = 0u64;
        let mut perm = Vec::with_capacity(n);
        let mut used = 0u16;
        self.search(&mut perm, &mut used, 0u64, 0usize, &mut best);
        best
    }

    fn search(&self, perm: &mut Vec<usize>, used: &mut u16, prefix: u64, bits: usize, best: &mut u64) {
        let n = self.n;
        let total = self.total_bits();
        let depth = perm.len();
        if depth == n {
            if prefix > *best {
                *best = prefix;
            }
            return;
        }
        // the column written at this depth is the most significant unfilled
        // chunk, so only candidates with the maximal column value can extend
        // the prefix to the lexicographic maximum
        let mut column = [0u32; MAX_CONNECTED_N];
        let mut max_column = 0u32;
        for v in 0..n {
            if *used & (1 << v) != 0 {
                continue;
            }
            let mut col = 0u32;
            for (slot, &p) in perm.iter().enumerate() {
                if self.adj[p] & (1 << v) != 0 {
                    col |= 1 << (depth - 1 - slot);
                }
            }
            column[v] = col;
            max_column = max_column.max(col);
        }
        let new_bits = bits + depth;
        let new_prefix = prefix | ((max_column as u64) << (total - new_bits));
        // prune when even the maximal column loses to the incumbent prefix
        let high_mask = ((1u64 << new_bits) - 1) << (total - new_bits);
        if new_prefix < *best & high_mask {
            return;
        }
        let mut tried = [0usize; MAX_CONNECTED_N];
        let mut tried_len = 0usize;
        // order candidates by degree so a strong incumbent forms early
        for &v in &self.by_degree[..n] {
            if *used & (1 << v) != 0 || column[v] != max_column {
                continue;
            }
            // skip twins of an already-tried candidate: swapping them is an
            // automorphism, the subtree outcome is identical
            let vm = !(1u16 << v);
            if tried[..tried_len].iter().any(|&u| {
                let keep = vm & !(1u16 << u);
                (self.adj[u] & keep) == (self.adj[v] & keep)
            }) {
                continue;
            }
            tried[tried_len] = v;
            tried_len += 1;
            perm.push(v);
            *used |= 1 << v;
            self.search(perm, used, new_prefix, new_bits, best);
            perm.pop();
            *used &= !(1 << v);
        }
    }
}

/// Rebuilds the graph a canonical key encodes.
pub fn key_to_graph(n: usize, key: u64) -> Graph {
    let total = n * (n - 1) / 2;
    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if key & (1u64 << (total - 1 - bit)) != 0 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// All connected graphs on n vertices up to isomorphism, as canonical keys
/// in ascending order. Augmentation: every connected graph has a vertex
/// whose removal keeps it connected, so extending all (n-1)-vertex graphs
/// by one vertex joined to every nonempty subset reaches everything.
pub fn connected_graph_keys(n: usize) -> Result<Vec<u64>, OracleError> {
    if n == 0 || n > MAX_CONNECTED_N {
        return Err(OracleError::ConnectedCapExceeded { got: n, cap: MAX_CONNECTED_N });
    }
    use rayon::prelude::*;
    let mut level: Vec<u64> = vec![0];
    for m in 2..=n {
        let mut next: Vec<u64> = level
            .par_iter()
            .fold(HashSet::new, |mut seen: HashSet<u64>, &key| {
                let parent = SmallGraph::from_key(m - 1, key);
                for mask in 1..(1u16 << (m - 1)) {
                    let child = parent.extend(mask);
                    seen.insert(child.canonical_key());
                }
                seen
            })
            .reduce(HashSet::new, |mut a, b| {
                a.extend(b);
                a
            })
            .into_iter()
            .collect();
        next.sort_unstable();
        level = next;
    }
    Ok(level)
}

/// Stream of connected graphs on n vertices up to isomorphism.
pub fn enumerate_connected_graphs(
    n: usize,
) -> Result<impl Iterator<Item = Graph>, OracleError> {
    let keys = connected_graph_keys(n)?;
    Ok(keys.into_iter().map(move |k| key_to_graph(n, k)))
}
