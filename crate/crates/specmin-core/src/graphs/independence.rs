//! Exact independence number: linear-time dynamic programming on trees,
//! branch and bound for general connected graphs up to a fixed cap.

use super::{Graph, GraphError, EXACT_INDEPENDENCE_CAP};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceResult {
    pub alpha: usize,
    /// For trees: a maximum independent set containing every leaf
    /// (every tree has one; for even-order paths "leaf" follows the
    /// single-end convention of [`Graph::leaf_set`]).
    pub leaf_witness: Option<Vec<usize>>,
}

pub fn independence_number(g: &Graph) -> Result<IndependenceResult, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::NotConnected);
    }
    let n = g.vertex_count();
    if g.is_tree() {
        let alpha = tree_alpha(g);
        let forced = g.leaf_set()?;
        let witness = tree_alpha_witness(g, &forced);
        let leaf_witness = match witness {
            Some((a, set)) if a == alpha => Some(set),
            _ => None,
        };
        return Ok(IndependenceResult { alpha, leaf_witness });
    }
    if n > EXACT_INDEPENDENCE_CAP {
        return Err(GraphError::IndependenceCapExceeded { order: n, cap: EXACT_INDEPENDENCE_CAP });
    }
    Ok(IndependenceResult { alpha: general_alpha(g), leaf_witness: None })
}

/// DP over a rooted orientation.
fn tree_alpha(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    let root = 0usize;
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![root];
    parent[root] = root;
    while let Some(u) = stack.pop() {
        order.push(u);
        for &v in g.neighbors(u) {
            if parent[v] == usize::MAX {
                parent[v] = u;
                stack.push(v);
            }
        }
    }
    let mut take = vec![1i64; n];
    let mut skip = vec![0i64; n];
    for &u in order.iter().rev() {
        if u != root {
            let p = parent[u];
            take[p] += skip[u];
            skip[p] += take[u].max(skip[u]);
        }
    }
    take[root].max(skip[root]).max(0) as usize
}

/// Maximum independent set containing all of `forced`, with one witness.
/// Returns None when no independent set contains all forced vertices.
fn tree_alpha_witness(g: &Graph, forced: &[usize]) -> Option<(usize, Vec<usize>)> {
    let n = g.vertex_count();
    let mut forced_in = vec![false; n];
    for &v in forced {
        forced_in[v] = true;
    }
    for &v in forced {
        for &w in g.neighbors(v) {
            if forced_in[w] {
                return None; // two forced vertices adjacent
            }
        }
    }
    let root = 0usize;
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![root];
    parent[root] = root;
    while let Some(u) = stack.pop() {
        order.push(u);
        for &v in g.neighbors(u) {
            if parent[v] == usize::MAX {
                parent[v] = u;
                stack.push(v);
            }
        }
    }
    // NEG acts as -infinity for the forbidden "out" state of a forced
    // vertex; sums are clamped so stacked sentinels cannot overflow
    const NEG: i64 = i64::MIN / 4;
    let mut take = vec![1i64; n];
    let mut skip = vec![0i64; n];
    for &u in order.iter().rev() {
        if forced_in[u] {
            skip[u] = NEG;
        }
        if u != root {
            let p = parent[u];
            take[p] = (take[p] + skip[u]).max(NEG);
            skip[p] = (skip[p] + take[u].max(skip[u])).max(NEG);
        }
    }
    let best = take[root].max(skip[root]);
    if best < 0 {
        return None;
    }
    // walk down reconstructing the choice at each vertex
    let mut chosen = vec![false; n];
    let mut state = vec![0u8; n]; // 1 = in, 2 = out
    state[root] = if take[root] >= skip[root] { 1 } else { 2 };
    for &u in order.iter() {
        if u != root && state[u] == 0 {
            let p = parent[u];
            state[u] = if state[p] == 1 {
                2
            } else if take[u] >= skip[u] {
                1
            } else {
                2
            };
        }
        if state[u] == 1 {
            chosen[u] = true;
        }
    }
    let set: Vec<usize> = (0..n).filter(|&v| chosen[v]).collect();
    debug_assert_eq!(set.len() as i64, best);
    Some((best as usize, set))
}

/// Branch and bound over neighbor bitmasks; fine for the sizes the oracle
/// touches (n <= 24).
fn general_alpha(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut masks = vec![0u32; n];
    for v in 0..n {
        for &w in g.neighbors(v) {
            masks[v] |= 1 << w;
        }
    }
    fn go(masks: &[u32], candidates: u32, current: usize, best: &mut usize) {
        if current + candidates.count_ones() as usize <= *best {
            return;
        }
        if candidates == 0 {
            *best = (*best).max(current);
            return;
        }
        // branch on a highest-degree candidate to shrink the residual graph fast
        let mut pick = candidates.trailing_zeros() as usize;
        let mut pick_deg = 0;
        let mut rest = candidates;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = (masks[v] & candidates).count_ones();
            if d > pick_deg {
                pick_deg = d;
                pick = v;
            }
        }
        // either exclude pick...
        go(masks, candidates & !(1 << pick), current, best);
        // ...or include it
        go(masks, candidates & !(1 << pick) & !masks[pick], current + 1, best);
    }
    let mut best = 0;
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    go(&masks, all, 0, &mut best);
    best
}

#[cfg(test)]
mod tests {
    use super::super::templates::*;
    use super::*;

    #[test]
    fn paths_and_stars() {
        assert_eq!(independence_number(&path_graph(5)).unwrap().alpha, 3);
        assert_eq!(independence_number(&star_graph(8)).unwrap().alpha, 7);
        assert_eq!(independence_number(&path_graph(2)).unwrap().alpha, 1);
        assert_eq!(independence_number(&Graph::from_edge_list(1, &[]).unwrap()).unwrap().alpha, 1);
    }

    #[test]
    fn d_graph_value() {
        let d10 = d_graph(10);
        assert_eq!(independence_number(&d10).unwrap().alpha, 6);
    }

    #[test]
    fn witness_contains_all_leaves() {
        for g in [path_graph(7), path_graph(8), star_graph(6), spider_graph(&[2, 2, 3])] {
            let res = independence_number(&g).unwrap();
            let witness = res.leaf_witness.expect("trees always have a leaf witness");
            assert_eq!(witness.len(), res.alpha);
            for leaf in g.leaf_set().unwrap() {
                assert!(witness.contains(&leaf));
            }
            // independence of the witness
            for &u in &witness {
                for &v in &witness {
                    assert!(u == v || !g.has_edge(u, v));
                }
            }
        }
    }

    #[test]
    fn general_graphs_small() {
        let c5 = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(independence_number(&c5).unwrap().alpha, 2);
        let mut edges = Vec::new();
        for i in 0..6 {
            for j in (i + 1)..6 {
                edges.push((i, j));
            }
        }
        let k6 = Graph::from_edge_list(6, &edges).unwrap();
        assert_eq!(independence_number(&k6).unwrap().alpha, 1);
    }

    #[test]
    fn rejects_disconnected_and_oversized() {
        let two = Graph::from_edge_list(2, &[]).unwrap();
        assert_eq!(independence_number(&two), Err(GraphError::NotConnected));
        let mut edges: Vec<(usize, usize)> = (0..25).map(|i| (i, (i + 1) % 26)).collect();
        edges.push((25, 0));
        let c26 = Graph::from_edge_list(26, &edges).unwrap();
        assert!(matches!(
            independence_number(&c26),
            Err(GraphError::IndependenceCapExceeded { .. })
        ));
    }
}
