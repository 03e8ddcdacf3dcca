//! AHU canonical form for trees: equal byte strings iff isomorphic.

use super::{Graph, GraphError};

/// Canonical encoding of a tree, rooted at its center. For a two-vertex
/// center the lexicographically smaller of the two rooted encodings is used.
pub fn canonical_form(t: &Graph) -> Result<Vec<u8>, GraphError> {
    if !t.is_tree() {
        return Err(GraphError::NotATree);
    }
    let centers = t.tree_center()?;
    let mut best: Option<Vec<u8>> = None;
    for &c in &centers {
        let enc = encode_rooted(t, c);
        if best.as_ref().is_none_or(|b| enc < *b) {
            best = Some(enc);
        }
    }
    Ok(best.unwrap())
}

/// Rooted AHU encoding: `(` sorted child encodings `)`.
pub fn encode_rooted(t: &Graph, root: usize) -> Vec<u8> {
    // iterative post-order to keep long paths off the call stack
    let n = t.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![root];
    parent[root] = root;
    while let Some(u) = stack.pop() {
        order.push(u);
        for &v in t.neighbors(u) {
            if parent[v] == usize::MAX {
                parent[v] = u;
                stack.push(v);
            }
        }
    }
    let mut enc: Vec<Option<Vec<u8>>> = vec![None; n];
    for &u in order.iter().rev() {
        let mut children: Vec<Vec<u8>> = t
            .neighbors(u)
            .iter()
            .filter(|&&v| v != u && parent[v] == u)
            .map(|&v| enc[v].take().unwrap())
            .collect();
        children.sort_unstable();
        let mut code = Vec::with_capacity(2 + children.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        for c in children {
            code.extend_from_slice(&c);
        }
        code.push(b')');
        enc[u] = Some(code);
    }
    enc[root].take().unwrap()
}

#[cfg(test)]
mod tests {
    use super::super::templates::*;
    use super::*;

    #[test]
    fn relabeling_invariance_on_paths() {
        let p5 = path_graph(5);
        let reversed = Graph::from_edge_list(5, &[(4, 3), (3, 2), (2, 1), (1, 0)]).unwrap();
        let shuffled = Graph::from_edge_list(5, &[(2, 0), (0, 4), (4, 1), (1, 3)]).unwrap();
        let c = canonical_form(&p5).unwrap();
        assert_eq!(c, canonical_form(&reversed).unwrap());
        assert_eq!(c, canonical_form(&shuffled).unwrap());
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        assert_ne!(
            canonical_form(&star_graph(4)).unwrap(),
            canonical_form(&path_graph(4)).unwrap()
        );
        assert_ne!(
            canonical_form(&spider_graph(&[2, 2, 1])).unwrap(),
            canonical_form(&spider_graph(&[2, 1, 1, 1])).unwrap()
        );
    }

    #[test]
    fn rejects_non_trees() {
        let c3 = Graph::from_edge_list(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(canonical_form(&c3), Err(GraphError::NotATree));
    }
}
