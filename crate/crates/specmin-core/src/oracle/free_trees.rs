//! Exhaustive generation of unlabeled free trees, two ways.
//!
//! The primary generator walks canonical level sequences of rooted trees
//! with a constant-amortized-time successor step and filters to one rooted
//! representative per free tree through the canonical form. The fallback
//! generator grows trees by leaf extension with canonical dedup. Both are
//! cross-checked against each other in the tests.

use std::collections::HashSet;

use crate::graphs::{canonical_form, Graph, GraphError};

use super::OracleError;

/// Free-tree enumeration cap: rooted-tree counts grow ~2.96^n.
pub const MAX_TREE_N: usize = 18;

/// Level sequences of rooted trees on n vertices in reverse lexicographic
/// order, starting from the path [1, 2, ..., n] and ending at the star
/// [1, 2, 2, ..., 2].
pub struct RootedLevelSequences {
    levels: Vec<usize>,
    started: bool,
    done: bool,
}

impl RootedLevelSequences {
    pub fn new(n: usize) -> Self {
        RootedLevelSequences { levels: (1..=n).collect(), started: false, done: n == 0 }
    }
}

impl Iterator for RootedLevelSequences {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.levels.clone());
        }
        // successor: drop the last entry above 2 to its parent pattern and
        // tile the remainder with the block ending just before it
        let n = self.levels.len();
        let Some(p) = self.levels.iter().rposition(|&l| l > 2) else {
            self.done = true;
            return None;
        };
        let q = self.levels[..p].iter().rposition(|&l| l == self.levels[p] - 1).unwrap();
        let block_len = p - q;
        for i in p..n {
            self.levels[i] = self.levels[i - block_len];
        }
        Some(self.levels.clone())
    }
}

/// Parent links from a level sequence: each vertex hangs on the most recent
/// vertex one level up.
pub fn level_sequence_to_tree(levels: &[usize]) -> Graph {
    let n = levels.len();
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let parent = (0..i).rfind(|&j| levels[j] + 1 == levels[i]).expect("valid level sequence");
        edges.push((parent, i));
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Streams each unlabeled tree on n vertices exactly once (successor
/// generation over rooted trees, free-canonical dedup).
pub fn enumerate_free_trees(n: usize) -> Result<FreeTreeIter, OracleError> {
    if n == 0 || n > MAX_TREE_N {
        return Err(OracleError::TreeCapExceeded { got: n, cap: MAX_TREE_N });
    }
    Ok(FreeTreeIter { inner: RootedLevelSequences::new(n), seen: HashSet::new() })
}

pub struct FreeTreeIter {
    inner: RootedLevelSequences,
    seen: HashSet<Vec<u8>>,
}

impl Iterator for FreeTreeIter {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        for levels in self.inner.by_ref() {
            let tree = level_sequence_to_tree(&levels);
            let canon = canonical_form(&tree).unwrap();
            if self.seen.insert(canon) {
                return Some(tree);
            }
        }
        None
    }
}

/// Independent cross-check generator: every tree on n vertices arises from a
/// tree on n-1 vertices by attaching one leaf; dedup by canonical form.
pub fn enumerate_free_trees_by_extension(n: usize) -> Result<Vec<Graph>, OracleError> {
    if n == 0 || n > MAX_TREE_N {
        return Err(OracleError::TreeCapExceeded { got: n, cap: MAX_TREE_N });
    }
    let mut current: Vec<Graph> = vec![Graph::from_edge_list(1, &[]).map_err(GraphError::from)?];
    for _ in 1..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for tree in &current {
            for host in 0..tree.vertex_count() {
                let extended = tree.attach_leaves(&[(host, 1)]).unwrap();
                let canon = canonical_form(&extended).unwrap();
                if seen.insert(canon) {
                    next.push(extended);
                }
            }
        }
        current = next;
    }
    Ok(current)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    // unlabeled tree counts
    const TREE_COUNTS: [usize; 14] = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159];

    #[test]
    fn successor_enumerates_rooted_trees() {
        // rooted tree counts 1, 1, 2, 4, 9, 20, 48, 115
        let rooted = [1usize, 1, 2, 4, 9, 20, 48, 115];
        for (i, want) in rooted.iter().enumerate() {
            assert_eq!(RootedLevelSequences::new(i + 1).count(), *want, "n = {}", i + 1);
        }
    }

    #[test]
    fn free_tree_counts() {
        for n in 1..=11 {
            let got = enumerate_free_trees(n).unwrap().count();
            assert_eq!(got, TREE_COUNTS[n - 1], "n = {n}");
        }
    }

    #[test]
    fn generators_agree_on_the_tree_set() {
        for n in 1..=10 {
            let a: BTreeSet<Vec<u8>> = enumerate_free_trees(n)
                .unwrap()
                .map(|t| canonical_form(&t).unwrap())
                .collect();
            let b: BTreeSet<Vec<u8>> = enumerate_free_trees_by_extension(n)
                .unwrap()
                .iter()
                .map(|t| canonical_form(t).unwrap())
                .collect();
            assert_eq!(a, b, "n = {n}");
            assert_eq!(a.len(), TREE_COUNTS[n - 1]);
        }
    }

    #[test]
    fn caps_are_enforced() {
        assert!(enumerate_free_trees(0).is_err());
        assert!(enumerate_free_trees(MAX_TREE_N + 1).is_err());
        assert!(enumerate_free_trees_by_extension(MAX_TREE_N + 1).is_err());
    }

    #[test]
    fn level_sequence_shapes() {
        let path = level_sequence_to_tree(&[1, 2, 3, 4]);
        assert_eq!(path.tree_diameter().unwrap(), 3);
        let star = level_sequence_to_tree(&[1, 2, 2, 2]);
        assert_eq!(star.max_degree(), 3);
    }
}
