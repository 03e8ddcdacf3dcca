//! Trees with a parity structure: pendant leaves, odd (degree-2) vertices
//! and even vertices partitioning the rest. This is the shape minimizer
//! candidates take: a bipartite main tree whose even side hosts all leaves.

use super::{Graph, GraphError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityTree {
    pub graph: Graph,
    /// Pendant leaves of the full tree (empty for a bare main tree).
    pub leaves: Vec<usize>,
    /// Odd class: every member must have degree exactly 2.
    pub odd: Vec<usize>,
    /// Even class: hosts the leaves, contains the main tree's own leaves.
    pub even: Vec<usize>,
}

impl ParityTree {
    pub fn new(
        graph: Graph,
        mut leaves: Vec<usize>,
        mut odd: Vec<usize>,
        mut even: Vec<usize>,
    ) -> Result<Self, GraphError> {
        if !graph.is_tree() {
            return Err(GraphError::NotATree);
        }
        leaves.sort_unstable();
        odd.sort_unstable();
        even.sort_unstable();
        let n = graph.vertex_count();
        let mut class = vec![0u8; n];
        for &v in &leaves {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
            }
            class[v] += 1;
        }
        for &v in &odd {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
            }
            class[v] += 1;
        }
        for &v in &even {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
            }
            class[v] += 1;
        }
        if class.iter().any(|&c| c != 1) {
            return Err(GraphError::InvalidSplit(
                "leaves, odd and even sets must partition the vertex set".into(),
            ));
        }
        Ok(ParityTree { graph, leaves, odd, even })
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// Checks the parity-structure invariants: odd vertices have degree 2,
    /// odd and even classes are independent, every leaf hangs on the even
    /// class.
    pub fn check_invariants(&self) -> Result<(), String> {
        for &v in &self.odd {
            if self.graph.degree(v) != 2 {
                return Err(format!("odd vertex {v} has degree {}", self.graph.degree(v)));
            }
        }
        let is_even = |v: usize| self.even.binary_search(&v).is_ok();
        let is_odd = |v: usize| self.odd.binary_search(&v).is_ok();
        for &v in &self.odd {
            for &w in self.graph.neighbors(v) {
                if is_odd(w) {
                    return Err(format!("odd vertices {v} and {w} are adjacent"));
                }
            }
        }
        for &v in &self.even {
            for &w in self.graph.neighbors(v) {
                if is_even(w) {
                    return Err(format!("even vertices {v} and {w} are adjacent"));
                }
            }
        }
        for &v in &self.leaves {
            if self.graph.degree(v) != 1 {
                return Err(format!("marked leaf {v} has degree {}", self.graph.degree(v)));
            }
            let host = self.graph.neighbors(v)[0];
            if !is_even(host) {
                return Err(format!("leaf {v} hangs on non-even vertex {host}"));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p5_as_bare_main_tree() {
        let p5 = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let t = ParityTree::new(p5, vec![], vec![1, 3], vec![0, 2, 4]).unwrap();
        assert!(t.check_invariants().is_ok());
    }

    #[test]
    fn rejects_bad_partition() {
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(ParityTree::new(p3.clone(), vec![], vec![1], vec![0]).is_err());
        assert!(ParityTree::new(p3, vec![0], vec![0, 1], vec![2]).is_err());
    }

    #[test]
    fn invariant_violations_reported() {
        // odd vertex of degree 1
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        let t = ParityTree::new(p3, vec![], vec![0, 2], vec![1]).unwrap();
        assert!(t.check_invariants().is_err());
    }
}
