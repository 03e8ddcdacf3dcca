//! Randomized round-trip and invariance properties.

use proptest::prelude::*;

use specmin_core::graphs::{canonical_form, decode_graph6, encode_graph6, Graph};

fn arbitrary_graph() -> impl Strategy<Value = Graph> {
    (1usize..40).prop_flat_map(|n| {
        let pairs = proptest::collection::vec((0..n, 0..n), 0..80);
        pairs.prop_map(move |raw| {
            let edges: Vec<(usize, usize)> =
                raw.into_iter().filter(|(u, v)| u != v).collect();
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

fn arbitrary_tree() -> impl Strategy<Value = Graph> {
    // every vertex i >= 1 picks a parent below it
    (1usize..30).prop_flat_map(|n| {
        proptest::collection::vec(proptest::num::u64::ANY, n.saturating_sub(1)).prop_map(
            move |picks| {
                let edges: Vec<(usize, usize)> = picks
                    .iter()
                    .enumerate()
                    .map(|(i, &p)| (i + 1, (p % (i as u64 + 1)) as usize))
                    .collect();
                Graph::from_edge_list(n, &edges).unwrap()
            },
        )
    })
}

proptest! {
    #[test]
    fn graph6_round_trips(g in arbitrary_graph()) {
        let text = encode_graph6(&g);
        let decoded = decode_graph6(&text.0).unwrap();
        prop_assert_eq!(decoded.vertex_count(), g.vertex_count());
        let mut original: Vec<(usize, usize)> = g.edges().collect();
        let mut round: Vec<(usize, usize)> = decoded.edges().collect();
        original.sort_unstable();
        round.sort_unstable();
        prop_assert_eq!(original, round);
        // re-encoding canonical text is the identity
        prop_assert_eq!(encode_graph6(&decoded).0, text.0);
    }

    #[test]
    fn canonical_form_is_permutation_invariant(t in arbitrary_tree(), seed in proptest::num::u64::ANY) {
        let n = t.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        let edges: Vec<(usize, usize)> = t.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        let relabeled = Graph::from_edge_list(n, &edges).unwrap();
        prop_assert_eq!(canonical_form(&relabeled).unwrap(), canonical_form(&t).unwrap());
    }

    #[test]
    fn attach_then_strip_is_identity(t in arbitrary_tree(), counts in proptest::collection::vec(0usize..4, 0..8)) {
        let n = t.vertex_count();
        let hosts: Vec<(usize, usize)> = counts
            .iter()
            .enumerate()
            .filter(|(i, _)| *i < n)
            .map(|(i, &c)| (i, c))
            .collect();
        let total: usize = hosts.iter().map(|(_, c)| *c).sum();
        let extended = t.attach_leaves(&hosts).unwrap();
        prop_assert_eq!(extended.vertex_count(), n + total);
        let added: Vec<usize> = (n..n + total).collect();
        let (stripped, _) = extended.delete_vertices(&added);
        prop_assert_eq!(stripped, t);
    }
}
