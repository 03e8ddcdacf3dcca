//! Independent ground truth: exhaustive minimizer search over all trees
//! (or all small connected graphs) with a given order and independence
//! number, plus structural audits of every minimizer found.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::graphs::{
    canonical_form, decode_graph6, encode_graph6, independence_number, Graph, GraphError,
    ParityTree,
};
use crate::spectral::{
    compare_radii, power_iteration, spectral_radius, RadiusCertificate, RadiusOrdering,
    SpectralError, DEFAULT_ITERATION_CAP,
};

mod audit;
mod connected;
mod free_trees;

pub use audit::{audit_structural_propositions, audit_tree, AuditFailure, AuditReport};
pub use connected::{
    connected_graph_keys, enumerate_connected_graphs, key_to_graph, SmallGraph, MAX_CONNECTED_N,
};
pub use free_trees::{
    enumerate_free_trees, enumerate_free_trees_by_extension, level_sequence_to_tree,
    RootedLevelSequences, MAX_TREE_N,
};

/// Floating gap that forces re-verification before declaring a minimum.
pub const NEAR_TIE_GAP: f64 = 1e-8;
/// Numeric comparison tolerance for non-tree candidates.
pub const NUMERIC_TOL: f64 = 1e-10;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("free-tree enumeration capped at n <= {cap}, got {got}")]
    TreeCapExceeded { got: usize, cap: usize },
    #[error("connected enumeration capped at n <= {cap}, got {got}")]
    ConnectedCapExceeded { got: usize, cap: usize },
    #[error("no graph of order {n} has independence number {alpha} in this space")]
    EmptyClass { n: usize, alpha: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SearchSpace {
    Trees,
    Connected,
}

#[derive(Clone, Debug)]
pub struct OracleMinimizer {
    pub graph6: String,
    pub certificate: RadiusCertificate,
}

#[derive(Clone, Debug)]
pub struct OracleResult {
    pub n: usize,
    pub alpha: usize,
    pub space: SearchSpace,
    /// All graphs attaining the minimum radius, canonical order.
    pub minimizers: Vec<OracleMinimizer>,
    /// Graphs enumerated in the space (before the alpha filter).
    pub search_space_size: usize,
    /// Near-ties that required re-verification at tightened tolerance.
    pub escalations: usize,
    pub audits: Option<AuditReport>,
}

impl OracleResult {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "alpha": self.alpha,
            "space": self.space,
            "search_space_size": self.search_space_size,
            "escalations": self.escalations,
            "minimizers": self.minimizers.iter().map(|m| serde_json::json!({
                "graph6": m.graph6,
                "rho": m.certificate.approx,
                "certificate": m.certificate.to_json(),
            })).collect::<Vec<_>>(),
            "audits": self.audits.as_ref().map(|a| a.to_json()),
        })
    }

    /// Canonical forms of the minimizers (trees only), sorted.
    pub fn canonical_set(&self) -> Result<Vec<Vec<u8>>, OracleError> {
        let mut out = Vec::new();
        for m in &self.minimizers {
            let g = decode_graph6(&m.graph6)?;
            out.push(canonical_form(&g)?);
        }
        out.sort();
        Ok(out)
    }
}

/// Exhaustive minimizer search at (n, alpha).
pub fn brute_force_minimizer(
    n: usize,
    alpha: usize,
    space: SearchSpace,
) -> Result<OracleResult, OracleError> {
    match space {
        SearchSpace::Trees => tree_space_minimizer(n, alpha),
        SearchSpace::Connected => connected_space_minimizer(n, alpha),
    }
}

/// Tree space: every candidate gets an exact certificate and the minimum is
/// taken under the exact algebraic order.
fn tree_space_minimizer(n: usize, alpha: usize) -> Result<OracleResult, OracleError> {
    let mut space_size = 0usize;
    let mut best: Vec<(Graph, RadiusCertificate)> = Vec::new();
    for tree in enumerate_free_trees(n)? {
        space_size += 1;
        if independence_number(&tree)?.alpha != alpha {
            continue;
        }
        let cert = spectral_radius(&tree, crate::spectral::DEFAULT_TOL)?;
        match best.first() {
            None => best.push((tree, cert)),
            Some((_, incumbent)) => match compare_radii(&cert, incumbent)? {
                RadiusOrdering::Less => {
                    best.clear();
                    best.push((tree, cert));
                }
                RadiusOrdering::Equal => best.push((tree, cert)),
                RadiusOrdering::Greater => {}
            },
        }
    }
    if best.is_empty() {
        return Err(OracleError::EmptyClass { n, alpha });
    }
    best.sort_by_key(|(g, _)| canonical_form(g).unwrap());
    Ok(OracleResult {
        n,
        alpha,
        space: SearchSpace::Trees,
        minimizers: best
            .into_iter()
            .map(|(g, certificate)| OracleMinimizer { graph6: encode_graph6(&g).0, certificate })
            .collect(),
        search_space_size: space_size,
        escalations: 0,
        audits: None,
    })
}

/// Connected space: numeric screening at 1e-10 with mandatory escalation of
/// near-ties; tree candidates are promoted to exact certificates.
fn connected_space_minimizer(n: usize, alpha: usize) -> Result<OracleResult, OracleError> {
    let mut by_alpha = connected_minimizers_by_alpha(n)?;
    by_alpha.remove(&alpha).ok_or(OracleError::EmptyClass { n, alpha })
}

/// One enumeration pass over all connected graphs of order n, resolved into
/// per-alpha minimizer results.
pub fn connected_minimizers_by_alpha(
    n: usize,
) -> Result<BTreeMap<usize, OracleResult>, OracleError> {
    let mut space_size = 0usize;
    let mut pools: BTreeMap<usize, (f64, Vec<(Graph, f64)>)> = BTreeMap::new();
    for graph in enumerate_connected_graphs(n)? {
        space_size += 1;
        let alpha = independence_number(&graph)?.alpha;
        let value = power_iteration(&graph, 1e-12, DEFAULT_ITERATION_CAP)?.value;
        let pool = pools.entry(alpha).or_insert((f64::INFINITY, Vec::new()));
        if value < pool.0 {
            pool.0 = value;
            // keep the pool flat: drop candidates that fell out of range
            pool.1.retain(|(_, v)| *v <= value + NEAR_TIE_GAP);
        }
        if value <= pool.0 + NEAR_TIE_GAP {
            pool.1.push((graph, value));
        }
    }
    let mut out = BTreeMap::new();
    for (alpha, (min_value, mut candidates)) in pools {
        candidates.retain(|(_, v)| *v <= min_value + NEAR_TIE_GAP);
        // escalate everything close to the minimum: tighter iteration
        // target, exact certificates for trees
        let mut escalations = 0usize;
        let mut refined: Vec<(Graph, RadiusCertificate)> = Vec::new();
        for (graph, value) in candidates {
            if (value - min_value).abs() > NUMERIC_TOL {
                escalations += 1;
            }
            let cert = spectral_radius(&graph, 1e-13)?;
            refined.push((graph, cert));
        }
        // exact order among trees; numeric order against non-trees
        let mut best: Vec<(Graph, RadiusCertificate)> = Vec::new();
        for (graph, cert) in refined {
            match best.first() {
                None => best.push((graph, cert)),
                Some((_, incumbent)) => {
                    let ordering = if cert.exact && incumbent.exact {
                        compare_radii(&cert, incumbent)?
                    } else if cert.approx < incumbent.approx - NUMERIC_TOL {
                        RadiusOrdering::Less
                    } else if cert.approx > incumbent.approx + NUMERIC_TOL {
                        RadiusOrdering::Greater
                    } else {
                        RadiusOrdering::Equal
                    };
                    match ordering {
                        RadiusOrdering::Less => {
                            best.clear();
                            best.push((graph, cert));
                        }
                        RadiusOrdering::Equal => best.push((graph, cert)),
                        RadiusOrdering::Greater => {}
                    }
                }
            }
        }
        best.sort_by_key(|(g, _)| encode_graph6(g).0);
        out.insert(
            alpha,
            OracleResult {
                n,
                alpha,
                space: SearchSpace::Connected,
                minimizers: best
                    .into_iter()
                    .map(|(g, certificate)| OracleMinimizer {
                        graph6: encode_graph6(&g).0,
                        certificate,
                    })
                    .collect(),
                search_space_size: space_size,
                escalations,
                audits: None,
            },
        );
    }
    Ok(out)
}

/// Tree-space minimizers for every alpha class at once; one enumeration
/// pass, exact minima per class.
pub fn tree_minimizers_by_alpha(
    n: usize,
) -> Result<BTreeMap<usize, Vec<(Graph, RadiusCertificate)>>, OracleError> {
    let mut classes: BTreeMap<usize, Vec<(Graph, RadiusCertificate)>> = BTreeMap::new();
    for tree in enumerate_free_trees(n)? {
        let alpha = independence_number(&tree)?.alpha;
        let cert = spectral_radius(&tree, crate::spectral::DEFAULT_TOL)?;
        let entry = classes.entry(alpha).or_default();
        match entry.first() {
            None => entry.push((tree, cert)),
            Some((_, incumbent)) => match compare_radii(&cert, incumbent)? {
                RadiusOrdering::Less => {
                    entry.clear();
                    entry.push((tree, cert));
                }
                RadiusOrdering::Equal => entry.push((tree, cert)),
                RadiusOrdering::Greater => {}
            },
        }
    }
    for entry in classes.values_mut() {
        entry.sort_by_key(|(g, _)| canonical_form(g).unwrap());
    }
    Ok(classes)
}

/// Builds the parity view of a claimed minimizer tree: strips the leaf set,
/// 2-colors the rest, and requires all stripped-tree leaves on one side
/// (that side is the even class). Errors describe the structural failure.
pub fn parity_view(tree: &Graph) -> Result<ParityTree, String> {
    if !tree.is_tree() {
        return Err("not a tree".into());
    }
    let leaves = tree.leaf_set().map_err(|e| e.to_string())?;
    let (reduced, remap) = tree.delete_vertices(&leaves);
    if reduced.vertex_count() == 0 {
        return Err("leaf stripping removed everything".into());
    }
    let back: Vec<usize> = {
        let mut b = vec![usize::MAX; reduced.vertex_count()];
        for (old, new) in remap.iter().enumerate() {
            if let Some(new) = new {
                b[*new] = old;
            }
        }
        b
    };
    let (odd, even) = if reduced.vertex_count() == 1 {
        (Vec::new(), vec![back[0]])
    } else {
        let side = reduced.bipartition().map_err(|e| e.to_string())?;
        let reduced_leaves = reduced.degree_one_vertices();
        let leaf_sides: Vec<bool> = reduced_leaves.iter().map(|&v| side[v]).collect();
        if leaf_sides.iter().any(|&s| s) && leaf_sides.iter().any(|&s| !s) {
            return Err("stripped-tree leaves fall on both sides of the bipartition".into());
        }
        let even_side = leaf_sides[0];
        let mut odd = Vec::new();
        let mut even = Vec::new();
        for v in 0..reduced.vertex_count() {
            if side[v] == even_side {
                even.push(back[v]);
            } else {
                odd.push(back[v]);
            }
        }
        (odd, even)
    };
    ParityTree::new(tree.clone(), leaves, odd, even).map_err(|e| e.to_string())
}
