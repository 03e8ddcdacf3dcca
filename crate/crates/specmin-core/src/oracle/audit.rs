//! Structural audits: every minimizer the oracle finds must exhibit the
//! parity structure (even-side leaf hosts, degree-2 odd vertices, the
//! class-size and leaf-count identities, the diameter cases).

use std::collections::BTreeMap;

use crate::graphs::{decode_graph6, Graph};
use crate::main_trees::validate_structure;

use super::{parity_view, OracleError, OracleResult};

#[derive(Clone, Debug)]
pub struct AuditFailure {
    pub graph6: String,
    pub check: String,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct AuditReport {
    pub checked: usize,
    pub pass_counts: BTreeMap<String, usize>,
    pub failures: Vec<AuditFailure>,
}

impl AuditReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "checked": self.checked,
            "pass_counts": self.pass_counts,
            "failures": self.failures.iter().map(|f| serde_json::json!({
                "graph6": f.graph6,
                "check": f.check,
                "detail": f.detail,
            })).collect::<Vec<_>>(),
        })
    }

    fn record(&mut self, graph6: &str, check: &str, passed: bool, detail: String) {
        if passed {
            *self.pass_counts.entry(check.to_string()).or_insert(0) += 1;
        } else {
            self.failures.push(AuditFailure {
                graph6: graph6.to_string(),
                check: check.to_string(),
                detail,
            });
        }
    }
}

/// Audits every minimizer in an oracle result (tree space, alpha at least
/// half the order).
pub fn audit_structural_propositions(result: &OracleResult) -> Result<AuditReport, OracleError> {
    let mut report = AuditReport::default();
    for minimizer in &result.minimizers {
        let tree = decode_graph6(&minimizer.graph6)?;
        audit_tree(&tree, result.n, result.alpha, &minimizer.graph6, &mut report);
    }
    Ok(report)
}

/// Runs all structural checks on one claimed minimizer.
pub fn audit_tree(tree: &Graph, n: usize, alpha: usize, graph6: &str, report: &mut AuditReport) {
    report.checked += 1;
    let is_tree = tree.is_tree();
    report.record(graph6, "tree", is_tree, "minimizer must be a tree".into());
    if !is_tree {
        return;
    }
    debug_assert_eq!(tree.vertex_count(), n);

    // diameter by alpha class; an n-vertex path is the one odd-diameter case
    let diam = tree.tree_diameter().unwrap();
    let half = n.div_ceil(2);
    let is_path = tree.max_degree() <= 2;
    let (expect, ok) = if alpha == half {
        (format!("n-1 = {}", n - 1), diam == n - 1)
    } else if alpha == n - 1 {
        ("2".into(), diam == 2)
    } else if alpha == n - 2 {
        ("4".into(), diam == 4)
    } else {
        (
            format!("even, 6..{}", 2 * (n - alpha)),
            diam % 2 == 0 && (6..=2 * (n - alpha)).contains(&diam),
        )
    };
    report.record(
        graph6,
        "diameter_alpha_case",
        ok,
        format!("diam = {diam}, alpha = {alpha}, expected {expect}"),
    );
    report.record(
        graph6,
        "diameter_bound",
        diam <= 2 * (n - alpha),
        format!("diam = {diam} > 2(n - alpha) = {}", 2 * (n - alpha)),
    );
    report.record(
        graph6,
        "diameter_parity",
        diam % 2 == 0 || is_path,
        format!("odd diameter {diam} on a non-path"),
    );

    let view = match parity_view(tree) {
        Ok(v) => v,
        Err(msg) => {
            report.record(graph6, "parity_structure", false, msg);
            return;
        }
    };
    report.record(graph6, "parity_structure", true, String::new());

    let k = n - alpha;
    report.record(
        graph6,
        "even_class_size",
        view.even.len() == k,
        format!("|even| = {} want n - alpha = {k}", view.even.len()),
    );
    report.record(
        graph6,
        "odd_class_size",
        view.odd.len() + 1 == k.max(1),
        format!("|odd| = {} want n - alpha - 1 = {}", view.odd.len(), k.saturating_sub(1)),
    );
    let expected_leaves = (2 * alpha + 1).saturating_sub(n);
    report.record(
        graph6,
        "leaf_count",
        view.leaves.len() == expected_leaves,
        format!("|L| = {} want 2 alpha - n + 1 = {expected_leaves}", view.leaves.len()),
    );
    let odd_deg_ok = view.odd.iter().all(|&v| tree.degree(v) == 2);
    report.record(graph6, "odd_degree_two", odd_deg_ok, "odd vertices must have degree 2".into());

    let structure = validate_structure(&view);
    report.record(
        graph6,
        "main_tree_structure",
        structure.all_passed(),
        format!("{:?}", structure.failures()),
    );
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::templates::*;
    use crate::oracle::{brute_force_minimizer, SearchSpace};

    #[test]
    fn audits_pass_on_true_minimizers() {
        for (n, alpha) in [(8, 7), (9, 7), (8, 4), (9, 5), (10, 6), (9, 8), (10, 9)] {
            let res = brute_force_minimizer(n, alpha, SearchSpace::Trees).unwrap();
            let report = audit_structural_propositions(&res).unwrap();
            assert!(
                report.all_passed(),
                "(n, alpha) = ({n}, {alpha}): {:?}",
                report.failures
            );
        }
    }

    #[test]
    fn diameter_cases() {
        // alpha = n-1: star, diam 2
        let mut report = AuditReport::default();
        audit_tree(&star_graph(9), 9, 8, "s", &mut report);
        assert!(report.all_passed(), "{:?}", report.failures);
        // alpha = ceil(n/2): path (odd diameter allowed)
        let mut report = AuditReport::default();
        audit_tree(&path_graph(12), 12, 6, "p", &mut report);
        assert!(report.all_passed(), "{:?}", report.failures);
        // the radius-2 tree of order 9 sits in the middle band
        let mut report = AuditReport::default();
        audit_tree(&w_graph(9), 9, 6, "w", &mut report);
        assert!(report.all_passed(), "{:?}", report.failures);
    }

    #[test]
    fn violations_are_reported() {
        // the wrong tree for its class: a path claimed to minimize alpha = n-1
        let mut report = AuditReport::default();
        audit_tree(&path_graph(6), 6, 5, "bad", &mut report);
        assert!(!report.all_passed());
        // pendant path of length 3 breaks the parity structure checks
        let bad = Graph::from_edge_list(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6), (6, 7)],
        )
        .unwrap();
        let mut report = AuditReport::default();
        let alpha = crate::graphs::independence_number(&bad).unwrap().alpha;
        audit_tree(&bad, 8, alpha, "bad2", &mut report);
        assert!(!report.all_passed());
    }
}
