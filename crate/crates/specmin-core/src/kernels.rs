//! Kernel search: for parameters (k, r) find the minimizer tree at the base
//! order n0 = 3k^2 - k - 1 - (k-1) r by exhausting leaf assignments over
//! every main tree. Larger minimizers of the same class are uniform leaf
//! lifts of these kernels.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graphs::{canonical_form, encode_graph6, independence_number, Graph, GraphError};
use crate::main_trees::{enumerate_main_trees, MainTree, MainTreeError};
use crate::spectral::{
    compare_radii, power_iteration, rational_radius_bounds, spectral_radius, RadiusCertificate,
    RadiusOrdering, SpectralError, DEFAULT_ITERATION_CAP, DEFAULT_TOL,
};

/// Exhaustive search stays comfortable up to here; n0 grows as 3k^2.
pub const MAX_EXHAUSTIVE_K: usize = 7;

/// Floating gap below which candidates are re-compared exactly.
pub const SCREEN_MARGIN: f64 = 1e-6;

#[derive(Debug, Error)]
pub enum KernelError {
    #[error("residue r must satisfy 0 <= r < k (k = {k}, r = {r})")]
    BadResidue { k: usize, r: usize },
    #[error("exhaustive kernel search is capped at k <= {cap}, got {got}")]
    KTooLarge { cap: usize, got: usize },
    #[error(transparent)]
    MainTree(#[from] MainTreeError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Base-order problem instance: n0 = 3k^2 - k - 1 - (k-1) r, with
/// total_leaves = n0 - 2k + 1 pendant leaves to distribute and
/// lbar = floor(total_leaves / k) their average.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct KernelProblem {
    pub k: usize,
    pub r: usize,
    pub n0: usize,
    pub total_leaves: usize,
    pub lbar: usize,
}

impl KernelProblem {
    pub fn new(k: usize, r: usize) -> Result<Self, KernelError> {
        if k == 0 || r >= k {
            return Err(KernelError::BadResidue { k, r });
        }
        let n0 = 3 * k * k - k - 1 - (k - 1) * r;
        let total_leaves = n0 + 1 - 2 * k;
        let lbar = total_leaves / k;
        debug_assert_eq!((n0 + 1) % k, r % k);
        debug_assert_eq!(total_leaves % k, r % k);
        Ok(KernelProblem { k, r, n0, total_leaves, lbar })
    }

    /// Per-vertex bounds on the pendant-leaf count of an even vertex `u`
    /// of a main tree, clamped below at zero. Returns (lo, hi); hi < lo
    /// means no feasible count.
    pub fn leaf_bounds(&self, mt: &MainTree, u: usize) -> Result<(i64, i64), KernelError> {
        if mt.tree.even.binary_search(&u).is_err() {
            return Err(KernelError::Graph(GraphError::UnknownHost(u)));
        }
        let deg = mt.graph().degree(u) as i64;
        let lbar = self.lbar as i64;
        let r = self.r as i64;
        let k = self.k as i64;
        let (lo, hi) = if self.r <= 4 {
            (lbar + r - k + 1 - deg, lbar + 3 - deg)
        } else {
            (lbar + r - 2 * k + 2 - deg, lbar + 4 - deg)
        };
        Ok((lo.max(0), hi))
    }

    /// Total leaves available at order n for this class (n >= 2k - 1).
    pub fn leaves_at_order(&self, n: usize) -> usize {
        n - (2 * self.k - 1)
    }
}

/// One candidate kernel with its provenance and certificate.
#[derive(Clone, Debug)]
pub struct KernelCandidate {
    /// Pendant-leaf counts aligned with the main tree's even vertices
    /// (ascending: path evens, then level y's).
    pub assignment: Vec<usize>,
    pub certificate: RadiusCertificate,
    pub graph6: String,
    pub canonical: Vec<u8>,
}

#[derive(Clone, Debug)]
pub struct PerMainTree {
    pub main_tree: MainTree,
    pub candidate_count: usize,
    /// Exact minima within this main tree (ties kept, canonical order).
    pub best: Vec<KernelCandidate>,
}

#[derive(Clone, Debug)]
pub struct KernelResult {
    pub problem: KernelProblem,
    pub per_main_tree: Vec<PerMainTree>,
    /// Global minimizers as (main tree index, candidate), canonical order.
    pub minimizers: Vec<(usize, KernelCandidate)>,
}

impl KernelResult {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "k": self.problem.k,
            "r": self.problem.r,
            "n0": self.problem.n0,
            "total_leaves": self.problem.total_leaves,
            "lbar": self.problem.lbar,
            "per_main_tree": self.per_main_tree.iter().map(|p| serde_json::json!({
                "main_tree": p.main_tree.to_json(),
                "count": p.candidate_count,
                "best": p.best.iter().map(candidate_json).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "minimizers": self.minimizers.iter().map(|(i, c)| {
                let mut v = candidate_json(c);
                v["main_tree_index"] = serde_json::json!(i);
                v["rho2_closed_form_if_known"] = serde_json::json!(
                    crate::minimizer::closed_form_table(self.problem.k, self.problem.r)
                        .map(|f| f.render(self.problem.n0))
                );
                v
            }).collect::<Vec<_>>(),
        })
    }
}

fn candidate_json(c: &KernelCandidate) -> serde_json::Value {
    serde_json::json!({
        "graph6": c.graph6,
        "assignment": c.assignment,
        "rho": c.certificate.approx,
        "certificate": c.certificate.to_json(),
    })
}

/// Builds the tree `mt` with the given per-even-vertex leaf counts.
pub fn realize_assignment(mt: &MainTree, assignment: &[usize]) -> Result<Graph, GraphError> {
    let hosts: Vec<(usize, usize)> = mt
        .tree
        .even
        .iter()
        .copied()
        .zip(assignment.iter().copied())
        .collect();
    mt.graph().attach_leaves(&hosts)
}

/// All leaf assignments summing to the problem's total, within per-vertex
/// bounds, deduplicated up to automorphisms of the main tree (two
/// assignments are equivalent iff the decorated trees are isomorphic).
/// Output is lexicographically sorted; each class is represented by its
/// lexicographically smallest member.
pub fn enumerate_leaf_sequences(
    problem: &KernelProblem,
    mt: &MainTree,
) -> Result<Vec<Vec<usize>>, KernelError> {
    enumerate_assignments(problem.total_leaves, problem, mt)
}

fn enumerate_assignments(
    total: usize,
    problem: &KernelProblem,
    mt: &MainTree,
) -> Result<Vec<Vec<usize>>, KernelError> {
    let evens = &mt.tree.even;
    let mut bounds = Vec::with_capacity(evens.len());
    for &u in evens {
        let (lo, hi) = problem.leaf_bounds(mt, u)?;
        if hi < lo {
            return Ok(Vec::new());
        }
        bounds.push((lo as usize, hi as usize));
    }
    let suffix_lo: Vec<usize> = suffix_sums(bounds.iter().map(|b| b.0));
    let suffix_hi: Vec<usize> = suffix_sums(bounds.iter().map(|b| b.1));
    let mut raw = Vec::new();
    let mut cur = vec![0usize; evens.len()];
    fn go(
        pos: usize,
        remaining: usize,
        bounds: &[(usize, usize)],
        suffix_lo: &[usize],
        suffix_hi: &[usize],
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if pos == bounds.len() {
            if remaining == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let (lo, hi) = bounds[pos];
        let rest_lo = suffix_lo[pos + 1];
        let rest_hi = suffix_hi[pos + 1];
        let from = lo.max(remaining.saturating_sub(rest_hi));
        let to = hi.min(remaining.saturating_sub(rest_lo));
        for value in from..=to {
            if value > remaining {
                break;
            }
            cur[pos] = value;
            go(pos + 1, remaining - value, bounds, suffix_lo, suffix_hi, cur, out);
        }
        cur[pos] = 0;
    }
    go(0, total, &bounds, &suffix_lo, &suffix_hi, &mut cur, &mut raw);
    // class representative: first (lexicographically smallest) assignment
    // whose decorated tree realizes each isomorphism class
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for assignment in raw {
        let tree = realize_assignment(mt, &assignment)?;
        let canon = canonical_form(&tree)?;
        if seen.insert(canon) {
            out.push(assignment);
        }
    }
    Ok(out)
}

fn suffix_sums(values: impl Iterator<Item = usize>) -> Vec<usize> {
    let v: Vec<usize> = values.collect();
    let mut out = vec![0usize; v.len() + 1];
    for i in (0..v.len()).rev() {
        out[i] = out[i + 1] + v[i];
    }
    out
}

/// Full exhaustive kernel search for (k, r).
pub fn kernel_search(k: usize, r: usize) -> Result<KernelResult, KernelError> {
    kernel_search_with_tol(k, r, DEFAULT_TOL)
}

pub fn kernel_search_with_tol(k: usize, r: usize, tol: f64) -> Result<KernelResult, KernelError> {
    if k > MAX_EXHAUSTIVE_K {
        return Err(KernelError::KTooLarge { cap: MAX_EXHAUSTIVE_K, got: k });
    }
    let problem = KernelProblem::new(k, r)?;
    let main_trees = enumerate_main_trees(k)?;
    let mut per_main_tree = Vec::new();
    for mt in main_trees {
        let assignments = enumerate_leaf_sequences(&problem, &mt)?;
        let per = search_one_main_tree(&problem, mt, assignments, tol)?;
        per_main_tree.push(per);
    }
    // global exact minimum across the per-tree minima
    let mut best: Option<&RadiusCertificate> = None;
    for per in &per_main_tree {
        if let Some(c) = per.best.first() {
            if best.is_none()
                || compare_radii(&c.certificate, best.unwrap())? == RadiusOrdering::Less
            {
                best = Some(&c.certificate);
            }
        }
    }
    let mut minimizers: Vec<(usize, KernelCandidate)> = Vec::new();
    if let Some(best) = best {
        let best = best.clone();
        for (i, per) in per_main_tree.iter().enumerate() {
            for c in &per.best {
                if compare_radii(&c.certificate, &best)? == RadiusOrdering::Equal {
                    minimizers.push((i, c.clone()));
                }
            }
        }
    }
    minimizers.sort_by(|a, b| a.1.canonical.cmp(&b.1.canonical));
    Ok(KernelResult { problem, per_main_tree, minimizers })
}

/// Minimum over one main tree's assignments: numeric screen first, exact
/// certificates for the near-ties, then an exact sweep proving every
/// screened-out candidate really sits above the winner.
fn search_one_main_tree(
    problem: &KernelProblem,
    mt: MainTree,
    assignments: Vec<Vec<usize>>,
    tol: f64,
) -> Result<PerMainTree, KernelError> {
    let candidate_count = assignments.len();
    if candidate_count == 0 {
        return Ok(PerMainTree { main_tree: mt, candidate_count, best: Vec::new() });
    }
    let trees: Vec<Graph> = assignments
        .iter()
        .map(|a| realize_assignment(&mt, a))
        .collect::<Result<_, _>>()?;
    let approx: Vec<(f64, Vec<f64>)> = trees
        .par_iter()
        .map(|t| {
            let res = power_iteration(t, tol, DEFAULT_ITERATION_CAP)?;
            Ok((res.value, res.vector))
        })
        .collect::<Result<_, KernelError>>()?;
    let min_value = approx.iter().map(|(v, _)| *v).fold(f64::INFINITY, f64::min);
    let mut in_ties = vec![false; candidate_count];
    for i in 0..candidate_count {
        in_ties[i] = approx[i].0 <= min_value + SCREEN_MARGIN;
    }
    let mut certs: Vec<Option<RadiusCertificate>> = vec![None; candidate_count];
    // the tie set only grows: certify it, take the exact minimum, then prove
    // every outsider sits strictly above via a rational Collatz-Wielandt
    // lower bound on its own radius (full certificate on the rare fallback)
    let best_cert = loop {
        let fresh: Vec<(usize, RadiusCertificate)> = (0..candidate_count)
            .filter(|&i| in_ties[i] && certs[i].is_none())
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|i| Ok((i, spectral_radius(&trees[i], tol)?)))
            .collect::<Result<_, KernelError>>()?;
        for (i, c) in fresh {
            certs[i] = Some(c);
        }
        let mut best: Option<&RadiusCertificate> = None;
        for i in 0..candidate_count {
            if let Some(c) = &certs[i] {
                if best.is_none() || compare_radii(c, best.unwrap())? == RadiusOrdering::Less {
                    best = Some(c);
                }
            }
        }
        let best = best.expect("tie set is never empty").clone();
        let escaped: Vec<usize> = (0..candidate_count)
            .into_par_iter()
            .filter(|&i| {
                if in_ties[i] {
                    return false;
                }
                let (lower, _) = rational_radius_bounds(&trees[i], &approx[i].1);
                lower <= best.hi
            })
            .collect();
        let mut grew = false;
        for i in escaped {
            let cert = spectral_radius(&trees[i], tol)?;
            if compare_radii(&cert, &best)? != RadiusOrdering::Greater {
                in_ties[i] = true;
                grew = true;
            }
            certs[i] = Some(cert);
        }
        if !grew {
            break best;
        }
    };
    let mut best = Vec::new();
    for i in 0..candidate_count {
        if let Some(c) = &certs[i] {
            if in_ties[i] && compare_radii(c, &best_cert)? == RadiusOrdering::Equal {
                best.push(KernelCandidate {
                    assignment: assignments[i].clone(),
                    certificate: c.clone(),
                    graph6: encode_graph6(&trees[i]).0,
                    canonical: canonical_form(&trees[i])?,
                });
            }
        }
    }
    best.sort_by(|a, b| a.canonical.cmp(&b.canonical));
    if let Some(first) = best.first() {
        // independence bookkeeping on the winner: order n0, alpha = n0 - k
        // (the k = 1 kernel is the single vertex, where alpha is 1, not 0)
        let tree = realize_assignment(&mt, &first.assignment)?;
        let alpha = independence_number(&tree)?.alpha;
        debug_assert_eq!(tree.vertex_count(), problem.n0);
        debug_assert_eq!(alpha, (problem.n0 - problem.k).max(1));
    }
    Ok(PerMainTree { main_tree: mt, candidate_count, best })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn problem_arithmetic() {
        let p = KernelProblem::new(5, 0).unwrap();
        assert_eq!((p.n0, p.total_leaves, p.lbar), (69, 60, 12));
        let p = KernelProblem::new(5, 4).unwrap();
        assert_eq!((p.n0, p.total_leaves, p.lbar), (53, 44, 8));
        let p = KernelProblem::new(6, 5).unwrap();
        assert_eq!((p.n0, p.total_leaves, p.lbar), (76, 65, 10));
        assert!(KernelProblem::new(5, 5).is_err());
        assert!(KernelProblem::new(0, 0).is_err());
    }

    #[test]
    fn leaf_bounds_match_known_rows() {
        // k=5, r=0: degree-1 even vertices get [7, 14]
        let p = KernelProblem::new(5, 0).unwrap();
        let mts = enumerate_main_trees(5).unwrap();
        let p9 = mts.iter().find(|m| m.descriptor.d == 8).unwrap();
        assert_eq!(p.leaf_bounds(p9, 0).unwrap(), (7, 14));
        assert_eq!(p.leaf_bounds(p9, 2).unwrap(), (6, 13));
        // k=6, r=5: wide branch, degree-1 gets [4, 13]
        let p = KernelProblem::new(6, 5).unwrap();
        let mts = enumerate_main_trees(6).unwrap();
        let p11 = mts.iter().find(|m| m.descriptor.d == 10).unwrap();
        assert_eq!(p.leaf_bounds(p11, 0).unwrap(), (4, 13));
        // unknown host errors
        assert!(p.leaf_bounds(p11, 1).is_err());
    }

    #[test]
    fn clamping_can_empty_the_interval() {
        // contrived: k=2, r=1 has lbar=2; a degree-6 vertex would get
        // hi = 2 + 3 - 6 < 0; no main tree has one, so synthesize via bounds
        let p = KernelProblem::new(2, 1).unwrap();
        let mts = enumerate_main_trees(2).unwrap();
        let (lo, hi) = p.leaf_bounds(&mts[0], 0).unwrap();
        assert!(lo <= hi);
    }

    #[test]
    fn k2_kernels_match_closed_forms() {
        // r=0: kernel P3 o (3,3), rho^2 = 5
        let res = kernel_search(2, 0).unwrap();
        assert_eq!(res.per_main_tree[0].candidate_count, 3);
        assert_eq!(res.minimizers.len(), 1);
        let c = &res.minimizers[0].1;
        assert_eq!(c.assignment, vec![3, 3]);
        assert!((c.certificate.approx.powi(2) - 5.0).abs() < 1e-9);
        // r=1: kernel P3 o (2,3), rho^2 = (7+sqrt5)/2
        let res = kernel_search(2, 1).unwrap();
        let c = &res.minimizers[0].1;
        assert_eq!(c.assignment, vec![2, 3]);
        let expected = (7.0 + 5f64.sqrt()) / 2.0;
        assert!((c.certificate.approx.powi(2) - expected).abs() < 1e-9);
    }

    #[test]
    fn k3_kernels_match_table() {
        for (r, assignment, rho2) in [
            (0usize, vec![7usize, 4, 7], 7.0 + 3f64.sqrt()),
            (1, vec![6, 4, 6], 8.0),
            (2, vec![5, 4, 5], 6.0 + 2f64.sqrt()),
        ] {
            let res = kernel_search(3, r).unwrap();
            assert_eq!(res.minimizers.len(), 1, "r = {r}");
            let c = &res.minimizers[0].1;
            assert_eq!(c.assignment, assignment, "r = {r}");
            assert!((c.certificate.approx.powi(2) - rho2).abs() < 1e-9, "r = {r}");
        }
    }

    #[test]
    fn k1_degenerate_kernel() {
        let res = kernel_search(1, 0).unwrap();
        assert_eq!(res.problem.n0, 1);
        assert_eq!(res.minimizers.len(), 1);
        assert_eq!(res.minimizers[0].1.assignment, vec![0]);
    }

    #[test]
    fn kernel_radius_upper_bounds() {
        // rho^2 < lbar + 5 always; rho^2 <= lbar + 4 when r <= 4
        for k in 2..=4usize {
            for r in 0..k {
                let res = kernel_search(k, r).unwrap();
                let rho2 = res.minimizers[0].1.certificate.approx.powi(2);
                let lbar = res.problem.lbar as f64;
                assert!(rho2 < lbar + 5.0 - 1e-9, "k={k} r={r}: {rho2} vs {}", lbar + 5.0);
                if r <= 4 {
                    assert!(rho2 <= lbar + 4.0 + 1e-9, "k={k} r={r}: {rho2} vs {}", lbar + 4.0);
                }
            }
        }
    }
}
