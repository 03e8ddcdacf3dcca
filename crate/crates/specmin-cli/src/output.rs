//! Command handlers. Every JSON line is a complete record; ordering is fully
//! deterministic for a fixed configuration.

use specmin_core::graphs::decode_graph6;
use specmin_core::kernels::kernel_search_with_tol;
use specmin_core::main_trees::enumerate_main_trees;
use specmin_core::minimizer::{
    closed_form_check, construct_minimizers_with_tol, make_plan,
};
use specmin_core::oracle::{audit_structural_propositions, brute_force_minimizer, SearchSpace};

use crate::OutputFormat;

type RunResult = Result<bool, String>;

pub fn run_minimize(n: usize, k: usize, tol: f64, format: OutputFormat) -> RunResult {
    let plan = make_plan(n, k).map_err(|e| e.to_string())?;
    let result = construct_minimizers_with_tol(&plan, tol).map_err(|e| e.to_string())?;
    let report = closed_form_check(&result);
    match format {
        OutputFormat::Json => {
            let mut json = result.to_json();
            json["closed_form_check"] =
                serde_json::to_value(&report.checks).map_err(|e| e.to_string())?;
            println!("{json}");
        }
        OutputFormat::Graph6 => {
            for tree in &result.trees {
                println!("{}", tree.graph6);
            }
        }
        OutputFormat::Table => {
            println!(
                "n = {}, k = {}, r = {}, n0 = {}, ell = {}",
                plan.n, plan.k, plan.r, plan.n0, plan.ell
            );
            for tree in &result.trees {
                println!(
                    "  d = {:2}  leaves {:?}  rho = {:.10}  {}",
                    tree.main_tree.d, tree.assignment, tree.certificate.approx, tree.graph6
                );
            }
            if let Some(form) = &result.closed_form {
                println!("  family: {}", form.render(plan.n));
            }
        }
    }
    Ok(report.all_matched())
}

pub fn run_kernel(k: usize, r: usize, tol: f64, format: OutputFormat) -> RunResult {
    let result = kernel_search_with_tol(k, r, tol).map_err(|e| e.to_string())?;
    match format {
        OutputFormat::Json => println!("{}", result.to_json()),
        OutputFormat::Graph6 => {
            for (_, c) in &result.minimizers {
                println!("{}", c.graph6);
            }
        }
        OutputFormat::Table => {
            println!(
                "k = {}, r = {}, n0 = {}, leaves = {}, lbar = {}",
                result.problem.k,
                result.problem.r,
                result.problem.n0,
                result.problem.total_leaves,
                result.problem.lbar
            );
            for per in &result.per_main_tree {
                let best = per
                    .best
                    .first()
                    .map(|b| format!("{:?} rho = {:.10}", b.assignment, b.certificate.approx))
                    .unwrap_or_else(|| "infeasible".into());
                println!(
                    "  d = {:2}  candidates {:5}  best {}",
                    per.main_tree.descriptor.d, per.candidate_count, best
                );
            }
            for (i, c) in &result.minimizers {
                println!(
                    "  kernel: d = {} {:?} rho = {:.10}",
                    result.per_main_tree[*i].main_tree.descriptor.d,
                    c.assignment,
                    c.certificate.approx
                );
            }
        }
    }
    Ok(true)
}

pub fn run_main_trees(k: usize, format: OutputFormat) -> RunResult {
    let trees = enumerate_main_trees(k).map_err(|e| e.to_string())?;
    match format {
        OutputFormat::Json => {
            for mt in &trees {
                println!("{}", mt.to_json());
            }
        }
        OutputFormat::Graph6 => {
            for mt in &trees {
                println!("{}", specmin_core::graphs::encode_graph6(mt.graph()).0);
            }
        }
        OutputFormat::Table => {
            println!("k = {k}: {} main trees", trees.len());
            for mt in &trees {
                println!(
                    "  d = {:2}  levels {:?}",
                    mt.descriptor.d,
                    mt.descriptor.levels.iter().map(Vec::len).collect::<Vec<_>>()
                );
            }
        }
    }
    Ok(true)
}

pub fn run_oracle(n: usize, alpha: usize, space: SearchSpace, format: OutputFormat) -> RunResult {
    let mut result = brute_force_minimizer(n, alpha, space).map_err(|e| e.to_string())?;
    let threshold = n.div_ceil(2);
    if space == SearchSpace::Trees && alpha >= threshold {
        let report = audit_structural_propositions(&result).map_err(|e| e.to_string())?;
        result.audits = Some(report);
    }
    let audits_ok = result.audits.as_ref().map(|a| a.all_passed()).unwrap_or(true);
    match format {
        OutputFormat::Json => println!("{}", result.to_json()),
        OutputFormat::Graph6 => {
            for m in &result.minimizers {
                println!("{}", m.graph6);
            }
        }
        OutputFormat::Table => {
            println!(
                "n = {n}, alpha = {alpha}, space size {}, {} minimizer(s)",
                result.search_space_size,
                result.minimizers.len()
            );
            for m in &result.minimizers {
                let tree = decode_graph6(&m.graph6).map_err(|e| e.to_string())?;
                println!(
                    "  rho = {:.10}  diam = {}  {}",
                    m.certificate.approx,
                    tree.tree_diameter().map(|d| d.to_string()).unwrap_or_else(|_| "-".into()),
                    m.graph6
                );
            }
            if let Some(a) = &result.audits {
                println!("  audits: {} checks, {} failures", a.checked, a.failures.len());
            }
        }
    }
    Ok(audits_ok)
}
