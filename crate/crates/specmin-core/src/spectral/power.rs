//! Power iteration for the dominant eigenvalue of a connected graph's
//! adjacency matrix. Iterates with A + I so the bipartite +/- rho pair
//! cannot trap the iteration, and reads the value off the Rayleigh quotient
//! of A itself.

use crate::graphs::{Graph, GraphError};

use super::SpectralError;

pub const DEFAULT_ITERATION_CAP: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq)]
pub struct PowerIterationResult {
    pub value: f64,
    /// Unit Perron vector approximation (positive entries).
    pub vector: Vec<f64>,
    pub iterations: u64,
}

/// All-ones start, deterministic; errors if the cap is hit before the
/// Rayleigh quotient settles to `tol`.
pub fn power_iteration(
    g: &Graph,
    tol: f64,
    max_iterations: u64,
) -> Result<PowerIterationResult, SpectralError> {
    if !(tol > 0.0) {
        return Err(SpectralError::BadTolerance(tol));
    }
    if !g.is_connected() {
        return Err(SpectralError::Graph(GraphError::NotConnected));
    }
    let n = g.vertex_count();
    if n == 1 {
        return Ok(PowerIterationResult { value: 0.0, vector: vec![1.0], iterations: 0 });
    }
    let mut y = vec![1.0 / (n as f64).sqrt(); n];
    let mut ay = vec![0.0; n];
    let mut rayleigh = 0.0f64;
    let mut stable = 0u32;
    for iter in 1..=max_iterations {
        for u in 0..n {
            let mut acc = 0.0;
            for &v in g.neighbors(u) {
                acc += y[v];
            }
            ay[u] = acc;
        }
        let num: f64 = (0..n).map(|u| y[u] * ay[u]).sum();
        let den: f64 = y.iter().map(|v| v * v).sum();
        let next = num / den;
        // shifted step: w = (A + I) y, normalized
        let mut norm = 0.0;
        for u in 0..n {
            ay[u] += y[u];
            norm += ay[u] * ay[u];
        }
        let norm = norm.sqrt();
        for u in 0..n {
            y[u] = ay[u] / norm;
        }
        if (next - rayleigh).abs() <= tol * 0.5 {
            stable += 1;
            if stable >= 3 {
                return Ok(PowerIterationResult { value: next, vector: y, iterations: iter });
            }
        } else {
            stable = 0;
        }
        rayleigh = next;
    }
    Err(SpectralError::IterationLimit(max_iterations))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::templates::*;

    #[test]
    fn converges_on_bipartite_graphs() {
        // plain iteration on A oscillates for bipartite graphs; the shift
        // must still land on rho
        let p2 = path_graph(2);
        let res = power_iteration(&p2, 1e-13, DEFAULT_ITERATION_CAP).unwrap();
        assert!((res.value - 1.0).abs() < 1e-10);

        let star = star_graph(10);
        let res = power_iteration(&star, 1e-13, DEFAULT_ITERATION_CAP).unwrap();
        assert!((res.value - 3.0).abs() < 1e-10);
    }

    #[test]
    fn path_radius_closed_form() {
        for n in [5usize, 20, 63] {
            let p = path_graph(n);
            let res = power_iteration(&p, 1e-13, DEFAULT_ITERATION_CAP).unwrap();
            let expected = 2.0 * (std::f64::consts::PI / (n as f64 + 1.0)).cos();
            assert!((res.value - expected).abs() < 1e-9, "P_{n}");
        }
    }

    #[test]
    fn cap_is_surfaced() {
        let p = path_graph(50);
        assert_eq!(
            power_iteration(&p, 1e-13, 3),
            Err(SpectralError::IterationLimit(3))
        );
    }

    #[test]
    fn perron_vector_is_positive() {
        let g = spider_graph(&[3, 2, 2]);
        let res = power_iteration(&g, 1e-12, DEFAULT_ITERATION_CAP).unwrap();
        assert!(res.vector.iter().all(|&v| v > 0.0));
    }
}
