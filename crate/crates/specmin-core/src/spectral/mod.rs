//! Spectral radius machinery. Two routes live side by side: a floating
//! power-iteration path for screening, and an exact path (integer
//! characteristic polynomials, Sturm isolation) that certifies radii of
//! trees and orders them as algebraic numbers.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::graphs::{Graph, GraphError};

mod poly;
mod power;
mod sturm;

pub use poly::{big_to_f64, rational_to_f64, IntPoly};
pub use power::{power_iteration, PowerIterationResult, DEFAULT_ITERATION_CAP};
pub use sturm::{approx_rational, count_roots_in, isolate_largest_root, SturmChain};

pub const DEFAULT_TOL: f64 = 1e-12;

#[derive(Debug, Error, PartialEq)]
pub enum SpectralError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("power iteration hit the cap of {0} iterations without converging")]
    IterationLimit(u64),
    #[error("operation needs an exact (tree-backed) certificate")]
    NonExactCertificate,
    #[error("leaf lift amount must be non-negative, got {0}")]
    NegativeLift(i64),
    #[error("tolerance must be positive, got {0}")]
    BadTolerance(f64),
}

/// Certified bracket around the spectral radius.
///
/// For exact certificates the polynomial has integer coefficients with
/// exactly one real root in (lo, hi] and none above hi; `approx` is within
/// `hi - lo` of the true root. Non-exact certificates (non-tree graphs)
/// carry the numeric bracket only.
#[derive(Clone, Debug)]
pub struct RadiusCertificate {
    pub poly: IntPoly,
    pub lo: BigRational,
    pub hi: BigRational,
    pub approx: f64,
    pub exact: bool,
}

impl RadiusCertificate {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// Certificate JSON: poly coefficients ascending, rational endpoints as
    /// "p/q" strings, floating approximation.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "poly": self
                .poly
                .coeffs()
                .iter()
                .map(|c| serde_json::Number::from_string_unchecked(c.to_string()))
                .collect::<Vec<_>>(),
            "lo": format!("{}/{}", self.lo.numer(), self.lo.denom()),
            "hi": format!("{}/{}", self.hi.numer(), self.hi.denom()),
            "approx": self.approx,
            "exact": self.exact,
        })
    }

    /// Exact check that the radius is <= the given rational bound.
    pub fn radius_le(&self, bound: &BigRational) -> Result<bool, SpectralError> {
        if !self.exact {
            return Err(SpectralError::NonExactCertificate);
        }
        if *bound >= self.hi {
            return Ok(true);
        }
        if *bound <= self.lo {
            return Ok(false);
        }
        // root location within (lo, hi] decides it
        Ok(count_roots_in(&self.poly, bound, &self.hi) == 0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RadiusOrdering {
    Less,
    Equal,
    Greater,
}

impl From<RadiusOrdering> for Ordering {
    fn from(r: RadiusOrdering) -> Ordering {
        match r {
            RadiusOrdering::Less => Ordering::Less,
            RadiusOrdering::Equal => Ordering::Equal,
            RadiusOrdering::Greater => Ordering::Greater,
        }
    }
}

/// Characteristic polynomial det(xI - A) of a tree, computed exactly by the
/// leaf-peeling recurrence on a rooted orientation: for a subtree rooted at
/// v with children c, p(v) = x * prod p(c) - sum_c q(c) * prod_{c' != c} p(c')
/// and q(v) = prod p(c).
pub fn char_poly_tree(t: &Graph) -> Result<IntPoly, SpectralError> {
    if !t.is_tree() {
        return Err(GraphError::NotATree.into());
    }
    let n = t.vertex_count();
    let root = 0usize;
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
    let mut p: Vec<Option<IntPoly>> = vec![None; n];
    let mut q: Vec<Option<IntPoly>> = vec![None; n];
    let x = IntPoly::x();
    for &u in order.iter().rev() {
        let mut prod = IntPoly::one();
        let mut sum = IntPoly::zero();
        for &c in t.neighbors(u) {
            if c != u && parent[c] == u {
                let pc = p[c].take().unwrap();
                let qc = q[c].take().unwrap();
                sum = sum.mul(&pc).add(&qc.mul(&prod));
                prod = prod.mul(&pc);
            }
        }
        p[u] = Some(x.mul(&prod).sub(&sum));
        q[u] = Some(prod);
    }
    Ok(p[root].take().unwrap())
}

/// Spectral radius with a certificate. Trees get an exact Sturm-refined
/// isolating interval of width <= tol; other connected graphs get the
/// numeric bracket only.
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<RadiusCertificate, SpectralError> {
    if !(tol > 0.0) {
        return Err(SpectralError::BadTolerance(tol));
    }
    if !g.is_connected() {
        return Err(GraphError::NotConnected.into());
    }
    let numeric = power_iteration(g, tol, DEFAULT_ITERATION_CAP)?;
    if g.is_tree() {
        let poly = char_poly_tree(g)?;
        let width = approx_rational(tol);
        let width = if width.is_zero() { approx_rational(f64::MIN_POSITIVE) } else { width };
        let (lo, hi) =
            isolate_largest_root(&poly, &width).expect("a real symmetric matrix has real eigenvalues");
        let mid = rational_to_f64(&((&lo + &hi) / BigRational::from(BigInt::from(2))));
        // keep the iterated value unless it drifted outside the certified bracket
        let approx = if (numeric.value - mid).abs() <= rational_to_f64(&(&hi - &lo)) {
            numeric.value
        } else {
            mid
        };
        return Ok(RadiusCertificate { poly, lo, hi, approx, exact: true });
    }
    let slack = approx_rational(tol.max(1e-9));
    let center = approx_rational(numeric.value);
    Ok(RadiusCertificate {
        poly: IntPoly::zero(),
        lo: &center - &slack,
        hi: &center + &slack,
        approx: numeric.value,
        exact: false,
    })
}

/// Exact total order on certified radii. Intervals are refined by Sturm
/// bisection until disjoint; equality is proved through a shared root of the
/// polynomial gcd inside the interval overlap.
pub fn compare_radii(
    a: &RadiusCertificate,
    b: &RadiusCertificate,
) -> Result<RadiusOrdering, SpectralError> {
    if !a.exact || !b.exact {
        return Err(SpectralError::NonExactCertificate);
    }
    if a.hi <= b.lo {
        return Ok(RadiusOrdering::Less);
    }
    if b.hi <= a.lo {
        return Ok(RadiusOrdering::Greater);
    }
    // equality test: a common factor with a root in the interval overlap
    // pins both isolated roots to the same algebraic number
    let g = a.poly.square_free_part().gcd(&b.poly.square_free_part());
    if g.degree().unwrap_or(0) >= 1 {
        let lo = (&a.lo).max(&b.lo).clone();
        let hi = (&a.hi).min(&b.hi).clone();
        if lo < hi && count_roots_in(&g, &lo, &hi) >= 1 {
            return Ok(RadiusOrdering::Equal);
        }
    }
    // not equal: refine both until the brackets separate
    let mut ia = (a.lo.clone(), a.hi.clone());
    let mut ib = (b.lo.clone(), b.hi.clone());
    let chain_a = SturmChain::new(&a.poly);
    let chain_b = SturmChain::new(&b.poly);
    let two = BigRational::from(BigInt::from(2));
    loop {
        if ia.1 <= ib.0 {
            return Ok(RadiusOrdering::Less);
        }
        if ib.1 <= ia.0 {
            return Ok(RadiusOrdering::Greater);
        }
        for (interval, chain) in [(&mut ia, &chain_a), (&mut ib, &chain_b)] {
            let mid = (&interval.0 + &interval.1) / &two;
            if chain.count_roots_in(&mid, &interval.1) >= 1 {
                interval.0 = mid;
            } else {
                interval.1 = mid;
            }
        }
    }
}

/// Certificate for sqrt(rho^2 + l), the radius after attaching l pendant
/// leaves at every vertex of one side of a bipartite graph.
///
/// The base polynomial of a tree splits as x^t * P(x^2); the lifted radius
/// is the largest root of P((x^2) - l), isolated afresh.
pub fn bipartite_lift_radius(
    base: &RadiusCertificate,
    l: i64,
) -> Result<RadiusCertificate, SpectralError> {
    if l < 0 {
        return Err(SpectralError::NegativeLift(l));
    }
    if !base.exact {
        return Err(SpectralError::NonExactCertificate);
    }
    let (_, even) = base
        .poly
        .parity_decompose()
        .expect("tree characteristic polynomials have x^t * P(x^2) support");
    let shifted = if even.degree().unwrap_or(0) >= 1 {
        // P(t - l): largest root moves from rho^2 to rho^2 + l
        even.compose_shift(&BigInt::from(-l))
    } else {
        // radius 0 base: lifted value is sqrt(l), root of t - l
        IntPoly::from_coeffs(vec![BigInt::from(-l), BigInt::from(1)])
    };
    let poly = shifted.compose_square();
    let width = {
        let w = base.width();
        if w.is_zero() { approx_rational(DEFAULT_TOL) } else { w }
    };
    let (lo, hi) = isolate_largest_root(&poly, &width)
        .expect("lifted polynomial keeps its real top root");
    let approx = (base.approx * base.approx + l as f64).sqrt();
    let mid = rational_to_f64(&((&lo + &hi) / BigRational::from(BigInt::from(2))));
    let approx = if (approx - mid).abs() <= rational_to_f64(&(&hi - &lo)) { approx } else { mid };
    Ok(RadiusCertificate { poly, lo, hi, approx, exact: true })
}

/// Exact rational bounds on the spectral radius from a positive test vector:
/// min_u (Ay)_u / y_u <= rho <= max_u (Ay)_u / y_u.
pub fn rational_radius_bounds(g: &Graph, vector: &[f64]) -> (BigRational, BigRational) {
    let scale = (1u64 << 40) as f64;
    let y: Vec<BigInt> = vector
        .iter()
        .map(|&v| {
            let scaled = (v.max(0.0) * scale).round() as i128;
            BigInt::from(scaled.max(1))
        })
        .collect();
    let mut lower: Option<BigRational> = None;
    let mut upper: Option<BigRational> = None;
    for u in 0..g.vertex_count() {
        let mut sum = BigInt::zero();
        for &v in g.neighbors(u) {
            sum += &y[v];
        }
        let ratio = BigRational::new(sum, y[u].clone());
        if lower.as_ref().is_none_or(|l| ratio < *l) {
            lower = Some(ratio.clone());
        }
        if upper.as_ref().is_none_or(|u_| ratio > *u_) {
            upper = Some(ratio);
        }
    }
    (
        lower.unwrap_or_else(BigRational::zero),
        upper.unwrap_or_else(BigRational::zero),
    )
}

/// Quotient upper bound: if A y <= lambda y entrywise for a nonnegative
/// nonzero y, then rho <= lambda. Returns the smallest such lambda for the
/// given vector (positive entries assumed).
pub fn quotient_upper_bound(g: &Graph, y: &[BigRational]) -> BigRational {
    let mut best = BigRational::zero();
    for u in 0..g.vertex_count() {
        let mut sum = BigRational::zero();
        for &v in g.neighbors(u) {
            sum += &y[v];
        }
        debug_assert!(y[u].is_positive());
        let ratio = sum / &y[u];
        if ratio > best {
            best = ratio;
        }
    }
    best
}
