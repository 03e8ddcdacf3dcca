//! Sturm chains over the integers and bisection-based isolation of the
//! largest real root. Sign-variation counts use half-open intervals (a, b].

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::IntPoly;

pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    /// Chain of the square-free part of `p`. Remainders are scaled only by
    /// positive constants so sign variations match the exact chain.
    pub fn new(p: &IntPoly) -> Self {
        let sf = p.square_free_part();
        let mut chain = vec![sf.clone()];
        let d = sf.derivative();
        if !d.is_zero() {
            chain.push(d);
            loop {
                let n = chain.len();
                let r = chain[n - 2].signed_pseudo_rem(&chain[n - 1]);
                if r.is_zero() {
                    break;
                }
                chain.push(r.neg().primitive_part());
            }
        }
        SturmChain { chain }
    }

    pub fn polynomial(&self) -> &IntPoly {
        &self.chain[0]
    }

    /// Number of sign variations at x, zeros skipped.
    pub fn variations_at(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut prev = 0i32;
        for p in &self.chain {
            let s = p.sign_at(x);
            if s != 0 {
                if prev != 0 && s != prev {
                    count += 1;
                }
                prev = s;
            }
        }
        count
    }

    /// Number of distinct real roots in (lo, hi].
    pub fn count_roots_in(&self, lo: &BigRational, hi: &BigRational) -> usize {
        debug_assert!(lo <= hi);
        let vl = self.variations_at(lo);
        let vh = self.variations_at(hi);
        vl.saturating_sub(vh)
    }

    /// Total number of distinct real roots.
    pub fn count_real_roots(&self) -> usize {
        if self.polynomial().degree().unwrap_or(0) == 0 {
            return 0;
        }
        let bound = BigRational::from(self.polynomial().cauchy_root_bound());
        self.count_roots_in(&(-bound.clone()), &bound)
    }

    /// Isolating interval (lo, hi] for the largest real root, refined until
    /// hi - lo <= width. None when the polynomial has no real roots.
    pub fn isolate_largest_root(&self, width: &BigRational) -> Option<(BigRational, BigRational)> {
        let deg = self.polynomial().degree()?;
        if deg == 0 {
            return None;
        }
        let bound = BigRational::from(self.polynomial().cauchy_root_bound());
        let mut lo = -bound.clone();
        let mut hi = bound;
        if self.count_roots_in(&lo, &hi) == 0 {
            return None;
        }
        let two = BigRational::from(BigInt::from(2));
        // shrink from the left until exactly the top root remains, then to width
        loop {
            let width_now = &hi - &lo;
            let isolated = self.count_roots_in(&lo, &hi) == 1;
            if isolated && width_now <= *width {
                return Some((lo, hi));
            }
            let mid = (&lo + &hi) / &two;
            if self.count_roots_in(&mid, &hi) >= 1 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }
}

/// Convenience: count roots of `p` in (lo, hi] through a fresh chain.
pub fn count_roots_in(p: &IntPoly, lo: &BigRational, hi: &BigRational) -> usize {
    SturmChain::new(p).count_roots_in(lo, hi)
}

/// Largest real root of `p` isolated to the given width.
pub fn isolate_largest_root(
    p: &IntPoly,
    width: &BigRational,
) -> Option<(BigRational, BigRational)> {
    // route through the even part when the support is x^t * P(x^2):
    // the chain on P has half the degree
    if let Some((t, even)) = p.parity_decompose() {
        if even.degree().unwrap_or(0) >= 1 {
            let chain = SturmChain::new(&even);
            let bound = BigRational::from(even.cauchy_root_bound());
            let zero = BigRational::zero();
            if chain.count_roots_in(&zero, &bound) >= 1 {
                // largest root s of P is positive; largest root of p is sqrt(s)
                let (mut a, mut b) = (zero, bound);
                let two = BigRational::from(BigInt::from(2));
                let precision = sqrt_precision_bits(width);
                loop {
                    if chain.count_roots_in(&a, &b) == 1 {
                        let lo = rational_sqrt_below(&a, precision);
                        let hi = rational_sqrt_above(&b, precision);
                        // the loosened bracket may re-admit a smaller root;
                        // keep refining (a, b) until it does not
                        if &hi - &lo <= *width
                            && chain.count_roots_in(&(&lo * &lo), &(&hi * &hi)) == 1
                        {
                            return Some((lo, hi));
                        }
                    }
                    let mid = (&a + &b) / &two;
                    if chain.count_roots_in(&mid, &b) >= 1 {
                        a = mid;
                    } else {
                        b = mid;
                    }
                }
            } else if t >= 1 {
                return Some(zero_root_interval(width));
            } else {
                // no positive roots of P and no zero root: all roots of p
                // (if any) would be imaginary
                return None;
            }
        } else if t >= 1 {
            // p = c * x^t
            return Some(zero_root_interval(width));
        } else {
            return None;
        }
    }
    SturmChain::new(p).isolate_largest_root(width)
}

fn zero_root_interval(width: &BigRational) -> (BigRational, BigRational) {
    let half = width / BigRational::from(BigInt::from(2));
    (-half, BigRational::zero())
}

/// Bits of dyadic precision so that 2^-bits is well below `width`.
fn sqrt_precision_bits(width: &BigRational) -> u32 {
    let w = super::poly::rational_to_f64(width);
    if w <= 0.0 || !w.is_finite() {
        return 128;
    }
    ((-w.log2()).ceil() as i64 + 4).clamp(48, 4096) as u32
}

/// Largest dyadic m/2^bits with (m/2^bits)^2 <= x, for x >= 0.
fn rational_sqrt_below(x: &BigRational, bits: u32) -> BigRational {
    if x <= &BigRational::zero() {
        return BigRational::zero();
    }
    let scale = BigInt::one() << (2 * bits);
    let n = (x.numer() * &scale) / x.denom();
    let m = n.sqrt();
    BigRational::new(m, BigInt::one() << bits)
}

/// A dyadic m/2^bits with (m/2^bits)^2 >= x, within 2^-bits of sqrt(x).
fn rational_sqrt_above(x: &BigRational, bits: u32) -> BigRational {
    if x <= &BigRational::zero() {
        return BigRational::zero();
    }
    let scale = BigInt::one() << (2 * bits);
    let n = (x.numer() * &scale).div_ceil(x.denom());
    let m = n.sqrt() + BigInt::one();
    BigRational::new(m, BigInt::one() << bits)
}

/// Dyadic rational close to the float (denominator 2^48).
pub fn approx_rational(x: f64) -> BigRational {
    let den: i64 = 1 << 48;
    let num = (x * den as f64).round();
    if !num.is_finite() {
        return BigRational::zero();
    }
    BigRational::new(BigInt::from(num as i128), BigInt::from(den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::poly::rational_to_f64;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64(coeffs)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn counts_on_half_open_intervals() {
        let f = p(&[-1, 0, 1]); // roots -1, 1
        let chain = SturmChain::new(&f);
        assert_eq!(chain.count_roots_in(&rat(-2, 1), &rat(2, 1)), 2);
        assert_eq!(chain.count_roots_in(&rat(-1, 1), &rat(1, 1)), 1); // excludes -1, includes 1
        assert_eq!(chain.count_roots_in(&rat(0, 1), &rat(1, 1)), 1);
        assert_eq!(chain.count_roots_in(&rat(1, 1), &rat(2, 1)), 0);
        assert_eq!(chain.count_real_roots(), 2);
    }

    #[test]
    fn counts_with_repeated_roots() {
        // (x-1)^2 (x+3)
        let f = p(&[3, -5, 1, 1]);
        let chain = SturmChain::new(&f);
        assert_eq!(chain.count_real_roots(), 2);
        assert_eq!(chain.count_roots_in(&rat(0, 1), &rat(2, 1)), 1);
    }

    #[test]
    fn isolates_sqrt2() {
        let f = p(&[-2, 0, 1]);
        let width = rat(1, 1 << 30);
        let (lo, hi) = isolate_largest_root(&f, &width).unwrap();
        let mid = rational_to_f64(&(&lo + &hi)) / 2.0;
        assert!((mid - 2f64.sqrt()).abs() < 1e-8);
        assert!(&hi - &lo <= width);
        assert_eq!(count_roots_in(&f, &lo, &hi), 1);
    }

    #[test]
    fn isolates_integer_root_exactly() {
        // x^2 - 4: largest root exactly 2; the even route must land on it
        let f = p(&[-4, 0, 1]);
        let width = rat(1, 1 << 20);
        let (lo, hi) = isolate_largest_root(&f, &width).unwrap();
        let two = rat(2, 1);
        assert!(lo < two && two <= hi);
    }

    #[test]
    fn zero_only_and_rootless() {
        let f = p(&[0, 0, 1]); // x^2
        let width = rat(1, 1024);
        let (lo, hi) = isolate_largest_root(&f, &width).unwrap();
        assert!(lo < BigRational::zero() && BigRational::zero() <= hi);
        let g = p(&[1, 0, 1]); // x^2 + 1
        assert!(isolate_largest_root(&g, &width).is_none());
        let constant = p(&[5]);
        assert!(isolate_largest_root(&constant, &width).is_none());
    }

    #[test]
    fn largest_of_many() {
        // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
        let f = p(&[-6, 11, -6, 1]);
        let width = rat(1, 1 << 20);
        let (lo, hi) = SturmChain::new(&f).isolate_largest_root(&width).unwrap();
        let three = rat(3, 1);
        assert!(lo < three && three <= hi);
    }
}
