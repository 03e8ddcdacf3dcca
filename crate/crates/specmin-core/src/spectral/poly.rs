//! Dense integer polynomials with the exact operations the certificate layer
//! needs: arithmetic, signs at rational points, pseudo-remainders, gcd and
//! square-free parts. Coefficients are arbitrary-precision; no floating
//! point touches a certificate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Polynomial with ascending integer coefficients; empty vector is the zero
/// polynomial, otherwise the last coefficient is nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl std::fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}*x"),
                _ => format!("{c}*x^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly { coeffs: vec![BigInt::one()] }
    }

    pub fn x() -> Self {
        IntPoly { coeffs: vec![BigInt::zero(), BigInt::one()] }
    }

    pub fn constant(c: i64) -> Self {
        IntPoly::from_coeffs(vec![BigInt::from(c)])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn mul_x_pow(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        IntPoly { coeffs }
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Sign of the value at a rational point, evaluated homogeneously in
    /// integers (no rounding).
    pub fn sign_at(&self, x: &BigRational) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let p = x.numer();
        let q = x.denom(); // canonical form keeps q > 0
        let n = self.coeffs.len() - 1;
        // sum of c_i * p^i * q^(n-i) via Horner in p with running q powers
        let mut acc = self.coeffs[n].clone();
        for i in (0..n).rev() {
            acc = acc * p + &self.coeffs[i] * q.pow((n - i) as u32);
        }
        match acc.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    /// Floating evaluation (screening only; certificates never rely on it).
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + big_to_f64(c);
        }
        acc
    }

    /// Largest absolute coefficient ratio bound: every real root lies in
    /// (-B, B] with B = 1 + max|c_i| / |c_n|, rounded up to an integer.
    pub fn cauchy_root_bound(&self) -> BigInt {
        let lead = self.leading().expect("root bound of zero polynomial").abs();
        let max_c = self.coeffs.iter().map(Signed::abs).max().unwrap();
        max_c.div_ceil(&lead) + BigInt::one()
    }

    /// Content: gcd of the coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content; sign of the leading coefficient is kept.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let g = self.content();
        if g.is_one() {
            return self.clone();
        }
        IntPoly { coeffs: self.coeffs.iter().map(|c| c / &g).collect() }
    }

    /// Pseudo-remainder scaled by a positive constant, so the sign of the
    /// true rational remainder is preserved at every point.
    pub fn signed_pseudo_rem(&self, divisor: &IntPoly) -> IntPoly {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let d_deg = divisor.degree().unwrap();
        let mut rem = self.coeffs.clone();
        let lead = divisor.leading().unwrap().clone();
        let mut flips = 0usize;
        while rem.len() > d_deg {
            let r_deg = rem.len() - 1;
            let factor = rem[r_deg].clone();
            if lead.is_negative() {
                flips += 1;
            }
            // rem := lead * rem - factor * x^(r_deg - d_deg) * divisor
            for c in rem.iter_mut() {
                *c *= &lead;
            }
            let shift = r_deg - d_deg;
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &factor * dc;
            }
            debug_assert!(rem[r_deg].is_zero());
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        let mut out = IntPoly::from_coeffs(rem);
        if flips % 2 == 1 {
            out = out.neg();
        }
        out
    }

    /// Primitive polynomial gcd with positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.is_zero() {
            return normalize_sign(b);
        }
        if b.is_zero() {
            return normalize_sign(a);
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.signed_pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        normalize_sign(a)
    }

    /// Square-free part: self / gcd(self, self'), primitive, keeping the
    /// original leading sign.
    pub fn square_free_part(&self) -> IntPoly {
        if self.degree().unwrap_or(0) <= 1 {
            return self.primitive_part();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.primitive_part();
        }
        let q = self
            .div_exact_rational(&g)
            .expect("gcd divides the polynomial");
        let q = q.primitive_part();
        if self.leading().unwrap().is_negative() != q.leading().unwrap().is_negative() {
            q.neg()
        } else {
            q
        }
    }

    /// Exact division over the rationals; None when the remainder is nonzero.
    /// The quotient is returned as an integer polynomial scaled primitive.
    pub fn div_exact_rational(&self, divisor: &IntPoly) -> Option<IntPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let d_deg = divisor.degree().unwrap();
        if self.degree().unwrap() < d_deg {
            return None;
        }
        let mut rem: Vec<BigRational> =
            self.coeffs.iter().map(|c| BigRational::from(c.clone())).collect();
        let lead = BigRational::from(divisor.leading().unwrap().clone());
        let mut quot = vec![BigRational::zero(); rem.len() - d_deg];
        while rem.len() > d_deg {
            let r_deg = rem.len() - 1;
            let q = &rem[r_deg] / &lead;
            let shift = r_deg - d_deg;
            quot[shift] = q.clone();
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                let delta = &q * BigRational::from(dc.clone());
                rem[shift + i] -= delta;
            }
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        if !rem.is_empty() {
            return None;
        }
        // clear denominators, return primitive integer quotient
        let mut denom_lcm = BigInt::one();
        for q in &quot {
            denom_lcm = denom_lcm.lcm(q.denom());
        }
        let coeffs: Vec<BigInt> = quot
            .iter()
            .map(|q| q.numer() * (&denom_lcm / q.denom()))
            .collect();
        Some(IntPoly::from_coeffs(coeffs).primitive_part())
    }

    /// True when `divisor` divides self over the rationals.
    pub fn divisible_by(&self, divisor: &IntPoly) -> bool {
        self.div_exact_rational(divisor).is_some()
    }

    /// Writes the polynomial as x^t * even(x^2) when the support allows it.
    /// Returns (t, even-part coefficients as a polynomial in x^2).
    pub fn parity_decompose(&self) -> Option<(usize, IntPoly)> {
        if self.is_zero() {
            return None;
        }
        let t = self.coeffs.iter().position(|c| !c.is_zero()).unwrap();
        let mut even = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().skip(t) {
            if (i - t) % 2 == 1 {
                if !c.is_zero() {
                    return None;
                }
            } else {
                even.push(c.clone());
            }
        }
        Some((t, IntPoly::from_coeffs(even)))
    }

    /// Composes with a shift: p(x + c).
    pub fn compose_shift(&self, c: &BigInt) -> IntPoly {
        // Horner: (((a_n)(x+c) + a_{n-1})(x+c) + ...)
        let mut acc = IntPoly::zero();
        let shift = IntPoly::from_coeffs(vec![c.clone(), BigInt::one()]);
        for coeff in self.coeffs.iter().rev() {
            acc = acc.mul(&shift);
            acc = acc.add(&IntPoly::from_coeffs(vec![coeff.clone()]));
        }
        acc
    }

    /// Substitutes x^2 for x: p(x^2) as a polynomial in x.
    pub fn compose_square(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); 2 * (self.coeffs.len() - 1) + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * i] = c.clone();
        }
        IntPoly::from_coeffs(coeffs)
    }
}

fn normalize_sign(p: IntPoly) -> IntPoly {
    match p.leading() {
        Some(l) if l.is_negative() => p.neg(),
        _ => p,
    }
}

pub fn big_to_f64(c: &BigInt) -> f64 {
    num_traits::ToPrimitive::to_f64(c).unwrap_or(f64::INFINITY)
}

pub fn rational_to_f64(x: &BigRational) -> f64 {
    num_traits::ToPrimitive::to_f64(x).unwrap_or_else(|| {
        big_to_f64(x.numer()) / big_to_f64(x.denom())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64(coeffs)
    }

    #[test]
    fn arithmetic_basics() {
        let a = p(&[1, 2, 3]); // 3x^2+2x+1
        let b = p(&[0, 1]); // x
        assert_eq!(a.mul(&b), p(&[0, 1, 2, 3]));
        assert_eq!(a.add(&b), p(&[1, 3, 3]));
        assert_eq!(a.sub(&a), IntPoly::zero());
        assert_eq!(a.derivative(), p(&[2, 6]));
        assert_eq!(p(&[0, 0, 0]).degree(), None);
    }

    #[test]
    fn signs_at_rationals() {
        let q = p(&[-2, 0, 1]); // x^2-2
        let at = |num: i64, den: i64| {
            q.sign_at(&BigRational::new(BigInt::from(num), BigInt::from(den)))
        };
        assert_eq!(at(1, 1), -1);
        assert_eq!(at(3, 2), 1);
        assert_eq!(at(7, 5), -1);
        assert_eq!(at(0, 1), -1);
        assert_eq!(p(&[0, 1]).sign_at(&BigRational::zero()), 0);
    }

    #[test]
    fn gcd_and_square_free() {
        // (x-1)^2 (x+2)
        let f = p(&[2, -3, 0, 1]);
        let sf = f.square_free_part();
        assert_eq!(sf, p(&[-2, 1, 1])); // (x-1)(x+2)
        let g = p(&[-1, 0, 1]); // (x-1)(x+1)
        assert_eq!(f.gcd(&g), p(&[-1, 1]));
        assert!(f.divisible_by(&p(&[-1, 1])));
        assert!(!f.divisible_by(&p(&[1, 1, 1])));
    }

    #[test]
    fn pseudo_rem_sign_preserved() {
        let f = p(&[-2, 0, 1]);
        let g = p(&[0, 2]); // 2x, negative leading tests below
        let r = f.signed_pseudo_rem(&g);
        // true remainder of (x^2-2)/(2x) is -2; sign must match
        assert!(r.leading().unwrap().is_negative());
        let g_neg = p(&[0, -2]);
        let r2 = f.signed_pseudo_rem(&g_neg);
        assert!(r2.leading().unwrap().is_negative());
    }

    #[test]
    fn parity_and_compositions() {
        let f = p(&[0, 2, 0, -1, 0, 1]); // x^5 - x^3 + 2x = x(x^4 - x^2 + 2)
        let (t, even) = f.parity_decompose().unwrap();
        assert_eq!(t, 1);
        assert_eq!(even, p(&[2, -1, 1]));
        assert!(p(&[1, 1, 1]).parity_decompose().is_none());
        assert_eq!(even.compose_square(), p(&[2, 0, -1, 0, 1]));
        // (x+1)^2 from x^2
        assert_eq!(p(&[0, 0, 1]).compose_shift(&BigInt::one()), p(&[1, 2, 1]));
    }
}
