//! Dense univariate polynomials over Q, the coefficient engine behind
//! cyclotomic and rational-function scalars.

use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt;

/// A polynomial with rational coefficients, lowest degree first, no
/// trailing zeros (so the zero polynomial has an empty coefficient list).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = QPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = QPoly { coeffs };
        p.trim();
        p
    }

    /// The monomial c*x^n.
    pub fn monomial(c: BigRational, n: usize) -> Self {
        if c.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); n + 1];
        coeffs[n] = c;
        QPoly { coeffs }
    }

    /// x^n - 1.
    pub fn xn_minus_one(n: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); n + 1];
        coeffs[0] = -BigRational::one();
        coeffs[n] = BigRational::one();
        QPoly { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, n: usize) -> BigRational {
        self.coeffs.get(n).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        QPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - other.coeff(i));
        }
        QPoly::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs =
            vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigRational) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Euclidean division; panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &QPoly) -> (QPoly, QPoly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.degree().unwrap();
        let lead_inv = divisor.leading().unwrap().recip();
        let mut rem = self.clone();
        let mut quot_coeffs = vec![
            BigRational::zero();
            self.coeffs.len().saturating_sub(divisor.coeffs.len()) + 1
        ];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading().unwrap() * &lead_inv;
            let shift = rd - dd;
            quot_coeffs[shift] = factor.clone();
            // rem -= factor * x^shift * divisor
            for (i, c) in divisor.coeffs.iter().enumerate() {
                let idx = i + shift;
                let v = rem.coeff(idx) - &factor * c;
                if idx < rem.coeffs.len() {
                    rem.coeffs[idx] = v;
                }
            }
            rem.trim();
        }
        (QPoly::from_coeffs(quot_coeffs), rem)
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.into_monic()
    }

    /// Scale so the leading coefficient is 1 (zero stays zero).
    pub fn into_monic(self) -> QPoly {
        match self.leading() {
            None => self,
            Some(l) if l.is_one() => self,
            Some(l) => {
                let inv = l.recip();
                self.scale(&inv)
            }
        }
    }

    /// Extended Euclid: returns (g, s, t) with s*self + t*other = g, g monic.
    pub fn extended_gcd(&self, other: &QPoly) -> (QPoly, QPoly, QPoly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (QPoly::one(), QPoly::zero());
        let (mut t0, mut t1) = (QPoly::zero(), QPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if let Some(l) = r0.leading().cloned() {
            if !l.is_one() {
                let inv = l.recip();
                return (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv));
            }
        }
        (r0, s0, t0)
    }

    pub fn pow(&self, e: u32) -> QPoly {
        let mut acc = QPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// True if every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }
}

fn fmt_rational(c: &BigRational) -> String {
    if c.denom().is_one() {
        format!("{}", c.numer())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Renders with the given variable name, e.g. `q^2 - 2*q + 1`.
pub fn render_poly(p: &QPoly, var: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let one = BigInt::one();
    let mut out = String::new();
    for (n, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let lead = out.is_empty();
        if lead {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let coeff_is_one = mag.numer() == &one && mag.denom() == &one;
        if n == 0 {
            out.push_str(&fmt_rational(&mag));
        } else {
            if !coeff_is_one {
                out.push_str(&fmt_rational(&mag));
                out.push('*');
            }
            out.push_str(var);
            if n > 1 {
                out.push_str(&format!("^{}", n));
            }
        }
    }
    out
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_poly(self, "x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::FromPrimitive;

    fn q(n: i64) -> BigRational {
        BigRational::from_i64(n).unwrap()
    }

    #[test]
    fn div_rem_roundtrip() {
        let a = QPoly::from_coeffs(vec![q(1), q(0), q(-3), q(2)]);
        let b = QPoly::from_coeffs(vec![q(-1), q(1)]);
        let (quot, rem) = a.div_rem(&b);
        assert_eq!(quot.mul(&b).add(&rem), a);
    }

    #[test]
    fn gcd_of_common_factor() {
        // (x-1)(x+2) and (x-1)(x-3) have gcd x-1
        let f = QPoly::from_coeffs(vec![q(-2), q(-1), q(1)]).mul(&QPoly::one());
        let a = QPoly::from_coeffs(vec![q(-1), q(1)]).mul(&QPoly::from_coeffs(vec![q(2), q(1)]));
        let b = QPoly::from_coeffs(vec![q(-1), q(1)]).mul(&QPoly::from_coeffs(vec![q(-3), q(1)]));
        assert_eq!(a.gcd(&b), QPoly::from_coeffs(vec![q(-1), q(1)]));
        let _ = f;
    }

    #[test]
    fn extended_gcd_bezout() {
        let a = QPoly::from_coeffs(vec![q(1), q(1), q(1)]);
        let b = QPoly::from_coeffs(vec![q(-1), q(1)]);
        let (g, s, t) = a.extended_gcd(&b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }

    #[test]
    fn render_omits_units() {
        let p = QPoly::from_coeffs(vec![q(1), q(-2), q(1)]);
        assert_eq!(render_poly(&p, "q"), "q^2 - 2*q + 1");
    }
}
