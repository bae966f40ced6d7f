//! Dense polynomials in an auxiliary variable `t` with [`Scalar`]
//! coefficients. Used for exact trace-series forms, series expansion,
//! and (1-t)-multiplicity computations.

use super::{FieldSpec, Scalar};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SPoly {
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl SPoly {
    pub fn zero(field: &FieldSpec) -> Self {
        SPoly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &FieldSpec) -> Self {
        SPoly::constant(field.one())
    }

    pub fn constant(c: Scalar) -> Self {
        let field = c.field().clone();
        let mut p = SPoly {
            field,
            coeffs: vec![c],
        };
        p.trim();
        p
    }

    pub fn from_coeffs(field: &FieldSpec, coeffs: Vec<Scalar>) -> Self {
        let mut p = SPoly {
            field: field.clone(),
            coeffs,
        };
        p.trim();
        p
    }

    /// 1 - c*t^n.
    pub fn one_minus(c: &Scalar, n: usize) -> Self {
        let field = c.field().clone();
        let mut coeffs = vec![field.zero(); n + 1];
        coeffs[0] = field.one();
        coeffs[n] = c.neg();
        SPoly::from_coeffs(&field, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, n: usize) -> Scalar {
        self.coeffs
            .get(n)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &SPoly) -> SPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect();
        SPoly::from_coeffs(&self.field, coeffs)
    }

    pub fn sub(&self, other: &SPoly) -> SPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).sub(&other.coeff(i))).collect();
        SPoly::from_coeffs(&self.field, coeffs)
    }

    pub fn mul(&self, other: &SPoly) -> SPoly {
        if self.is_zero() || other.is_zero() {
            return SPoly::zero(&self.field);
        }
        let mut coeffs =
            vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        SPoly::from_coeffs(&self.field, coeffs)
    }

    pub fn scale(&self, c: &Scalar) -> SPoly {
        SPoly::from_coeffs(
            &self.field,
            self.coeffs.iter().map(|a| a.mul(c)).collect(),
        )
    }

    pub fn div_rem(&self, divisor: &SPoly) -> (SPoly, SPoly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.degree().unwrap();
        let lead_inv = divisor.leading().unwrap().inv().expect("nonzero leading");
        let mut rem = self.clone();
        let qlen = self.coeffs.len().saturating_sub(divisor.coeffs.len()) + 1;
        let mut quot = vec![self.field.zero(); qlen];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading().unwrap().mul(&lead_inv);
            let shift = rd - dd;
            quot[shift] = factor.clone();
            for (i, c) in divisor.coeffs.iter().enumerate() {
                let idx = i + shift;
                let v = rem.coeff(idx).sub(&factor.mul(c));
                rem.coeffs[idx] = v;
            }
            rem.trim();
        }
        (SPoly::from_coeffs(&self.field, quot), rem)
    }

    pub fn gcd(&self, other: &SPoly) -> SPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        // monic normalization
        if let Some(l) = a.leading().cloned() {
            if !l.is_one() {
                let inv = l.inv().unwrap();
                a = a.scale(&inv);
            }
        }
        a
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Multiplicity of t = 1 as a root, by repeated exact division by (1 - t).
    pub fn multiplicity_at_one(&self) -> usize {
        assert!(!self.is_zero());
        let one_minus_t = SPoly::one_minus(&self.field.one(), 1);
        let mut p = self.clone();
        let mut m = 0;
        while p.eval(&self.field.one()).is_zero() {
            let (q, r) = p.div_rem(&one_minus_t);
            assert!(r.is_zero());
            p = q;
            m += 1;
        }
        m
    }

    /// Power-series coefficients of 1/self up to order `k` (constant term
    /// must be nonzero).
    pub fn series_inverse(&self, k: usize) -> Vec<Scalar> {
        let c0 = self.coeff(0);
        let c0inv = c0.inv().expect("series inverse needs nonzero constant term");
        let mut out = Vec::with_capacity(k + 1);
        out.push(c0inv.clone());
        for n in 1..=k {
            // c0 * b_n = -sum_{i=1..n} a_i b_{n-i}
            let mut acc = self.field.zero();
            for i in 1..=n {
                acc = acc.add(&self.coeff(i).mul(&out[n - i]));
            }
            out.push(acc.neg().mul(&c0inv));
        }
        out
    }

    /// Series coefficients of self/den up to order `k`.
    pub fn series_quotient(&self, den: &SPoly, k: usize) -> Vec<Scalar> {
        let inv = den.series_inverse(k);
        (0..=k)
            .map(|n| {
                let mut acc = self.field.zero();
                for i in 0..=n {
                    acc = acc.add(&self.coeff(i).mul(&inv[n - i]));
                }
                acc
            })
            .collect()
    }
}

impl fmt::Display for SPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = c.to_string();
            let wrapped = if c.needs_parens() { format!("({cs})") } else { cs };
            if n == 0 {
                write!(f, "{wrapped}")?;
            } else if c.is_one() {
                write!(f, "t{}", if n > 1 { format!("^{n}") } else { String::new() })?;
            } else {
                write!(
                    f,
                    "{wrapped}*t{}",
                    if n > 1 { format!("^{n}") } else { String::new() }
                )?;
            }
        }
        Ok(())
    }
}
