//! The algebra descriptor: q, the polynomial f, and data derived from them.

use crate::error::{Error, Result};
use crate::scalars::{order_of, FieldSpec, Scalar};
use std::fmt;
use std::sync::Arc;

/// Which algebra the elements live in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Variant {
    /// The full three-generator algebra.
    Algebra,
    /// The quantum plane k_q[u, v].
    Plane,
    /// The quantum torus k_q[u^{±1}, v^{±1}] (no w).
    Torus,
}

#[derive(Debug)]
pub struct SpecInner {
    field: FieldSpec,
    q: Scalar,
    qinv: Scalar,
    /// c_0..c_d with c_d nonzero; empty encodes f = 0.
    fcoeffs: Vec<Scalar>,
    /// deg f; None encodes f = 0.
    d: Option<usize>,
    support: Vec<usize>,
    /// (wt u, wt v, wt w)
    weights: (u32, u32, u32),
    graded: bool,
    /// ord(q), None when infinite.
    qord: Option<u64>,
    degree_cap: i64,
}

/// Immutable description of one algebra B_q(f); cheap to clone and share.
#[derive(Clone, Debug)]
pub struct AlgebraSpec(pub(crate) Arc<SpecInner>);

impl PartialEq for AlgebraSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.field == other.0.field
                && self.0.q == other.0.q
                && self.0.fcoeffs == other.0.fcoeffs)
    }
}
impl Eq for AlgebraSpec {}

pub const DEFAULT_DEGREE_CAP: i64 = 64;
pub const DEFAULT_ORDER_BOUND: u64 = 512;

impl AlgebraSpec {
    /// Build a spec from q and the coefficient list c_0..c_d of f.
    /// Trailing zero coefficients are trimmed; an empty (or all-zero)
    /// list encodes f = 0.
    pub fn new(field: &FieldSpec, q: Scalar, fcoeffs: Vec<Scalar>) -> Result<AlgebraSpec> {
        if q.is_zero() {
            return Err(Error::Parameter("q must be nonzero".into()));
        }
        if q.field() != field {
            return Err(Error::Parameter("q does not belong to the field".into()));
        }
        for c in &fcoeffs {
            if c.field() != field {
                return Err(Error::Parameter(
                    "coefficient of f does not belong to the field".into(),
                ));
            }
        }
        let mut fcoeffs = fcoeffs;
        while fcoeffs.last().map_or(false, |c| c.is_zero()) {
            fcoeffs.pop();
        }
        let d = if fcoeffs.is_empty() {
            None
        } else {
            Some(fcoeffs.len() - 1)
        };
        let support: Vec<usize> = fcoeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, _)| j)
            .collect();
        let weights = match d {
            Some(d) if d >= 2 => (1, 1, (d - 1) as u32),
            _ => (1, 1, 1),
        };
        // graded iff f = 0, or f is a monomial t^d with d >= 2 so the
        // weights above make every defining relation homogeneous
        let graded = match d {
            None => true,
            Some(d) => d >= 2 && support.len() == 1 && support[0] == d,
        };
        let qinv = q.inv().expect("q nonzero");
        let qord = order_of(&q, DEFAULT_ORDER_BOUND)?;
        Ok(AlgebraSpec(Arc::new(SpecInner {
            field: field.clone(),
            q,
            qinv,
            fcoeffs,
            d,
            support,
            weights,
            graded,
            qord,
            degree_cap: DEFAULT_DEGREE_CAP,
        })))
    }

    /// Same spec with a different filtered-degree cap for products.
    pub fn with_degree_cap(&self, cap: i64) -> AlgebraSpec {
        let inner = &self.0;
        AlgebraSpec(Arc::new(SpecInner {
            field: inner.field.clone(),
            q: inner.q.clone(),
            qinv: inner.qinv.clone(),
            fcoeffs: inner.fcoeffs.clone(),
            d: inner.d,
            support: inner.support.clone(),
            weights: inner.weights,
            graded: inner.graded,
            qord: inner.qord,
            degree_cap: cap,
        }))
    }

    /// Monomial f = t^d over the given field (d >= 0).
    pub fn monomial_f(field: &FieldSpec, q: Scalar, d: usize) -> Result<AlgebraSpec> {
        let mut coeffs = vec![field.zero(); d + 1];
        coeffs[d] = field.one();
        AlgebraSpec::new(field, q, coeffs)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.0.field
    }

    pub fn q(&self) -> &Scalar {
        &self.0.q
    }

    pub fn q_inv(&self) -> &Scalar {
        &self.0.qinv
    }

    /// c_0..c_d (empty for f = 0).
    pub fn fcoeffs(&self) -> &[Scalar] {
        &self.0.fcoeffs
    }

    /// deg f, or None for f = 0.
    pub fn degf(&self) -> Option<usize> {
        self.0.d
    }

    /// Indices j with c_j != 0.
    pub fn support(&self) -> &[usize] {
        &self.0.support
    }

    pub fn weights(&self) -> (u32, u32, u32) {
        self.0.weights
    }

    pub fn is_graded(&self) -> bool {
        self.0.graded
    }

    /// ord(q), None for infinite order.
    pub fn q_order(&self) -> Option<u64> {
        self.0.qord
    }

    pub fn degree_cap(&self) -> i64 {
        self.0.degree_cap
    }

    pub fn f_is_zero(&self) -> bool {
        self.0.fcoeffs.is_empty()
    }

    /// f evaluated at a scalar.
    pub fn f_at(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field().zero();
        for c in self.0.fcoeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn describe_f(&self) -> String {
        if self.f_is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (j, c) in self.0.fcoeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coeff = if c.is_one() && j > 0 {
                String::new()
            } else {
                let s = c.to_string();
                let s = if c.needs_parens() { format!("({s})") } else { s };
                if j > 0 {
                    format!("{s}*")
                } else {
                    s
                }
            };
            let var = match j {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{j}"),
            };
            parts.push(format!("{coeff}{var}"));
        }
        parts.join(" + ")
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B_q(f) with q = {}, f = {}", self.q(), self.describe_f())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_data() {
        let f = FieldSpec::rational_function();
        let q = f.generator().unwrap();
        let spec = AlgebraSpec::monomial_f(&f, q.clone(), 3).unwrap();
        assert_eq!(spec.degf(), Some(3));
        assert_eq!(spec.support(), &[3]);
        assert_eq!(spec.weights(), (1, 1, 2));
        assert!(spec.is_graded());
        assert_eq!(spec.q_order(), None);

        // f = 1 + t^2 is filtered, not graded
        let spec2 = AlgebraSpec::new(&f, q.clone(), vec![f.one(), f.zero(), f.one()]).unwrap();
        assert!(!spec2.is_graded());
        assert_eq!(spec2.support(), &[0, 2]);
        assert_eq!(spec2.weights(), (1, 1, 1));

        // f = 0 is graded with unit weights
        let spec3 = AlgebraSpec::new(&f, q.clone(), vec![]).unwrap();
        assert!(spec3.is_graded());
        assert!(spec3.f_is_zero());

        // f = t is filtered (weights all 1)
        let spec4 = AlgebraSpec::new(&f, q, vec![f.zero(), f.one()]).unwrap();
        assert!(!spec4.is_graded());
        assert_eq!(spec4.weights(), (1, 1, 1));
    }

    #[test]
    fn q_zero_rejected() {
        let f = FieldSpec::rational();
        assert!(AlgebraSpec::new(&f, f.zero(), vec![]).is_err());
    }

    #[test]
    fn q_order_detected() {
        let c = FieldSpec::cyclotomic(4).unwrap();
        let spec = AlgebraSpec::monomial_f(&c, c.generator().unwrap(), 2).unwrap();
        assert_eq!(spec.q_order(), Some(4));
        let spec2 = AlgebraSpec::monomial_f(&c, c.generator().unwrap().pow(2), 2).unwrap();
        assert_eq!(spec2.q_order(), Some(2));
    }
}
