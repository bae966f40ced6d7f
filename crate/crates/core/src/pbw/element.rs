//! Sparse elements in PBW normal form, with exact arithmetic.

use super::monomial::Monomial;
use super::rewrite::{monomial_product, normal_form_words, Strategy, Word};
use super::spec::{AlgebraSpec, Variant};
use crate::error::{Error, Result};
use crate::scalars::Scalar;
use std::collections::BTreeMap;
use std::fmt;

/// A finite scalar-weighted combination of PBW monomials. No zero
/// coefficients are stored, so structural equality is algebra equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Element {
    spec: AlgebraSpec,
    variant: Variant,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Element {
    pub(crate) fn from_terms(
        spec: AlgebraSpec,
        variant: Variant,
        mut terms: BTreeMap<Monomial, Scalar>,
    ) -> Element {
        terms.retain(|_, c| !c.is_zero());
        Element {
            spec,
            variant,
            terms,
        }
    }

    pub fn zero(spec: &AlgebraSpec, variant: Variant) -> Element {
        Element {
            spec: spec.clone(),
            variant,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(spec: &AlgebraSpec, variant: Variant) -> Element {
        Element::monomial(spec, variant, Monomial::ONE, spec.field().one())
    }

    pub fn scalar(spec: &AlgebraSpec, variant: Variant, c: Scalar) -> Element {
        Element::monomial(spec, variant, Monomial::ONE, c)
    }

    pub fn monomial(spec: &AlgebraSpec, variant: Variant, m: Monomial, c: Scalar) -> Element {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Element {
            spec: spec.clone(),
            variant,
            terms,
        }
    }

    pub fn gen_u(spec: &AlgebraSpec, variant: Variant) -> Element {
        Element::monomial(spec, variant, Monomial::new(0, 1, 0), spec.field().one())
    }

    pub fn gen_v(spec: &AlgebraSpec, variant: Variant) -> Element {
        Element::monomial(spec, variant, Monomial::new(1, 0, 0), spec.field().one())
    }

    pub fn gen_w(spec: &AlgebraSpec) -> Element {
        Element::monomial(
            spec,
            Variant::Algebra,
            Monomial::new(0, 0, 1),
            spec.field().one(),
        )
    }

    /// f(v) (or f(u)) as an element.
    pub fn f_of_v(spec: &AlgebraSpec, variant: Variant) -> Element {
        let mut terms = BTreeMap::new();
        for &j in spec.support() {
            terms.insert(Monomial::new(j as i64, 0, 0), spec.fcoeffs()[j].clone());
        }
        Element::from_terms(spec.clone(), variant, terms)
    }

    pub fn f_of_u(spec: &AlgebraSpec, variant: Variant) -> Element {
        let mut terms = BTreeMap::new();
        for &j in spec.support() {
            terms.insert(Monomial::new(0, j as i64, 0), spec.fcoeffs()[j].clone());
        }
        Element::from_terms(spec.clone(), variant, terms)
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.spec.field().zero())
    }

    /// The constant term.
    pub fn constant_coeff(&self) -> Scalar {
        self.coeff(&Monomial::ONE)
    }

    /// Is this a scalar multiple of 1?
    pub fn as_scalar(&self) -> Option<Scalar> {
        if self.terms.is_empty() {
            return Some(self.spec.field().zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Monomial::ONE) {
                return Some(c.clone());
            }
        }
        None
    }

    /// Max weighted degree of the support; None for zero.
    pub fn degree(&self) -> Option<i64> {
        self.terms
            .keys()
            .map(|m| m.weighted_degree(self.spec.weights()))
            .max()
    }

    /// True if all monomials share one weighted degree (zero counts as
    /// homogeneous).
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self
            .terms
            .keys()
            .map(|m| m.weighted_degree(self.spec.weights()));
        match degs.next() {
            None => true,
            Some(d0) => degs.all(|d| d == d0),
        }
    }

    /// The degree-k homogeneous component.
    pub fn homogeneous_part(&self, k: i64) -> Element {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.weighted_degree(self.spec.weights()) == k)
            .map(|(m, c)| (*m, c.clone()))
            .collect();
        Element::from_terms(self.spec.clone(), self.variant, terms)
    }

    fn check_compatible(&self, other: &Element) -> Result<()> {
        if self.spec != other.spec || self.variant != other.variant {
            return Err(Error::SpecMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Element) -> Element {
        self.try_add(other).expect("spec mismatch in add")
    }

    pub fn try_add(&self, other: &Element) -> Result<Element> {
        self.check_compatible(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            use std::collections::btree_map::Entry;
            match terms.entry(*m) {
                Entry::Vacant(e) => {
                    e.insert(c.clone());
                }
                Entry::Occupied(mut e) => {
                    let s = e.get().add(c);
                    if s.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = s;
                    }
                }
            }
        }
        Ok(Element {
            spec: self.spec.clone(),
            variant: self.variant,
            terms,
        })
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Element {
        Element {
            spec: self.spec.clone(),
            variant: self.variant,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero(&self.spec, self.variant);
        }
        Element {
            spec: self.spec.clone(),
            variant: self.variant,
            terms: self.terms.iter().map(|(m, s)| (*m, s.mul(c))).collect(),
        }
    }

    /// Product, reduced to PBW normal form. Panics on spec mismatch or
    /// a blown degree cap; use [`Element::try_mul`] for checked errors.
    pub fn mul(&self, other: &Element) -> Element {
        self.try_mul(other).expect("element multiplication failed")
    }

    pub fn try_mul(&self, other: &Element) -> Result<Element> {
        self.check_compatible(other)?;
        let cap = self.spec.degree_cap();
        if let (Some(d1), Some(d2)) = (self.degree(), other.degree()) {
            if d1 + d2 > cap {
                return Err(Error::DegreeCapExceeded {
                    degree: d1 + d2,
                    cap,
                });
            }
        }
        let mut acc = Element::zero(&self.spec, self.variant);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let prod = monomial_product(&self.spec, self.variant, m1, m2)?;
                let c = c1.mul(c2);
                acc = acc.add(&prod.scale(&c));
            }
        }
        Ok(acc)
    }

    pub fn pow(&self, e: u32) -> Element {
        let mut acc = Element::one(&self.spec, self.variant);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// mul(x, g) - mul(g, x).
    pub fn commutator(&self, other: &Element) -> Element {
        self.try_commutator(other).expect("commutator failed")
    }

    pub fn try_commutator(&self, other: &Element) -> Result<Element> {
        Ok(self.try_mul(other)?.sub(&other.try_mul(self)?))
    }

    /// Reinterpret a plane element inside the full algebra (or torus).
    pub fn with_variant(&self, variant: Variant) -> Result<Element> {
        for m in self.terms.keys() {
            match variant {
                Variant::Algebra | Variant::Plane => {
                    if m.i < 0 || m.j < 0 {
                        return Err(Error::VariantError(
                            "negative exponents only exist in the torus".into(),
                        ));
                    }
                    if variant == Variant::Plane && m.k != 0 {
                        return Err(Error::VariantError(
                            "w does not live in the plane".into(),
                        ));
                    }
                }
                Variant::Torus => {
                    if m.k != 0 {
                        return Err(Error::VariantError("w does not live in the torus".into()));
                    }
                }
            }
        }
        Ok(Element {
            spec: self.spec.clone(),
            variant,
            terms: self.terms.clone(),
        })
    }
}

/// Reduce a list of scalar-weighted words to an element of the given
/// variant; the public normal-form entry point.
pub fn normal_form(
    spec: &AlgebraSpec,
    variant: Variant,
    words: &[Word],
    strategy: Strategy,
) -> Result<Element> {
    normal_form_words(spec, variant, words, strategy)
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut factors: Vec<String> = Vec::new();
            if m.i != 0 {
                factors.push(if m.i == 1 {
                    "v".into()
                } else {
                    format!("v^{}", m.i)
                });
            }
            if m.j != 0 {
                factors.push(if m.j == 1 {
                    "u".into()
                } else {
                    format!("u^{}", m.j)
                });
            }
            if m.k != 0 {
                factors.push(if m.k == 1 {
                    "w".into()
                } else {
                    format!("w^{}", m.k)
                });
            }
            let coeff = if c.is_one() && !factors.is_empty() {
                None
            } else {
                let s = c.to_string();
                Some(if c.needs_parens() { format!("({s})") } else { s })
            };
            let mut parts = Vec::new();
            if let Some(cs) = coeff {
                parts.push(cs);
            }
            parts.extend(factors);
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

/// JSON encoding as a list of {i, j, k, coeff} records.
pub fn element_to_json(e: &Element) -> serde_json::Value {
    let terms: Vec<serde_json::Value> = e
        .terms()
        .iter()
        .map(|(m, c)| {
            serde_json::json!({
                "i": m.i,
                "j": m.j,
                "k": m.k,
                "coeff": c.to_string(),
            })
        })
        .collect();
    serde_json::json!({ "terms": terms })
}

pub fn element_from_json(
    spec: &AlgebraSpec,
    variant: Variant,
    v: &serde_json::Value,
) -> Result<Element> {
    let terms = v
        .get("terms")
        .and_then(|t| t.as_array())
        .ok_or_else(|| Error::Parse("element JSON needs a 'terms' array".into()))?;
    let mut acc = Element::zero(spec, variant);
    for t in terms {
        let geti = |key: &str| -> Result<i64> {
            t.get(key)
                .and_then(|x| x.as_i64())
                .ok_or_else(|| Error::Parse(format!("term missing integer '{key}'")))
        };
        let (i, j, k) = (geti("i")?, geti("j")?, geti("k")?);
        if k < 0 {
            return Err(Error::Parse("w exponent must be nonnegative".into()));
        }
        let coeff_s = t
            .get("coeff")
            .and_then(|x| x.as_str())
            .ok_or_else(|| Error::Parse("term missing 'coeff' string".into()))?;
        let c = super::parse::parse_coeff(spec, coeff_s)?;
        acc = acc.add(&Element::monomial(
            spec,
            variant,
            Monomial::new(i, j, k as u32),
            c,
        ));
    }
    acc.with_variant(variant)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::FieldSpec;

    fn generic_spec(d: usize) -> AlgebraSpec {
        let f = FieldSpec::rational_function();
        AlgebraSpec::monomial_f(&f, f.generator().unwrap(), d).unwrap()
    }

    #[test]
    fn defining_relations() {
        let spec = generic_spec(2);
        let q = spec.q().clone();
        let u = Element::gen_u(&spec, Variant::Algebra);
        let v = Element::gen_v(&spec, Variant::Algebra);
        let w = Element::gen_w(&spec);

        // uv = q vu
        assert_eq!(u.mul(&v), v.mul(&u).scale(&q));
        // wu = q uw + v^2
        let wu = w.mul(&u);
        let expect = u.mul(&w).scale(&q).add(&v.mul(&v));
        assert_eq!(wu, expect);
        // wv = q^{-1} vw + u^2
        let wv = w.mul(&v);
        let expect = v.mul(&w).scale(spec.q_inv()).add(&u.mul(&u));
        assert_eq!(wv, expect);
    }

    #[test]
    fn w_times_u_squared_matches_closed_form() {
        // w u^2 = q^2 u^2 w + (1 + q^3) v^2 u for f = t^2
        let spec = generic_spec(2);
        let q = spec.q().clone();
        let u = Element::gen_u(&spec, Variant::Algebra);
        let v = Element::gen_v(&spec, Variant::Algebra);
        let w = Element::gen_w(&spec);
        let lhs = w.mul(&u.pow(2));
        let coeff = spec.field().one().add(&q.pow(3));
        let rhs = u
            .pow(2)
            .mul(&w)
            .scale(&q.pow(2))
            .add(&v.pow(2).mul(&u).scale(&coeff));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn commutator_vanishes_at_q_one() {
        let f = FieldSpec::rational();
        let spec = AlgebraSpec::new(&f, f.one(), vec![f.zero(), f.one()]).unwrap();
        let u = Element::gen_u(&spec, Variant::Plane);
        let v = Element::gen_v(&spec, Variant::Plane);
        assert!(u.commutator(&v).is_zero());
    }

    #[test]
    fn torus_inverses() {
        let spec = generic_spec(2);
        let u = Element::gen_u(&spec, Variant::Torus);
        let uinv = Element::monomial(
            &spec,
            Variant::Torus,
            Monomial::new(0, -1, 0),
            spec.field().one(),
        );
        assert_eq!(u.mul(&uinv), Element::one(&spec, Variant::Torus));
        assert_eq!(uinv.mul(&u), Element::one(&spec, Variant::Torus));
        let v = Element::gen_v(&spec, Variant::Torus);
        let vinv = Element::monomial(
            &spec,
            Variant::Torus,
            Monomial::new(-1, 0, 0),
            spec.field().one(),
        );
        assert!(v.mul(&vinv).sub(&Element::one(&spec, Variant::Torus)).is_zero());
        // u^{-1} v = q^{-1} v u^{-1}
        assert_eq!(
            uinv.mul(&v),
            v.mul(&uinv).scale(spec.q_inv())
        );
    }

    #[test]
    fn degree_cap_guard() {
        let spec = generic_spec(2).with_degree_cap(6);
        let u = Element::gen_u(&spec, Variant::Algebra);
        let x = u.pow(4);
        assert!(matches!(
            x.try_mul(&x),
            Err(Error::DegreeCapExceeded { degree: 8, cap: 6 })
        ));
    }

    #[test]
    fn empty_word_is_identity() {
        let spec = generic_spec(2);
        let e = normal_form(
            &spec,
            Variant::Algebra,
            &[Word::new(spec.field().one(), vec![])],
            Strategy::Leftmost,
        )
        .unwrap();
        assert_eq!(e, Element::one(&spec, Variant::Algebra));
    }

    #[test]
    fn w_rejected_in_torus() {
        let spec = generic_spec(2);
        let r = normal_form(
            &spec,
            Variant::Torus,
            &[Word::new(spec.field().one(), vec![super::super::rewrite::Letter::W])],
            Strategy::Leftmost,
        );
        assert!(matches!(r, Err(Error::VariantError(_))));
    }
}
