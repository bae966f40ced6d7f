//! Element text grammar. Products of scalars and generator powers in any
//! order; the parser canonicalizes through the rewriting kernel, so
//! strings like `u*v` and `q*v*u` denote the same element.

use super::element::Element;
use super::monomial::Monomial;
use super::spec::{AlgebraSpec, Variant};
use crate::error::{Error, Result};
use crate::scalars::parse::{tokenize, ExprValue, Parser, Token};
use crate::scalars::{FieldKind, Scalar};
use num::BigRational;

impl ExprValue for Element {
    fn e_add(&self, other: &Self) -> Result<Self> {
        self.try_add(other)
    }
    fn e_sub(&self, other: &Self) -> Result<Self> {
        Ok(self.sub(other))
    }
    fn e_mul(&self, other: &Self) -> Result<Self> {
        self.try_mul(other)
    }
    fn e_div(&self, other: &Self) -> Result<Self> {
        match other.as_scalar() {
            Some(c) if !c.is_zero() => {
                let inv = c.inv().unwrap();
                Ok(self.scale(&inv))
            }
            Some(_) => Err(Error::Parse("division by zero".into())),
            None => Err(Error::Parse(
                "division is only defined by scalar elements".into(),
            )),
        }
    }
    fn e_neg(&self) -> Self {
        self.neg()
    }
    fn e_pow(&self, e: i64) -> Result<Self> {
        if e >= 0 {
            return Ok(self.pow(e as u32));
        }
        // negative exponents: scalars invert; u, v invert in the torus
        if let Some(c) = self.as_scalar() {
            if c.is_zero() {
                return Err(Error::Parse("negative power of zero".into()));
            }
            return Ok(Element::scalar(self.spec(), self.variant(), c.pow(e)));
        }
        if self.variant() == Variant::Torus && self.terms().len() == 1 {
            let (m, c) = self.terms().iter().next().unwrap();
            if c.is_one() && m.k == 0 && (m.i == 0) != (m.j == 0) {
                let m2 = Monomial::new(m.i * e.unsigned_abs() as i64 * m.i.signum().min(1).max(-1), 0, 0);
                let _ = m2; // single-variable powers handled below
                let mm = Monomial::new(m.i * e, m.j * e, 0);
                return Ok(Element::monomial(
                    self.spec(),
                    Variant::Torus,
                    mm,
                    self.spec().field().one(),
                ));
            }
        }
        Err(Error::Parse(
            "negative powers are only defined for scalars and torus generators".into(),
        ))
    }
}

/// Parse an element expression against a spec and variant.
pub fn parse_element(spec: &AlgebraSpec, variant: Variant, input: &str) -> Result<Element> {
    let tokens = tokenize(input)?;
    let spec_c = spec.clone();
    let mut parser = Parser::new(&tokens, move |t: &Token| -> Result<Element> {
        match t {
            Token::Int(n) => Ok(Element::scalar(
                &spec_c,
                variant,
                spec_c
                    .field()
                    .from_rational(BigRational::from_integer(n.clone())),
            )),
            Token::Sym('u') => Ok(Element::gen_u(&spec_c, variant)),
            Token::Sym('v') => Ok(Element::gen_v(&spec_c, variant)),
            Token::Sym('w') => {
                if variant != Variant::Algebra {
                    return Err(Error::VariantError(format!(
                        "w is not defined in the {variant:?} variant"
                    )));
                }
                Ok(Element::gen_w(&spec_c))
            }
            Token::Sym('q') => Ok(Element::scalar(&spec_c, variant, spec_c.q().clone())),
            Token::Sym('z') => match spec_c.field().kind() {
                FieldKind::Cyclotomic(_) => Ok(Element::scalar(
                    &spec_c,
                    variant,
                    spec_c.field().generator().unwrap(),
                )),
                _ => Err(Error::Parse(
                    "symbol 'z' is only defined in cyclotomic fields".into(),
                )),
            },
            Token::Sym(c) => Err(Error::Parse(format!("unknown symbol '{c}'"))),
            _ => unreachable!(),
        }
    });
    parser.parse_all()
}

/// Parse a coefficient string in the spec's field; `q` denotes the
/// spec's q value in any field.
pub fn parse_coeff(spec: &AlgebraSpec, input: &str) -> Result<Scalar> {
    let e = parse_element(spec, Variant::Plane, input)?;
    e.as_scalar()
        .ok_or_else(|| Error::Parse(format!("'{input}' is not a scalar")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pbw::element::{element_from_json, element_to_json};
    use crate::scalars::FieldSpec;

    fn generic_spec(d: usize) -> AlgebraSpec {
        let f = FieldSpec::rational_function();
        AlgebraSpec::monomial_f(&f, f.generator().unwrap(), d).unwrap()
    }

    #[test]
    fn parser_canonicalizes() {
        let spec = generic_spec(2);
        let a = parse_element(&spec, Variant::Algebra, "u*v").unwrap();
        let b = parse_element(&spec, Variant::Algebra, "q*v*u").unwrap();
        assert_eq!(a, b);
        let c = parse_element(&spec, Variant::Algebra, "w*u - q*u*w").unwrap();
        let fv = parse_element(&spec, Variant::Algebra, "v^2").unwrap();
        assert_eq!(c, fv);
    }

    #[test]
    fn omitted_exponents_and_scalars() {
        let spec = generic_spec(2);
        let a = parse_element(&spec, Variant::Algebra, "2*v^2*u + w").unwrap();
        assert_eq!(a.terms().len(), 2);
        assert_eq!(
            a.coeff(&Monomial::new(2, 1, 0)),
            spec.field().from_int(2)
        );
        assert!(a.coeff(&Monomial::new(0, 0, 1)).is_one());
        // scalar-only expression
        let s = parse_element(&spec, Variant::Algebra, "(1 - q)^2").unwrap();
        assert!(s.as_scalar().is_some());
    }

    #[test]
    fn torus_negative_powers() {
        let spec = generic_spec(2);
        let x = parse_element(&spec, Variant::Torus, "u^-1*v").unwrap();
        // u^{-1} v = q^{-1} v u^{-1}
        let expect = Element::monomial(
            &spec,
            Variant::Torus,
            Monomial::new(1, -1, 0),
            spec.q_inv().clone(),
        );
        assert_eq!(x, expect);
        assert!(parse_element(&spec, Variant::Algebra, "u^-1").is_err());
        assert!(parse_element(&spec, Variant::Torus, "w").is_err());
    }

    #[test]
    fn display_reparses() {
        let spec = generic_spec(3);
        for s in [
            "v^2*u*w^3 - 7*u",
            "(1 + q)*v*u + q^2*w",
            "1 - v",
            "u^4*w + (1/2)*v",
        ] {
            let e = parse_element(&spec, Variant::Algebra, s).unwrap();
            let back = parse_element(&spec, Variant::Algebra, &e.to_string()).unwrap();
            assert_eq!(e, back, "failed on {s} -> {e}");
        }
    }

    #[test]
    fn json_roundtrip() {
        let spec = generic_spec(2);
        let e = parse_element(&spec, Variant::Algebra, "(1 - q)*v*u + w^2 - 3").unwrap();
        let j = element_to_json(&e);
        let back = element_from_json(&spec, Variant::Algebra, &j).unwrap();
        assert_eq!(e, back);
    }
}
