//! The Ore data (sigma, delta) presenting the algebra as a skew
//! polynomial extension of the quantum plane: w*x = sigma(x)*w + delta(x).

use super::element::Element;
use super::monomial::Monomial;
use super::spec::{AlgebraSpec, Variant};
use crate::error::{Error, Result};

fn require_plane(x: &Element) -> Result<()> {
    if x.variant() != Variant::Plane {
        return Err(Error::VariantError(
            "sigma and delta are defined on the quantum plane".into(),
        ));
    }
    Ok(())
}

/// sigma(u) = q u, sigma(v) = q^{-1} v, extended multiplicatively:
/// sigma(v^i u^j) = q^{j-i} v^i u^j.
pub fn sigma(x: &Element) -> Result<Element> {
    require_plane(x)?;
    let spec = x.spec().clone();
    let mut acc = Element::zero(&spec, Variant::Plane);
    for (m, c) in x.terms() {
        let factor = spec.q().pow(m.j - m.i);
        acc = acc.add(&Element::monomial(&spec, Variant::Plane, *m, c.mul(&factor)));
    }
    Ok(acc)
}

/// The (sigma, id)-twisted derivation with delta(u) = f(v),
/// delta(v) = f(u), extended by delta(ab) = sigma(a) delta(b) + delta(a) b.
pub fn delta(x: &Element) -> Result<Element> {
    require_plane(x)?;
    let spec = x.spec().clone();
    let mut acc = Element::zero(&spec, Variant::Plane);
    for (m, c) in x.terms() {
        acc = acc.add(&delta_monomial(&spec, m).scale(c));
    }
    Ok(acc)
}

/// delta(v^i u^j) = sigma(v^i) delta(u^j) + delta(v^i) u^j.
fn delta_monomial(spec: &AlgebraSpec, m: &Monomial) -> Element {
    let v_i = Element::monomial(
        spec,
        Variant::Plane,
        Monomial::new(m.i, 0, 0),
        spec.field().one(),
    );
    let u_j = Element::monomial(
        spec,
        Variant::Plane,
        Monomial::new(0, m.j, 0),
        spec.field().one(),
    );
    let sigma_vi = sigma(&v_i).expect("plane element");
    sigma_vi
        .mul(&delta_u_power(spec, m.j as u32))
        .add(&delta_v_power(spec, m.i as u32).mul(&u_j))
}

/// delta(u^k) by the Leibniz recursion delta(u^k) = sigma(u) delta(u^{k-1})
/// + delta(u) u^{k-1}. This is the kernel-side route; the closed-form sums
/// live in the identity checker and are compared against it.
fn delta_u_power(spec: &AlgebraSpec, k: u32) -> Element {
    let mut acc = Element::zero(spec, Variant::Plane); // delta(1) = 0
    let fu = Element::f_of_v(spec, Variant::Plane); // delta(u)
    let sigma_u = Element::gen_u(spec, Variant::Plane).scale(spec.q());
    let u = Element::gen_u(spec, Variant::Plane);
    for step in 0..k {
        // acc currently holds delta(u^step)
        let u_pow = u.pow(step);
        acc = sigma_u.mul(&acc).add(&fu.mul(&u_pow));
        let _ = step;
    }
    acc
}

fn delta_v_power(spec: &AlgebraSpec, k: u32) -> Element {
    let mut acc = Element::zero(spec, Variant::Plane);
    let fv = Element::f_of_u(spec, Variant::Plane); // delta(v)
    let sigma_v = Element::gen_v(spec, Variant::Plane).scale(spec.q_inv());
    let v = Element::gen_v(spec, Variant::Plane);
    for step in 0..k {
        let v_pow = v.pow(step);
        acc = sigma_v.mul(&acc).add(&fv.mul(&v_pow));
    }
    acc
}

/// (sigma(x), delta(x)) for a quantum-plane element.
pub fn sigma_delta(x: &Element) -> Result<(Element, Element)> {
    Ok((sigma(x)?, delta(x)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::FieldSpec;

    fn spec_f(coeffs: &[i64]) -> AlgebraSpec {
        let f = FieldSpec::rational_function();
        let cs = coeffs.iter().map(|&c| f.from_int(c)).collect();
        AlgebraSpec::new(&f, f.generator().unwrap(), cs).unwrap()
    }

    #[test]
    fn delta_of_generators() {
        let spec = spec_f(&[0, 0, 1]); // f = t^2
        let u = Element::gen_u(&spec, Variant::Plane);
        let (s, d) = sigma_delta(&u).unwrap();
        assert_eq!(s, u.scale(spec.q()));
        assert_eq!(d, Element::f_of_v(&spec, Variant::Plane));

        let one = Element::one(&spec, Variant::Plane);
        let (s1, d1) = sigma_delta(&one).unwrap();
        assert_eq!(s1, one);
        assert!(d1.is_zero());
    }

    #[test]
    fn delta_uv_by_leibniz() {
        let spec = spec_f(&[1, 1]); // f = 1 + t
        let u = Element::gen_u(&spec, Variant::Plane);
        let v = Element::gen_v(&spec, Variant::Plane);
        let uv = u.mul(&v);
        let d = delta(&uv).unwrap();
        // delta(uv) = sigma(u) delta(v) + delta(u) v
        let expect = sigma(&u)
            .unwrap()
            .mul(&delta(&v).unwrap())
            .add(&delta(&u).unwrap().mul(&v));
        assert_eq!(d, expect);
    }

    #[test]
    fn ore_relation_in_b() {
        // w*x = sigma(x)*w + delta(x) for assorted plane elements
        let spec = spec_f(&[2, 0, 1]); // f = 2 + t^2
        let u = Element::gen_u(&spec, Variant::Plane);
        let v = Element::gen_v(&spec, Variant::Plane);
        let samples = [
            u.pow(3),
            v.mul(&u),
            u.add(&v.pow(2)).mul(&u),
            v.pow(2).mul(&u.pow(2)).add(&u),
        ];
        let w = Element::gen_w(&spec);
        for x in samples {
            let xb = x.with_variant(Variant::Algebra).unwrap();
            let (s, d) = sigma_delta(&x).unwrap();
            let lhs = w.mul(&xb);
            let rhs = s
                .with_variant(Variant::Algebra)
                .unwrap()
                .mul(&w)
                .add(&d.with_variant(Variant::Algebra).unwrap());
            assert_eq!(lhs, rhs);
        }
    }
}
