//! Verified isomorphisms between algebras with related parameters:
//! q <-> q^{-1} by swapping u and v, rescaling to a monic f, and the
//! variable shift available at q = 1.

use crate::error::{Error, Result};
use crate::pbw::{AlgebraSpec, Element, Variant};
use crate::scalars::Scalar;

#[derive(Clone, Debug)]
pub enum IsoKind {
    /// B_q(f) -> B_{q^{-1}}(f): u -> v, v -> u, w -> w.
    SwapQInv,
    /// B_q(f) -> B_q(c^{-1} f) for the leading coefficient c: w -> c w.
    RescaleMonic,
    /// q = 1 only: B_1(f) -> B_1(g) with g = f(t - alpha),
    /// u -> u - alpha, v -> v - alpha, w -> w.
    ShiftQ1 { alpha: Scalar },
}

#[derive(Clone, Debug)]
pub struct IsoMap {
    pub source: AlgebraSpec,
    pub target: AlgebraSpec,
    pub image_u: Element,
    pub image_v: Element,
    pub image_w: Element,
    /// Images of the three source relations in the target; all zero.
    pub residuals: [Element; 3],
}

/// Coefficients of f(t - alpha) from the coefficients of f.
fn shift_coeffs(spec: &AlgebraSpec, alpha: &Scalar) -> Vec<Scalar> {
    // Horner: g = c_d, then repeatedly g := g*(t - alpha) + c_j
    let field = spec.field();
    let mut g: Vec<Scalar> = Vec::new();
    for c in spec.fcoeffs().iter().rev() {
        // multiply g by (t - alpha)
        let mut next = vec![field.zero(); g.len() + 1];
        for (i, coeff) in g.iter().enumerate() {
            next[i + 1] = next[i + 1].add(coeff);
            next[i] = next[i].sub(&coeff.mul(alpha));
        }
        if next.is_empty() {
            next.push(field.zero());
        }
        next[0] = next[0].add(c);
        g = next;
    }
    g
}

/// Images of the three defining relations of `source` under the given
/// generator images, reduced in the target algebra.
fn relation_residuals(
    source: &AlgebraSpec,
    iu: &Element,
    iv: &Element,
    iw: &Element,
) -> Result<[Element; 3]> {
    let q = source.q();
    let qinv = source.q_inv();
    // f(iv) and f(iu) with source coefficients, target arithmetic
    let fof = |x: &Element| -> Result<Element> {
        let mut acc = Element::zero(x.spec(), x.variant());
        for &j in source.support() {
            acc = acc.try_add(&x.pow(j as u32).scale(&source.fcoeffs()[j]))?;
        }
        Ok(acc)
    };
    let r1 = iu.try_mul(iv)?.sub(&iv.try_mul(iu)?.scale(q));
    let r2 = iw
        .try_mul(iu)?
        .sub(&iu.try_mul(iw)?.scale(q))
        .sub(&fof(iv)?);
    let r3 = iw
        .try_mul(iv)?
        .sub(&iv.try_mul(iw)?.scale(qinv))
        .sub(&fof(iu)?);
    Ok([r1, r2, r3])
}

/// Build and verify the named isomorphism out of `source`.
pub fn iso_map(source: &AlgebraSpec, kind: IsoKind) -> Result<IsoMap> {
    let field = source.field();
    let (target, iu, iv, iw) = match &kind {
        IsoKind::SwapQInv => {
            let target = AlgebraSpec::new(field, source.q_inv().clone(), source.fcoeffs().to_vec())?;
            (
                target.clone(),
                Element::gen_v(&target, Variant::Algebra),
                Element::gen_u(&target, Variant::Algebra),
                Element::gen_w(&target),
            )
        }
        IsoKind::RescaleMonic => {
            let c = source
                .fcoeffs()
                .last()
                .cloned()
                .ok_or_else(|| Error::Hypothesis("rescale requires f != 0".into()))?;
            let cinv = c.inv().expect("leading coefficient nonzero");
            let coeffs = source.fcoeffs().iter().map(|a| a.mul(&cinv)).collect();
            let target = AlgebraSpec::new(field, source.q().clone(), coeffs)?;
            (
                target.clone(),
                Element::gen_u(&target, Variant::Algebra),
                Element::gen_v(&target, Variant::Algebra),
                Element::gen_w(&target).scale(&c),
            )
        }
        IsoKind::ShiftQ1 { alpha } => {
            if !source.q().is_one() {
                return Err(Error::Hypothesis("shift isomorphism requires q = 1".into()));
            }
            let coeffs = shift_coeffs(source, alpha);
            let target = AlgebraSpec::new(field, field.one(), coeffs)?;
            let au = Element::gen_u(&target, Variant::Algebra)
                .sub(&Element::scalar(&target, Variant::Algebra, alpha.clone()));
            let av = Element::gen_v(&target, Variant::Algebra)
                .sub(&Element::scalar(&target, Variant::Algebra, alpha.clone()));
            (target.clone(), au, av, Element::gen_w(&target))
        }
    };
    let residuals = relation_residuals(source, &iu, &iv, &iw)?;
    if residuals.iter().any(|r| !r.is_zero()) {
        return Err(Error::RelationNotPreserved(format!("{kind:?}")));
    }
    // invertibility of the affine part: the linear coefficients of the
    // images on (u, v, w) form an invertible 3x3 matrix
    let lin = linear_part_det(&target, &iu, &iv, &iw);
    if lin.is_zero() {
        return Err(Error::RelationNotPreserved(
            "affine part is singular".into(),
        ));
    }
    Ok(IsoMap {
        source: source.clone(),
        target,
        image_u: iu,
        image_v: iv,
        image_w: iw,
        residuals,
    })
}

fn linear_part_det(target: &AlgebraSpec, iu: &Element, iv: &Element, iw: &Element) -> Scalar {
    use crate::linalg::Matrix;
    use crate::pbw::Monomial;
    let gens = [
        Monomial::new(0, 1, 0),
        Monomial::new(1, 0, 0),
        Monomial::new(0, 0, 1),
    ];
    let rows = [iu, iv, iw]
        .iter()
        .map(|img| gens.iter().map(|m| img.coeff(m)).collect())
        .collect();
    Matrix::from_rows(target.field(), rows).det()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::FieldSpec;

    #[test]
    fn swap_to_q_inverse() {
        let f = FieldSpec::rational_function();
        let spec = AlgebraSpec::monomial_f(&f, f.generator().unwrap(), 2).unwrap();
        let iso = iso_map(&spec, IsoKind::SwapQInv).unwrap();
        assert_eq!(iso.target.q(), spec.q_inv());
        assert!(iso.residuals.iter().all(|r| r.is_zero()));
    }

    #[test]
    fn rescale_to_monic() {
        let f = FieldSpec::rational_function();
        let spec = AlgebraSpec::new(
            &f,
            f.generator().unwrap(),
            vec![f.zero(), f.zero(), f.from_int(5)],
        )
        .unwrap();
        let iso = iso_map(&spec, IsoKind::RescaleMonic).unwrap();
        assert!(iso.target.fcoeffs().last().unwrap().is_one());
        // w maps to 5w
        assert_eq!(
            iso.image_w,
            Element::gen_w(&iso.target).scale(&f.from_int(5))
        );
    }

    #[test]
    fn shift_at_q_one() {
        let f = FieldSpec::rational();
        let spec = AlgebraSpec::monomial_f(&f, f.one(), 2).unwrap(); // f = t^2
        let iso = iso_map(
            &spec,
            IsoKind::ShiftQ1 {
                alpha: f.one(),
            },
        )
        .unwrap();
        // g = (t - 1)^2 = 1 - 2t + t^2
        assert_eq!(
            iso.target.fcoeffs(),
            &[f.one(), f.from_int(-2), f.one()]
        );
        assert!(iso.residuals.iter().all(|r| r.is_zero()));
        // shift is rejected away from q = 1
        let rf = FieldSpec::rational_function();
        let generic = AlgebraSpec::monomial_f(&rf, rf.generator().unwrap(), 2).unwrap();
        assert!(iso_map(&generic, IsoKind::ShiftQ1 { alpha: rf.one() }).is_err());
    }
}
