//! Graded and filtered monomial bases and dimension enumeration.

use super::monomial::Monomial;
use super::spec::AlgebraSpec;
use crate::error::{Error, Result};

/// All PBW monomials of weighted degree exactly `k`, in lexicographic
/// (i, j, k) order. Requires a graded spec.
pub fn graded_basis(spec: &AlgebraSpec, k: i64) -> Result<Vec<Monomial>> {
    if !spec.is_graded() {
        return Err(Error::NotGraded);
    }
    Ok(enumerate(spec, k, true))
}

/// All PBW monomials of weighted degree at most `k`.
pub fn filtered_basis(spec: &AlgebraSpec, k: i64) -> Vec<Monomial> {
    enumerate(spec, k, false)
}

fn enumerate(spec: &AlgebraSpec, bound: i64, exact: bool) -> Vec<Monomial> {
    let (wu, wv, ww) = spec.weights();
    let mut out = Vec::new();
    if bound < 0 {
        return out;
    }
    for i in 0..=(bound / wv as i64) {
        for j in 0..=((bound - i * wv as i64) / wu as i64) {
            let rem = bound - i * wv as i64 - j * wu as i64;
            for k in 0..=(rem / ww as i64) {
                let deg = i * wv as i64 + j * wu as i64 + k * ww as i64;
                if (exact && deg == bound) || (!exact && deg <= bound) {
                    out.push(Monomial::new(i, j, k as u32));
                }
            }
        }
    }
    out.sort();
    out
}

/// dim of the degree-k graded pieces for k = 0..=kmax.
pub fn hilbert_coeffs(spec: &AlgebraSpec, kmax: i64) -> Result<Vec<u64>> {
    (0..=kmax)
        .map(|k| graded_basis(spec, k).map(|b| b.len() as u64))
        .collect()
}

/// Comparison of the enumerated dimensions against the two closed-form
/// candidates (1-t)^{-2}(1-t^{d-1})^{-1} and (1-t)^{-2}(1-t^d)^{-1}.
/// The second exponent appears in print; the enumeration decides.
#[derive(Debug, Clone)]
pub struct HilbertReport {
    pub dims: Vec<u64>,
    /// coefficients of (1-t)^{-2} (1-t^{d-1})^{-1}
    pub weight_form: Vec<u64>,
    /// coefficients of (1-t)^{-2} (1-t^d)^{-1}
    pub printed_form: Vec<u64>,
    pub matches_weight_form: bool,
    pub matches_printed_form: bool,
}

pub fn hilbert_report(spec: &AlgebraSpec, kmax: i64) -> Result<HilbertReport> {
    let d = match spec.degf() {
        Some(d) if d >= 2 => d,
        _ => {
            return Err(Error::Hypothesis(
                "hilbert report needs f = t^d with d >= 2".into(),
            ))
        }
    };
    let dims = hilbert_coeffs(spec, kmax)?;
    let weight_form = product_series(&[1, 1, d - 1], kmax as usize);
    let printed_form = product_series(&[1, 1, d], kmax as usize);
    Ok(HilbertReport {
        matches_weight_form: dims == weight_form,
        matches_printed_form: dims == printed_form,
        dims,
        weight_form,
        printed_form,
    })
}

/// Series coefficients of prod_i (1 - t^{w_i})^{-1} up to order kmax.
pub fn product_series(weights: &[usize], kmax: usize) -> Vec<u64> {
    let mut coeffs = vec![0u64; kmax + 1];
    coeffs[0] = 1;
    for &w in weights {
        // multiply by 1/(1 - t^w): prefix sums with stride w
        for n in w..=kmax {
            coeffs[n] += coeffs[n - w];
        }
    }
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::FieldSpec;

    fn graded_spec(d: usize) -> AlgebraSpec {
        let f = FieldSpec::rational_function();
        AlgebraSpec::monomial_f(&f, f.generator().unwrap(), d).unwrap()
    }

    #[test]
    fn degree_zero_is_one() {
        let spec = graded_spec(2);
        assert_eq!(graded_basis(&spec, 0).unwrap(), vec![Monomial::ONE]);
        assert_eq!(filtered_basis(&spec, 0), vec![Monomial::ONE]);
    }

    #[test]
    fn quadratic_degree_two() {
        let spec = graded_spec(2);
        let b = graded_basis(&spec, 2).unwrap();
        // {v^2, vu, vw, u^2, uw, w^2}
        assert_eq!(b.len(), 6);
        assert!(b.contains(&Monomial::new(1, 1, 0)));
        assert!(b.contains(&Monomial::new(0, 0, 2)));
    }

    #[test]
    fn cubic_degree_one_has_no_w() {
        let spec = graded_spec(3);
        let b = graded_basis(&spec, 1).unwrap();
        assert_eq!(b, vec![Monomial::new(0, 1, 0), Monomial::new(1, 0, 0)]);
    }

    #[test]
    fn filtered_counts() {
        let spec = graded_spec(2);
        let b = filtered_basis(&spec, 1);
        assert_eq!(b.len(), 4); // 1, v, u, w

        // f = 1: weights (1,1,1): C(5,3) = 10 monomials of degree <= 2
        let f = FieldSpec::rational_function();
        let spec1 = AlgebraSpec::new(&f, f.generator().unwrap(), vec![f.one()]).unwrap();
        assert_eq!(filtered_basis(&spec1, 2).len(), 10);
    }

    #[test]
    fn hilbert_dimensions() {
        // f = 0: (1-t)^{-3}
        let f = FieldSpec::rational_function();
        let spec0 = AlgebraSpec::new(&f, f.generator().unwrap(), vec![]).unwrap();
        assert_eq!(hilbert_coeffs(&spec0, 4).unwrap(), vec![1, 3, 6, 10, 15]);

        // d = 2: same dimensions (weights all 1)
        assert_eq!(
            hilbert_coeffs(&graded_spec(2), 4).unwrap(),
            vec![1, 3, 6, 10, 15]
        );

        // d = 3: weights (1,1,2)
        assert_eq!(hilbert_coeffs(&graded_spec(3), 3).unwrap(), vec![1, 2, 4, 6]);
    }

    #[test]
    fn not_graded_rejected() {
        let f = FieldSpec::rational_function();
        let spec = AlgebraSpec::new(&f, f.generator().unwrap(), vec![f.one(), f.one()]).unwrap();
        assert!(matches!(graded_basis(&spec, 2), Err(Error::NotGraded)));
    }

    #[test]
    fn report_flags_printed_exponent() {
        let rep = hilbert_report(&graded_spec(3), 10).unwrap();
        assert!(rep.matches_weight_form);
        assert!(!rep.matches_printed_form);
        let rep2 = hilbert_report(&graded_spec(2), 10).unwrap();
        assert!(rep2.matches_weight_form);
        assert!(!rep2.matches_printed_form);
    }
}
