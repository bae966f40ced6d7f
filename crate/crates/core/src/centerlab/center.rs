//! Degree-bounded center computation and normality testing, both by
//! exact linear algebra on the filtration.

use crate::error::Result;
use crate::linalg::Matrix;
use crate::pbw::{filtered_basis, AlgebraSpec, Element, Monomial, Variant};
use crate::scalars::Scalar;
use std::collections::BTreeMap;

/// Basis of { x in F_K : [x, u] = [x, v] = [x, w] = 0 }, in the
/// deterministic echelon form produced by lexicographic monomial order.
pub fn center_basis(spec: &AlgebraSpec, max_deg: i64) -> Result<Vec<Element>> {
    let basis = filtered_basis(spec, max_deg);
    let gens = [
        Element::gen_u(spec, Variant::Algebra),
        Element::gen_v(spec, Variant::Algebra),
        Element::gen_w(spec),
    ];
    // column c = commutator data of basis monomial c against all three
    // generators; rows are indexed by (generator, occurring monomial)
    let mut row_ids: BTreeMap<(usize, Monomial), usize> = BTreeMap::new();
    let mut columns: Vec<BTreeMap<(usize, Monomial), Scalar>> = Vec::with_capacity(basis.len());
    for m in &basis {
        let x = Element::monomial(spec, Variant::Algebra, *m, spec.field().one());
        let mut col = BTreeMap::new();
        for (gi, g) in gens.iter().enumerate() {
            let comm = x.try_commutator(g)?;
            for (mm, c) in comm.terms() {
                let next = row_ids.len();
                row_ids.entry((gi, *mm)).or_insert(next);
                col.insert((gi, *mm), c.clone());
            }
        }
        columns.push(col);
    }
    let mut mat = Matrix::zeros(spec.field(), row_ids.len(), basis.len());
    for (ci, col) in columns.iter().enumerate() {
        for (key, c) in col {
            mat.set(row_ids[key], ci, c.clone());
        }
    }
    let kernel = mat.kernel_basis();
    let out = kernel
        .into_iter()
        .map(|coords| {
            let mut terms = BTreeMap::new();
            for (ci, c) in coords.into_iter().enumerate() {
                if !c.is_zero() {
                    terms.insert(basis[ci], c);
                }
            }
            Element::from_terms(spec.clone(), Variant::Algebra, terms)
        })
        .collect();
    Ok(out)
}

/// Does `x` lie in the span of `basis`? Exact linear solve.
pub fn in_span(basis: &[Element], x: &Element) -> bool {
    if x.is_zero() {
        return true;
    }
    let spec = x.spec();
    let mut row_ids: BTreeMap<Monomial, usize> = BTreeMap::new();
    for b in basis {
        for m in b.terms().keys() {
            let next = row_ids.len();
            row_ids.entry(*m).or_insert(next);
        }
    }
    for m in x.terms().keys() {
        if !row_ids.contains_key(m) {
            return false;
        }
    }
    let mut mat = Matrix::zeros(spec.field(), row_ids.len(), basis.len());
    for (ci, b) in basis.iter().enumerate() {
        for (m, c) in b.terms() {
            mat.set(row_ids[m], ci, c.clone());
        }
    }
    let mut rhs = vec![spec.field().zero(); row_ids.len()];
    for (m, c) in x.terms() {
        rhs[row_ids[m]] = c.clone();
    }
    mat.solve(&rhs).is_some()
}

/// Result of the normality test: images Y_g with x g = Y_g x when normal.
#[derive(Clone, Debug)]
pub struct NormalReport {
    pub normal: bool,
    pub central: bool,
    /// Y_u, Y_v, Y_w when the three systems are solvable.
    pub images: Option<[Element; 3]>,
}

/// Decide normality of x by solving x*g = Y*x for Y in the filtered span
/// up to deg(x*g) - deg(x) + 2. In the graded case the image degree is
/// forced, so the slack makes the search exact there.
pub fn is_normal(spec: &AlgebraSpec, x: &Element) -> Result<NormalReport> {
    assert!(!x.is_zero(), "normality of zero is undefined");
    let gens = [
        Element::gen_u(spec, Variant::Algebra),
        Element::gen_v(spec, Variant::Algebra),
        Element::gen_w(spec),
    ];
    let deg_x = x.degree().expect("nonzero");
    let mut images = Vec::new();
    for g in &gens {
        let target = x.try_mul(g)?;
        let bound = target.degree().unwrap_or(0) - deg_x + 2;
        let ybasis = filtered_basis(spec, bound.max(0));
        // rows indexed by monomials of Y*x and of the target
        let mut row_ids: BTreeMap<Monomial, usize> = BTreeMap::new();
        let mut cols: Vec<Element> = Vec::with_capacity(ybasis.len());
        for m in &ybasis {
            let prod = Element::monomial(spec, Variant::Algebra, *m, spec.field().one())
                .try_mul(x)?;
            for mm in prod.terms().keys() {
                let next = row_ids.len();
                row_ids.entry(*mm).or_insert(next);
            }
            cols.push(prod);
        }
        for mm in target.terms().keys() {
            let next = row_ids.len();
                row_ids.entry(*mm).or_insert(next);
        }
        let mut mat = Matrix::zeros(spec.field(), row_ids.len(), cols.len());
        for (ci, col) in cols.iter().enumerate() {
            for (mm, c) in col.terms() {
                mat.set(row_ids[mm], ci, c.clone());
            }
        }
        let mut rhs = vec![spec.field().zero(); row_ids.len()];
        for (mm, c) in target.terms() {
            rhs[row_ids[mm]] = c.clone();
        }
        match mat.solve(&rhs) {
            None => {
                return Ok(NormalReport {
                    normal: false,
                    central: false,
                    images: None,
                })
            }
            Some(coords) => {
                let mut terms = BTreeMap::new();
                for (ci, c) in coords.into_iter().enumerate() {
                    if !c.is_zero() {
                        terms.insert(ybasis[ci], c);
                    }
                }
                images.push(Element::from_terms(
                    spec.clone(),
                    Variant::Algebra,
                    terms,
                ));
            }
        }
    }
    let images: [Element; 3] = images.try_into().expect("three generators");
    let central = images
        .iter()
        .zip(gens.iter())
        .all(|(y, g)| y == g);
    Ok(NormalReport {
        normal: true,
        central,
        images: Some(images),
    })
}
