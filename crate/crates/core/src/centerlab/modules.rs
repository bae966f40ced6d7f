//! One-dimensional module solving: scalar actions (lu, lv, lw) of the
//! generators satisfying all three defining relations.
//!
//! The three scalar equations are
//!
//! ```text
//!   lu*lv*(1 - q)        = 0
//!   lu*lw*(1 - q)        = f(lv)
//!   lv*lw*(1 - q^{-1})   = f(lu)
//! ```
//!
//! and the solver does symbolic case analysis on q = 1 and on the
//! vanishing of lu, lv. Roots of f are not computed automatically; known
//! roots are passed in and verified.

use crate::error::{Error, Result};
use crate::pbw::AlgebraSpec;
use crate::scalars::Scalar;

/// One scalar point (lu, lv, lw).
#[derive(Clone, PartialEq, Debug)]
pub struct ModulePoint {
    pub lu: Scalar,
    pub lv: Scalar,
    pub lw: Scalar,
}

impl ModulePoint {
    /// The three relation residuals at this point.
    pub fn residuals(&self, spec: &AlgebraSpec) -> [Scalar; 3] {
        let one = spec.field().one();
        let q = spec.q();
        let r1 = self.lu.mul(&self.lv).mul(&one.sub(q));
        let r2 = self.lu.mul(&self.lw).mul(&one.sub(q)).sub(&spec.f_at(&self.lv));
        let r3 = self
            .lv
            .mul(&self.lw)
            .mul(&one.sub(spec.q_inv()))
            .sub(&spec.f_at(&self.lu));
        [r1, r2, r3]
    }

    pub fn satisfies(&self, spec: &AlgebraSpec) -> bool {
        self.residuals(spec).iter().all(|r| r.is_zero())
    }
}

/// A solution component: an isolated point or a line with lw free.
#[derive(Clone, PartialEq, Debug)]
pub enum ModuleFamily {
    Point(ModulePoint),
    /// (lu, lv, t) for every scalar t.
    FreeW { lu: Scalar, lv: Scalar },
}

impl ModuleFamily {
    pub fn sample(&self, spec: &AlgebraSpec, t: &Scalar) -> ModulePoint {
        match self {
            ModuleFamily::Point(p) => p.clone(),
            ModuleFamily::FreeW { lu, lv } => ModulePoint {
                lu: lu.clone(),
                lv: lv.clone(),
                lw: t.clone(),
            },
        }
    }

    pub fn is_trivial_point(&self) -> bool {
        match self {
            ModuleFamily::Point(p) => p.lu.is_zero() && p.lv.is_zero() && p.lw.is_zero(),
            ModuleFamily::FreeW { .. } => false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct OneDimReport {
    pub families: Vec<ModuleFamily>,
    /// True when the supplied roots exhaust the hypotheses the case split
    /// needs (the solver cannot invent roots of f in a closed field).
    pub roots_supplied: Vec<Scalar>,
}

impl OneDimReport {
    pub fn is_empty(&self) -> bool {
        self.families.is_empty()
    }

    pub fn has_nontrivial(&self) -> bool {
        self.families.iter().any(|f| !f.is_trivial_point())
    }
}

/// Solve the three relation equations. `known_roots` are roots of f in
/// the coefficient field; each is verified before use.
pub fn one_dim_modules(spec: &AlgebraSpec, known_roots: &[Scalar]) -> Result<OneDimReport> {
    let field = spec.field();
    for r in known_roots {
        if !spec.f_at(r).is_zero() {
            return Err(Error::Domain(format!(
                "{r} is not a root of f"
            )));
        }
    }
    // assemble the deduplicated root list, always including 0 when c_0 = 0
    let mut roots: Vec<Scalar> = Vec::new();
    let c0_zero = spec
        .fcoeffs()
        .first()
        .map_or(true, |c| c.is_zero());
    if c0_zero {
        roots.push(field.zero());
    }
    for r in known_roots {
        if !roots.contains(r) {
            roots.push(r.clone());
        }
    }

    let mut families: Vec<ModuleFamily> = Vec::new();
    let mut push = |fam: ModuleFamily| {
        if !families.contains(&fam) {
            families.push(fam);
        }
    };

    if spec.q().is_one() {
        // Relations reduce to f(lu) = f(lv) = 0 with lw free.
        for a in &roots {
            for b in &roots {
                push(ModuleFamily::FreeW {
                    lu: a.clone(),
                    lv: b.clone(),
                });
            }
        }
    } else {
        // q != 1: lu = 0 or lv = 0.
        for alpha in &roots {
            // lu = 0, lv = alpha (a root of f); third relation pins lw
            if alpha.is_zero() {
                // both zero: relations demand f(0) = 0, already true here
                push(ModuleFamily::FreeW {
                    lu: field.zero(),
                    lv: field.zero(),
                });
            } else {
                let c0 = spec.f_at(&field.zero());
                let den = field.one().sub(spec.q_inv()).mul(alpha);
                let lw = c0.div(&den).expect("q != 1 and alpha != 0");
                push(ModuleFamily::Point(ModulePoint {
                    lu: field.zero(),
                    lv: alpha.clone(),
                    lw,
                }));
                // symmetric branch lv = 0, lu = alpha
                let den = field.one().sub(spec.q()).mul(alpha);
                let lw = c0.div(&den).expect("q != 1 and alpha != 0");
                push(ModuleFamily::Point(ModulePoint {
                    lu: alpha.clone(),
                    lv: field.zero(),
                    lw,
                }));
            }
        }
    }

    // re-verify every family, sampling three parameter values on lines
    let samples = [field.one(), field.from_int(2), field.from_int(-3)];
    for fam in &families {
        match fam {
            ModuleFamily::Point(p) => {
                if !p.satisfies(spec) {
                    return Err(Error::ValidationFailure(format!(
                        "solver produced a non-solution point ({}, {}, {})",
                        p.lu, p.lv, p.lw
                    )));
                }
            }
            ModuleFamily::FreeW { .. } => {
                for t in &samples {
                    if !fam.sample(spec, t).satisfies(spec) {
                        return Err(Error::ValidationFailure(
                            "solver produced a non-solution family".into(),
                        ));
                    }
                }
            }
        }
    }

    Ok(OneDimReport {
        families,
        roots_supplied: roots,
    })
}

/// Residuals of the scalar point (0, eta, eta^{d-1}) proposed as a module
/// witness for f = t^d. Under the left-action reading the middle relation
/// leaves -eta^d, so the witness fails; the report carries the residuals
/// rather than patching them.
pub fn monomial_witness_residuals(spec: &AlgebraSpec, eta: &Scalar) -> Result<[Scalar; 3]> {
    let d = match spec.degf() {
        Some(d) if spec.support() == [d] && d >= 1 => d,
        _ => {
            return Err(Error::Hypothesis(
                "witness check requires f = t^d with d >= 1".into(),
            ))
        }
    };
    let p = ModulePoint {
        lu: spec.field().zero(),
        lv: eta.clone(),
        lw: eta.pow(d as i64 - 1),
    };
    Ok(p.residuals(spec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::FieldSpec;

    #[test]
    fn gldim_witness_with_nonzero_root() {
        // q generic, f = (t - 1) = -1 + t, root alpha = 1, c = f(0) = -1
        let f = FieldSpec::rational_function();
        let spec = AlgebraSpec::new(
            &f,
            f.generator().unwrap(),
            vec![f.from_int(-1), f.one()],
        )
        .unwrap();
        let rep = one_dim_modules(&spec, &[f.one()]).unwrap();
        // contains (0, 1, c/((1 - q^{-1}) * 1))
        let c = f.from_int(-1);
        let lw = c.div(&f.one().sub(spec.q_inv())).unwrap();
        let expect = ModuleFamily::Point(ModulePoint {
            lu: f.zero(),
            lv: f.one(),
            lw,
        });
        assert!(rep.families.contains(&expect));
        assert!(rep.has_nontrivial());
    }

    #[test]
    fn no_solutions_for_constant_f_generic_q() {
        let f = FieldSpec::rational_function();
        let spec = AlgebraSpec::new(&f, f.generator().unwrap(), vec![f.one()]).unwrap();
        let rep = one_dim_modules(&spec, &[]).unwrap();
        assert!(rep.is_empty());
    }

    #[test]
    fn q1_monomial_family() {
        let f = FieldSpec::rational();
        let spec = AlgebraSpec::monomial_f(&f, f.one(), 3).unwrap();
        let rep = one_dim_modules(&spec, &[]).unwrap();
        assert_eq!(
            rep.families,
            vec![ModuleFamily::FreeW {
                lu: f.zero(),
                lv: f.zero()
            }]
        );
    }

    #[test]
    fn witness_discrepancy_residual() {
        let f = FieldSpec::rational_function();
        let spec = AlgebraSpec::monomial_f(&f, f.generator().unwrap(), 3).unwrap();
        let eta = f.from_int(2);
        let [r1, r2, r3] = monomial_witness_residuals(&spec, &eta).unwrap();
        assert!(r1.is_zero());
        // middle relation leaves -eta^d
        assert_eq!(r2, eta.pow(3).neg());
        assert!(!r3.is_zero());
    }

    #[test]
    fn non_root_rejected() {
        let f = FieldSpec::rational();
        let spec = AlgebraSpec::monomial_f(&f, f.from_int(2), 2).unwrap();
        assert!(one_dim_modules(&spec, &[f.one()]).is_err());
    }
}
