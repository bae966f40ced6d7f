//! Exact symbolic computation for the family of three-generator algebras
//! generated by u, v, w subject to
//!
//! ```text
//!   u v = q v u
//!   w u = q u w + f(v)
//!   w v = q^{-1} v w + f(u)
//! ```
//!
//! for a unit scalar q and a one-variable polynomial f. The crate provides
//! PBW normal-form arithmetic over exact coefficient fields (Q, cyclotomic
//! fields, rational functions), distinguished central elements and a
//! degree-bounded center solver, superpotential calculus, graded
//! automorphism construction/classification/diagonalization, and
//! invariant-theory reports (trace series, Molien sums, homological
//! determinants, reflection detection).
//!
//! Start with [`pbw::AlgebraSpec`] to describe an algebra, then build
//! [`pbw::Element`] values and feed them to the higher modules. The
//! `examples/` directory has one runnable walkthrough per capability.

pub mod centerlab;
pub mod error;
pub mod linalg;
pub mod pbw;
pub mod scalars;

pub use error::{Error, Result};
