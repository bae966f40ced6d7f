//! Central elements and their certificates: closed rewriting identities,
//! the distinguished element Omega, degree-bounded center solving,
//! normality tests, one-dimensional modules, and parameter isomorphisms.

pub mod center;
pub mod central;
pub mod identities;
pub mod iso;
pub mod modules;

pub use center::{center_basis, in_span, is_normal, NormalReport};
pub use central::{check_inner, gamma, omega, special_central, SpecialCase};
pub use identities::{closed_identity, identity_sweep, IdentityFamily, IdentityReport};
pub use iso::{iso_map, IsoKind, IsoMap};
pub use modules::{
    monomial_witness_residuals, one_dim_modules, ModuleFamily, ModulePoint, OneDimReport,
};
