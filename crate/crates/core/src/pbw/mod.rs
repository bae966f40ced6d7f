//! The algebra kernel: PBW normal-form arithmetic for the three-generator
//! algebra, the quantum plane, and the quantum torus.

pub mod basis;
pub mod element;
pub mod monomial;
pub mod ore;
pub mod parse;
pub mod rewrite;
pub mod spec;

pub use basis::{filtered_basis, graded_basis, hilbert_coeffs, hilbert_report, HilbertReport};
pub use element::{element_from_json, element_to_json, normal_form, Element};
pub use monomial::Monomial;
pub use ore::{delta, sigma, sigma_delta};
pub use parse::{parse_coeff, parse_element};
pub use rewrite::{Letter, Strategy, Word};
pub use spec::{AlgebraSpec, Variant, DEFAULT_DEGREE_CAP, DEFAULT_ORDER_BOUND};
