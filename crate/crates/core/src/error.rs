//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// Argument outside the operation's domain (e.g. binomial with i > k).
    #[error("domain error: {0}")]
    Domain(String),

    /// No multiplicative order found below the configured search bound.
    #[error("no order found below bound {bound}")]
    BoundExceeded { bound: u64 },

    /// Two elements belong to different algebra specs.
    #[error("operands belong to different algebra specs")]
    SpecMismatch,

    /// A letter or exponent is not valid for the element's variant.
    #[error("variant error: {0}")]
    VariantError(String),

    /// Operation requires a graded spec (f zero or a monomial of degree >= 2).
    #[error("spec is not graded (f must be zero or a monomial t^d with d >= 2)")]
    NotGraded,

    /// A lemma-specific hypothesis does not hold for this spec.
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    /// The scalar q^(j+1) - 1 (or its reciprocal form) vanishes for some j in supp(f).
    #[error("denominator vanishes at j = {j} (ord(q) divides j+1)")]
    DenominatorVanishes { j: usize },

    /// An element constructed as central failed its commutator check.
    #[error("centrality check failed: {0}")]
    CentralityFailure(String),

    /// Diagonalization obstruction at the T_q monomial indexed by (b, c).
    #[error("diagonalization obstructed at (b, c) = ({b}, {c})")]
    ObstructionAt { b: usize, c: usize },

    /// Automorphism parameters violate a named validity condition.
    #[error("parameter error: {0}")]
    Parameter(String),

    /// Constructed map failed relation-residual validation.
    #[error("validation failure: {0}")]
    ValidationFailure(String),

    /// Input is not homogeneous where homogeneity is required.
    #[error("element is not homogeneous")]
    NotHomogeneous,

    /// Image of the potential is not a scalar multiple of the potential.
    #[error("image is not proportional to the potential")]
    NotProportional,

    /// Exact trace denominator does not have the expected degree.
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    /// Candidate set fails closure/identity checks.
    #[error("not a group: {0}")]
    NotAGroup(String),

    /// Truncated data is insufficient for an exact decision.
    #[error("inconclusive at the configured truncation order")]
    Inconclusive,

    /// An isomorphism candidate does not map relations to zero.
    #[error("relation not preserved: {0}")]
    RelationNotPreserved(String),

    /// Bad command-line arguments or config.
    #[error("usage error: {0}")]
    Usage(String),

    /// Product would exceed the configured filtered-degree cap.
    #[error("degree cap exceeded: product degree {degree} > cap {cap}")]
    DegreeCapExceeded { degree: i64, cap: i64 },

    /// Text input failed to parse.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
