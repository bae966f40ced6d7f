//! PBW monomials v^i u^j w^k.

/// Exponents of a PBW basis monomial, stored as (v, u, w) powers.
/// `i` and `j` may be negative only in the quantum-torus variant;
/// torus monomials never carry `w`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    /// exponent of v
    pub i: i64,
    /// exponent of u
    pub j: i64,
    /// exponent of w
    pub k: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { i: 0, j: 0, k: 0 };

    pub fn new(i: i64, j: i64, k: u32) -> Self {
        Monomial { i, j, k }
    }

    pub fn is_one(&self) -> bool {
        *self == Monomial::ONE
    }

    /// Weighted degree under the given (u, v, w) weights. Torus exponents
    /// contribute by absolute value so the degree cap still bounds work.
    pub fn weighted_degree(&self, weights: (u32, u32, u32)) -> i64 {
        let (wu, wv, ww) = weights;
        self.i.abs() * wv as i64 + self.j.abs() * wu as i64 + self.k as i64 * ww as i64
    }

    /// Total word length |i| + |j| + k.
    pub fn length(&self) -> i64 {
        self.i.abs() + self.j.abs() + self.k as i64
    }
}
