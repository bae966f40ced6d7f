//! Word rewriting to PBW normal form.
//!
//! The target order is v-block, then u-block, then w-block, matching the
//! basis {v^i u^j w^k}. The oriented rules are
//!
//! ```text
//!   u v   ->  q v u
//!   w u   ->  q u w + f(v)
//!   w v   ->  q^{-1} v w + f(u)
//! ```
//!
//! and, in the torus variant (no w, inverses of u and v allowed),
//!
//! ```text
//!   u v^{-1} -> q^{-1} v^{-1} u        u^{-1} v  ->  q^{-1} v u^{-1}
//!   u^{-1} v^{-1} -> q v^{-1} u^{-1}   x x^{-1} = x^{-1} x -> 1
//! ```
//!
//! Termination: order words by the triple (number of w letters,
//! inversion count, total length) compared lexicographically, where an
//! inversion is a pair of positions p < p' whose letters are out of
//! order with respect to v < u < w (inverse letters rank with their
//! base letter). Each swap rule fixes the w-count and removes exactly
//! one inversion without touching any other pair; each f-term of a
//! w-rule strictly drops the w-count; each torus cancellation fixes the
//! first two components and shortens the word. Every rule therefore
//! produces only words strictly smaller in this well-founded order, so
//! rewriting terminates. Confluence is not proved here; it is checked
//! by the leftmost-vs-rightmost fuzz suite.

use super::spec::{AlgebraSpec, Variant};
use crate::error::{Error, Result};
use crate::scalars::Scalar;
use std::collections::BTreeMap;

use super::element::Element;
use super::monomial::Monomial;

/// One letter of a word in the free algebra (or its torus localization).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Letter {
    V,
    U,
    W,
    Uinv,
    Vinv,
}

impl Letter {
    fn valid_for(self, variant: Variant) -> bool {
        match self {
            Letter::V | Letter::U => true,
            Letter::W => variant == Variant::Algebra,
            Letter::Uinv | Letter::Vinv => variant == Variant::Torus,
        }
    }

    /// true if this letter is a u-type or v-type letter
    fn is_u(self) -> bool {
        matches!(self, Letter::U | Letter::Uinv)
    }

    fn is_v(self) -> bool {
        matches!(self, Letter::V | Letter::Vinv)
    }
}

/// Redex selection strategy; both must reach the same normal form.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// A scalar-weighted word over the generators.
#[derive(Clone, Debug)]
pub struct Word {
    pub coeff: Scalar,
    pub letters: Vec<Letter>,
}

impl Word {
    pub fn new(coeff: Scalar, letters: Vec<Letter>) -> Self {
        Word { coeff, letters }
    }
}

/// Replacement for the two-letter redex at a position: a list of
/// (scalar, replacement letters) pairs.
fn rule(spec: &AlgebraSpec, a: Letter, b: Letter) -> Option<Vec<(Scalar, Vec<Letter>)>> {
    use Letter::*;
    let q = spec.q().clone();
    let qinv = spec.q_inv().clone();
    match (a, b) {
        (U, V) => Some(vec![(q, vec![V, U])]),
        (U, Vinv) => Some(vec![(qinv, vec![Vinv, U])]),
        (Uinv, V) => Some(vec![(qinv, vec![V, Uinv])]),
        (Uinv, Vinv) => Some(vec![(q, vec![Vinv, Uinv])]),
        (U, Uinv) | (Uinv, U) | (V, Vinv) | (Vinv, V) => {
            Some(vec![(spec.field().one(), vec![])])
        }
        (W, U) => {
            let mut out = vec![(q, vec![U, W])];
            for &j in spec.support() {
                out.push((spec.fcoeffs()[j].clone(), vec![V; j]));
            }
            Some(out)
        }
        (W, V) => {
            let mut out = vec![(qinv, vec![V, W])];
            for &j in spec.support() {
                out.push((spec.fcoeffs()[j].clone(), vec![U; j]));
            }
            Some(out)
        }
        _ => None,
    }
}

fn is_redex(a: Letter, b: Letter) -> bool {
    use Letter::*;
    matches!(
        (a, b),
        (U, V)
            | (U, Vinv)
            | (Uinv, V)
            | (Uinv, Vinv)
            | (U, Uinv)
            | (Uinv, U)
            | (V, Vinv)
            | (Vinv, V)
            | (W, U)
            | (W, V)
    )
}

fn find_redex(letters: &[Letter], strategy: Strategy) -> Option<usize> {
    match strategy {
        Strategy::Leftmost => (0..letters.len().saturating_sub(1))
            .find(|&p| is_redex(letters[p], letters[p + 1])),
        Strategy::Rightmost => (0..letters.len().saturating_sub(1))
            .rev()
            .find(|&p| is_redex(letters[p], letters[p + 1])),
    }
}

/// Convert a redex-free word into a PBW monomial.
fn normal_word_to_monomial(letters: &[Letter]) -> Monomial {
    let mut i = 0i64;
    let mut j = 0i64;
    let mut k = 0u32;
    for &l in letters {
        match l {
            Letter::V => i += 1,
            Letter::Vinv => i -= 1,
            Letter::U => j += 1,
            Letter::Uinv => j -= 1,
            Letter::W => k += 1,
        }
    }
    debug_assert!({
        // sortedness: all v-type letters precede u-type, which precede w
        let mut stage = 0;
        letters.iter().all(|l| {
            let s = if l.is_v() {
                0
            } else if l.is_u() {
                1
            } else {
                2
            };
            if s < stage {
                false
            } else {
                stage = s;
                true
            }
        })
    });
    Monomial::new(i, j, k)
}

/// Reduce a linear combination of words to PBW normal form.
pub fn normal_form_words(
    spec: &AlgebraSpec,
    variant: Variant,
    words: &[Word],
    strategy: Strategy,
) -> Result<Element> {
    for w in words {
        for &l in &w.letters {
            if !l.valid_for(variant) {
                return Err(Error::VariantError(format!(
                    "letter {l:?} is not allowed in the {variant:?} variant"
                )));
            }
        }
    }
    let mut pending: BTreeMap<Vec<Letter>, Scalar> = BTreeMap::new();
    for w in words {
        if w.coeff.is_zero() {
            continue;
        }
        merge(&mut pending, w.letters.clone(), w.coeff.clone());
    }
    let mut terms: BTreeMap<Monomial, Scalar> = BTreeMap::new();
    while let Some((letters, coeff)) = pop_reducible(&mut pending, strategy, &mut terms) {
        let p = find_redex(&letters, strategy).expect("popped word has a redex");
        let reps = rule(spec, letters[p], letters[p + 1]).expect("redex has a rule");
        for (scale, mid) in reps {
            let mut new_letters = Vec::with_capacity(letters.len() + mid.len());
            new_letters.extend_from_slice(&letters[..p]);
            new_letters.extend_from_slice(&mid);
            new_letters.extend_from_slice(&letters[p + 2..]);
            let c = coeff.mul(&scale);
            if !c.is_zero() {
                merge(&mut pending, new_letters, c);
            }
        }
    }
    Ok(Element::from_terms(spec.clone(), variant, terms))
}

fn merge(map: &mut BTreeMap<Vec<Letter>, Scalar>, key: Vec<Letter>, val: Scalar) {
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(e) => {
            e.insert(val);
        }
        Entry::Occupied(mut e) => {
            let s = e.get().add(&val);
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// Pop one word that still contains a redex, moving fully reduced words
/// into the accumulated normal-form terms.
fn pop_reducible(
    pending: &mut BTreeMap<Vec<Letter>, Scalar>,
    strategy: Strategy,
    terms: &mut BTreeMap<Monomial, Scalar>,
) -> Option<(Vec<Letter>, Scalar)> {
    loop {
        let key = pending.keys().next()?.clone();
        let coeff = pending.remove(&key).expect("key just observed");
        if find_redex(&key, strategy).is_some() {
            return Some((key, coeff));
        }
        let m = normal_word_to_monomial(&key);
        use std::collections::btree_map::Entry;
        match terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                let s = e.get().add(&coeff);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }
}

/// The word spelling of a PBW monomial (letters in normal order).
pub fn monomial_letters(m: &Monomial) -> Vec<Letter> {
    let mut letters = Vec::new();
    let (vl, ul) = (
        if m.i >= 0 { Letter::V } else { Letter::Vinv },
        if m.j >= 0 { Letter::U } else { Letter::Uinv },
    );
    for _ in 0..m.i.abs() {
        letters.push(vl);
    }
    for _ in 0..m.j.abs() {
        letters.push(ul);
    }
    for _ in 0..m.k {
        letters.push(Letter::W);
    }
    letters
}

/// Normal form of the product of two PBW monomials.
pub fn monomial_product(
    spec: &AlgebraSpec,
    variant: Variant,
    a: &Monomial,
    b: &Monomial,
) -> Result<Element> {
    let mut letters = monomial_letters(a);
    letters.extend(monomial_letters(b));
    normal_form_words(
        spec,
        variant,
        &[Word::new(spec.field().one(), letters)],
        Strategy::Leftmost,
    )
}
