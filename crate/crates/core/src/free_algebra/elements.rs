use std::fmt;

use num_traits::One;

use super::word::{canonical_rotation, Letter, Word};
use crate::lincomb::{rat, BasisLabel, LinComb, Rational};

/// A cyclic word, stored by its least rotation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Necklace(Word);

impl Necklace {
    pub fn new(w: &Word) -> Necklace {
        Necklace(canonical_rotation(w))
    }

    /// Wraps a word already known to be canonical.
    pub(crate) fn from_canonical(w: Word) -> Necklace {
        debug_assert_eq!(canonical_rotation(&w), w);
        Necklace(w)
    }

    pub fn unit() -> Necklace {
        Necklace(Word::unit())
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for Necklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for Necklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0)
    }
}

/// Element of the free algebra.
pub type FreeElement = LinComb<Word>;
/// Element of the necklace space `A/[A,A]`.
pub type NecklaceElement = LinComb<Necklace>;
/// Element of `A ⊗ A`.
pub type TensorElement = LinComb<(Word, Word)>;
/// Element of `A ⊗ A ⊗ A`.
pub type TripleTensor = LinComb<(Word, Word, Word)>;

impl LinComb<Word> {
    pub fn word(w: Word) -> Self {
        LinComb::basis(w)
    }

    pub fn letter(l: Letter) -> Self {
        LinComb::basis(Word::letter(l))
    }

    pub fn one() -> Self {
        LinComb::basis(Word::unit())
    }

    pub fn scalar(c: Rational) -> Self {
        LinComb::term(Word::unit(), c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.bilinear(other, |a, b| LinComb::basis(a.concat(b)))
    }

    pub fn pow(&self, n: usize) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// `ab - ba`.
    pub fn commutator(&self, other: &Self) -> Self {
        &self.mul(other) - &other.mul(self)
    }

    /// Image in `A/[A,A]`: each word goes to its necklace.
    pub fn project(&self) -> NecklaceElement {
        self.map_keys(Necklace::new)
    }

    /// Largest word length, or `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.keys().map(|w| w.len()).max()
    }
}

impl LinComb<Necklace> {
    pub fn necklace(n: Necklace) -> Self {
        LinComb::basis(n)
    }

    pub fn of_word(w: &Word) -> Self {
        LinComb::basis(Necklace::new(w))
    }

    pub fn unit() -> Self {
        LinComb::basis(Necklace::unit())
    }

    /// Sum of the representative words; any choice of representatives
    /// projects back to `self`.
    pub fn lift(&self) -> FreeElement {
        self.map_keys(|n| n.word().clone())
    }

    pub fn degree(&self) -> Option<usize> {
        self.keys().map(|n| n.degree()).max()
    }

    /// True if every term has the given degree.
    pub fn is_homogeneous_of(&self, deg: usize) -> bool {
        self.keys().all(|n| n.degree() == deg)
    }

    /// Part of the given degree.
    pub fn component(&self, deg: usize) -> Self {
        self.iter()
            .filter(|(n, _)| n.degree() == deg)
            .map(|(n, c)| (n.clone(), c.clone()))
            .collect()
    }
}

impl LinComb<(Word, Word)> {
    pub fn pure(a: Word, b: Word) -> Self {
        LinComb::basis((a, b))
    }

    /// `1 ⊗ 1`.
    pub fn unit() -> Self {
        Self::pure(Word::unit(), Word::unit())
    }

    /// `(a ⊗ b)° = b ⊗ a`.
    pub fn flip(&self) -> Self {
        self.map_keys(|(a, b)| (b.clone(), a.clone()))
    }

    /// Multiplication `μ(a ⊗ b) = ab`.
    pub fn collapse(&self) -> FreeElement {
        self.map_keys(|(a, b)| a.concat(b))
    }

    /// Outer bimodule action `l.(a ⊗ b).r = la ⊗ br`.
    pub fn outer(&self, left: &Word, right: &Word) -> Self {
        self.map_keys(|(a, b)| (left.concat(a), b.concat(right)))
    }

    /// Outer action by algebra elements on both sides.
    pub fn outer_by(&self, left: &FreeElement, right: &FreeElement) -> Self {
        let mut out = Self::zero();
        for (l, cl) in left {
            for (r, cr) in right {
                out.add_scaled(&self.outer(l, r), &(cl * cr));
            }
        }
        out
    }

    /// `x ⊗ y` for free elements.
    pub fn tensor(a: &FreeElement, b: &FreeElement) -> Self {
        a.bilinear(b, |u, v| LinComb::basis((u.clone(), v.clone())))
    }
}

impl LinComb<(Word, Word, Word)> {
    /// `σ(a ⊗ b ⊗ c) = c ⊗ a ⊗ b`.
    pub fn sigma(&self) -> Self {
        self.map_keys(|(a, b, c)| (c.clone(), a.clone(), b.clone()))
    }

    /// `σ⁻¹(a ⊗ b ⊗ c) = b ⊗ c ⊗ a`.
    pub fn sigma_inv(&self) -> Self {
        self.map_keys(|(a, b, c)| (b.clone(), c.clone(), a.clone()))
    }
}

/// `[x_1, x_1*]`-style commutator of two letters as a free element.
pub fn letter_commutator(a: Letter, b: Letter) -> FreeElement {
    let mut out = FreeElement::zero();
    out.add_term(Word::new(vec![a, b]), Rational::one());
    out.add_term(Word::new(vec![b, a]), rat(-1));
    out
}

impl BasisLabel for Word {
    fn label(&self) -> String {
        self.to_string()
    }
}

impl BasisLabel for Necklace {
    fn label(&self) -> String {
        self.to_string()
    }
}

impl BasisLabel for (Word, Word) {
    fn label(&self) -> String {
        format!("{}⊗{}", self.0, self.1)
    }
}

impl BasisLabel for (Word, Word, Word) {
    fn label(&self) -> String {
        format!("{}⊗{}⊗{}", self.0, self.1, self.2)
    }
}
