use std::collections::BTreeMap;

use num_traits::One;

use crate::error::{Error, Result};
use crate::free_algebra::{Alphabet, FreeElement, Letter, TensorElement, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RuleKind {
    CanonicalSymplectic,
    Linear,
    Custom,
}

/// A double bracket given by its values on pairs of generators. Pairs
/// that are not stored bracket to zero.
#[derive(Clone, Debug)]
pub struct BracketRule {
    alphabet: Alphabet,
    kind: RuleKind,
    table: BTreeMap<(Letter, Letter), TensorElement>,
}

impl BracketRule {
    /// `{{x_i, x_i*}} = 1⊗1`, `{{x_i*, x_i}} = -1⊗1`, all other pairs zero.
    pub fn canonical(d: usize) -> BracketRule {
        assert!(d >= 1, "need at least one symbol pair");
        let mut table = BTreeMap::new();
        for i in 1..=d {
            table.insert((Letter::x(i), Letter::star(i)), TensorElement::unit());
            table.insert((Letter::star(i), Letter::x(i)), -TensorElement::unit());
        }
        BracketRule {
            alphabet: Alphabet::Doubled(d),
            kind: RuleKind::CanonicalSymplectic,
            table,
        }
    }

    /// A user-supplied generator table, checked for twisted antisymmetry
    /// and for letters outside the alphabet.
    pub fn custom(
        alphabet: Alphabet,
        entries: impl IntoIterator<Item = ((Letter, Letter), TensorElement)>,
    ) -> Result<BracketRule> {
        Self::from_table(alphabet, RuleKind::Custom, entries.into_iter().collect())
    }

    pub(crate) fn from_table(
        alphabet: Alphabet,
        kind: RuleKind,
        table: BTreeMap<(Letter, Letter), TensorElement>,
    ) -> Result<BracketRule> {
        let table: BTreeMap<_, _> = table.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        for ((a, b), t) in &table {
            alphabet.check(*a)?;
            alphabet.check(*b)?;
            for (u, v) in t.keys() {
                alphabet.check_word(u)?;
                alphabet.check_word(v)?;
            }
        }
        let rule = BracketRule {
            alphabet,
            kind,
            table,
        };
        rule.check_twisted_antisymmetry()?;
        Ok(rule)
    }

    fn check_twisted_antisymmetry(&self) -> Result<()> {
        let zero = TensorElement::zero();
        for a in self.alphabet.letters() {
            for b in self.alphabet.letters() {
                let ab = self.get(a, b).unwrap_or(&zero);
                let ba = self.get(b, a).unwrap_or(&zero);
                if *ab != -ba.flip() {
                    return Err(Error::TwistedAntisymmetry {
                        a: a.to_string(),
                        b: b.to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn kind(&self) -> RuleKind {
        self.kind
    }

    pub fn get(&self, a: Letter, b: Letter) -> Option<&TensorElement> {
        self.table.get(&(a, b))
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(Letter, Letter), &TensorElement)> {
        self.table.iter()
    }

    /// Degree by which the necklace bracket shifts the grading, when the
    /// rule is homogeneous.
    pub fn degree_shift(&self) -> Option<i64> {
        match self.kind {
            RuleKind::CanonicalSymplectic => Some(-2),
            RuleKind::Linear => Some(-1),
            RuleKind::Custom => {
                let mut shift = None;
                for t in self.table.values() {
                    for (u, v) in t.keys() {
                        let s = (u.len() + v.len()) as i64 - 2;
                        match shift {
                            None => shift = Some(s),
                            Some(s0) if s0 != s => return None,
                            _ => {}
                        }
                    }
                }
                shift
            }
        }
    }

    pub(crate) fn check_element(&self, e: &FreeElement) -> Result<()> {
        e.keys().try_for_each(|w| self.alphabet.check_word(w))
    }

    pub(crate) fn check_word(&self, w: &Word) -> Result<()> {
        self.alphabet.check_word(w)
    }
}

/// Convenience: `{{a, b}} = c·(u ⊗ v)` on generators.
pub fn generator_value(u: Word, v: Word) -> TensorElement {
    TensorElement::term((u, v), num_rational::BigRational::one())
}
