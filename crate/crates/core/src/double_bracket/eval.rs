use super::rule::BracketRule;
use crate::error::Result;
use crate::free_algebra::{FreeElement, Necklace, NecklaceElement, TensorElement, Word};

/// `{{a, b}}` on words via the closed form
/// `Σ_{p,q} b_{<q} u' a_{>p} ⊗ a_{<p} u'' b_{>q}` where
/// `u'⊗u'' = {{a_p, b_q}}` runs over the generator table. No alphabet
/// check.
pub(crate) fn double_bracket_words(rule: &BracketRule, a: &Word, b: &Word) -> TensorElement {
    let (al, bl) = (a.letters(), b.letters());
    let mut out = TensorElement::zero();
    for (p, &ap) in al.iter().enumerate() {
        for (q, &bq) in bl.iter().enumerate() {
            let Some(gen) = rule.get(ap, bq) else {
                continue;
            };
            for ((u1, u2), c) in gen {
                let left = Word::join(&[&bl[..q], u1.letters(), &al[p + 1..]]);
                let right = Word::join(&[&al[..p], u2.letters(), &bl[q + 1..]]);
                out.add_term((left, right), c.clone());
            }
        }
    }
    out
}

/// `μ({{a, b}})` on words, skipping the tensor intermediate.
pub(crate) fn loday_words(rule: &BracketRule, a: &Word, b: &Word) -> FreeElement {
    let (al, bl) = (a.letters(), b.letters());
    let mut out = FreeElement::zero();
    for (p, &ap) in al.iter().enumerate() {
        for (q, &bq) in bl.iter().enumerate() {
            let Some(gen) = rule.get(ap, bq) else {
                continue;
            };
            for ((u1, u2), c) in gen {
                let w = Word::join(&[
                    &bl[..q],
                    u1.letters(),
                    &al[p + 1..],
                    &al[..p],
                    u2.letters(),
                    &bl[q + 1..],
                ]);
                out.add_term(w, c.clone());
            }
        }
    }
    out
}

/// The double bracket of two elements of the free algebra.
pub fn double_bracket(
    rule: &BracketRule,
    a: &FreeElement,
    b: &FreeElement,
) -> Result<TensorElement> {
    rule.check_element(a)?;
    rule.check_element(b)?;
    Ok(a.bilinear(b, |u, v| double_bracket_words(rule, u, v)))
}

/// The Loday bracket `{a, b}_L = μ({{a, b}})`.
pub fn loday_bracket(rule: &BracketRule, a: &FreeElement, b: &FreeElement) -> Result<FreeElement> {
    rule.check_element(a)?;
    rule.check_element(b)?;
    Ok(a.bilinear(b, |u, v| loday_words(rule, u, v)))
}

pub(crate) fn necklace_bracket_basis(
    rule: &BracketRule,
    a: &Necklace,
    b: &Necklace,
) -> NecklaceElement {
    loday_words(rule, a.word(), b.word()).project()
}

/// The Lie bracket on `A/[A,A]` induced by the Loday bracket.
pub fn necklace_bracket(
    rule: &BracketRule,
    w1: &NecklaceElement,
    w2: &NecklaceElement,
) -> Result<NecklaceElement> {
    for n in w1.keys().chain(w2.keys()) {
        rule.check_word(n.word())?;
    }
    Ok(w1.bilinear(w2, |a, b| necklace_bracket_basis(rule, a, b)))
}
