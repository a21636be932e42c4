//! The necklace algebra `S(A/[A,A])`, the trace algebra `S(A/[A,A]) ⊗ A`,
//! and the derivation `w ↦ {w, -}` extended to them by Leibniz.

use std::fmt;

use super::eval::{loday_words, necklace_bracket_basis};
use super::rule::BracketRule;
use crate::error::Result;
use crate::free_algebra::{Necklace, NecklaceElement, Word};
use crate::lincomb::{BasisLabel, LinComb};

/// A commutative monomial in necklaces; the empty product is the unit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct NecklaceMonomial(Vec<Necklace>);

impl NecklaceMonomial {
    pub fn unit() -> Self {
        NecklaceMonomial(Vec::new())
    }

    pub fn new(mut factors: Vec<Necklace>) -> Self {
        factors.sort();
        NecklaceMonomial(factors)
    }

    pub fn factors(&self) -> &[Necklace] {
        &self.0
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Self::new(v)
    }

    fn without(&self, i: usize) -> Vec<Necklace> {
        let mut v = self.0.clone();
        v.remove(i);
        v
    }
}

impl fmt::Display for NecklaceMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for n in &self.0 {
            write!(f, "{{{n}}}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for NecklaceMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Element of the necklace algebra.
pub type NecklacePolynomial = LinComb<NecklaceMonomial>;
/// Element of the trace algebra: pairs (necklace monomial, word).
pub type TraceElement = LinComb<(NecklaceMonomial, Word)>;

impl LinComb<NecklaceMonomial> {
    /// A linear element of the necklace space viewed in the symmetric algebra.
    pub fn linear(e: &NecklaceElement) -> Self {
        e.map_keys(|n| NecklaceMonomial::new(vec![n.clone()]))
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.bilinear(other, |a, b| LinComb::basis(a.mul(b)))
    }
}

impl BasisLabel for NecklaceMonomial {
    fn label(&self) -> String {
        self.to_string()
    }
}

impl BasisLabel for (NecklaceMonomial, Word) {
    fn label(&self) -> String {
        format!("({}, {})", self.0, self.1)
    }
}

/// `m` with its `i`-th factor replaced by `{w, m_i}`, expanded linearly.
fn replace_factor(
    rule: &BracketRule,
    w: &NecklaceElement,
    m: &NecklaceMonomial,
    i: usize,
) -> NecklacePolynomial {
    let rest = m.without(i);
    let bracket = w.map_basis(|a| necklace_bracket_basis(rule, a, &m.factors()[i]));
    bracket.map_keys(|n| {
        let mut v = rest.clone();
        v.push(n.clone());
        NecklaceMonomial::new(v)
    })
}

/// `{w, -}` on the necklace algebra, extended by Leibniz.
pub fn hamiltonian_on_monomial(
    rule: &BracketRule,
    w: &NecklaceElement,
    m: &NecklaceMonomial,
) -> NecklacePolynomial {
    let mut out = NecklacePolynomial::zero();
    for i in 0..m.factors().len() {
        out += &replace_factor(rule, w, m, i);
    }
    out
}

/// Lie–Poisson bracket on the necklace algebra.
pub fn lie_poisson_bracket(
    rule: &BracketRule,
    f: &NecklacePolynomial,
    g: &NecklacePolynomial,
) -> NecklacePolynomial {
    f.bilinear(g, |a, b| {
        let mut out = NecklacePolynomial::zero();
        for i in 0..a.factors().len() {
            let ai = NecklaceElement::necklace(a.factors()[i].clone());
            let rest_a = NecklaceMonomial::new(a.without(i));
            out += &hamiltonian_on_monomial(rule, &ai, b).map_keys(|m| m.mul(&rest_a));
        }
        out
    })
}

/// The derivation `H_w` of the trace algebra: `{w, -}` on every necklace
/// factor and the Loday bracket `{w, -}_L` on the word factor.
pub fn trace_algebra_derivation(
    rule: &BracketRule,
    w: &NecklaceElement,
    t: &TraceElement,
) -> Result<TraceElement> {
    for n in w.keys() {
        rule.check_word(n.word())?;
    }
    for (m, u) in t.keys() {
        rule.check_word(u)?;
        for n in m.factors() {
            rule.check_word(n.word())?;
        }
    }
    let mut out = TraceElement::zero();
    for ((m, u), c) in t {
        let on_necklaces = hamiltonian_on_monomial(rule, w, m);
        for (m2, c2) in &on_necklaces {
            out.add_term((m2.clone(), u.clone()), c * c2);
        }
        for (rep, cw) in w {
            for (u2, c2) in &loday_words(rule, rep.word(), u) {
                out.add_term((m.clone(), u2.clone()), c * cw * c2);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::double_bracket::center_element;
    use crate::free_algebra::{enumerate_necklaces, parse_necklace, parse_word};
    use crate::lincomb::rat;

    fn neck(s: &str) -> Necklace {
        Necklace::new(&parse_word(s).unwrap())
    }

    #[test]
    fn pure_loday_action() {
        let r = BracketRule::canonical(1);
        let w = parse_necklace("x1x1*").unwrap();
        let t = TraceElement::basis((NecklaceMonomial::unit(), parse_word("x1").unwrap()));
        let got = trace_algebra_derivation(&r, &w, &t).unwrap();
        let expected = TraceElement::term(
            (NecklaceMonomial::unit(), parse_word("x1").unwrap()),
            rat(-1),
        );
        assert_eq!(got, expected);
    }

    #[test]
    fn leibniz_on_two_factors() {
        let r = BracketRule::canonical(1);
        let w = parse_necklace("x1x1*").unwrap();
        let m = NecklaceMonomial::new(vec![neck("x1"), neck("x1*")]);
        let t = TraceElement::basis((m, Word::unit()));
        // (-{x}){x*} + {x}({x*}) cancels
        assert!(trace_algebra_derivation(&r, &w, &t).unwrap().is_zero());
        let m2 = NecklaceMonomial::new(vec![neck("x1"), neck("x1")]);
        let got =
            trace_algebra_derivation(&r, &w, &TraceElement::basis((m2.clone(), Word::unit())))
                .unwrap();
        assert_eq!(got, TraceElement::term((m2, Word::unit()), rat(-2)));
    }

    #[test]
    fn restriction_is_lie_poisson() {
        let r = BracketRule::canonical(1);
        let w = parse_necklace("x1x1 + 2*x1*x1x1").unwrap();
        let m = NecklaceMonomial::new(vec![neck("x1*"), neck("x1x1*x1*")]);
        let via_h =
            trace_algebra_derivation(&r, &w, &TraceElement::basis((m.clone(), Word::unit())))
                .unwrap();
        let lp = lie_poisson_bracket(
            &r,
            &NecklacePolynomial::linear(&w),
            &NecklacePolynomial::basis(m),
        );
        assert_eq!(via_h, lp.map_keys(|m| (m.clone(), Word::unit())));
    }

    #[test]
    fn center_kills_necklace_factors() {
        let r = BracketRule::canonical(1);
        let c2 = center_element(1, 2);
        let small: Vec<Necklace> = (0..=4).flat_map(|k| enumerate_necklaces(1, k)).collect();
        for a in &small {
            for b in small.iter().filter(|b| a.degree() + b.degree() <= 4) {
                let m = NecklaceMonomial::new(vec![a.clone(), b.clone()]);
                let out = trace_algebra_derivation(
                    &r,
                    &c2,
                    &TraceElement::basis((m.clone(), Word::unit())),
                )
                .unwrap();
                assert!(out.is_zero(), "{m}");
                // with a word factor, only commutators survive
                let u = b.word().clone();
                let out = trace_algebra_derivation(&r, &c2, &TraceElement::basis((m, u))).unwrap();
                let words = out.map_keys(|(_, u)| u.clone());
                assert!(words.project().is_zero());
            }
        }
    }
}
