//! Identity checks for double brackets: double Jacobi, Loday identities,
//! grading, representative independence.

use serde::Serialize;

use super::eval::{double_bracket_words, loday_words, necklace_bracket_basis};
use super::rule::BracketRule;
use crate::error::Result;
use crate::free_algebra::{FreeElement, Necklace, TensorElement, TripleTensor, Word};

/// Outcome of checking a property on a batch of samples.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GradedBracketReport {
    pub degree_shift: i64,
    pub samples_checked: usize,
    pub violations: Vec<String>,
}

impl GradedBracketReport {
    pub fn new(degree_shift: i64) -> Self {
        GradedBracketReport {
            degree_shift,
            ..Default::default()
        }
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn merge(&mut self, other: GradedBracketReport) {
        self.samples_checked += other.samples_checked;
        self.violations.extend(other.violations);
    }
}

/// `{{a, u ⊗ v}}_L := {{a, u}} ⊗ v`.
fn left_extended(rule: &BracketRule, a: &Word, t: &TensorElement) -> TripleTensor {
    let mut out = TripleTensor::zero();
    for ((u, v), c) in t {
        for ((s1, s2), c2) in &double_bracket_words(rule, a, u) {
            out.add_term((s1.clone(), s2.clone(), v.clone()), c * c2);
        }
    }
    out
}

/// Left-hand side of the double Jacobi identity,
/// `{{a,{{b,c}}}}_L + σ {{b,{{c,a}}}}_L + σ⁻¹ {{c,{{a,b}}}}_L`.
pub fn verify_double_jacobi(
    rule: &BracketRule,
    a: &Word,
    b: &Word,
    c: &Word,
) -> Result<TripleTensor> {
    for w in [a, b, c] {
        rule.check_word(w)?;
    }
    let first = left_extended(rule, a, &double_bracket_words(rule, b, c));
    let second = left_extended(rule, b, &double_bracket_words(rule, c, a)).sigma();
    let third = left_extended(rule, c, &double_bracket_words(rule, a, b)).sigma_inv();
    Ok(first + second + third)
}

fn loday_elem(rule: &BracketRule, a: &FreeElement, b: &FreeElement) -> FreeElement {
    a.bilinear(b, |u, v| loday_words(rule, u, v))
}

/// Returns `(Loday identity holds, {[a,b], c} = 0)` on the given words.
pub fn verify_loday_properties(
    rule: &BracketRule,
    a: &Word,
    b: &Word,
    c: &Word,
) -> Result<(bool, bool)> {
    for w in [a, b, c] {
        rule.check_word(w)?;
    }
    let (ea, eb, ec) = (
        FreeElement::word(a.clone()),
        FreeElement::word(b.clone()),
        FreeElement::word(c.clone()),
    );
    let lhs = loday_elem(rule, &ea, &loday_elem(rule, &eb, &ec));
    let rhs = &loday_elem(rule, &loday_elem(rule, &ea, &eb), &ec)
        + &loday_elem(rule, &eb, &loday_elem(rule, &ea, &ec));
    let comm = loday_elem(rule, &ea.commutator(&eb), &ec);
    Ok((lhs == rhs, comm.is_zero()))
}

/// Checks `deg {w1, w2} = deg w1 + deg w2 + shift` on every nonzero term.
pub fn check_grading(
    rule: &BracketRule,
    shift: i64,
    pairs: impl IntoIterator<Item = (Necklace, Necklace)>,
) -> GradedBracketReport {
    let mut report = GradedBracketReport::new(shift);
    for (a, b) in pairs {
        report.samples_checked += 1;
        let expected = a.degree() as i64 + b.degree() as i64 + shift;
        let out = necklace_bracket_basis(rule, &a, &b);
        if let Some(bad) = out.keys().find(|n| n.degree() as i64 != expected) {
            report.violations.push(format!(
                "{{{a}, {b}}} has a term {bad} of degree {}",
                bad.degree()
            ));
        }
    }
    report
}

/// Evaluates `{w1, w2}` from every listed pair of representatives and
/// reports any disagreement.
pub fn check_representative_independence(
    rule: &BracketRule,
    w1: &Necklace,
    w2: &Necklace,
    rotations: &[(usize, usize)],
) -> GradedBracketReport {
    let mut report = GradedBracketReport::new(rule.degree_shift().unwrap_or(0));
    let base = necklace_bracket_basis(rule, w1, w2);
    for &(r1, r2) in rotations {
        report.samples_checked += 1;
        let a = w1.word().rotate(r1);
        let b = w2.word().rotate(r2);
        let got = loday_words(rule, &a, &b).project();
        if got != base {
            report.violations.push(format!(
                "representatives {a}, {b} give {got} instead of {base}"
            ));
        }
    }
    report
}
