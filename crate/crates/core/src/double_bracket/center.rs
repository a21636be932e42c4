use super::checks::GradedBracketReport;
use super::eval::necklace_bracket_basis;
use super::rule::BracketRule;
use crate::free_algebra::{
    enumerate_necklaces, letter_commutator, FreeElement, Letter, NecklaceElement,
};

/// `c = Σ_i [x_i, x_i*]` in the free algebra.
pub fn symplectic_commutator(d: usize) -> FreeElement {
    (1..=d).fold(FreeElement::zero(), |acc, i| {
        acc + letter_commutator(Letter::x(i), Letter::star(i))
    })
}

/// Image of `c^n` in the necklace space.
pub fn center_element(d: usize, n: usize) -> NecklaceElement {
    assert!(d >= 1 && n >= 1, "need d >= 1 and n >= 1");
    symplectic_commutator(d).pow(n).project()
}

/// Brackets `center_element(d, n)` against every basis necklace of degree
/// at most `degree_bound` under the canonical rule.
pub fn center_check(d: usize, n: usize, degree_bound: usize) -> GradedBracketReport {
    let rule = BracketRule::canonical(d);
    let c = center_element(d, n);
    let mut report = GradedBracketReport::new(-2);
    for k in 0..=degree_bound {
        for w in enumerate_necklaces(d, k) {
            report.samples_checked += 1;
            let out = c.map_basis(|a| necklace_bracket_basis(&rule, a, &w));
            if !out.is_zero() {
                report.violations.push(format!("{{c_{n}, {w}}} = {out}"));
            }
        }
    }
    report
}
