//! Traces of necklaces on generic and numeric matrices, the induced
//! Poisson bracket on trace rings, and the 2×2 case in detail.

mod iss2;
mod leaves;

pub use iss2::{
    audit_table2, casimir_image, identification, published_table2, table2, table2_algebra,
    verify_cayley_hamilton, CasimirImageReport, CasimirPower, Discrepancy, Iss2, Table2Audit,
    GENERATOR_NAMES, PUBLISHED_C2_EXPRESSION,
};
pub use leaves::{
    center_witness, classify_point, classify_point_approx, witness_pair, Leaf, LeafClass, LunaType,
    DEFAULT_TOLERANCE,
};

use std::fmt;

use serde::Serialize;

use crate::double_bracket::{necklace_bracket, BracketRule};
use crate::error::{Error, Result};
use crate::free_algebra::{Necklace, NecklaceElement, Word};
use crate::lincomb::Rational;
use crate::matrix::{Matrix, PolyMatrix};
use crate::poly::{Poly, Scalar};

/// `2d` generic `n×n` matrices. Entry `(r, c)` of the matrix for the letter
/// with code `k` is the indeterminate `k·n² + r·n + c`.
#[derive(Clone, Debug)]
pub struct GenericMatrices {
    pub d: usize,
    pub n: usize,
    pub matrices: Vec<PolyMatrix>,
    pub names: Vec<String>,
}

pub fn generic_matrices(d: usize, n: usize) -> GenericMatrices {
    assert!(d >= 1 && n >= 1, "need d >= 1 and n >= 1");
    let letters = 2 * d;
    let matrices = (0..letters)
        .map(|k| PolyMatrix::from_fn(n, |r, c| Poly::var(k * n * n + r * n + c)))
        .collect();
    let mut names = Vec::with_capacity(letters * n * n);
    for k in 0..letters {
        let l = crate::free_algebra::Letter::from_code(k);
        for r in 1..=n {
            for c in 1..=n {
                names.push(if n == 1 {
                    l.to_string()
                } else {
                    format!("{l}[{r},{c}]")
                });
            }
        }
    }
    GenericMatrices {
        d,
        n,
        matrices,
        names,
    }
}

/// Product of the matrices spelled by `w` (identity for the empty word).
pub fn word_matrix<T: Scalar>(w: &Word, mats: &[Matrix<T>], n: usize) -> Result<Matrix<T>> {
    let mut acc: Option<Matrix<T>> = None;
    for l in w.letters() {
        let m = mats.get(l.code()).ok_or_else(|| {
            Error::InvalidArgument(format!(
                "letter {l} needs at least {} matrices",
                l.code() + 1
            ))
        })?;
        acc = Some(match acc {
            None => m.clone(),
            Some(a) => a.mul(m),
        });
    }
    Ok(acc.unwrap_or_else(|| Matrix::identity(n)))
}

/// `Σ c_w tr(w(mats))`, with `tr(1) = n`.
pub fn trace_of<T: Scalar>(e: &NecklaceElement, mats: &[Matrix<T>]) -> Result<T> {
    let n = mats.first().map_or(0, |m| m.size());
    let mut acc = T::zero();
    for (w, c) in e {
        let t = word_matrix(w.word(), mats, n)?.trace();
        acc = acc.add(&T::from_rational(c).mul(&t));
    }
    Ok(acc)
}

/// The `n = 1` trace map `𝔫 → C[x_i, x_i*]`.
pub fn abelianize(e: &NecklaceElement, d: usize) -> Result<Poly> {
    trace_of(e, &generic_matrices(d, 1).matrices)
}

/// A polynomial in named trace symbols.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GeneratorExpression {
    pub names: Vec<String>,
    #[serde(skip_serializing)]
    pub poly: Poly,
    /// `false` when some symbol lies outside the declared generator basis.
    pub reduced: bool,
    pub text: String,
}

impl GeneratorExpression {
    pub fn new(names: Vec<String>, poly: Poly, reduced: bool) -> Self {
        let text = poly.display(&names).to_string();
        GeneratorExpression {
            names,
            poly,
            reduced,
            text,
        }
    }
}

impl fmt::Display for GeneratorExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)?;
        if !self.reduced {
            f.write_str(" [unreduced]")?;
        }
        Ok(())
    }
}

fn max_index(e: &NecklaceElement) -> usize {
    e.keys()
        .flat_map(|w| w.word().letters().iter().map(|l| l.index()))
        .max()
        .unwrap_or(1)
}

/// `{w1, w2}` under the canonical rule, pushed to the trace ring of `n×n`
/// representations.
///
/// For `n = 1` the result is the abelianized polynomial in `x_i, x_i*`.
/// For `n = 2`, `d = 1` it is rewritten in the five trace generators.
/// Otherwise it is written in `tr(w)` symbols, and marked reduced when every
/// symbol has degree at most 2.
pub fn induced_bracket(
    w1: &NecklaceElement,
    w2: &NecklaceElement,
    n: usize,
) -> Result<GeneratorExpression> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "matrix size must be positive".into(),
        ));
    }
    let d = max_index(w1).max(max_index(w2));
    let b = necklace_bracket(&BracketRule::canonical(d), w1, w2)?;
    if n == 1 {
        let g = generic_matrices(d, 1);
        let p = trace_of(&b, &g.matrices)?;
        return Ok(GeneratorExpression::new(g.names, p, true));
    }
    if n == 2 && d == 1 {
        if let Some(p) = Iss2::new().express(&b) {
            return Ok(GeneratorExpression::new(Iss2::names(), p, true));
        }
    }
    Ok(symbolic_traces(&b, n))
}

fn symbolic_traces(b: &NecklaceElement, n: usize) -> GeneratorExpression {
    let symbols: Vec<&Necklace> = b.keys().filter(|w| w.degree() > 0).collect();
    let names = symbols.iter().map(|w| format!("tr({w})")).collect();
    let mut p = Poly::zero();
    for (w, c) in b {
        match symbols.iter().position(|s| *s == w) {
            Some(i) => p.add_term(crate::poly::Monomial::var(i), c.clone()),
            None => p.add_term(
                crate::poly::Monomial::one(),
                c * Rational::from_integer(n.into()),
            ),
        }
    }
    let reduced = symbols.iter().all(|w| w.degree() <= 2);
    GeneratorExpression::new(names, p, reduced)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::double_bracket::center_element;
    use crate::free_algebra::{parse_necklace, parse_word, FreeElement};
    use crate::lincomb::rat;
    use crate::poisson_poly::PoissonPolyAlgebra;

    fn nk(s: &str) -> NecklaceElement {
        parse_necklace(s).unwrap()
    }

    #[test]
    fn generic_shapes() {
        assert_eq!(generic_matrices(1, 2).names.len(), 8);
        assert_eq!(generic_matrices(2, 2).matrices.len(), 4);
        assert_eq!(generic_matrices(2, 2).names.len(), 16);
        assert_eq!(generic_matrices(1, 1).names, vec!["x1", "x1*"]);
    }

    #[test]
    fn simple_traces() {
        let g = generic_matrices(1, 2);
        let t = trace_of(&nk("x"), &g.matrices).unwrap();
        assert_eq!(t, &Poly::var(0) + &Poly::var(3));
        assert_eq!(
            trace_of(&NecklaceElement::unit(), &g.matrices).unwrap(),
            Poly::constant(rat(2))
        );
        assert!(trace_of(&nk("x2"), &g.matrices).is_err());
    }

    #[test]
    fn traces_are_cyclic() {
        let g = generic_matrices(2, 2);
        for (a, b) in [("x1x2*", "x1*x1"), ("x2", "x1x1*x2"), ("x1x1", "x1*x2*x2")] {
            let (a, b) = (parse_word(a).unwrap(), parse_word(b).unwrap());
            let ab = word_matrix(&a.concat(&b), &g.matrices, 2).unwrap().trace();
            let ba = word_matrix(&b.concat(&a), &g.matrices, 2).unwrap().trace();
            assert_eq!(ab, ba);
            let e = FreeElement::word(a)
                .commutator(&FreeElement::word(b))
                .project();
            assert!(trace_of(&e, &g.matrices).unwrap().is_zero());
        }
    }

    #[test]
    fn induced_examples() {
        assert_eq!(induced_bracket(&nk("x"), &nk("x*"), 2).unwrap().text, "2");
        assert_eq!(
            induced_bracket(&nk("xx"), &nk("x*x*"), 2).unwrap().text,
            "4*tr(xx*)"
        );
        assert_eq!(
            induced_bracket(&nk("xx*"), &nk("xx"), 2).unwrap().text,
            "-2*tr(x^2)"
        );
    }

    #[test]
    fn abelianization_is_symplectic_bracket() {
        let alg = PoissonPolyAlgebra::symplectic(1);
        for (a, b) in [("xxx*", "x*x*"), ("xx*xx*", "x*x*x"), ("x", "x*x*x*")] {
            let (a, b) = (nk(a), nk(b));
            let lhs = induced_bracket(&a, &b, 1).unwrap().poly;
            let rhs = alg.poisson(&abelianize(&a, 1).unwrap(), &abelianize(&b, 1).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn higher_size_is_symbolic() {
        let e = induced_bracket(&nk("xxx"), &nk("x*x*"), 3).unwrap();
        assert!(!e.reduced);
        let e = induced_bracket(&nk("x"), &nk("x*"), 3).unwrap();
        assert_eq!(e.text, "3");
        assert!(e.reduced);
    }

    #[test]
    fn first_center_element_has_zero_trace() {
        let g = generic_matrices(1, 3);
        assert!(trace_of(&center_element(1, 1), &g.matrices)
            .unwrap()
            .is_zero());
    }
}
