//! Linear double brackets built from the structure constants of a
//! finite-dimensional associative algebra, and the algebras `𝔫𝔤𝔩_n`.

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::double_bracket::{necklace_bracket, BracketRule, RuleKind};
use crate::error::{Error, Result};
use crate::free_algebra::{Alphabet, Letter, NecklaceElement, TensorElement, Word};
use crate::lincomb::{rat, ratio, Rational};
use crate::sampling;

/// Structure constants `a(i,j,k)` (1-based) of an associative product
/// `x_i · x_j = Σ_k a(i,j,k) x_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureConstants {
    dim: usize,
    a: BTreeMap<(usize, usize, usize), Rational>,
}

/// JSON form `{"dim": n, "a": [[i, j, k, "p/q"], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureConstantsJson {
    pub dim: usize,
    pub a: Vec<(usize, usize, usize, String)>,
}

/// First `(i,j,k,s)` with `Σ_t a(i,j,t) a(t,k,s) ≠ Σ_t a(j,k,t) a(i,t,s)`.
pub fn associativity_violation(
    dim: usize,
    a: &BTreeMap<(usize, usize, usize), Rational>,
) -> Option<(usize, usize, usize, usize)> {
    let get = |i, j, k| a.get(&(i, j, k)).cloned().unwrap_or_else(Rational::zero);
    for i in 1..=dim {
        for j in 1..=dim {
            for k in 1..=dim {
                for s in 1..=dim {
                    let mut lhs = Rational::zero();
                    let mut rhs = Rational::zero();
                    for t in 1..=dim {
                        lhs += get(i, j, t) * get(t, k, s);
                        rhs += get(j, k, t) * get(i, t, s);
                    }
                    if lhs != rhs {
                        return Some((i, j, k, s));
                    }
                }
            }
        }
    }
    None
}

/// One structure constant `a_{ij}^k` keyed by `(i, j, k)`.
pub type Entry = ((usize, usize, usize), Rational);

impl StructureConstants {
    pub fn new(
        dim: usize,
        entries: impl IntoIterator<Item = ((usize, usize, usize), Rational)>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidArgument("dimension must be positive".into()));
        }
        let mut a = BTreeMap::new();
        for ((i, j, k), c) in entries {
            for idx in [i, j, k] {
                if idx == 0 || idx > dim {
                    return Err(Error::IndexOutOfRange { index: idx, dim });
                }
            }
            if !c.is_zero() {
                a.insert((i, j, k), c);
            }
        }
        if let Some((i, j, k, s)) = associativity_violation(dim, &a) {
            return Err(Error::NonAssociative { i, j, k, s });
        }
        Ok(StructureConstants { dim, a })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> Rational {
        self.a
            .get(&(i, j, k))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize, usize), Rational> {
        &self.a
    }

    /// `M_n`: basis `e_ij` numbered `(i-1)n + j`, `e_ij e_kl = δ_jk e_il`.
    pub fn matrix_algebra(n: usize) -> Self {
        Self::new(n * n, matrix_algebra_entries(n)).expect("matrix multiplication is associative")
    }

    pub fn to_json(&self) -> StructureConstantsJson {
        StructureConstantsJson {
            dim: self.dim,
            a: self
                .a
                .iter()
                .map(|(&(i, j, k), c)| (i, j, k, c.to_string()))
                .collect(),
        }
    }

    pub fn from_json(j: &StructureConstantsJson) -> Result<Self> {
        let entries =
            j.a.iter()
                .map(|(i, j, k, c)| {
                    c.trim()
                        .parse::<Rational>()
                        .map(|c| ((*i, *j, *k), c))
                        .map_err(|_| Error::parse(c, 0, "expected a rational p/q"))
                })
                .collect::<Result<Vec<_>>>()?;
        Self::new(j.dim, entries)
    }
}

/// Index of `e_ij` among the generators of `𝔫𝔤𝔩_n`.
pub fn matrix_unit(n: usize, i: usize, j: usize) -> usize {
    (i - 1) * n + j
}

fn matrix_algebra_entries(n: usize) -> Vec<Entry> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for l in 1..=n {
                out.push((
                    (
                        matrix_unit(n, i, j),
                        matrix_unit(n, j, l),
                        matrix_unit(n, i, l),
                    ),
                    rat(1),
                ));
            }
        }
    }
    out
}

/// `{{x_i, x_j}} = Σ_k a(i,j,k) x_k⊗1 - a(j,i,k) 1⊗x_k`.
pub fn linear_rule(sc: &StructureConstants) -> BracketRule {
    let n = sc.dim;
    let mut table = BTreeMap::new();
    for i in 1..=n {
        for j in 1..=n {
            let mut t = TensorElement::zero();
            for k in 1..=n {
                let xk = Word::letter(Letter::x(k));
                t.add_term((xk.clone(), Word::unit()), sc.get(i, j, k));
                t.add_term((Word::unit(), xk), -sc.get(j, i, k));
            }
            if !t.is_zero() {
                table.insert((Letter::x(i), Letter::x(j)), t);
            }
        }
    }
    BracketRule::from_table(Alphabet::Plain(n), RuleKind::Linear, table)
        .expect("linear rules are twisted antisymmetric")
}

/// The linear rule of the full matrix algebra `M_n`.
pub fn ngl(n: usize) -> BracketRule {
    assert!(n >= 1, "need n >= 1");
    linear_rule(&StructureConstants::matrix_algebra(n))
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CommutatorReport {
    pub pairs_checked: usize,
    pub mismatches: Vec<String>,
}

impl CommutatorReport {
    pub fn is_ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// `{x_i, x_j} = Σ_k (a(i,j,k) - a(j,i,k)) x_k` in `𝔫`, on all pairs or on
/// `samples` seeded random pairs.
pub fn check_degree1_commutator(
    sc: &StructureConstants,
    samples: Option<usize>,
    seed: u64,
) -> CommutatorReport {
    let n = sc.dim;
    let rule = linear_rule(sc);
    let pairs: Vec<(usize, usize)> = match samples {
        None => (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect(),
        Some(count) => {
            let mut r = sampling::rng(seed);
            (0..count)
                .map(|_| (r.random_range(1..=n), r.random_range(1..=n)))
                .collect()
        }
    };
    let mut report = CommutatorReport::default();
    for (i, j) in pairs {
        let xi = NecklaceElement::of_word(&Word::letter(Letter::x(i)));
        let xj = NecklaceElement::of_word(&Word::letter(Letter::x(j)));
        let got = necklace_bracket(&rule, &xi, &xj).expect("generators are in the alphabet");
        let mut expect = NecklaceElement::zero();
        for k in 1..=n {
            expect.add_term(
                crate::free_algebra::Necklace::new(&Word::letter(Letter::x(k))),
                sc.get(i, j, k) - sc.get(j, i, k),
            );
        }
        report.pairs_checked += 1;
        if got != expect {
            report
                .mismatches
                .push(format!("{{x{i}, x{j}}} = {got}, expected {expect}"));
        }
    }
    report
}

/// `count` raw tables obtained from `M_n` by changing one random structure
/// constant by a random nonzero rational.
pub fn perturbed_matrix_tables(n: usize, count: usize, seed: u64) -> Vec<Vec<Entry>> {
    let base = matrix_algebra_entries(n);
    let dim = n * n;
    let mut r = sampling::rng(seed);
    (0..count)
        .map(|_| {
            let key = (
                r.random_range(1..=dim),
                r.random_range(1..=dim),
                r.random_range(1..=dim),
            );
            let mut num = 0;
            while num == 0 {
                num = r.random_range(-5i64..=5);
            }
            let delta = ratio(num, r.random_range(1i64..=4));
            let mut table: BTreeMap<_, _> = base.iter().cloned().collect();
            *table.entry(key).or_insert_with(Rational::zero) += delta;
            table.into_iter().collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::double_bracket::double_bracket;
    use crate::free_algebra::{FreeElement, Necklace};

    fn x(i: usize) -> FreeElement {
        FreeElement::letter(Letter::x(i))
    }

    #[test]
    fn one_dimensional() {
        let sc = StructureConstants::new(1, [((1, 1, 1), rat(1))]).unwrap();
        let rule = linear_rule(&sc);
        let t = double_bracket(&rule, &x(1), &x(1)).unwrap();
        let w = Word::letter(Letter::x(1));
        let expect =
            &TensorElement::pure(w.clone(), Word::unit()) - &TensorElement::pure(Word::unit(), w);
        assert_eq!(t, expect);
        let n = NecklaceElement::of_word(&Word::letter(Letter::x(1)));
        assert!(necklace_bracket(&rule, &n, &n).unwrap().is_zero());
    }

    #[test]
    fn gl2_values() {
        let rule = ngl(2);
        let (e11, e12, e21, e22) = (1, 2, 3, 4);
        let t = double_bracket(&rule, &x(e12), &x(e21)).unwrap();
        let expect = &TensorElement::pure(Word::letter(Letter::x(e11)), Word::unit())
            - &TensorElement::pure(Word::unit(), Word::letter(Letter::x(e22)));
        assert_eq!(t, expect);
        let nk = |i| NecklaceElement::of_word(&Word::letter(Letter::x(i)));
        let b = necklace_bracket(&rule, &nk(e12), &nk(e21)).unwrap();
        assert_eq!(b, &nk(e11) - &nk(e22));
        assert_eq!(
            necklace_bracket(&rule, &nk(e11), &nk(e12)).unwrap(),
            nk(e12)
        );
    }

    #[test]
    fn gl1_is_abelian() {
        let rule = ngl(1);
        let n = NecklaceElement::of_word(&Word::letter(Letter::x(1)));
        assert!(necklace_bracket(&rule, &n, &n).unwrap().is_zero());
    }

    #[test]
    fn degree_one_commutators() {
        assert!(check_degree1_commutator(&StructureConstants::matrix_algebra(2), None, 0).is_ok());
        assert_eq!(
            check_degree1_commutator(&StructureConstants::matrix_algebra(2), None, 0).pairs_checked,
            16
        );
        let r = check_degree1_commutator(&StructureConstants::matrix_algebra(3), Some(30), 1);
        assert!(r.is_ok() && r.pairs_checked == 30);
        // C[t]/(t²): 1·1 = 1, 1·t = t·1 = t
        let comm = StructureConstants::new(
            2,
            [
                ((1, 1, 1), rat(1)),
                ((1, 2, 2), rat(1)),
                ((2, 1, 2), rat(1)),
            ],
        )
        .unwrap();
        let rule = linear_rule(&comm);
        for i in 1..=2 {
            for j in 1..=2 {
                let a = NecklaceElement::of_word(&Word::letter(Letter::x(i)));
                let b = NecklaceElement::of_word(&Word::letter(Letter::x(j)));
                assert!(necklace_bracket(&rule, &a, &b).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(matches!(
            StructureConstants::new(2, [((1, 3, 1), rat(1))]),
            Err(Error::IndexOutOfRange { index: 3, dim: 2 })
        ));
        // x1 x1 = x2 and x2 x1 = x1 is not associative: (x1 x1) x1 = x1, x1 (x1 x1) = 0
        assert!(matches!(
            StructureConstants::new(2, [((1, 1, 2), rat(1)), ((2, 1, 1), rat(1))]),
            Err(Error::NonAssociative { .. })
        ));
        for t in perturbed_matrix_tables(2, 10, 3) {
            assert!(StructureConstants::new(4, t).is_err());
        }
    }

    #[test]
    fn json_round_trip() {
        let sc = StructureConstants::matrix_algebra(2);
        let text = serde_json::to_string(&sc.to_json()).unwrap();
        assert!(text.starts_with("{\"dim\":4,\"a\":[[1,1,1,\"1\"]"));
        let back: StructureConstantsJson = serde_json::from_str(&text).unwrap();
        assert_eq!(StructureConstants::from_json(&back).unwrap(), sc);
        let bad = StructureConstantsJson {
            dim: 1,
            a: vec![(1, 1, 1, "x".into())],
        };
        assert!(StructureConstants::from_json(&bad).is_err());
    }

    #[test]
    fn grading_is_minus_one() {
        let rule = ngl(2);
        let letters = Alphabet::Plain(4).letters();
        for (a, b) in sampling::random_necklace_pairs(5, &letters, 6, 100) {
            let out = necklace_bracket(
                &rule,
                &NecklaceElement::necklace(a.clone()),
                &NecklaceElement::necklace(b.clone()),
            )
            .unwrap();
            assert!(out.is_zero() || out.is_homogeneous_of(a.degree() + b.degree() - 1));
        }
        let _ = Necklace::unit();
    }
}
