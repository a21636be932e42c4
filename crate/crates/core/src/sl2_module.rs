//! The `sl_2`-module structure of the graded pieces `𝔫_n` for `d = 1`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::double_bracket::{necklace_bracket_basis, BracketRule};
use crate::error::{Error, Result};
use crate::free_algebra::{
    binomial, divisors, enumerate_necklaces, mobius, necklace_dimension, parse_necklace, Letter,
    Necklace, NecklaceElement, Word,
};
use crate::linalg::rank;
use crate::lincomb::{ratio, Rational};
use crate::poisson_poly::{PoissonPolyAlgebra, Relation};
use crate::trace_calculus::abelianize;

/// Largest degree accepted by the brute-force decomposition by default.
pub const DEFAULT_DEGREE_BOUND: usize = 14;

/// Table 1: rows are degrees 1..=8, columns weights 8 down to 0.
pub const PUBLISHED_TABLE1: [[u64; 9]; 8] = [
    [0, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 1],
    [0, 0, 0, 1, 0, 0, 0, 1, 0],
    [0, 0, 1, 0, 0, 0, 2, 0, 1],
    [0, 1, 0, 0, 0, 2, 0, 2, 0],
    [1, 0, 0, 0, 3, 0, 3, 0, 3],
];

/// `E = (x*)²/2`, `F = -x²/2`, `H = xx*` in `𝔫_2`.
#[derive(Clone, Debug)]
pub struct Sl2Generators {
    pub e: NecklaceElement,
    pub f: NecklaceElement,
    pub h: NecklaceElement,
}

impl Sl2Generators {
    pub fn new() -> Self {
        Sl2Generators {
            e: parse_necklace("1/2 x*x*").unwrap(),
            f: parse_necklace("-1/2 xx").unwrap(),
            h: parse_necklace("xx*").unwrap(),
        }
    }
}

impl Default for Sl2Generators {
    fn default() -> Self {
        Self::new()
    }
}

/// `deg_{x*}(w) - deg_x(w)`.
pub fn word_weight(w: &Word) -> i64 {
    w.deg_star() as i64 - w.deg_x() as i64
}

fn check_range(n: usize, m: usize) -> Result<()> {
    if n == 0 || 2 * m > n {
        return Err(Error::InvalidArgument(format!(
            "need n >= 1 and 0 <= m <= n/2, got n = {n}, m = {m}"
        )));
    }
    Ok(())
}

fn binom(n: i64, k: i64) -> BigInt {
    BigInt::from(binomial(n, k))
}

/// Multiplicity of `V_{n-2m}` in `V^{⊗n}`: `C(n,m) - C(n,m-1)`.
pub fn tensor_multiplicity(n: usize, m: usize) -> Result<BigInt> {
    check_range(n, m)?;
    let (n, m) = (n as i64, m as i64);
    Ok(binom(n, m) - binom(n, m - 1))
}

/// `Σ_{ℓ | n, n | ℓm} (ℓ-1)/ℓ Σ_{k | gcd(ℓ, ℓm/n)} μ(k) C(ℓ/k, ℓm/(kn))`,
/// the number of commutator basis elements with `m` starred letters.
pub fn commutator_basis_count(n: usize, m: i64) -> BigInt {
    let n = n as i64;
    let mut total = Rational::zero();
    for l in divisors(n as u64).into_iter().map(|l| l as i64) {
        if (l * m).rem_euclid(n) != 0 {
            continue;
        }
        let j = l * m / n;
        let mut inner = BigInt::zero();
        for k in divisors(l.gcd(&j) as u64).into_iter().map(|k| k as i64) {
            let mu = mobius(k as u64);
            if mu == 0 {
                continue;
            }
            // ℓm/(kn) = j/k is integral because k | j
            inner += BigInt::from(mu) * binom(l / k, j / k);
        }
        total += Rational::from_integer(inner) * ratio(l - 1, l);
    }
    assert!(total.is_integer(), "basis count must be integral");
    total.to_integer()
}

/// Multiplicity of `V_{n-2m}` in the commutator subspace `C_n`.
pub fn cn_multiplicity(n: usize, m: usize) -> Result<BigInt> {
    check_range(n, m)?;
    Ok(commutator_basis_count(n, m as i64) - commutator_basis_count(n, m as i64 - 1))
}

/// Multiplicity of `V_{n-2m}` in `𝔫_n` by the closed four-term formula.
pub fn multiplicity_formula(n: usize, m: usize) -> Result<BigInt> {
    check_range(n, m)?;
    let (nn, mm) = (n as i64, m as i64);
    Ok(
        binom(nn, mm) - binom(nn, mm - 1) - commutator_basis_count(n, mm)
            + commutator_basis_count(n, mm - 1),
    )
}

/// Highest weights with their multiplicities in one graded piece.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightDecomposition {
    pub degree: usize,
    /// Highest weight to multiplicity; zero entries are omitted.
    pub multiplicities: BTreeMap<i64, u64>,
}

impl WeightDecomposition {
    pub fn new(degree: usize) -> Self {
        WeightDecomposition {
            degree,
            multiplicities: BTreeMap::new(),
        }
    }

    pub fn set(&mut self, weight: i64, mult: u64) {
        if mult == 0 {
            self.multiplicities.remove(&weight);
        } else {
            self.multiplicities.insert(weight, mult);
        }
    }

    pub fn get(&self, weight: i64) -> u64 {
        self.multiplicities.get(&weight).copied().unwrap_or(0)
    }

    /// `Σ mult(w) · (w + 1)`.
    pub fn dimension(&self) -> u64 {
        self.multiplicities
            .iter()
            .map(|(w, m)| m * (*w as u64 + 1))
            .sum()
    }

    /// Number of irreducible summands.
    pub fn summands(&self) -> u64 {
        self.multiplicities.values().sum()
    }

    /// Multiplicities for weights `max_weight, max_weight - 1, ..., 0`.
    pub fn row(&self, max_weight: i64) -> Vec<u64> {
        (0..=max_weight).rev().map(|w| self.get(w)).collect()
    }
}

/// Decomposition of `𝔫_n` from [`multiplicity_formula`].
pub fn decompose_by_formula(n: usize) -> Result<WeightDecomposition> {
    let mut out = WeightDecomposition::new(n);
    for m in 0..=n / 2 {
        let mult = multiplicity_formula(n, m)?;
        let mult = mult.to_u64().ok_or_else(|| {
            Error::OracleMismatch(format!("formula gives {mult} at n = {n}, m = {m}"))
        })?;
        out.set((n - 2 * m) as i64, mult);
    }
    Ok(out)
}

fn weight_spaces(n: usize) -> BTreeMap<i64, Vec<Necklace>> {
    let mut spaces: BTreeMap<i64, Vec<Necklace>> = BTreeMap::new();
    for w in enumerate_necklaces(1, n) {
        spaces.entry(word_weight(w.word())).or_default().push(w);
    }
    spaces
}

/// Decomposition from the dimensions of the `H`-weight spaces:
/// `mult(V_w) = dim W_w - dim W_{w+2}`.
fn decompose_by_weight_dimensions(
    n: usize,
    spaces: &BTreeMap<i64, Vec<Necklace>>,
) -> WeightDecomposition {
    let dim = |w: i64| spaces.get(&w).map_or(0, |b| b.len() as u64);
    let mut out = WeightDecomposition::new(n);
    for w in (0..=n as i64).rev().step_by(2) {
        out.set(w, dim(w) - dim(w + 2));
    }
    out
}

fn e_action_decomposition(n: usize, spaces: &BTreeMap<i64, Vec<Necklace>>) -> WeightDecomposition {
    let rule = BracketRule::canonical(1);
    let e = Necklace::new(&Word::new(vec![Letter::star(1), Letter::star(1)]));
    let mut out = WeightDecomposition::new(n);
    for w in (0..=n as i64).rev().step_by(2) {
        let source = spaces.get(&w).map(Vec::as_slice).unwrap_or(&[]);
        let target = spaces.get(&(w + 2)).map(Vec::as_slice).unwrap_or(&[]);
        let index: BTreeMap<&Necklace, usize> =
            target.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let rows: Vec<Vec<Rational>> = source
            .iter()
            .map(|v| {
                let mut row = vec![Rational::zero(); target.len()];
                for (t, c) in &necklace_bracket_basis(&rule, &e, v) {
                    row[index[t]] = c.clone();
                }
                row
            })
            .collect();
        out.set(w, (source.len() - rank(&rows)) as u64);
    }
    out
}

/// Decomposition of `𝔫_n` as the kernel dimensions of `E = (x*)²/2`
/// between consecutive weight spaces.
pub fn decompose_by_e_action(n: usize) -> Result<WeightDecomposition> {
    check_bound(n, DEFAULT_DEGREE_BOUND)?;
    Ok(e_action_decomposition(n, &weight_spaces(n)))
}

fn check_bound(n: usize, bound: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("degree must be at least 1".into()));
    }
    if n > bound {
        return Err(Error::DegreeBound {
            requested: n,
            bound,
        });
    }
    Ok(())
}

/// Decomposition of `𝔫_n` from the necklace basis, validated against the
/// rank of the `E`-action.
pub fn decompose_bruteforce(n: usize) -> Result<WeightDecomposition> {
    decompose_bruteforce_bounded(n, DEFAULT_DEGREE_BOUND)
}

pub fn decompose_bruteforce_bounded(n: usize, bound: usize) -> Result<WeightDecomposition> {
    check_bound(n, bound)?;
    let spaces = weight_spaces(n);
    let by_dims = decompose_by_weight_dimensions(n, &spaces);
    let by_rank = e_action_decomposition(n, &spaces);
    if by_dims != by_rank {
        return Err(Error::OracleMismatch(format!(
            "degree {n}: weight dimensions give {:?}, E-action ranks give {:?}",
            by_dims.multiplicities, by_rank.multiplicities
        )));
    }
    Ok(by_dims)
}

/// Rows `1..=max_degree` from the closed formula.
pub fn table1(max_degree: usize) -> Result<Vec<WeightDecomposition>> {
    if max_degree == 0 {
        return Err(Error::InvalidArgument(
            "max_degree must be at least 1".into(),
        ));
    }
    (1..=max_degree).map(decompose_by_formula).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct LowDegreeReport {
    pub d: usize,
    pub dim_degree_two: usize,
    pub checks: Vec<Relation>,
}

impl LowDegreeReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    fn push(&mut self, name: impl Into<String>, holds: bool) {
        self.checks.push(Relation {
            name: name.into(),
            holds,
        });
    }
}

/// Heisenberg relations in `𝔫_{≤1}`, the identification of `𝔫_2` with the
/// quadratic Poisson algebra (hence `sp(2d)`) through abelianization, and
/// the action of `𝔫_2` on `𝔫_{≤1}`.
pub fn check_low_degree_structure(d: usize) -> Result<LowDegreeReport> {
    if d == 0 || d > 3 {
        return Err(Error::InvalidArgument(format!("d = {d} is outside 1..=3")));
    }
    let rule = BracketRule::canonical(d);
    let sym = PoissonPolyAlgebra::symplectic(d);
    let br = |a: &Necklace, b: &Necklace| necklace_bracket_basis(&rule, a, b);
    let ab = |e: &NecklaceElement| abelianize(e, d);
    let deg1 = enumerate_necklaces(d, 1);
    let deg2 = enumerate_necklaces(d, 2);
    let unit = Necklace::unit();
    let mut report = LowDegreeReport {
        d,
        dim_degree_two: deg2.len(),
        checks: Vec::new(),
    };

    let mut heisenberg = true;
    for a in &deg1 {
        for b in &deg1 {
            let (la, lb) = (a.word().letters()[0], b.word().letters()[0]);
            let omega = if la.dual() != lb {
                0
            } else if la.is_starred() {
                -1
            } else {
                1
            };
            heisenberg &=
                br(a, b) == NecklaceElement::unit().scale(&Rational::from_integer(omega.into()));
        }
    }
    report.push(
        "{x_i, x_j*} = δ_ij, other degree-1 brackets vanish",
        heisenberg,
    );
    let central = deg1
        .iter()
        .chain(&deg2)
        .all(|w| br(&unit, w).is_zero() && br(w, &unit).is_zero());
    report.push("1 is central in 𝔫_{≤2}", central);

    report.push(
        format!("dim 𝔫_2 = {}", d * (2 * d + 1)),
        deg2.len() == d * (2 * d + 1),
    );
    let polys = deg2
        .iter()
        .map(|w| ab(&NecklaceElement::necklace(w.clone())))
        .collect::<Result<Vec<_>>>()?;
    let mut monomials: Vec<_> = polys.iter().flat_map(|p| p.keys().cloned()).collect();
    monomials.sort();
    monomials.dedup();
    let images: Vec<Vec<Rational>> = polys
        .iter()
        .map(|p| monomials.iter().map(|m| p.coeff(m)).collect())
        .collect();
    report.push(
        "abelianization is injective on 𝔫_2",
        rank(&images) == deg2.len(),
    );

    let mut matches = true;
    for a in &deg2 {
        for b in &deg2 {
            let lhs = ab(&br(a, b))?;
            let rhs = sym.poisson(
                &ab(&NecklaceElement::necklace(a.clone()))?,
                &ab(&NecklaceElement::necklace(b.clone()))?,
            );
            matches &= lhs == rhs;
        }
    }
    report.push(
        "bracket on 𝔫_2 equals the quadratic Poisson bracket (sp(2d))",
        matches,
    );

    let mut action = true;
    for a in &deg2 {
        for b in &deg1 {
            let out = br(a, b);
            action &= out.is_homogeneous_of(1) || out.is_zero();
            let rhs = sym.poisson(
                &ab(&NecklaceElement::necklace(a.clone()))?,
                &ab(&NecklaceElement::necklace(b.clone()))?,
            );
            action &= ab(&out)? == rhs;
        }
    }
    report.push("𝔫_2 acts on 𝔫_1 by the symplectic action", action);

    if d == 1 {
        let g = Sl2Generators::new();
        let nb = |a: &NecklaceElement, b: &NecklaceElement| a.bilinear(b, |x, y| br(x, y));
        report.push(
            "{H, E} = 2E",
            nb(&g.h, &g.e) == g.e.scale(&crate::lincomb::rat(2)),
        );
        report.push(
            "{H, F} = -2F",
            nb(&g.h, &g.f) == g.f.scale(&crate::lincomb::rat(-2)),
        );
        report.push("{E, F} = H", nb(&g.e, &g.f) == g.h);
    }
    Ok(report)
}

/// `dim 𝔫_n` for `d = 1` as a machine integer.
pub fn degree_dimension(n: usize) -> u64 {
    necklace_dimension(1, n as u64)
        .to_u64()
        .expect("dimension fits in u64")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::double_bracket::necklace_bracket;
    use crate::free_algebra::parse_word;

    #[test]
    fn weights() {
        assert_eq!(word_weight(&parse_word("xxx*").unwrap()), -1);
        assert_eq!(word_weight(&parse_word("x*x*").unwrap()), 2);
        assert_eq!(word_weight(&parse_word("xx*xx*").unwrap()), 0);
    }

    #[test]
    fn counting_identities() {
        assert_eq!(tensor_multiplicity(2, 1).unwrap(), BigInt::from(1));
        assert_eq!(tensor_multiplicity(4, 0).unwrap(), BigInt::from(1));
        assert_eq!(tensor_multiplicity(4, 2).unwrap(), BigInt::from(2));
        assert_eq!(cn_multiplicity(4, 2).unwrap(), BigInt::from(1));
        assert_eq!(cn_multiplicity(2, 0).unwrap(), BigInt::from(0));
        for n in 1..=8 {
            assert_eq!(cn_multiplicity(n, 0).unwrap(), BigInt::from(0));
        }
        assert!(tensor_multiplicity(4, 3).is_err());
        assert_eq!(commutator_basis_count(6, -1), BigInt::from(0));
    }

    #[test]
    fn formula_examples() {
        assert_eq!(multiplicity_formula(6, 2).unwrap(), BigInt::from(2));
        assert_eq!(multiplicity_formula(8, 2).unwrap(), BigInt::from(3));
        assert_eq!(multiplicity_formula(5, 2).unwrap(), BigInt::from(1));
    }

    #[test]
    fn bruteforce_examples() {
        let d6 = decompose_bruteforce(6).unwrap();
        assert_eq!(d6.multiplicities, BTreeMap::from([(6, 1), (2, 2), (0, 1)]));
        assert_eq!(
            decompose_bruteforce(1).unwrap().multiplicities,
            BTreeMap::from([(1, 1)])
        );
        let d8 = decompose_bruteforce(8).unwrap();
        assert_eq!(
            d8.multiplicities,
            BTreeMap::from([(8, 1), (4, 3), (2, 3), (0, 3)])
        );
        assert!(matches!(
            decompose_bruteforce(15),
            Err(Error::DegreeBound { .. })
        ));
    }

    #[test]
    fn table_matches() {
        let rows = table1(8).unwrap();
        for (row, expect) in rows.iter().zip(PUBLISHED_TABLE1) {
            assert_eq!(row.row(8), expect.to_vec(), "degree {}", row.degree);
        }
        assert_eq!(rows[3].multiplicities, BTreeMap::from([(4, 1), (0, 1)]));
        assert_eq!(
            rows[6].multiplicities,
            BTreeMap::from([(7, 1), (3, 2), (1, 2)])
        );
    }

    #[test]
    fn formula_agrees_with_oracles_and_dimension() {
        for n in 1..=10 {
            let f = decompose_by_formula(n).unwrap();
            assert_eq!(f, decompose_bruteforce(n).unwrap(), "degree {n}");
            assert_eq!(f.dimension(), degree_dimension(n), "degree {n}");
        }
    }

    #[test]
    fn h_is_diagonal() {
        let rule = BracketRule::canonical(1);
        let h = Sl2Generators::new().h;
        for k in 0..=10 {
            for w in enumerate_necklaces(1, k) {
                let out =
                    necklace_bracket(&rule, &h, &NecklaceElement::necklace(w.clone())).unwrap();
                let weight = Rational::from_integer(word_weight(w.word()).into());
                assert_eq!(
                    out,
                    NecklaceElement::necklace(w.clone()).scale(&weight),
                    "{w}"
                );
            }
        }
    }

    #[test]
    fn not_simple_and_kernel_grows() {
        for n in 4..=10 {
            assert!(
                decompose_bruteforce(n).unwrap().summands() > 1,
                "degree {n}"
            );
            assert!(degree_dimension(n) > n as u64 + 1, "degree {n}");
        }
    }

    #[test]
    fn low_degree() {
        for d in 1..=2 {
            let r = check_low_degree_structure(d).unwrap();
            for c in &r.checks {
                assert!(c.holds, "d = {d}: {}", c.name);
            }
        }
        assert_eq!(check_low_degree_structure(2).unwrap().dim_degree_two, 10);
    }
}
