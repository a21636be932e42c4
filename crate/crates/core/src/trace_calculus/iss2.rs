use serde::Serialize;

use super::{generic_matrices, induced_bracket, trace_of, GeneratorExpression, GenericMatrices};
use crate::double_bracket::center_element;
use crate::error::{Error, Result};
use crate::free_algebra::{parse_necklace, Necklace, NecklaceElement};
use crate::linalg::solve;
use crate::lincomb::{rat, Rational};
#[cfg(test)]
use crate::matrix::Matrix;
use crate::matrix::PolyMatrix;
use crate::poisson_poly::{PoissonPolyAlgebra, PrimedCoordinates, Relation};
use crate::poly::{parse_poly, Monomial, Poly};

/// Generators of the trace ring of 2×2 representations of `C<x, x*>`.
pub const GENERATOR_NAMES: [&str; 5] = ["tr(x)", "tr(x*)", "tr(x^2)", "tr(x*^2)", "tr(xx*)"];
const GENERATOR_WORDS: [&str; 5] = ["x", "x*", "xx", "x*x*", "xx*"];
const BIDEGREES: [(usize, usize); 5] = [(1, 0), (0, 1), (2, 0), (0, 2), (1, 1)];

/// The 2×2 trace ring for `d = 1` on 8 generic indeterminates.
pub struct Iss2 {
    generic: GenericMatrices,
    traces: Vec<Poly>,
}

impl Default for Iss2 {
    fn default() -> Self {
        Self::new()
    }
}

impl Iss2 {
    pub fn new() -> Self {
        let generic = generic_matrices(1, 2);
        let traces = Self::generators()
            .iter()
            .map(|w| trace_of(&NecklaceElement::necklace(w.clone()), &generic.matrices).unwrap())
            .collect();
        Iss2 { generic, traces }
    }

    pub fn names() -> Vec<String> {
        GENERATOR_NAMES.iter().map(|s| s.to_string()).collect()
    }

    pub fn generators() -> Vec<Necklace> {
        GENERATOR_WORDS
            .iter()
            .map(|w| parse_necklace(w).unwrap().keys().next().unwrap().clone())
            .collect()
    }

    pub fn generic(&self) -> &GenericMatrices {
        &self.generic
    }

    /// Substitute the generator traces into a polynomial in the generators.
    pub fn evaluate(&self, expr: &Poly) -> Poly {
        expr.substitute(&self.traces)
    }

    pub fn trace(&self, e: &NecklaceElement) -> Result<Poly> {
        trace_of(e, &self.generic.matrices)
    }

    /// `[X, X*]` on the generic pair.
    pub fn commutator(&self) -> PolyMatrix {
        let m = &self.generic.matrices;
        m[0].commutator(&m[1])
    }

    /// `tr(w)` as a polynomial in the five generators, found by solving for
    /// the coefficients of all generator monomials of the same bidegree.
    pub fn express_necklace(&self, w: &Necklace) -> Option<Poly> {
        if w.degree() == 0 {
            return Some(Poly::constant(rat(2)));
        }
        if w.word().letters().iter().any(|l| l.index() != 1) {
            return None;
        }
        let target = self.trace(&NecklaceElement::necklace(w.clone())).ok()?;
        let monomials = generator_monomials(w.word().deg_x(), w.word().deg_star());
        let columns: Vec<Poly> = monomials
            .iter()
            .map(|m| self.evaluate(&Poly::basis(m.clone())))
            .collect();
        let mut rows: Vec<&Monomial> = columns
            .iter()
            .flat_map(|c| c.keys())
            .chain(target.keys())
            .collect();
        rows.sort();
        rows.dedup();
        let matrix: Vec<Vec<Rational>> = columns
            .iter()
            .map(|c| rows.iter().map(|m| c.coeff(m)).collect())
            .collect();
        let rhs: Vec<Rational> = rows.iter().map(|m| target.coeff(m)).collect();
        let x = solve(&matrix, &rhs)?;
        Some(
            monomials
                .into_iter()
                .zip(x)
                .fold(Poly::zero(), |mut acc, (m, c)| {
                    acc.add_term(m, c);
                    acc
                }),
        )
    }

    pub fn express(&self, e: &NecklaceElement) -> Option<Poly> {
        let mut acc = Poly::zero();
        for (w, c) in e {
            acc.add_scaled(&self.express_necklace(w)?, c);
        }
        Some(acc)
    }
}

/// Exponent vectors `e` with `Σ e_i · bidegree_i = (a, b)`.
fn generator_monomials(a: usize, b: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    for e4 in 0..=a.min(b) {
        for e2 in 0..=(a - e4) / 2 {
            let e0 = a - e4 - 2 * e2;
            for e3 in 0..=(b - e4) / 2 {
                let e1 = b - e4 - 2 * e3;
                let exps = [e0, e1, e2, e3, e4];
                debug_assert_eq!(
                    exps.iter()
                        .zip(BIDEGREES)
                        .map(|(e, (p, _))| e * p)
                        .sum::<usize>(),
                    a
                );
                let mut m = Monomial::one();
                for (i, &e) in exps.iter().enumerate() {
                    for _ in 0..e {
                        m = m.mul(&Monomial::var(i));
                    }
                }
                out.push(m);
            }
        }
    }
    out
}

/// All 25 brackets of generators via [`induced_bracket`] at `n = 2`.
pub fn table2() -> Vec<Vec<GeneratorExpression>> {
    let gens = Iss2::generators();
    gens.iter()
        .map(|a| {
            gens.iter()
                .map(|b| {
                    induced_bracket(
                        &NecklaceElement::necklace(a.clone()),
                        &NecklaceElement::necklace(b.clone()),
                        2,
                    )
                    .expect("generators are canonical letters")
                })
                .collect()
        })
        .collect()
}

/// The Poisson algebra on the five generators defined by [`table2`].
pub fn table2_algebra() -> PoissonPolyAlgebra {
    let table = table2()
        .into_iter()
        .map(|row| row.into_iter().map(|e| e.poly).collect())
        .collect();
    PoissonPolyAlgebra::new(Iss2::names(), table).expect("engine table is a Poisson structure")
}

const PUBLISHED_TABLE2: [[&str; 5]; 5] = [
    ["0", "2", "0", "2*tr(x*)", "tr(x)"],
    ["-2", "0", "-2*tr(x)", "0", "-tr(x*)"],
    ["0", "2*tr(x)", "0", "4*tr(xx*)", "2*tr(x^2)"],
    ["-2*tr(x*^2)", "0", "-4*tr(xx*)", "0", "-2*tr(x*^2)"],
    ["-tr(x)", "tr(x*)", "-2*tr(x^2)", "2*tr(x*^2)", "0"],
];

/// The published table, cell for cell.
pub fn published_table2() -> Vec<Vec<Poly>> {
    let names = Iss2::names();
    PUBLISHED_TABLE2
        .iter()
        .map(|row| row.iter().map(|s| parse_poly(s, &names).unwrap()).collect())
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct Discrepancy {
    pub row: String,
    pub col: String,
    pub engine: String,
    pub published: String,
    /// The engine value is the negative of the published transposed cell.
    pub transpose_agrees: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Table2Audit {
    pub generators: Vec<String>,
    pub engine: Vec<Vec<String>>,
    pub published: Vec<Vec<String>>,
    pub discrepancies: Vec<Discrepancy>,
    pub engine_antisymmetric: bool,
    pub engine_jacobi: bool,
}

impl Table2Audit {
    pub fn matches_after_antisymmetrization(&self) -> bool {
        self.discrepancies.iter().all(|d| d.transpose_agrees)
    }
}

pub fn audit_table2() -> Table2Audit {
    let names = Iss2::names();
    let engine: Vec<Vec<Poly>> = table2()
        .into_iter()
        .map(|row| row.into_iter().map(|e| e.poly).collect())
        .collect();
    let published = published_table2();
    let show = |p: &Poly| p.display(&names).to_string();
    let mut discrepancies = Vec::new();
    let mut antisymmetric = true;
    for i in 0..5 {
        for j in 0..5 {
            antisymmetric &= engine[i][j] == -engine[j][i].clone();
            if engine[i][j] != published[i][j] {
                discrepancies.push(Discrepancy {
                    row: names[i].clone(),
                    col: names[j].clone(),
                    engine: show(&engine[i][j]),
                    published: show(&published[i][j]),
                    transpose_agrees: engine[i][j] == -published[j][i].clone(),
                });
            }
        }
    }
    let jacobi = PoissonPolyAlgebra::new(names.clone(), engine.clone()).is_ok();
    let engine = engine
        .iter()
        .map(|r| r.iter().map(show).collect())
        .collect();
    let published = published
        .iter()
        .map(|r| r.iter().map(show).collect())
        .collect();
    Table2Audit {
        generators: names,
        engine,
        published,
        discrepancies,
        engine_antisymmetric: antisymmetric,
        engine_jacobi: jacobi,
    }
}

/// Images of the five trace generators in `X, Y, E, F, H`:
/// `tr(x) = -Y`, `tr(x*) = X`, `tr(x²) = -2F`, `tr((x*)²) = 2E`, `tr(xx*) = H`.
pub fn identification() -> Vec<Poly> {
    let v = Poly::var;
    vec![-v(1), v(0), v(3).scale(&rat(-2)), v(2).scale(&rat(2)), v(4)]
}

/// `tr(c^{2k}) = 2^{1-k} tr(c²)^k` and `tr(c^{2k+1}) = 0` for `c = [X, X*]`
/// on 2×2 generic matrices, plus agreement of the necklace elements `c_m`
/// with the matrix traces.
pub fn verify_cayley_hamilton(nmax: usize) -> Result<Vec<Relation>> {
    if nmax > 3 {
        return Err(Error::DegreeBound {
            requested: nmax,
            bound: 3,
        });
    }
    let iss = Iss2::new();
    let c = iss.commutator();
    let traces: Vec<Poly> = (0..=2 * nmax + 1)
        .map(|m| c.pow(m as u32).trace())
        .collect();
    let t2 = &traces[2];
    let mut out = Vec::new();
    for k in 0..=nmax {
        out.push(Relation {
            name: format!("tr(c^{}) = 0", 2 * k + 1),
            holds: traces[2 * k + 1].is_zero(),
        });
        if k >= 1 {
            let rhs = t2.pow(k as u32).scale(&pow2(1 - k as i64));
            out.push(Relation {
                name: format!("tr(c^{}) = 2^{} tr(c^2)^{k}", 2 * k, 1 - k as i64),
                holds: traces[2 * k] == rhs,
            });
        }
    }
    for (m, t) in traces.iter().enumerate().skip(1) {
        out.push(Relation {
            name: format!("trace of necklace c_{m} = tr(c^{m})"),
            holds: iss.trace(&center_element(1, m))? == *t,
        });
    }
    Ok(out)
}

fn pow2(e: i64) -> Rational {
    if e >= 0 {
        Rational::from_integer(num_bigint::BigInt::from(1) << e as usize)
    } else {
        Rational::new(1.into(), num_bigint::BigInt::from(1) << (-e) as usize)
    }
}

/// Published generator expression for `tr([x,x*]²)`.
pub const PUBLISHED_C2_EXPRESSION: &str =
    "tr(x)*tr(x*)*tr(xx*) - tr(xx*)^2 + tr(x^2)*tr(x*^2) - 1/2*(tr(x^2)*tr(x*)^2 + tr(x)^2*tr(x*^2))";

#[derive(Clone, Debug, Serialize)]
pub struct CasimirPower {
    pub k: usize,
    /// Image of `c_{2k}` in `X, Y, E, F, H`.
    pub image: String,
    /// Image equals `-2^{1-k} c_sl2^k`.
    pub matches_published: bool,
    /// Image equals `2 c_sl2^k`.
    pub matches_twice_power: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CasimirImageReport {
    pub published_expression: String,
    /// The published expression equals `tr([x,x*]²)` on generic matrices.
    pub published_expression_holds: bool,
    /// The published expression equals `tr(x²(x*)²) - tr((xx*)²)`.
    pub published_expression_is_intermediate: bool,
    /// The published expression maps to `-c_sl2`.
    pub published_expression_image_is_minus_casimir: bool,
    /// `tr([x,x*]²)` rewritten in the generators.
    pub c2_expression: String,
    pub c2_image: String,
    pub c2_image_is_minus_casimir: bool,
    pub c2_image_is_twice_casimir: bool,
    pub c3_image_zero: bool,
    pub powers: Vec<CasimirPower>,
}

/// Images of the central elements `c_m` in the 2×2 trace ring and in
/// `S(sl_2 ⋉ h)/(Z - 2)`, computed by exact rewriting in the generators.
pub fn casimir_image() -> CasimirImageReport {
    let iss = Iss2::new();
    let names = Iss2::names();
    let sl2_names: Vec<String> = ["X", "Y", "E", "F", "H"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let img = identification();
    let casimir = PrimedCoordinates::new().casimir();
    let published = parse_poly(PUBLISHED_C2_EXPRESSION, &names).unwrap();
    let intermediate = parse_necklace("xxx*x* - xx*xx*").unwrap();
    let t2 = iss.trace(&center_element(1, 2)).unwrap();
    let c2 = iss
        .express(&center_element(1, 2))
        .expect("tr(c²) lies in the trace ring");
    let c2_image = c2.substitute(&img);
    let c3 = iss
        .express(&center_element(1, 3))
        .expect("tr(c³) lies in the trace ring");
    let powers = (0..=3usize)
        .map(|k| {
            let e = if k == 0 {
                NecklaceElement::unit()
            } else {
                center_element(1, 2 * k)
            };
            let image = iss
                .express(&e)
                .expect("even traces lie in the trace ring")
                .substitute(&img);
            let ck = casimir.pow(k as u32);
            CasimirPower {
                k,
                matches_published: image == ck.scale(&-pow2(1 - k as i64)),
                matches_twice_power: image == ck.scale(&rat(2)),
                image: image.display(&sl2_names).to_string(),
            }
        })
        .collect();
    CasimirImageReport {
        published_expression: published.display(&names).to_string(),
        published_expression_holds: iss.evaluate(&published) == t2,
        published_expression_is_intermediate: iss.evaluate(&published)
            == iss.trace(&intermediate).unwrap(),
        published_expression_image_is_minus_casimir: published.substitute(&img) == -casimir.clone(),
        c2_expression: c2.display(&names).to_string(),
        c2_image: c2_image.display(&sl2_names).to_string(),
        c2_image_is_minus_casimir: c2_image == -casimir.clone(),
        c2_image_is_twice_casimir: c2_image == casimir.scale(&rat(2)),
        c3_image_zero: c3.is_zero(),
        powers,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn express_generators_and_products() {
        let iss = Iss2::new();
        for (i, g) in Iss2::generators().iter().enumerate() {
            assert_eq!(iss.express_necklace(g), Some(Poly::var(i)));
        }
        // tr(x³) = (3/2) tr(x) tr(x²) - (1/2) tr(x)³ for 2×2 matrices
        let x3 = parse_necklace("xxx").unwrap();
        let p = iss.express(&x3).unwrap();
        assert_eq!(
            p,
            parse_poly("3/2*tr(x)*tr(x^2) - 1/2*tr(x)^3", &Iss2::names()).unwrap()
        );
    }

    #[test]
    fn table_entries() {
        let t = table2();
        assert_eq!(t[0][3].text, "2*tr(x*)");
        assert_eq!(t[3][0].text, "-2*tr(x*)");
        for (i, row) in t.iter().enumerate() {
            assert!(row[i].poly.is_zero());
        }
    }

    #[test]
    fn audit_finds_single_cell() {
        let a = audit_table2();
        assert!(a.engine_antisymmetric && a.engine_jacobi);
        assert_eq!(a.discrepancies.len(), 1);
        let d = &a.discrepancies[0];
        assert_eq!((d.row.as_str(), d.col.as_str()), ("tr(x*^2)", "tr(x)"));
        assert_eq!(d.engine, "-2*tr(x*)");
        assert!(a.matches_after_antisymmetrization());
    }

    #[test]
    fn identification_is_poisson() {
        let t = table2_algebra();
        let s = PoissonPolyAlgebra::sl2_heisenberg();
        let img = identification();
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(
                    s.poisson(&img[i], &img[j]),
                    t.table()[i][j].substitute(&img),
                    "{i} {j}"
                );
            }
        }
    }

    #[test]
    fn cayley_hamilton() {
        let r = verify_cayley_hamilton(3).unwrap();
        for rel in &r {
            assert!(rel.holds, "{}", rel.name);
        }
        assert!(verify_cayley_hamilton(4).is_err());
    }

    // Direct expansion: tr([x,x*]²) = 2 tr((xx*)²) - 2 tr(x²(x*)²), so the
    // published expression is -tr([x,x*]²)/2 and c_2 maps to 2 c_sl2.
    #[test]
    fn casimir() {
        let r = casimir_image();
        assert!(!r.published_expression_holds);
        assert!(r.published_expression_is_intermediate);
        assert!(r.published_expression_image_is_minus_casimir);
        assert!(!r.c2_image_is_minus_casimir);
        assert!(r.c2_image_is_twice_casimir);
        assert!(r.c3_image_zero);
        assert!(r.powers.iter().all(|p| p.matches_twice_power));
        assert_eq!(
            r.c2_expression,
            "tr(x)^2*tr(x*^2) - 2*tr(x)*tr(x*)*tr(xx*) + tr(x*)^2*tr(x^2) - 2*tr(x^2)*tr(x*^2) + 2*tr(xx*)^2"
        );
    }

    #[test]
    fn casimir_on_a_point() {
        // x = e12, x* = e21: [x, x*] = diag(1, -1), so tr(c²) = 2, while
        // X = Y = E = F = 0 and H = 1 give c_sl2 = 1.
        let x = Matrix::from_rows(vec![vec![rat(0), rat(1)], vec![rat(0), rat(0)]]);
        let xs = Matrix::from_rows(vec![vec![rat(0), rat(0)], vec![rat(1), rat(0)]]);
        let t2: Rational = trace_of(&center_element(1, 2), &[x, xs]).unwrap();
        assert_eq!(t2, rat(2));
        let c = PrimedCoordinates::new()
            .casimir()
            .eval(&[rat(0), rat(0), rat(0), rat(0), rat(1)]);
        assert_eq!(c, rat(1));
    }
}
