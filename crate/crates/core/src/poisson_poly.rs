//! Commutative polynomial algebras with a Poisson bracket given on
//! generators and extended by Leibniz.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lincomb::{rat, ratio};
use crate::poly::{parse_poly, Poly};

#[derive(Clone, Debug, PartialEq)]
pub struct PoissonPolyAlgebra {
    names: Vec<String>,
    table: Vec<Vec<Poly>>,
}

/// JSON interchange form: `{"generators": [...], "table": [[expr]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoissonTableJson {
    pub generators: Vec<String>,
    pub table: Vec<Vec<String>>,
}

impl PoissonPolyAlgebra {
    /// Validates shape, antisymmetry and Jacobi on all generator triples.
    pub fn new(names: Vec<String>, table: Vec<Vec<Poly>>) -> Result<Self> {
        let n = names.len();
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::TableShape(format!("expected {n}x{n} table")));
        }
        if let Some(bad) = table.iter().flatten().find(|p| p.num_vars() > n) {
            return Err(Error::TableShape(format!(
                "entry {} uses an unknown generator",
                bad.display(&names)
            )));
        }
        for i in 0..n {
            for j in 0..n {
                if table[i][j] != -table[j][i].clone() {
                    return Err(Error::TableAntisymmetry {
                        a: names[i].clone(),
                        b: names[j].clone(),
                    });
                }
            }
        }
        let alg = PoissonPolyAlgebra { names, table };
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if !alg
                        .jacobiator(&Poly::var(i), &Poly::var(j), &Poly::var(k))
                        .is_zero()
                    {
                        return Err(Error::Jacobi {
                            a: alg.names[i].clone(),
                            b: alg.names[j].clone(),
                            c: alg.names[k].clone(),
                        });
                    }
                }
            }
        }
        Ok(alg)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn table(&self) -> &[Vec<Poly>] {
        &self.table
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn generator(&self, name: &str) -> Option<Poly> {
        self.names.iter().position(|n| n == name).map(Poly::var)
    }

    pub fn parse(&self, expr: &str) -> Result<Poly> {
        parse_poly(expr, &self.names)
    }

    pub fn show(&self, p: &Poly) -> String {
        p.display(&self.names).to_string()
    }

    /// `{f, g} = Σ_{i,j} ∂f/∂g_i · ∂g/∂g_j · {g_i, g_j}`.
    pub fn poisson(&self, f: &Poly, g: &Poly) -> Poly {
        let n = self.names.len();
        let df: Vec<Poly> = (0..n).map(|i| f.partial(i)).collect();
        let dg: Vec<Poly> = (0..n).map(|j| g.partial(j)).collect();
        let mut out = Poly::zero();
        for (fi, row) in df.iter().zip(&self.table) {
            if fi.is_zero() {
                continue;
            }
            for (gj, t) in dg.iter().zip(row) {
                if gj.is_zero() || t.is_zero() {
                    continue;
                }
                out += &fi.mul(gj).mul(t);
            }
        }
        out
    }

    /// `{f,{g,h}} + {g,{h,f}} + {h,{f,g}}`.
    pub fn jacobiator(&self, f: &Poly, g: &Poly, h: &Poly) -> Poly {
        &(&self.poisson(f, &self.poisson(g, h)) + &self.poisson(g, &self.poisson(h, f)))
            + &self.poisson(h, &self.poisson(f, g))
    }

    pub fn to_json(&self) -> PoissonTableJson {
        PoissonTableJson {
            generators: self.names.clone(),
            table: self
                .table
                .iter()
                .map(|row| row.iter().map(|p| self.show(p)).collect())
                .collect(),
        }
    }

    pub fn from_json(j: &PoissonTableJson) -> Result<Self> {
        let table = j
            .table
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| parse_poly(e, &j.generators))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(j.generators.clone(), table)
    }

    /// Canonical symplectic bracket on `C[x_1, x_1*, ..., x_d, x_d*]`:
    /// `{x_i, x_i*} = 1`.
    pub fn symplectic(d: usize) -> Self {
        let names: Vec<String> = (1..=d)
            .flat_map(|i| [format!("x{i}"), format!("x{i}*")])
            .collect();
        let n = names.len();
        let mut table = vec![vec![Poly::zero(); n]; n];
        for i in 0..d {
            table[2 * i][2 * i + 1] = Poly::one();
            table[2 * i + 1][2 * i] = -Poly::one();
        }
        Self::new(names, table).expect("symplectic table is valid")
    }

    /// `S(sl_2 ⋉ h)/(Z - 2)` on generators `X, Y, E, F, H`.
    pub fn sl2_heisenberg() -> Self {
        let names: Vec<String> = ["X", "Y", "E", "F", "H"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let g = |s: &str| parse_poly(s, &names).unwrap();
        let upper = [
            ("X", "Y", "2"),
            ("X", "E", "0"),
            ("X", "F", "-Y"),
            ("X", "H", "-X"),
            ("Y", "E", "-X"),
            ("Y", "F", "0"),
            ("Y", "H", "Y"),
            ("E", "F", "H"),
            ("E", "H", "-2*E"),
            ("F", "H", "2*F"),
        ];
        let idx = |s: &str| names.iter().position(|n| n == s).unwrap();
        let mut table = vec![vec![Poly::zero(); 5]; 5];
        for (a, b, v) in upper {
            let p = g(v);
            table[idx(a)][idx(b)] = p.clone();
            table[idx(b)][idx(a)] = -p;
        }
        Self::new(names, table).expect("sl2 ⋉ heisenberg table is valid")
    }
}

/// The decoupled coordinates `H', E', F', X', Y'` in `X, Y, E, F, H`.
pub struct PrimedCoordinates {
    pub h: Poly,
    pub e: Poly,
    pub f: Poly,
    pub x: Poly,
    pub y: Poly,
}

impl PrimedCoordinates {
    /// `H' = H + XY/2`, `E' = E - X²/4`, `F' = F + Y²/4`, `X' = X`, `Y' = Y`
    /// over the generator order of [`PoissonPolyAlgebra::sl2_heisenberg`].
    pub fn new() -> Self {
        let (x, y, e, f, h) = (
            Poly::var(0),
            Poly::var(1),
            Poly::var(2),
            Poly::var(3),
            Poly::var(4),
        );
        PrimedCoordinates {
            h: &h + &x.mul(&y).scale(&ratio(1, 2)),
            e: &e - &x.mul(&x).scale(&ratio(1, 4)),
            f: &f + &y.mul(&y).scale(&ratio(1, 4)),
            x,
            y,
        }
    }

    /// `H'² + 4E'F'`.
    pub fn casimir(&self) -> Poly {
        &self.h.mul(&self.h) + &self.e.mul(&self.f).scale(&rat(4))
    }

    fn named(&self) -> [(&'static str, &Poly); 5] {
        [
            ("H'", &self.h),
            ("E'", &self.e),
            ("F'", &self.f),
            ("X'", &self.x),
            ("Y'", &self.y),
        ]
    }
}

impl Default for PrimedCoordinates {
    fn default() -> Self {
        Self::new()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Relation {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CoordinateChangeReport {
    /// Brackets of all primed pairs, rendered in `X, Y, E, F, H`.
    pub table: Vec<Vec<String>>,
    pub relations: Vec<Relation>,
}

impl CoordinateChangeReport {
    pub fn all_hold(&self) -> bool {
        self.relations.iter().all(|r| r.holds)
    }
}

/// Brackets of the primed coordinates: the `sl_2` relations, triviality
/// of `H', E', F'` on `X', Y'`, and `{X', Y'} = 2`.
pub fn change_coordinates(alg: &PoissonPolyAlgebra) -> CoordinateChangeReport {
    let p = PrimedCoordinates::new();
    let named = p.named();
    let table = named
        .iter()
        .map(|(_, a)| {
            named
                .iter()
                .map(|(_, b)| alg.show(&alg.poisson(a, b)))
                .collect()
        })
        .collect();
    let br = |a: &Poly, b: &Poly| alg.poisson(a, b);
    let mut relations = vec![
        ("{H',E'} = 2E'", br(&p.h, &p.e) == p.e.scale(&rat(2))),
        ("{H',F'} = -2F'", br(&p.h, &p.f) == p.f.scale(&rat(-2))),
        ("{E',F'} = H'", br(&p.e, &p.f) == p.h),
    ];
    let sl2 = [("H'", &p.h), ("E'", &p.e), ("F'", &p.f)];
    let heis = [("X'", &p.x), ("Y'", &p.y)];
    let mut trivial = Vec::new();
    for (sn, s) in sl2 {
        for (hn, h) in heis {
            trivial.push((format!("{{{sn},{hn}}} = 0"), br(s, h).is_zero()));
        }
    }
    relations.push(("{X',Y'} = 2", br(&p.x, &p.y) == Poly::constant(rat(2))));
    let mut out: Vec<Relation> = relations
        .into_iter()
        .map(|(n, h)| Relation {
            name: n.to_string(),
            holds: h,
        })
        .collect();
    out.extend(
        trivial
            .into_iter()
            .map(|(name, holds)| Relation { name, holds }),
    );
    CoordinateChangeReport {
        table,
        relations: out,
    }
}

/// `{c, g} = 0` for the Casimir `c = H'² + 4E'F'` against every generator,
/// and `{c², E} = 0`.
pub fn casimir_check(alg: &PoissonPolyAlgebra) -> Vec<Relation> {
    let c = PrimedCoordinates::new().casimir();
    let mut out: Vec<Relation> = alg
        .names()
        .iter()
        .enumerate()
        .map(|(i, n)| Relation {
            name: format!("{{c_sl2, {n}}} = 0"),
            holds: alg.poisson(&c, &Poly::var(i)).is_zero(),
        })
        .collect();
    if let Some(e) = alg.generator("E") {
        out.push(Relation {
            name: "{c_sl2^2, E} = 0".into(),
            holds: alg.poisson(&c.mul(&c), &e).is_zero(),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heisenberg_part() {
        let a = PoissonPolyAlgebra::sl2_heisenberg();
        let (x, y) = (a.generator("X").unwrap(), a.generator("Y").unwrap());
        assert_eq!(a.poisson(&x, &y), Poly::constant(rat(2)));
        let (h, e) = (a.generator("H").unwrap(), a.generator("E").unwrap());
        assert_eq!(a.poisson(&h, &e), e.scale(&rat(2)));
    }

    #[test]
    fn self_bracket_vanishes() {
        let a = PoissonPolyAlgebra::sl2_heisenberg();
        let f = a.parse("X^2*H - 3*E*F + Y").unwrap();
        assert!(a.poisson(&f, &f).is_zero());
    }

    #[test]
    fn primed_relations() {
        let a = PoissonPolyAlgebra::sl2_heisenberg();
        let rep = change_coordinates(&a);
        assert_eq!(rep.relations.len(), 10);
        for r in &rep.relations {
            assert!(r.holds, "{}", r.name);
        }
    }

    #[test]
    fn casimir_is_central() {
        let a = PoissonPolyAlgebra::sl2_heisenberg();
        let rels = casimir_check(&a);
        assert_eq!(rels.len(), 6);
        assert!(rels.iter().all(|r| r.holds));
    }

    #[test]
    fn json_round_trip() {
        let a = PoissonPolyAlgebra::sl2_heisenberg();
        let j = a.to_json();
        let text = serde_json::to_string(&j).unwrap();
        let back: PoissonTableJson = serde_json::from_str(&text).unwrap();
        assert_eq!(PoissonPolyAlgebra::from_json(&back).unwrap(), a);
    }

    #[test]
    fn rejects_bad_tables() {
        let names: Vec<String> = ["a", "b"].iter().map(|s| s.to_string()).collect();
        let t = vec![
            vec![Poly::zero(), Poly::one()],
            vec![Poly::one(), Poly::zero()],
        ];
        assert!(matches!(
            PoissonPolyAlgebra::new(names.clone(), t),
            Err(Error::TableAntisymmetry { .. })
        ));
        // {a,b} = c, {b,c} = a, {c,a} = a  fails Jacobi
        let names3: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        let v = Poly::var;
        let mut t3 = vec![vec![Poly::zero(); 3]; 3];
        let mut set = |i: usize, j: usize, p: Poly| {
            t3[i][j] = p.clone();
            t3[j][i] = -p;
        };
        set(0, 1, v(2));
        set(1, 2, v(0));
        set(2, 0, v(0));
        assert!(matches!(
            PoissonPolyAlgebra::new(names3, t3),
            Err(Error::Jacobi { .. })
        ));
        assert!(PoissonPolyAlgebra::new(names, vec![]).is_err());
    }

    #[test]
    fn symplectic_bracket() {
        let a = PoissonPolyAlgebra::symplectic(1);
        let f = a.parse("x1^2").unwrap();
        let g = a.parse("x1*^2").unwrap();
        assert_eq!(a.poisson(&f, &g), a.parse("4*x1*x1*").unwrap());
    }
}
