//! Sparse distributed multivariate polynomials with exact rational
//! coefficients, graded-lexicographic monomial order.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lincomb::{fmt_terms, BasisLabel, LinComb, Rational};

/// Exponent vector, trailing zeros trimmed so equal monomials compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(i: usize) -> Self {
        let mut v = vec![0; i + 1];
        v[i] = 1;
        Monomial(v)
    }

    pub fn from_exponents(mut e: Vec<u32>) -> Self {
        while e.last() == Some(&0) {
            e.pop();
        }
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        Monomial(
            (0..n)
                .map(|i| self.exponent(i) + other.exponent(i))
                .collect(),
        )
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| {
                let n = self.0.len().max(other.0.len());
                (0..n)
                    .map(|i| self.exponent(i).cmp(&other.exponent(i)))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal)
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl BasisLabel for Monomial {
    fn label(&self) -> String {
        label_with(self, &|i| format!("v{i}"))
    }
}

fn label_with(m: &Monomial, name: &dyn Fn(usize) -> String) -> String {
    if m.is_one() {
        return "1".into();
    }
    let parts: Vec<String> =
        m.0.iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    name(i)
                } else {
                    format!("{}^{e}", name(i))
                }
            })
            .collect();
    parts.join("*")
}

pub type Poly = LinComb<Monomial>;

impl LinComb<Monomial> {
    pub fn var(i: usize) -> Self {
        LinComb::basis(Monomial::var(i))
    }

    pub fn constant(c: Rational) -> Self {
        LinComb::term(Monomial::one(), c)
    }

    pub fn one() -> Self {
        Self::constant(<Rational as One>::one())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.bilinear(other, |a, b| LinComb::basis(a.mul(b)))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.keys().map(|m| m.total_degree()).max()
    }

    /// Constant term if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.len() {
            0 => Some(<Rational as Zero>::zero()),
            1 => {
                let (m, c) = self.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Largest variable index appearing, plus one.
    pub fn num_vars(&self) -> usize {
        self.keys().map(|m| m.0.len()).max().unwrap_or(0)
    }

    pub fn partial(&self, var: usize) -> Self {
        let mut out = Self::zero();
        for (m, c) in self {
            let e = m.exponent(var);
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[var] -= 1;
            out.add_term(
                Monomial::from_exponents(exps),
                c * Rational::from_integer(e.into()),
            );
        }
        out
    }

    /// Evaluates in any commutative ring receiving rationals, with
    /// `values[i]` substituted for variable `i`.
    pub fn eval<T: Scalar>(&self, values: &[T]) -> T {
        let mut acc = T::zero();
        for (m, c) in self {
            let mut term = T::from_rational(c);
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    let v = values
                        .get(i)
                        .unwrap_or_else(|| panic!("no value for variable {i}"));
                    term = term.mul(&v.pow(e));
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    pub fn substitute(&self, values: &[Poly]) -> Poly {
        self.eval(values)
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> NamedPoly<'a> {
        NamedPoly { poly: self, names }
    }
}

/// A polynomial rendered with variable names, highest terms first.
pub struct NamedPoly<'a> {
    poly: &'a Poly,
    names: &'a [String],
}

impl fmt::Display for NamedPoly<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |i: usize| {
            self.names
                .get(i)
                .cloned()
                .unwrap_or_else(|| format!("v{i}"))
        };
        let terms: Vec<_> = self.poly.iter().collect();
        fmt_terms(f, terms.into_iter().rev(), |m| label_with(m, &name))
    }
}

/// A commutative ring that rationals embed into.
pub trait Scalar: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(c: &Rational) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_rational(c: &Rational) -> Self {
        c.clone()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn pow(&self, e: u32) -> Self {
        num_traits::Pow::pow(self, e)
    }
}

impl Scalar for Poly {
    fn zero() -> Self {
        LinComb::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn from_rational(c: &Rational) -> Self {
        Poly::constant(c.clone())
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        Poly::mul(self, other)
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn pow(&self, e: u32) -> Self {
        Poly::pow(self, e)
    }
}

/// Parses `2*X^2*Y - 1/2*H + 3` style expressions over named variables.
/// Parentheses group; names are identifiers or `tr(...)` tokens.
pub fn parse_poly(src: &str, names: &[String]) -> Result<Poly> {
    let mut p = PolyParser { src, pos: 0, names };
    let out = p.expr()?;
    p.ws();
    if p.pos < src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

struct PolyParser<'a> {
    src: &'a str,
    pos: usize,
    names: &'a [String],
}

impl PolyParser<'_> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += self.peek().unwrap().len_utf8();
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::parse(self.src, self.pos, msg)
    }

    fn eat(&mut self, c: char) -> bool {
        self.ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc += &self.term()?;
            } else if self.eat('-') {
                acc -= &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            acc = acc.mul(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        let base = self.atom()?;
        if self.eat('^') {
            self.ws();
            let start = self.pos;
            while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                self.pos += 1;
            }
            let e: u32 = self.src[start..self.pos]
                .parse()
                .map_err(|_| self.err("bad exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn number(&mut self) -> Result<Rational> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        let mut text = self.src[start..self.pos].to_string();
        if self.peek() == Some('/') {
            self.pos += 1;
            let s2 = self.pos;
            while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                self.pos += 1;
            }
            text = format!("{}/{}", text, &self.src[s2..self.pos]);
        }
        text.parse::<Rational>().map_err(|_| self.err("bad number"))
    }

    fn atom(&mut self) -> Result<Poly> {
        self.ws();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(Poly::constant(self.number()?)),
            Some(c) if c.is_alphabetic() || c == '_' => {
                let rest = &self.src[self.pos..];
                let best = self
                    .names
                    .iter()
                    .enumerate()
                    .filter(|(_, n)| {
                        rest.starts_with(n.as_str())
                            && !matches!(rest[n.len()..].chars().next(),
                                Some(c) if c.is_alphanumeric() || c == '_' || c == '(' || c == '\'')
                    })
                    .max_by_key(|(_, n)| n.len());
                match best {
                    Some((i, n)) => {
                        self.pos += n.len();
                        Ok(Poly::var(i))
                    }
                    None => {
                        let len = rest
                            .find(|c: char| !(c.is_alphanumeric() || c == '_' || c == '\''))
                            .unwrap_or(rest.len());
                        Err(Error::parse(
                            self.src,
                            self.pos,
                            format!("unknown variable {}", &rest[..len]),
                        ))
                    }
                }
            }
            _ => Err(self.err("expected a number, a variable or '('")),
        }
    }
}
