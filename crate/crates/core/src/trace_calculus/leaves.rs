use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use super::trace_of;
use crate::double_bracket::center_element;
use crate::error::{Error, Result};
use crate::lincomb::{rat, Rational};
use crate::matrix::Matrix;
use crate::poisson_poly::PrimedCoordinates;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// The 3×3 pair on which `tr([X, X*]^n) = 2λ^n + (-2λ)^n`.
pub fn witness_pair(lambda: &Rational) -> [Matrix<Rational>; 2] {
    let z = Rational::zero;
    let x = Matrix::from_rows(vec![
        vec![z(), lambda.clone(), z()],
        vec![z(), z(), -lambda.clone()],
        vec![z(), z(), z()],
    ]);
    let xs = Matrix::from_rows(vec![
        vec![z(), z(), z()],
        vec![rat(1), z(), z()],
        vec![z(), rat(1), z()],
    ]);
    [x, xs]
}

/// Value of the necklace `c_n = [x, x*]^n` on [`witness_pair`].
pub fn center_witness(n: usize, lambda: &Rational) -> Result<Rational> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    if lambda.is_zero() {
        return Err(Error::InvalidArgument("lambda must be nonzero".into()));
    }
    trace_of(&center_element(1, n), &witness_pair(lambda))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LunaType {
    /// `[(2,1)]`: simple.
    Tau1,
    /// `[(1,1);(1,1)]`: two distinct one-dimensional summands.
    Tau2,
    /// `[(1,2)]`: one one-dimensional summand twice.
    Tau3,
}

impl fmt::Display for LunaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LunaType::Tau1 => "τ1 = [(2,1)]",
            LunaType::Tau2 => "τ2 = [(1,1);(1,1)]",
            LunaType::Tau3 => "τ3 = [(1,2)]",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Leaf {
    /// `S_λ` with `λ = c_sl2 ≠ 0`.
    S,
    SPrime0,
    SDoublePrime0,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LeafClass<T> {
    pub leaf: Leaf,
    pub luna: LunaType,
    pub casimir: T,
}

impl<T: fmt::Display> fmt::Display for LeafClass<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.leaf {
            Leaf::S => write!(f, "S_{}", self.casimir)?,
            Leaf::SPrime0 => f.write_str("S'_0")?,
            Leaf::SDoublePrime0 => f.write_str("S''_0")?,
        }
        write!(f, ", {}", self.luna)
    }
}

fn class<T>(casimir: T, casimir_zero: bool, primes_zero: bool) -> LeafClass<T> {
    let (leaf, luna) = match (casimir_zero, primes_zero) {
        (false, _) => (Leaf::S, LunaType::Tau1),
        (true, false) => (Leaf::SPrime0, LunaType::Tau2),
        (true, true) => (Leaf::SDoublePrime0, LunaType::Tau3),
    };
    LeafClass {
        leaf,
        luna,
        casimir,
    }
}

/// Symplectic leaf and representation type of the point with coordinates
/// `(X, Y, E, F, H)`.
pub fn classify_point(p: &[Rational; 5]) -> LeafClass<Rational> {
    let pc = PrimedCoordinates::new();
    let primes = [pc.e.eval(p), pc.f.eval(p), pc.h.eval(p)];
    let c = pc.casimir().eval(p);
    let zero = c.is_zero();
    class(c, zero, primes.iter().all(Zero::is_zero))
}

/// Floating-point variant; a quantity counts as zero when its absolute
/// value is at most `tol`.
pub fn classify_point_approx(p: [f64; 5], tol: f64) -> LeafClass<f64> {
    let [x, y, e, f, h] = p;
    let hp = h + x * y / 2.0;
    let ep = e - x * x / 4.0;
    let fp = f + y * y / 4.0;
    let c = hp * hp + 4.0 * ep * fp;
    class(
        c,
        c.abs() <= tol,
        [ep, fp, hp].iter().all(|v| v.abs() <= tol),
    )
}

impl crate::poly::Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_rational(c: &Rational) -> Self {
        num_traits::ToPrimitive::to_f64(c).unwrap_or(f64::NAN)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
}
