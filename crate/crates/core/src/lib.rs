//! Exact symbolic computation in the necklace Lie algebra of the free
//! algebra `C<x_1..x_d, x_1*..x_d*>` and of tensor algebras with linear
//! double Poisson brackets.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals.
//!
//! * [`free_algebra`]: words, necklaces, linear combinations, counting.
//! * [`double_bracket`]: double, Loday and necklace brackets, plus the
//!   cut-and-join oracle, double Jacobi checks and central elements.
//! * [`sl2_module`]: `sl_2`-decomposition of the homogeneous parts (d = 1).
//! * [`linear_necklace`]: linear double brackets from associative
//!   structure constants.
//! * [`trace_calculus`]: generic matrices, the trace map and the Poisson
//!   structure it induces on `iss_2`.
//! * [`poisson_poly`]: commutative polynomial Poisson algebras.

pub mod double_bracket;
pub mod error;
pub mod free_algebra;
pub mod linalg;
pub mod lincomb;
pub mod linear_necklace;
pub mod matrix;
pub mod poisson_poly;
pub mod poly;
pub mod sampling;
pub mod sl2_module;
pub mod trace_calculus;

pub use error::{Error, Result};
pub use lincomb::{rat, ratio, LinComb, Rational};
