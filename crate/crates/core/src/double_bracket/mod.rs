//! Double Poisson brackets on the free algebra and the brackets they
//! induce: Loday bracket on `A`, Lie bracket on necklaces, the derivation
//! of the trace algebra.

mod center;
mod checks;
mod eval;
mod kontsevich;
mod rule;
mod trace_algebra;

pub use center::{center_check, center_element, symplectic_commutator};
pub use checks::{
    check_grading, check_representative_independence, verify_double_jacobi,
    verify_loday_properties, GradedBracketReport,
};
pub use eval::{double_bracket, loday_bracket, necklace_bracket};
pub use kontsevich::kontsevich_bracket;
pub use rule::{generator_value, BracketRule, RuleKind};
pub use trace_algebra::{
    hamiltonian_on_monomial, lie_poisson_bracket, trace_algebra_derivation, NecklaceMonomial,
    NecklacePolynomial, TraceElement,
};

pub(crate) use eval::necklace_bracket_basis;
