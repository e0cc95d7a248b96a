//! Numerics for zero counting, the explicit formula, Euler products and the
//! theta/eta/Mellin identities.
//!
//! Sums run sequentially in a fixed order so results are bit-stable.

// Domain checks use negated comparisons so that NaN is rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod counting;
mod euler;
mod explicit;
mod modular;
mod primes;
pub mod quad;
pub mod special;
mod zeros;

pub use counting::{
    density_terms, fluctuation, gamma_average_count, smooth_count, DensityTerms, Fluctuation,
};
pub use euler::{
    euler_product, CharacterError, CharacterSpec, EulerKind, Splitting, SplittingSpec,
};
pub use explicit::{
    explicit_formula_residual, hadamard_constant, zeta_log_derivative, ExplicitResidual,
};
pub use modular::{
    eta, jacobi_theta, mellin_check, theta, theta_eta_identity_residual, MellinCheck,
};
pub use primes::PrimeTable;
pub use zeros::{ZeroError, ZeroList};

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
pub enum AnalyticError {
    #[error("argument outside the domain: {0}")]
    Domain(&'static str),
    #[error("adaptive quadrature did not reach the requested tolerance")]
    Quadrature,
}
