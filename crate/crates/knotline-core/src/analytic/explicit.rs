//! The explicit formula relating primes and zeros, truncated on both sides.

use core::f64::consts::PI;

use num_complex::Complex64;

use super::special::{digamma, EULER_GAMMA};
use super::{AnalyticError, PrimeTable, ZeroList};

/// `B = -γ/2 - 1 + (1/2) log 4π`.
pub fn hadamard_constant() -> f64 {
    -0.5 * EULER_GAMMA - 1.0 + 0.5 * libm::log(4.0 * PI)
}

/// `ζ'/ζ(s) = -Σ_{p ≤ P} log p / (p^s - 1)` for `Re s > 1`.
pub fn zeta_log_derivative(s: Complex64, primes: &PrimeTable) -> Result<Complex64, AnalyticError> {
    if !(s.re > 1.0) {
        return Err(AnalyticError::Domain("Re s must exceed 1"));
    }
    Ok(-primes
        .iter()
        .map(|(_, lp)| lp / ((s * lp).exp() - 1.0))
        .sum::<Complex64>())
}

/// Difference of the two sides of the explicit formula.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExplicitResidual {
    /// Left side minus right side.
    pub residual: Complex64,
    /// Estimate of the omitted zero pairs, `|s| (log(E/2π) + 1) / (π E)` at
    /// the last ordinate `E`.
    pub zero_tail: f64,
    /// Estimate of the omitted primes, `P^{1-σ} / (σ - 1)`.
    pub prime_tail: f64,
}

/// `[1/(s-1) + ψ(s/2+1)/2 - (1/2) log π] + ζ'/ζ(s) - Σ_j [1/(s-ρ_j) + 1/ρ_j] - B`
/// with the zero sum over `ρ = 1/2 ± iE` for the supplied ordinates.
pub fn explicit_formula_residual(
    s: Complex64,
    primes: &PrimeTable,
    zeros: &ZeroList,
) -> Result<ExplicitResidual, AnalyticError> {
    let log_deriv = zeta_log_derivative(s, primes)?;
    let lhs = 1.0 / (s - 1.0) + digamma(s / 2.0 + 1.0) / 2.0 - 0.5 * libm::log(PI) + log_deriv;
    let zero_sum: Complex64 = zeros
        .ordinates()
        .iter()
        .map(|&e| {
            let rho = Complex64::new(0.5, e);
            let bar = rho.conj();
            1.0 / (s - rho) + 1.0 / rho + 1.0 / (s - bar) + 1.0 / bar
        })
        .sum();
    let zero_tail = zeros.ordinates().last().map_or(f64::INFINITY, |&e| {
        s.norm() * (libm::log(e / (2.0 * PI)) + 1.0) / (PI * e)
    });
    let p = primes.limit().max(2) as f64;
    let prime_tail = libm::pow(p, 1.0 - s.re) / (s.re - 1.0);
    Ok(ExplicitResidual {
        residual: lhs - zero_sum - hadamard_constant(),
        zero_tail,
        prime_tail,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_the_critical_strip() {
        let primes = PrimeTable::sieve(10);
        assert!(zeta_log_derivative(Complex64::new(1.0, 3.0), &primes).is_err());
        let z = ZeroList::default();
        assert!(explicit_formula_residual(Complex64::new(0.5, 3.0), &primes, &z).is_err());
    }

    #[test]
    fn real_argument_gives_real_residual() {
        let primes = PrimeTable::sieve(10_000);
        let zeros = ZeroList::parse("14.134725141734693\n21.022039638771554\n25.010857580145688\n")
            .unwrap();
        let r = explicit_formula_residual(Complex64::new(2.5, 0.0), &primes, &zeros).unwrap();
        assert!(r.residual.im.abs() < 1e-12);
    }

    #[test]
    fn more_zeros_shrink_the_residual() {
        let primes = PrimeTable::sieve(100_000);
        let zeros = ZeroList::parse(
            "14.134725141734693\n21.022039638771554\n25.010857580145688\n30.424876125859513\n",
        )
        .unwrap();
        let s = Complex64::new(2.0, 0.0);
        let mut prev = f64::INFINITY;
        for z in 0..=zeros.len() {
            let r = explicit_formula_residual(s, &primes, &zeros.truncated(z)).unwrap();
            assert!(r.residual.norm() <= prev);
            prev = r.residual.norm();
        }
    }
}
