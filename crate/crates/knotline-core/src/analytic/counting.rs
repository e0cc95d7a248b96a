//! Smooth and fluctuating parts of the zero-counting function.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use super::special::{digamma, ln_gamma};
use super::{AnalyticError, PrimeTable};

/// `T/2π log(T/2π) - T/2π + 7/8`, the main term of the zero count with the
/// `O(1/T)` remainder dropped.
pub fn smooth_count(t: f64) -> Result<f64, AnalyticError> {
    if !(t > 0.0) {
        return Err(AnalyticError::Domain("T must be positive"));
    }
    let x = t / (2.0 * PI);
    Ok(x * libm::log(x) - x + 0.875)
}

/// Average count written with `arg(iT - 1/2)` and `log Γ(5/4 + iT/2)`.
pub fn gamma_average_count(t: f64) -> Result<f64, AnalyticError> {
    if !(t > 0.0) {
        return Err(AnalyticError::Domain("T must be positive"));
    }
    let arg = Complex64::new(-0.5, t).arg();
    let gamma = ln_gamma(Complex64::new(1.25, 0.5 * t)).im;
    Ok((arg + gamma) / PI - t * libm::log(PI) / (2.0 * PI))
}

/// Truncated prime sum with a crude bound on the omitted primes.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Fluctuation {
    pub value: f64,
    pub tail: f64,
}

/// `-(1/π) Im Σ_{p ≤ P} log(1 - p^{-(1/2 + iT)})`.
///
/// The tail is the size of the boundary term of the omitted sum after
/// partial summation, `√P / (π |1/2 - iT| log P)`.
pub fn fluctuation(t: f64, primes: &PrimeTable) -> Fluctuation {
    let s = Complex64::new(0.5, t);
    let sum: f64 = primes
        .iter()
        .map(|(_, lp)| (1.0 - (-s * lp).exp()).ln().im)
        .sum();
    let p = primes.limit().max(2) as f64;
    let tail = libm::sqrt(p) / (PI * Complex64::new(0.5, -t).norm() * libm::log(p));
    Fluctuation {
        value: -sum / PI,
        tail,
    }
}

/// Average part and per-prime amplitudes of the zero density.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityTerms {
    pub t: f64,
    pub average: f64,
    /// `(p, -(1/π) Im(i log p / (p^{1/2+iT} - 1)))`.
    pub amplitudes: Vec<(u64, f64)>,
}

impl DensityTerms {
    pub fn fluctuation(&self) -> f64 {
        self.amplitudes.iter().map(|(_, a)| a).sum()
    }

    pub fn total(&self) -> f64 {
        self.average + self.fluctuation()
    }
}

/// Derivative of the count split into the average part, written with
/// `Γ'/Γ(5/4 + iT/2)`, and one amplitude per prime.
pub fn density_terms(t: f64, primes: &PrimeTable) -> Result<DensityTerms, AnalyticError> {
    if !(t > 0.0) {
        return Err(AnalyticError::Domain("T must be positive"));
    }
    let i = Complex64::i();
    let pole = (i / Complex64::new(-0.5, t)).im;
    let gamma = (i * digamma(Complex64::new(1.25, 0.5 * t)) / 2.0).im;
    let average = (pole + gamma) / PI - libm::log(PI) / (2.0 * PI);
    let s = Complex64::new(0.5, t);
    let amplitudes = primes
        .iter()
        .map(|(p, lp)| (p, -((i * lp) / ((s * lp).exp() - 1.0)).im / PI))
        .collect();
    Ok(DensityTerms {
        t,
        average,
        amplitudes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smooth_count_at_two_pi_e() {
        let t = 2.0 * PI * core::f64::consts::E;
        assert!((smooth_count(t).unwrap() - 0.875).abs() < 1e-14);
        assert!(smooth_count(0.0).is_err());
    }

    #[test]
    fn average_forms_agree_asymptotically() {
        for t in [50.0, 100.0, 200.0] {
            let d = gamma_average_count(t).unwrap() - smooth_count(t).unwrap();
            assert!(d.abs() < 2.0 / t, "T = {t}: {d}");
        }
    }

    #[test]
    fn fluctuation_vanishes_at_zero_height() {
        let primes = PrimeTable::sieve(1000);
        assert_eq!(fluctuation(0.0, &primes).value, 0.0);
    }

    #[test]
    fn single_prime_fluctuation() {
        let primes = PrimeTable::sieve(2);
        let direct = -(1.0 - Complex64::new(2.0, 0.0).powc(Complex64::new(-0.5, -1.0)))
            .ln()
            .im
            / PI;
        assert!((fluctuation(1.0, &primes).value - direct).abs() < 1e-15);
    }

    #[test]
    fn empty_table_has_no_amplitudes() {
        let d = density_terms(30.0, &PrimeTable::sieve(1)).unwrap();
        assert_eq!(d.fluctuation(), 0.0);
    }

    #[test]
    fn density_matches_finite_difference() {
        let primes = PrimeTable::sieve(100_000);
        let t = 30.0;
        let h = 1e-5;
        let count = |x: f64| smooth_count(x).unwrap() + fluctuation(x, &primes).value;
        let fd = (count(t + h) - count(t - h)) / (2.0 * h);
        let d = density_terms(t, &primes).unwrap();
        assert!((d.total() - fd).abs() < 1e-3, "{} vs {fd}", d.total());
    }
}
