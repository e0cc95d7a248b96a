//! Jacobi theta, Dedekind eta and the Mellin transform relating theta to zeta.

use core::f64::consts::PI;

use num_complex::Complex64;

use super::quad::integrate;
use super::special::zeta_real;
use super::AnalyticError;

/// Relative size below which series terms are dropped.
const CUTOFF: f64 = 1e-17;

/// `θ(t) = Σ_{n ∈ Z} e^{-π n² t}` for `t > 0`.
pub fn theta(t: f64) -> Result<f64, AnalyticError> {
    if !(t > 0.0) {
        return Err(AnalyticError::Domain("t must be positive"));
    }
    let mut sum = 0.0;
    for n in 1u32.. {
        let term = libm::exp(-PI * f64::from(n * n) * t);
        sum += term;
        if term < CUTOFF * (1.0 + 2.0 * sum) {
            break;
        }
    }
    Ok(1.0 + 2.0 * sum)
}

fn upper_half_plane(tau: Complex64) -> Result<(), AnalyticError> {
    if tau.im > 0.0 {
        Ok(())
    } else {
        Err(AnalyticError::Domain("Im τ must be positive"))
    }
}

/// `θ(τ) = Σ_{n ∈ Z} e^{iπ n² τ}` for `Im τ > 0`.
pub fn jacobi_theta(tau: Complex64) -> Result<Complex64, AnalyticError> {
    upper_half_plane(tau)?;
    let mut sum = Complex64::new(0.0, 0.0);
    for n in 1u32.. {
        let term = (Complex64::i() * PI * f64::from(n * n) * tau).exp();
        sum += term;
        if term.norm() < CUTOFF * (1.0 + 2.0 * sum.norm()) {
            break;
        }
    }
    Ok(1.0 + 2.0 * sum)
}

/// `η(τ) = e^{iπτ/12} Π_{k ≥ 1} (1 - q^k)` with `q = e^{2πiτ}`.
pub fn eta(tau: Complex64) -> Result<Complex64, AnalyticError> {
    upper_half_plane(tau)?;
    let q = (Complex64::i() * 2.0 * PI * tau).exp();
    let mut prod = (Complex64::i() * PI * tau / 12.0).exp();
    let mut qk = q;
    while qk.norm() >= CUTOFF {
        prod *= 1.0 - qk;
        qk *= q;
    }
    Ok(prod)
}

/// `θ(τ) - η²((τ+1)/2) / η(τ+1)`.
pub fn theta_eta_identity_residual(tau: Complex64) -> Result<Complex64, AnalyticError> {
    let lhs = jacobi_theta(tau)?;
    let num = eta((tau + 1.0) / 2.0)?;
    Ok(lhs - num * num / eta(tau + 1.0)?)
}

/// Both sides of `π^{-s} Γ(s) ζ(2s) = ∫_0^∞ (θ(it) - 1)/2 t^{s-1} dt`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MellinCheck {
    pub series: f64,
    pub integral: f64,
    pub quadrature_error: f64,
}

impl MellinCheck {
    pub fn residual(&self) -> f64 {
        self.series - self.integral
    }
}

/// Upper limit of the integral; the integrand is below `e^{-π T}` beyond it.
const UPPER: f64 = 40.0;

/// Evaluates the Mellin identity at real `s > 1/2`.
///
/// The piece on `(0, 1)` is folded onto `(1, ∞)` with `θ(i/t) = √t θ(it)`,
/// leaving `∫_1^∞ ψ(t) (t^{s-1} + t^{-s-1/2}) dt + 1/(2s-1) - 1/(2s)` with
/// `ψ = (θ - 1)/2`.
pub fn mellin_check(s: f64, tol: f64, max_intervals: usize) -> Result<MellinCheck, AnalyticError> {
    if !(s > 0.5) {
        return Err(AnalyticError::Domain("s must exceed 1/2"));
    }
    let series = libm::pow(PI, -s) * libm::tgamma(s) * zeta_real(2.0 * s);
    let integrand = |t: f64| {
        let psi = (theta(t).unwrap_or(1.0) - 1.0) / 2.0;
        psi * (libm::pow(t, s - 1.0) + libm::pow(t, -s - 0.5))
    };
    let (value, quadrature_error) = integrate(integrand, 1.0, UPPER, tol, max_intervals)?;
    let integral = value + 1.0 / (2.0 * s - 1.0) - 1.0 / (2.0 * s);
    Ok(MellinCheck {
        series,
        integral,
        quadrature_error,
    })
}
