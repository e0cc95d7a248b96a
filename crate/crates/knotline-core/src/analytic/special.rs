//! Gamma-family functions and the real zeta function.

use core::f64::consts::PI;

use num_complex::Complex64;

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// `B_2, B_4, …, B_16`.
const BERNOULLI: [f64; 8] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
];

/// Below this modulus the argument is shifted up before the asymptotic series.
const ASYMPTOTIC_RADIUS: f64 = 12.0;

/// Shifts `z` up by whole steps until `|z|` is large, returning the shifted
/// point and the offsets used.
fn shift(z: Complex64) -> (Complex64, u32) {
    let mut w = z;
    let mut n = 0;
    while w.norm() < ASYMPTOTIC_RADIUS || w.re < ASYMPTOTIC_RADIUS / 2.0 {
        w += 1.0;
        n += 1;
    }
    (w, n)
}

/// `log Γ(z)` for `Re z > 0`, on the branch continuous from the real axis.
pub fn ln_gamma(z: Complex64) -> Complex64 {
    let (w, n) = shift(z);
    let mut acc = (w - 0.5) * w.ln() - w + 0.5 * libm::log(2.0 * PI);
    let w2 = w * w;
    let mut pow = w;
    for (j, b) in BERNOULLI.iter().enumerate() {
        let k = 2.0 * (j as f64 + 1.0);
        acc += b / (k * (k - 1.0)) / pow;
        pow *= w2;
    }
    for k in 0..n {
        acc -= (z + f64::from(k)).ln();
    }
    acc
}

/// `ψ(z) = Γ'(z)/Γ(z)` for `Re z > 0`.
pub fn digamma(z: Complex64) -> Complex64 {
    let (w, n) = shift(z);
    let mut acc = w.ln() - 0.5 / w;
    let w2 = w * w;
    let mut pow = w2;
    for (j, b) in BERNOULLI.iter().enumerate() {
        let k = 2.0 * (j as f64 + 1.0);
        acc -= b / (k * pow);
        pow *= w2;
    }
    for k in 0..n {
        acc -= 1.0 / (z + f64::from(k));
    }
    acc
}

/// `ζ(s)` for real `s > 1` by Euler–Maclaurin summation.
pub fn zeta_real(s: f64) -> f64 {
    const N: u32 = 12;
    let n = f64::from(N);
    let mut acc: f64 = (1..N).map(|k| libm::pow(f64::from(k), -s)).sum();
    acc += libm::pow(n, 1.0 - s) / (s - 1.0) + 0.5 * libm::pow(n, -s);
    // Term j carries B_2j/(2j)! times the rising product s(s+1)…(s+2j-2).
    let mut rising = s;
    let mut fact = 2.0;
    let mut npow = libm::pow(n, -s - 1.0);
    for (j, b) in BERNOULLI.iter().enumerate() {
        acc += b / fact * rising * npow;
        let k = 2.0 * (j as f64 + 1.0);
        rising *= (s + k - 1.0) * (s + k);
        fact *= (k + 1.0) * (k + 2.0);
        npow /= n * n;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn digamma_known_values() {
        assert!((digamma(c(1.0, 0.0)).re + EULER_GAMMA).abs() < 1e-14);
        let half = -EULER_GAMMA - 2.0 * core::f64::consts::LN_2;
        assert!((digamma(c(0.5, 0.0)).re - half).abs() < 1e-14);
        // Im ψ(1/2 + i y) = (π/2) tanh(π y).
        let y = 3.7;
        let im = digamma(c(0.5, y)).im;
        assert!((im - PI / 2.0 * libm::tanh(PI * y)).abs() < 1e-13);
    }

    #[test]
    fn digamma_recurrence() {
        let z = c(0.3, 7.1);
        assert!((digamma(z + 1.0) - digamma(z) - 1.0 / z).norm() < 1e-13);
    }

    #[test]
    fn ln_gamma_known_values() {
        assert!(ln_gamma(c(1.0, 0.0)).norm() < 1e-14);
        assert!((ln_gamma(c(5.0, 0.0)).re - libm::log(24.0)).abs() < 1e-13);
        assert!((ln_gamma(c(0.5, 0.0)).re - 0.5 * libm::log(PI)).abs() < 1e-14);
        // |Γ(iy)|² = π / (y sinh πy).
        let y = 2.5;
        let lhs = 2.0 * ln_gamma(c(1.0, y)).re - 2.0 * libm::log(y);
        assert!((lhs - libm::log(PI / (y * libm::sinh(PI * y)))).abs() < 1e-12);
    }

    #[test]
    fn ln_gamma_branch_is_continuous() {
        let mut prev = ln_gamma(c(0.25, 0.0)).im;
        for i in 1..2000 {
            let cur = ln_gamma(c(0.25, f64::from(i) * 0.1)).im;
            assert!((cur - prev).abs() < 1.0);
            prev = cur;
        }
    }

    #[test]
    fn zeta_even_values() {
        assert!((zeta_real(2.0) - PI * PI / 6.0).abs() < 1e-14);
        assert!((zeta_real(4.0) - libm::pow(PI, 4.0) / 90.0).abs() < 1e-14);
        assert!((zeta_real(1.5) - 2.612_375_348_685_488).abs() < 1e-13);
    }
}
