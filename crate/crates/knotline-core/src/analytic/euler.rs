//! Truncated Euler products for zeta, Dirichlet and quadratic Dedekind
//! L-functions.

use alloc::vec::Vec;

use num_complex::Complex64;

use super::{AnalyticError, PrimeTable};

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CharacterError {
    #[error("expected one value per residue")]
    Length,
    #[error("the value at 1 must be 1")]
    NotUnital,
    #[error("residue {0}: value must vanish exactly when it shares a factor with the modulus")]
    Support(u64),
    #[error("residues {0} and {1}: values are not multiplicative")]
    NotMultiplicative(u64, u64),
}

/// Dirichlet character given by its values on residues `0..q`.
#[derive(Clone, Debug, PartialEq)]
pub struct CharacterSpec {
    modulus: u64,
    values: Vec<Complex64>,
}

impl CharacterSpec {
    pub fn new(modulus: u64, values: Vec<Complex64>) -> Result<CharacterSpec, CharacterError> {
        const TOL: f64 = 1e-12;
        if modulus == 0 || values.len() as u64 != modulus {
            return Err(CharacterError::Length);
        }
        if modulus > 1 && (values[1] - 1.0).norm() > TOL {
            return Err(CharacterError::NotUnital);
        }
        for (n, v) in values.iter().enumerate() {
            let n = n as u64;
            let coprime = gcd(n, modulus) == 1;
            if coprime == (v.norm() <= TOL) {
                return Err(CharacterError::Support(n));
            }
        }
        for a in 0..modulus {
            for b in a..modulus {
                let ab = values[(a * b % modulus) as usize];
                if (ab - values[a as usize] * values[b as usize]).norm() > TOL {
                    return Err(CharacterError::NotMultiplicative(a, b));
                }
            }
        }
        Ok(CharacterSpec { modulus, values })
    }

    /// Principal character modulo `q`.
    pub fn principal(modulus: u64) -> CharacterSpec {
        let values = (0..modulus)
            .map(|n| Complex64::new(if gcd(n, modulus) == 1 { 1.0 } else { 0.0 }, 0.0))
            .collect();
        CharacterSpec { modulus, values }
    }

    /// Real character `n ↦ (d/n)` for a fundamental discriminant `d`.
    pub fn kronecker(discriminant: i64) -> Result<CharacterSpec, CharacterError> {
        let q = discriminant.unsigned_abs();
        let values = (0..q)
            .map(|n| Complex64::new(f64::from(kronecker_symbol(discriminant, n)), 0.0))
            .collect();
        CharacterSpec::new(q, values)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn value(&self, n: u64) -> Complex64 {
        self.values[(n % self.modulus) as usize]
    }
}

/// Kronecker symbol `(d/n)` for `n ≥ 0`.
pub fn kronecker_symbol(d: i64, n: u64) -> i32 {
    if n == 0 {
        return i32::from(d == 1 || d == -1);
    }
    let mut n = n;
    let mut result = 1;
    while n.is_multiple_of(2) {
        n /= 2;
        result *= match d.rem_euclid(8) {
            1 | 7 => 1,
            3 | 5 => -1,
            _ => return 0,
        };
    }
    // Jacobi symbol (d/n) for odd n.
    let mut a = d.rem_euclid(n as i64) as u64;
    while a != 0 {
        while a.is_multiple_of(2) {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                result = -result;
            }
        }
        (a, n) = (n, a);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// Behavior of a rational prime in a quadratic field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Splitting {
    Split,
    Inert,
    Ramified,
}

/// Rule classifying primes for a Dedekind zeta function.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplittingSpec {
    /// The quadratic field of the given fundamental discriminant.
    Quadratic { discriminant: i64 },
    /// Every prime behaves the same way.
    Uniform(Splitting),
}

impl SplittingSpec {
    pub fn classify(&self, p: u64) -> Splitting {
        match *self {
            SplittingSpec::Uniform(s) => s,
            SplittingSpec::Quadratic { discriminant } => match kronecker_symbol(discriminant, p) {
                1 => Splitting::Split,
                -1 => Splitting::Inert,
                _ => Splitting::Ramified,
            },
        }
    }
}

/// Which Euler product to evaluate.
#[derive(Clone, Copy, Debug)]
pub enum EulerKind<'a> {
    Riemann,
    Character(&'a CharacterSpec),
    Splitting(&'a SplittingSpec),
}

/// Product over `p ≤ P` of the local factors, for `Re s > 1`.
pub fn euler_product(
    kind: EulerKind<'_>,
    s: Complex64,
    primes: &PrimeTable,
) -> Result<Complex64, AnalyticError> {
    if !(s.re > 1.0) {
        return Err(AnalyticError::Domain("Re s must exceed 1"));
    }
    let mut acc = Complex64::new(1.0, 0.0);
    for (p, lp) in primes.iter() {
        let x = (-s * lp).exp();
        let factor = match kind {
            EulerKind::Riemann => 1.0 / (1.0 - x),
            EulerKind::Character(chi) => 1.0 / (1.0 - chi.value(p) * x),
            EulerKind::Splitting(spec) => match spec.classify(p) {
                Splitting::Split => 1.0 / ((1.0 - x) * (1.0 - x)),
                Splitting::Inert => 1.0 / (1.0 - x * x),
                Splitting::Ramified => 1.0 / (1.0 - x),
            },
        };
        acc *= factor;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn kronecker_mod_four() {
        let chi = CharacterSpec::kronecker(-4).unwrap();
        let vals: Vec<f64> = (0..4).map(|n| chi.value(n).re).collect();
        assert_eq!(vals, vec![0.0, 1.0, 0.0, -1.0]);
    }

    #[test]
    fn kronecker_symbol_values() {
        assert_eq!(kronecker_symbol(5, 2), -1);
        assert_eq!(kronecker_symbol(-7, 2), 1);
        assert_eq!(kronecker_symbol(-4, 3), -1);
        assert_eq!(kronecker_symbol(-4, 5), 1);
        assert_eq!(kronecker_symbol(12, 3), 0);
    }

    #[test]
    fn character_validation() {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        assert_eq!(
            CharacterSpec::new(4, vec![zero, one, zero, one * 2.0]),
            Err(CharacterError::NotMultiplicative(3, 3))
        );
        assert_eq!(
            CharacterSpec::new(3, vec![one, one, one]),
            Err(CharacterError::Support(0))
        );
        assert_eq!(
            CharacterSpec::new(3, vec![zero, one]),
            Err(CharacterError::Length)
        );
        assert!(CharacterSpec::new(5, CharacterSpec::principal(5).values.clone()).is_ok());
    }

    #[test]
    fn riemann_product_at_two() {
        let primes = PrimeTable::sieve(1_000_000);
        let z = euler_product(EulerKind::Riemann, Complex64::new(2.0, 0.0), &primes).unwrap();
        let basel = core::f64::consts::PI * core::f64::consts::PI / 6.0;
        assert!((z.re - basel).abs() < 1e-6);
    }

    #[test]
    fn all_split_squares_zeta() {
        let primes = PrimeTable::sieve(1000);
        let s = Complex64::new(1.5, 2.0);
        let z = euler_product(EulerKind::Riemann, s, &primes).unwrap();
        let spec = SplittingSpec::Uniform(Splitting::Split);
        let d = euler_product(EulerKind::Splitting(&spec), s, &primes).unwrap();
        assert!((d - z * z).norm() < 1e-12 * d.norm());
    }

    #[test]
    fn gaussian_field_factors() {
        let primes = PrimeTable::sieve(10_000);
        let s = Complex64::new(2.0, 0.5);
        let spec = SplittingSpec::Quadratic { discriminant: -4 };
        let chi = CharacterSpec::kronecker(-4).unwrap();
        let dedekind = euler_product(EulerKind::Splitting(&spec), s, &primes).unwrap();
        let z = euler_product(EulerKind::Riemann, s, &primes).unwrap();
        let l = euler_product(EulerKind::Character(&chi), s, &primes).unwrap();
        assert!((dedekind - z * l).norm() < 1e-12);
    }

    #[test]
    fn domain_is_checked() {
        let primes = PrimeTable::sieve(10);
        assert!(euler_product(EulerKind::Riemann, Complex64::new(1.0, 0.0), &primes).is_err());
    }
}
