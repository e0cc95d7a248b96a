//! Casimir tensor, monodromy and central charge on the two-fold tensor
//! product of the fundamental representation of SU(2).

use core::f64::consts::PI;

use nalgebra::{Matrix2, Matrix4, Schur, SymmetricEigen};
use num_complex::Complex64;
use num_rational::Ratio;

/// Dual Coxeter number of SU(2).
pub const DUAL_COXETER: u32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
pub enum KzError {
    #[error("the level must be at least 1")]
    LevelZero,
}

/// Normalization of the generators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Convention {
    /// Hermitian generators `σ^a / 2`.
    #[default]
    Hermitian,
    /// Anti-hermitian generators `i σ^a / 2`, with the imaginary unit absorbed.
    AbsorbedI,
}

const fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Pauli matrices.
pub fn pauli() -> [Matrix2<Complex64>; 3] {
    let (o, z, i) = (c(1.0, 0.0), c(0.0, 0.0), c(0.0, 1.0));
    [
        Matrix2::new(z, o, o, z),
        Matrix2::new(z, -i, i, z),
        Matrix2::new(o, z, z, -o),
    ]
}

/// Generators of the fundamental representation at level `k`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieBasis {
    level: u32,
    convention: Convention,
    generators: [Matrix2<Complex64>; 3],
}

impl LieBasis {
    pub fn new(level: u32, convention: Convention) -> Result<LieBasis, KzError> {
        if level == 0 {
            return Err(KzError::LevelZero);
        }
        let scale = match convention {
            Convention::Hermitian => c(0.5, 0.0),
            Convention::AbsorbedI => c(0.0, 0.5),
        };
        let generators = pauli().map(|s| s * scale);
        Ok(LieBasis {
            level,
            convention,
            generators,
        })
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn generators(&self) -> &[Matrix2<Complex64>; 3] {
        &self.generators
    }

    /// Largest entry of `[t^a, t^b] - f_abc t^c` over all `a, b`, where
    /// `f_abc = i ε_abc` for hermitian generators and `-ε_abc` otherwise.
    pub fn structure_residual(&self) -> f64 {
        let f = match self.convention {
            Convention::Hermitian => c(0.0, 1.0),
            Convention::AbsorbedI => c(-1.0, 0.0),
        };
        let t = &self.generators;
        let mut worst = 0.0f64;
        for a in 0..3 {
            for b in 0..3 {
                let comm = t[a] * t[b] - t[b] * t[a];
                let mut rhs = Matrix2::zeros();
                for (cc, tc) in t.iter().enumerate() {
                    rhs += tc * (f * levi_civita(a, b, cc));
                }
                worst = worst.max((comm - rhs).iter().map(|z| z.norm()).fold(0.0, f64::max));
            }
        }
        worst
    }
}

fn levi_civita(a: usize, b: usize, c: usize) -> f64 {
    match (a, b, c) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

/// `t = (1/(k+g)) Σ_a t^a ⊗ t^a`.
#[derive(Clone, Debug, PartialEq)]
pub struct CasimirTensor {
    level: u32,
    matrix: Matrix4<Complex64>,
}

impl CasimirTensor {
    pub fn from_basis(basis: &LieBasis) -> CasimirTensor {
        let mut matrix = Matrix4::zeros();
        for t in basis.generators() {
            matrix += t.kronecker(t);
        }
        matrix /= c((basis.level() + DUAL_COXETER) as f64, 0.0);
        CasimirTensor {
            level: basis.level(),
            matrix,
        }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn matrix(&self) -> &Matrix4<Complex64> {
        &self.matrix
    }

    /// Eigenvalues in ascending order; `t` is hermitian in both conventions.
    pub fn eigenvalues(&self) -> [f64; 4] {
        let mut ev: [f64; 4] = SymmetricEigen::new(self.matrix).eigenvalues.into();
        ev.sort_by(f64::total_cmp);
        ev
    }
}

/// Casimir tensor with hermitian generators.
pub fn build_casimir(level: u32) -> Result<CasimirTensor, KzError> {
    Ok(CasimirTensor::from_basis(&LieBasis::new(
        level,
        Convention::Hermitian,
    )?))
}

/// `R = exp(-iπ t)`.
#[derive(Clone, Debug, PartialEq)]
pub struct MonodromyMatrix {
    matrix: Matrix4<Complex64>,
    phases: [f64; 4],
}

impl MonodromyMatrix {
    /// Builds `R` from the spectral decomposition of `t`.
    pub fn from_casimir(t: &CasimirTensor) -> MonodromyMatrix {
        let eig = SymmetricEigen::new(t.matrix);
        let v = eig.eigenvectors;
        let d =
            Matrix4::from_diagonal(&eig.eigenvalues.map(|l| Complex64::from_polar(1.0, -PI * l)));
        let matrix = v * d * v.adjoint();
        let mut phases: [f64; 4] = eig.eigenvalues.map(|l| -PI * l).into();
        phases.sort_by(f64::total_cmp);
        MonodromyMatrix { matrix, phases }
    }

    pub fn matrix(&self) -> &Matrix4<Complex64> {
        &self.matrix
    }

    /// Eigenphases `-π λ` of `R`, ascending.
    pub fn eigenphases(&self) -> [f64; 4] {
        self.phases
    }

    /// Eigenvalues `e^{-iπλ}`, ordered as [`Self::eigenphases`].
    pub fn eigenvalues(&self) -> [Complex64; 4] {
        self.phases.map(|p| Complex64::from_polar(1.0, p))
    }

    /// Principal matrix logarithm via the Schur form, which is diagonal for
    /// the normal matrix `R`.
    pub fn log(&self) -> Matrix4<Complex64> {
        let (q, tri) = Schur::new(self.matrix).unpack();
        let d = Matrix4::from_diagonal(&tri.diagonal().map(|z| z.ln()));
        q * d * q.adjoint()
    }
}

/// Monodromy at level `k` with hermitian generators.
pub fn monodromy(level: u32) -> Result<MonodromyMatrix, KzError> {
    Ok(MonodromyMatrix::from_casimir(&build_casimir(level)?))
}

/// Matrix exponential by scaling and squaring a truncated Taylor series.
pub fn expm(a: &Matrix4<Complex64>) -> Matrix4<Complex64> {
    let norm = a.iter().map(|z| z.norm()).sum::<f64>();
    let mut squarings = 0;
    let mut scale = 1.0;
    while norm * scale > 0.25 {
        scale *= 0.5;
        squarings += 1;
    }
    let x = a * c(scale, 0.0);
    let mut term = Matrix4::identity();
    let mut sum = Matrix4::identity();
    // With ||x|| <= 1/4 the 18-term remainder is far below machine precision.
    for n in 1..=18 {
        term = term * x / c(n as f64, 0.0);
        sum += term;
    }
    for _ in 0..squarings {
        sum = sum * sum;
    }
    sum
}

/// Largest entry modulus.
pub fn max_abs(m: &Matrix4<Complex64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Sugawara constant `c = 4k/(k+g)` as an exact fraction.
pub fn central_charge(level: u32) -> Result<Ratio<i64>, KzError> {
    if level == 0 {
        return Err(KzError::LevelZero);
    }
    let k = i64::from(level);
    Ok(Ratio::new(4 * k, k + i64::from(DUAL_COXETER)))
}

/// Limit of [`central_charge`] as the level grows.
pub const CENTRAL_CHARGE_LIMIT: i64 = 4;

/// `exp(i θ·σ / 2)`, an element of SU(2).
pub fn su2_element(theta: [f64; 3]) -> Matrix2<Complex64> {
    let angle = libm::sqrt(theta.iter().map(|x| x * x).sum());
    if angle == 0.0 {
        return Matrix2::identity();
    }
    let [sx, sy, sz] = pauli();
    let axis =
        (sx * c(theta[0], 0.0) + sy * c(theta[1], 0.0) + sz * c(theta[2], 0.0)) / c(angle, 0.0);
    Matrix2::identity() * c(libm::cos(angle / 2.0), 0.0) + axis * c(0.0, libm::sin(angle / 2.0))
}
