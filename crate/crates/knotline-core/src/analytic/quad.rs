//! Adaptive Gauss–Kronrod quadrature.

use alloc::vec;

use super::AnalyticError;

/// Kronrod abscissae on `[0, 1)`; odd indices are the Gauss nodes.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// 15-point Kronrod estimate and its difference from the embedded 7-point
/// Gauss rule.
fn kronrod(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let center = f(mid);
    let mut k = WGK[7] * center;
    let mut g = WG[3] * center;
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = f(mid - dx) + f(mid + dx);
        k += WGK[j] * pair;
        if j % 2 == 1 {
            g += WG[j / 2] * pair;
        }
    }
    (k * half, ((k - g) * half).abs())
}

/// Integral and error estimate of `f` over `[a, b]`.
///
/// Intervals are bisected until each meets its share of `tol`; fails once
/// `max_intervals` have been used.
pub fn integrate(
    f: impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    tol: f64,
    max_intervals: usize,
) -> Result<(f64, f64), AnalyticError> {
    let mut stack = vec![(a, b)];
    let (mut total, mut error) = (0.0, 0.0);
    let mut used = 0;
    while let Some((lo, hi)) = stack.pop() {
        used += 1;
        if used > max_intervals {
            return Err(AnalyticError::Quadrature);
        }
        let (value, err) = kronrod(&f, lo, hi);
        if err <= tol * (hi - lo) / (b - a) || hi - lo < 1e-12 * (b - a) {
            total += value;
            error += err;
        } else {
            let mid = 0.5 * (lo + hi);
            stack.push((mid, hi));
            stack.push((lo, mid));
        }
    }
    Ok((total, error))
}
