//! Discrete Fourier helpers on the uniform periodic grid.
//!
//! Conventions: nodes `x_j = −π + j·dx`, coefficients
//! `c_k = (1/n) Σ_j u_j e^{−ikx_j}` for `k` in FFT order
//! `0, 1, …, n/2, −n/2+1, …, −1`, so that band-limited synthesis
//! `u_j = Σ_k c_k e^{ikx_j}` is exact and
//! `Σ_j |u_j|² dx = 2π Σ_k |c_k|²`.

use ndarray::prelude::*;
use num_complex::Complex64;

use crate::damping::TAU;

/// Integer mode numbers in FFT order for an `n`-point grid.
pub fn mode_numbers(n: usize) -> Vec<i64> {
    let half = n as i64 / 2;
    let mut k: Vec<i64> = (0..=half).collect();
    k.extend((1..(n as i64 - half)).map(|j| j - (n as i64 - half)));
    debug_assert_eq!(k.len(), n);
    k
}

/// Direct `O(n²)` DFT to coefficients `c_k` (grid sizes here are ≤ a few
/// thousand, so this is cheaper than carrying an FFT dependency).
pub fn coefficients(u: &Array1<Complex64>) -> Vec<Complex64> {
    let n = u.len();
    let dx = TAU / n as f64;
    mode_numbers(n)
        .iter()
        .map(|&k| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (j, &uj) in u.iter().enumerate() {
                let x = -std::f64::consts::PI + j as f64 * dx;
                acc += uj * Complex64::from_polar(1.0, -(k as f64) * x);
            }
            acc / n as f64
        })
        .collect()
}

/// Discrete `H^s` norm via the Fourier multiplier `(1+k²)^{s/2}`.
pub fn hs_norm(u: &Array1<Complex64>, s: f64) -> f64 {
    let c = coefficients(u);
    let k = mode_numbers(u.len());
    let sum: f64 = c
        .iter()
        .zip(&k)
        .map(|(ck, &kk)| (1.0 + (kk * kk) as f64).powf(s) * ck.norm_sqr())
        .sum();
    (TAU * sum).sqrt()
}

/// Unitary map from `ℓ²(dx)` nodal values to plain-`ℓ²` Fourier
/// coefficients: row `k` is `(dx/√(2π)) e^{−ikx_j}`.
pub fn unitary_dft_matrix(n: usize) -> Array2<Complex64> {
    let dx = TAU / n as f64;
    let scale = dx / TAU.sqrt();
    let modes = mode_numbers(n);
    Array2::from_shape_fn((n, n), |(r, j)| {
        let x = -std::f64::consts::PI + j as f64 * dx;
        Complex64::from_polar(scale, -(modes[r] as f64) * x)
    })
}

/// Diagonal `(1+k²)^{s/2}` in the same row order as [`unitary_dft_matrix`].
pub fn mode_weights(n: usize, s: f64) -> Vec<f64> {
    mode_numbers(n)
        .iter()
        .map(|&k| (1.0 + (k * k) as f64).powf(0.5 * s))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use ndarray_linalg::Norm;

    #[test]
    fn coefficients_pick_out_single_mode() {
        let n = 32;
        let dx = TAU / n as f64;
        let u = Array1::from_shape_fn(n, |j| {
            Complex64::from_polar(1.0, 3.0 * (-std::f64::consts::PI + j as f64 * dx))
        });
        let c = coefficients(&u);
        let k = mode_numbers(n);
        for (ck, &kk) in c.iter().zip(&k) {
            let expect = if kk == 3 { 1.0 } else { 0.0 };
            assert_relative_eq!(ck.norm(), expect, epsilon = 1e-12);
        }
    }

    #[test]
    fn hs_parseval_at_s_zero() {
        let n = 64;
        let u = Array1::from_shape_fn(n, |j| Complex64::new((j as f64).sin(), (j as f64).cos()));
        let l2 = (u.iter().map(|z| z.norm_sqr()).sum::<f64>() * TAU / n as f64).sqrt();
        assert_relative_eq!(hs_norm(&u, 0.0), l2, max_relative = 1e-12);
    }

    #[test]
    fn dft_matrix_is_unitary_from_weighted_l2() {
        let n = 16;
        let phi = unitary_dft_matrix(n);
        let u = Array1::from_shape_fn(n, |j| Complex64::new(1.0 / (1.0 + j as f64), 0.3));
        let c = phi.dot(&u);
        let l2 = (u.iter().map(|z| z.norm_sqr()).sum::<f64>() * TAU / n as f64).sqrt();
        assert_relative_eq!(c.norm_l2(), l2, max_relative = 1e-12);
    }
}
