//! Small dense/structured linear algebra kernels.
//!
//! The stationary operator on the circle is tridiagonal plus two corner
//! entries, so resolvent norms along sweeps are computed with an `O(n)`
//! pivoted tridiagonal factorization plus a rank-2 Sherman–Morrison
//! correction, driven by inverse iteration on `P*P`. The dense SVD route in
//! [`crate::resolvent`] stays as the reference; the two are cross-checked in
//! tests.

use ndarray::prelude::*;
use ndarray_linalg::{Eig, SVD};
use num_complex::Complex64;

use crate::error::{Error, Result};

type C64 = Complex64;

/// Pivoted LU of a general tridiagonal matrix (the classic `gttrf` scheme:
/// partial pivoting fills one extra superdiagonal).
pub struct TridiagLu {
    n: usize,
    dl: Vec<C64>,  // multipliers
    d: Vec<C64>,   // main diagonal of U
    du: Vec<C64>,  // first superdiagonal of U
    du2: Vec<C64>, // second superdiagonal of U (fill-in)
    swapped: Vec<bool>,
}

impl TridiagLu {
    /// Factor the tridiagonal matrix with subdiagonal `a`, diagonal `b`,
    /// superdiagonal `c` (lengths n−1, n, n−1).
    pub fn factor(a: &[C64], b: &[C64], c: &[C64]) -> Result<Self> {
        let n = b.len();
        assert!(a.len() == n - 1 && c.len() == n - 1);
        let mut dl = a.to_vec();
        let mut d = b.to_vec();
        let mut du = c.to_vec();
        let mut du2 = vec![C64::default(); n.saturating_sub(2)];
        let mut swapped = vec![false; n - 1];
        for i in 0..n - 1 {
            if dl[i].norm() <= d[i].norm() {
                // no row swap
                if d[i].norm() == 0.0 {
                    return Err(Error::Linalg("singular tridiagonal factor".into()));
                }
                let m = dl[i] / d[i];
                dl[i] = m;
                d[i + 1] -= m * du[i];
                if i + 2 < n {
                    du2[i] = C64::default();
                }
            } else {
                // swap rows i and i+1
                let m = d[i] / dl[i];
                d[i] = dl[i];
                dl[i] = m;
                let tmp = du[i];
                du[i] = d[i + 1];
                d[i + 1] = tmp - m * d[i + 1];
                if i + 2 < n {
                    du2[i] = du[i + 1];
                    du[i + 1] = -m * du[i + 1];
                }
                swapped[i] = true;
            }
        }
        if d[n - 1].norm() == 0.0 {
            return Err(Error::Linalg("singular tridiagonal factor".into()));
        }
        Ok(TridiagLu {
            n,
            dl,
            d,
            du,
            du2,
            swapped,
        })
    }

    /// Solve in place.
    pub fn solve(&self, x: &mut [C64]) {
        let n = self.n;
        // forward
        for i in 0..n - 1 {
            if self.swapped[i] {
                x.swap(i, i + 1);
            }
            let m = self.dl[i];
            let xi = x[i];
            x[i + 1] -= m * xi;
        }
        // back substitution
        x[n - 1] /= self.d[n - 1];
        if n >= 2 {
            x[n - 2] = (x[n - 2] - self.du[n - 2] * x[n - 1]) / self.d[n - 2];
        }
        for i in (0..n.saturating_sub(2)).rev() {
            x[i] = (x[i] - self.du[i] * x[i + 1] - self.du2[i] * x[i + 2]) / self.d[i];
        }
    }
}

/// Periodic (cyclic) tridiagonal matrix: tridiagonal part plus corners
/// `A[0, n−1]` and `A[n−1, 0]`, solved by Sherman–Morrison with two
/// rank-one corrections around the pivoted tridiagonal factorization.
pub struct PeriodicTridiag {
    lu: TridiagLu,
    /// columns `T⁻¹ e_0` and `T⁻¹ e_{n−1}` scaled by the corner values
    z0: Vec<C64>,
    z1: Vec<C64>,
    /// 2×2 capacitance matrix inverse, row-major
    cap_inv: [C64; 4],
    n: usize,
}

impl PeriodicTridiag {
    pub fn factor(
        a: &[C64],
        b: &[C64],
        c: &[C64],
        corner_top: C64,    // A[0, n−1]
        corner_bottom: C64, // A[n−1, 0]
    ) -> Result<Self> {
        let n = b.len();
        let lu = TridiagLu::factor(a, b, c)?;
        let mut z0 = vec![C64::default(); n];
        z0[0] = corner_top;
        lu.solve(&mut z0);
        let mut z1 = vec![C64::default(); n];
        z1[n - 1] = corner_bottom;
        lu.solve(&mut z1);
        // capacitance I₂ + Vᵀ [z0 z1] with Vᵀ rows e_{n−1}ᵀ, e_0ᵀ
        let m00 = C64::new(1.0, 0.0) + z0[n - 1];
        let m01 = z1[n - 1];
        let m10 = z0[0];
        let m11 = C64::new(1.0, 0.0) + z1[0];
        let det = m00 * m11 - m01 * m10;
        if det.norm() == 0.0 {
            return Err(Error::Linalg("singular periodic capacitance".into()));
        }
        let cap_inv = [m11 / det, -m01 / det, -m10 / det, m00 / det];
        Ok(PeriodicTridiag {
            lu,
            z0,
            z1,
            cap_inv,
            n,
        })
    }

    pub fn solve(&self, x: &mut [C64]) {
        self.lu.solve(x);
        let n = self.n;
        let r0 = x[n - 1];
        let r1 = x[0];
        let s0 = self.cap_inv[0] * r0 + self.cap_inv[1] * r1;
        let s1 = self.cap_inv[2] * r0 + self.cap_inv[3] * r1;
        for i in 0..n {
            x[i] -= self.z0[i] * s0 + self.z1[i] * s1;
        }
    }
}

/// Periodic tridiagonal operator stored by bands; knows how to apply itself
/// and its adjoint and to factor both.
#[derive(Clone)]
pub struct CirculantBands {
    pub sub: Vec<C64>,
    pub diag: Vec<C64>,
    pub sup: Vec<C64>,
    pub corner_top: C64,
    pub corner_bottom: C64,
}

impl CirculantBands {
    /// Bands of `P = L − iλ diag(w̄) − μ²` on an n-point periodic grid.
    pub fn stationary(n: usize, dx: f64, w_bar: &[f64], lambda: C64, mu_sq: C64) -> Self {
        let s = 1.0 / (dx * dx);
        let off = C64::new(-s, 0.0);
        let diag: Vec<C64> = (0..n)
            .map(|i| C64::new(2.0 * s, 0.0) - C64::new(0.0, 1.0) * lambda * w_bar[i] - mu_sq)
            .collect();
        CirculantBands {
            sub: vec![off; n - 1],
            diag,
            sup: vec![off; n - 1],
            corner_top: off,
            corner_bottom: off,
        }
    }

    pub fn adjoint(&self) -> Self {
        let conj = |v: &[C64]| v.iter().map(|z| z.conj()).collect::<Vec<_>>();
        CirculantBands {
            sub: conj(&self.sup),
            diag: conj(&self.diag),
            sup: conj(&self.sub),
            corner_top: self.corner_bottom.conj(),
            corner_bottom: self.corner_top.conj(),
        }
    }

    pub fn apply(&self, x: &[C64], out: &mut [C64]) {
        let n = self.diag.len();
        for i in 0..n {
            let mut acc = self.diag[i] * x[i];
            if i > 0 {
                acc += self.sub[i - 1] * x[i - 1];
            }
            if i + 1 < n {
                acc += self.sup[i] * x[i + 1];
            }
            out[i] = acc;
        }
        out[0] += self.corner_top * x[n - 1];
        out[n - 1] += self.corner_bottom * x[0];
    }

    pub fn factor(&self) -> Result<PeriodicTridiag> {
        PeriodicTridiag::factor(
            &self.sub,
            &self.diag,
            &self.sup,
            self.corner_top,
            self.corner_bottom,
        )
    }

    /// Crude, cheap upper bound on the spectral norm (max absolute row sum).
    pub fn norm_bound(&self) -> f64 {
        let n = self.diag.len();
        let mut max = 0.0f64;
        for i in 0..n {
            let mut row = self.diag[i].norm();
            if i > 0 {
                row += self.sub[i - 1].norm();
            }
            if i + 1 < n {
                row += self.sup[i].norm();
            }
            if i == 0 {
                row += self.corner_top.norm();
            }
            if i == n - 1 {
                row += self.corner_bottom.norm();
            }
            max = max.max(row);
        }
        max
    }
}

/// Smallest singular value of a periodic tridiagonal operator by inverse
/// iteration on `P*P` (two structured solves per step). Returns the value
/// and the unit vector attaining it.
pub fn sigma_min_periodic(bands: &CirculantBands) -> Result<(f64, Vec<C64>)> {
    let n = bands.diag.len();
    let fac = bands.factor()?;
    let adj = bands.adjoint();
    let fac_adj = adj.factor()?;

    // deterministic pseudorandom start, free of special symmetry
    let mut x: Vec<C64> = (0..n)
        .map(|i| {
            let t = i as f64;
            C64::new((0.7 + 1.3 * t).sin() + 0.1, (0.3 + 2.1 * t).cos())
        })
        .collect();
    normalize(&mut x);

    let mut work = vec![C64::default(); n];
    let mut sigma_prev = f64::INFINITY;
    let max_iter = 600;
    for it in 0..max_iter {
        // z = (P*P)⁻¹ x  =  P⁻¹ (P⁻* x)
        fac_adj.solve(&mut x);
        fac.solve(&mut x);
        let norm = normalize(&mut x);
        if !norm.is_finite() || norm == 0.0 {
            return Err(Error::Linalg("inverse iteration broke down".into()));
        }
        bands.apply(&x, &mut work);
        let sigma = l2(&work);
        if (sigma_prev - sigma).abs() <= 1e-13 * sigma.max(f64::MIN_POSITIVE) && it >= 3 {
            return Ok((sigma, x));
        }
        sigma_prev = sigma;
    }
    bands.apply(&x, &mut work);
    Ok((l2(&work), x))
}

fn l2(x: &[C64]) -> f64 {
    x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn normalize(x: &mut [C64]) -> f64 {
    let n = l2(x);
    if n > 0.0 {
        for z in x.iter_mut() {
            *z /= n;
        }
    }
    n
}

/// Extreme singular values of a dense matrix: `(σ_max, σ_min, v_min)`.
pub fn svd_extremes(m: &Array2<C64>) -> Result<(f64, f64, Array1<C64>)> {
    let (_, s, vt) = m.svd(false, true)?;
    let vt = vt.ok_or_else(|| Error::Linalg("svd returned no right vectors".into()))?;
    let mut imax = 0;
    let mut imin = 0;
    for (i, &x) in s.iter().enumerate() {
        if x > s[imax] {
            imax = i;
        }
        if x < s[imin] {
            imin = i;
        }
    }
    let v_min = vt.row(imin).mapv(|z| z.conj());
    Ok((s[imax], s[imin], v_min))
}

/// Eigendecomposition of a dense complex matrix, with a fast path through
/// the real solver when the matrix has no imaginary part.
pub fn eig_complex(m: &Array2<C64>) -> Result<(Array1<C64>, Array2<C64>)> {
    let all_real = m.iter().all(|z| z.im == 0.0);
    if all_real {
        let real = m.mapv(|z| z.re);
        let (vals, vecs) = real.eig()?;
        return Ok((vals, vecs));
    }
    let (vals, vecs) = m.eig()?;
    Ok((vals, vecs))
}

/// Eigenvalues only (same real fast path).
pub fn eigvals_complex(m: &Array2<C64>) -> Result<Array1<C64>> {
    let all_real = m.iter().all(|z| z.im == 0.0);
    if all_real {
        let real = m.mapv(|z| z.re);
        return Ok(real.eigvals()?);
    }
    Ok(m.eigvals()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use ndarray_linalg::EigVals;

    fn dense_from_bands(b: &CirculantBands) -> Array2<C64> {
        let n = b.diag.len();
        let mut m = Array2::default((n, n));
        for i in 0..n {
            m[[i, i]] = b.diag[i];
            if i > 0 {
                m[[i, i - 1]] = b.sub[i - 1];
            }
            if i + 1 < n {
                m[[i, i + 1]] = b.sup[i];
            }
        }
        m[[0, n - 1]] += b.corner_top;
        m[[n - 1, 0]] += b.corner_bottom;
        m
    }

    fn test_bands(n: usize) -> CirculantBands {
        let w: Vec<f64> = (0..n).map(|i| 0.5 + (i as f64 * 0.37).sin().abs()).collect();
        CirculantBands::stationary(
            n,
            2.0 * std::f64::consts::PI / n as f64,
            &w,
            C64::new(9.0, 0.0),
            C64::new(81.0, 0.0),
        )
    }

    #[test]
    fn periodic_solve_matches_dense() {
        let n = 37;
        let bands = test_bands(n);
        let dense = dense_from_bands(&bands);
        let rhs: Vec<C64> = (0..n)
            .map(|i| C64::new((i as f64).cos(), (i as f64 * 0.7).sin()))
            .collect();
        let mut x = rhs.clone();
        bands.factor().unwrap().solve(&mut x);
        let xa = Array1::from_vec(x.clone());
        let back = dense.dot(&xa);
        for (bi, ri) in back.iter().zip(rhs.iter()) {
            assert!((bi - ri).norm() < 1e-9, "residual {}", (bi - ri).norm());
        }
    }

    #[test]
    fn sigma_min_matches_dense_svd() {
        for &n in &[24usize, 61, 128] {
            let bands = test_bands(n);
            let dense = dense_from_bands(&bands);
            let (_, smin, _) = svd_extremes(&dense).unwrap();
            let (fast, v) = sigma_min_periodic(&bands).unwrap();
            assert_relative_eq!(fast, smin, max_relative = 1e-9);
            // the returned vector attains the value
            let va = Array1::from_vec(v);
            let pv = dense.dot(&va);
            let attained = pv.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            assert_relative_eq!(attained, smin, max_relative = 1e-9);
        }
    }

    #[test]
    fn sigma_min_near_resonance() {
        // undamped operator close to a stencil eigenvalue: tiny σ_min,
        // pivoted factorization must stay accurate
        let n = 64;
        let dx = 2.0 * std::f64::consts::PI / n as f64;
        let w = vec![0.0; n];
        let ell1 = (2.0 / (dx * dx)) * (1.0 - dx.cos());
        let bands =
            CirculantBands::stationary(n, dx, &w, C64::new(0.0, 0.0), C64::new(ell1 + 1e-9, 0.0));
        let dense = dense_from_bands(&bands);
        let (_, smin, _) = svd_extremes(&dense).unwrap();
        let (fast, _) = sigma_min_periodic(&bands).unwrap();
        assert_relative_eq!(fast, smin, max_relative = 1e-6);
        assert!(fast < 1e-8);
    }

    #[test]
    fn tridiag_pivoting_handles_small_diagonal() {
        let n = 5;
        let a = vec![C64::new(1.0, 0.0); n - 1];
        let mut b = vec![C64::new(1e-14, 0.0); n];
        b[2] = C64::new(2.0, 1.0);
        let c = vec![C64::new(1.5, -0.5); n - 1];
        let lu = TridiagLu::factor(&a, &b, &c).unwrap();
        let rhs: Vec<C64> = (0..n).map(|i| C64::new(i as f64 + 1.0, 0.0)).collect();
        let mut x = rhs.clone();
        lu.solve(&mut x);
        // residual against the dense matrix
        let mut dense = Array2::<C64>::default((n, n));
        for i in 0..n {
            dense[[i, i]] = b[i];
            if i > 0 {
                dense[[i, i - 1]] = a[i - 1];
            }
            if i + 1 < n {
                dense[[i, i + 1]] = c[i];
            }
        }
        let back = dense.dot(&Array1::from_vec(x));
        for (bi, ri) in back.iter().zip(rhs.iter()) {
            assert!((bi - ri).norm() < 1e-9);
        }
    }

    #[test]
    fn eig_real_fast_path_agrees() {
        let m = ndarray::array![
            [C64::new(0.0, 0.0), C64::new(1.0, 0.0)],
            [C64::new(-4.0, 0.0), C64::new(-1.0, 0.0)]
        ];
        let vals = eigvals_complex(&m).unwrap();
        let direct = m.eigvals().unwrap();
        let mut a: Vec<C64> = vals.to_vec();
        let mut b: Vec<C64> = direct.to_vec();
        a.sort_by(|x, y| x.im.total_cmp(&y.im));
        b.sort_by(|x, y| x.im.total_cmp(&y.im));
        for (x, y) in a.iter().zip(b.iter()) {
            assert!((x - y).norm() < 1e-12);
        }
    }
}
