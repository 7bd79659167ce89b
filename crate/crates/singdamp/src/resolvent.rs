//! Resolvent-norm measurement and scaling fits.
//!
//! `resolvent_norm` is `1/σ_min` of the stationary matrix, the discrete
//! `L² → L²` resolvent norm (uniform weights cancel). Sweeps use the
//! structured periodic-tridiagonal path from [`crate::linalg`] — the same
//! quantity, cross-checked against the dense SVD in tests — so parameter
//! sweeps stay `O(n)` per sample. The torus norm is the max over Fourier
//! modes in `y` of the 1D norm at `μ² = λ² − m²`.

use ndarray::prelude::*;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::damping::DampingSpec;
use crate::discretize::{build_grid, ComplexOperator, Domain, Grid};
use crate::error::{Error, Result};
use crate::fourier;
use crate::linalg::{self, CirculantBands};

/// Relative `σ_min` threshold below which an operator is reported singular.
pub const SINGULAR_TOL: f64 = 1e-14;

/// Fixed additive jitter applied to geometric λ samples, keeping sweep
/// points off half-integer resonance clusters.
pub const LAMBDA_JITTER: f64 = 0.137;

/// Default geometric sampling density for λ sweeps.
pub const POINTS_PER_DECADE: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FitResult {
    pub slope: f64,
    pub intercept: f64,
    pub fit_residual: f64,
}

/// Ordered list of (parameter, measured) pairs plus a log–log fit.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRecord {
    pub parameter: String,
    pub samples: Vec<(f64, f64)>,
    pub fit: FitResult,
    pub window: (f64, f64),
    pub n: usize,
    pub spec_hash: String,
}

/// `1/σ_min` of a dense operator; errors with the near-kernel vector when
/// `σ_min < 1e-14 · ‖op‖`.
pub fn resolvent_norm(op: &ComplexOperator) -> Result<f64> {
    let (smax, smin, vmin) = linalg::svd_extremes(&op.matrix)?;
    if smin < SINGULAR_TOL * smax {
        return Err(Error::NumericallySingular {
            sigma_min: smin,
            norm: smax,
            near_kernel: vmin.to_vec(),
        });
    }
    Ok(1.0 / smin)
}

/// Structured equivalent of [`resolvent_norm`] for the periodic stationary
/// operator, `O(n)` per evaluation.
pub fn resolvent_norm_fast(
    grid: &Grid,
    w_bar: &[f64],
    lambda: Complex64,
    mu_sq: Complex64,
) -> Result<f64> {
    debug_assert!(grid.is_periodic());
    let bands = CirculantBands::stationary(grid.n, grid.dx, w_bar, lambda, mu_sq);
    let norm_bound = bands.norm_bound();
    let (smin, v) = linalg::sigma_min_periodic(&bands)?;
    if smin < SINGULAR_TOL * norm_bound {
        return Err(Error::NumericallySingular {
            sigma_min: smin,
            norm: norm_bound,
            near_kernel: v,
        });
    }
    Ok(1.0 / smin)
}

/// Closed-form free-field norm `1/min_k |ℓ_k − μ²|` over the exact stencil
/// eigenvalues `ℓ_k = (2/dx²)(1 − cos k dx)`.
pub fn free_field_norm(grid: &Grid, mu_sq: Complex64) -> f64 {
    let min = grid
        .stencil_eigenvalues()
        .iter()
        .map(|&ell| (Complex64::new(ell, 0.0) - mu_sq).norm())
        .fold(f64::INFINITY, f64::min);
    1.0 / min
}

/// Geometric λ samples with the documented additive jitter.
pub fn lambda_samples(lo: f64, hi: f64, points_per_decade: usize) -> Vec<f64> {
    assert!(lo > 0.0 && hi > lo);
    let decades = (hi / lo).log10();
    let count = ((decades * points_per_decade as f64).ceil() as usize).max(2);
    (0..=count)
        .map(|i| {
            let t = i as f64 / count as f64;
            lo * (hi / lo).powf(t) + LAMBDA_JITTER
        })
        .collect()
}

/// Ordinary least squares of `log measured` against `log parameter` over a
/// window; `fit_residual` is the RMS of fit residuals.
pub fn fit_exponent(samples: &[(f64, f64)], window: (f64, f64)) -> Result<FitResult> {
    let pts: Vec<(f64, f64)> = samples
        .iter()
        .filter(|(x, _)| *x >= window.0 && *x <= window.1)
        .map(|&(x, y)| (x.ln(), y.ln()))
        .collect();
    if pts.len() < 5 {
        return Err(Error::TooFewSamples {
            needed: 5,
            got: pts.len(),
        });
    }
    let n = pts.len() as f64;
    let sx: f64 = pts.iter().map(|p| p.0).sum();
    let sy: f64 = pts.iter().map(|p| p.1).sum();
    let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
    let denom = n * sxx - sx * sx;
    let slope = (n * sxy - sx * sy) / denom;
    let intercept = (sy - slope * sx) / n;
    let rms = (pts
        .iter()
        .map(|&(x, y)| {
            let r = y - (slope * x + intercept);
            r * r
        })
        .sum::<f64>()
        / n)
        .sqrt();
    Ok(FitResult {
        slope,
        intercept,
        fit_residual: rms,
    })
}

fn sweep_over(
    spec: &DampingSpec,
    lambdas: &[f64],
    n: usize,
    parameter: &str,
    eval: impl Fn(&Grid, &[f64], f64) -> Result<f64> + Sync,
) -> Result<SweepRecord> {
    if spec.is_empty() {
        return Err(Error::InvalidSpec(
            "resolvent sweeps need nonzero damping (the undamped problem has real poles)".into(),
        ));
    }
    if lambdas.is_empty() {
        return Err(Error::TooFewSamples { needed: 5, got: 0 });
    }
    let grid = build_grid(Domain::Periodic, n)?;
    let w_bar = grid.damping_averages(spec)?;
    let mut samples: Vec<(f64, f64)> = lambdas
        .par_iter()
        .map(|&l| eval(&grid, &w_bar, l).map(|v| (l, v)))
        .collect::<Result<_>>()?;
    samples.sort_by(|a, b| a.0.total_cmp(&b.0));
    let window = (samples[0].0, samples[samples.len() - 1].0);
    let fit = fit_exponent(&samples, window)?;
    Ok(SweepRecord {
        parameter: parameter.to_string(),
        samples,
        fit,
        window,
        n,
        spec_hash: spec.hash(),
    })
}

/// Resolvent norms along the real axis on the circle, `μ² = λ²`.
pub fn sweep_1d(spec: &DampingSpec, lambdas: &[f64], n: usize) -> Result<SweepRecord> {
    let lambda_max = lambdas.iter().cloned().fold(0.0f64, f64::max);
    let dx = crate::damping::TAU / n as f64;
    if dx * lambda_max > 0.5 {
        return Err(Error::UnderResolved(format!(
            "dx·λ_max = {:.3} > 1/2; raise n above {}",
            dx * lambda_max,
            (2.0 * crate::damping::TAU * lambda_max).ceil() as usize
        )));
    }
    sweep_over(spec, lambdas, n, "lambda", |grid, w_bar, l| {
        resolvent_norm_fast(
            grid,
            w_bar,
            Complex64::new(l, 0.0),
            Complex64::new(l * l, 0.0),
        )
    })
}

/// Default y-mode cutoff: past `λ` the modal problems are elliptic and
/// their norms are O(1), so a small margin suffices.
pub fn default_n_modes(lambda: f64) -> usize {
    lambda.ceil() as usize + 5
}

/// Discrete torus resolvent norm for x-only damping: max over y-modes
/// `m ∈ [0, n_modes]` of the 1D norm at `μ² = λ² − m²`.
pub fn torus_resolvent(spec: &DampingSpec, lambda: f64, n_modes: usize, n: usize) -> Result<f64> {
    if lambda <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "torus resolvent needs λ > 0, got {lambda}"
        )));
    }
    if n_modes < default_n_modes(lambda) {
        return Err(Error::InvalidParameter(format!(
            "n_modes = {n_modes} below the cutoff rule ceil(λ)+5 = {}",
            default_n_modes(lambda)
        )));
    }
    let grid = build_grid(Domain::Periodic, n)?;
    let w_bar = grid.damping_averages(spec)?;
    torus_resolvent_on(&grid, &w_bar, lambda, n_modes)
}

fn torus_resolvent_on(grid: &Grid, w_bar: &[f64], lambda: f64, n_modes: usize) -> Result<f64> {
    let norms = torus_modal_norms(grid, w_bar, lambda, n_modes)?;
    Ok(norms
        .iter()
        .map(|&(_, v)| v)
        .fold(f64::NEG_INFINITY, f64::max))
}

/// Per-mode torus norms `(m, ‖P(λ, λ²−m²)⁻¹‖)`, the detail behind
/// [`torus_resolvent`].
pub fn torus_modal_norms(
    grid: &Grid,
    w_bar: &[f64],
    lambda: f64,
    n_modes: usize,
) -> Result<Vec<(usize, f64)>> {
    (0..=n_modes)
        .into_par_iter()
        .map(|m| {
            let mu_sq = lambda * lambda - (m * m) as f64;
            resolvent_norm_fast(
                grid,
                w_bar,
                Complex64::new(lambda, 0.0),
                Complex64::new(mu_sq, 0.0),
            )
            .map(|v| (m, v))
        })
        .collect()
}

/// Torus sweep; the fitted slope targets `1/(2+β)`.
pub fn sweep_torus(spec: &DampingSpec, lambdas: &[f64], n: usize) -> Result<SweepRecord> {
    sweep_over(spec, lambdas, n, "lambda", |grid, w_bar, l| {
        torus_resolvent_on(grid, w_bar, l, default_n_modes(l))
    })
}

/// Two-sided comparison between the generator resolvent norm (in the flat
/// `H¹ × L²` norm) and the bounds assembled from `‖P_λ⁻¹‖`.
#[derive(Debug, Clone, Serialize)]
pub struct CrosscheckReport {
    pub lambda: f64,
    /// `‖(𝒜 + iλ)⁻¹‖` in the discrete `H¹ × L²` norm.
    pub lhs: f64,
    /// `|λ|·‖P⁻¹‖ + (2 + ⟨λ⟩/|λ|)·‖P⁻¹‖_{L²→H¹} + 1/|λ|`, constants set to 1.
    pub rhs_bound: f64,
    /// `|λ|·‖P⁻¹‖_{L²→L²}`, an exact lower bound.
    pub lower_bound: f64,
    pub slack: f64,
    pub lower_ok: bool,
    pub upper_ok: bool,
}

/// Evaluate the resolvent-equivalence bounds at a real `λ ≠ 0`.
pub fn a_resolvent_crosscheck(
    spec: &DampingSpec,
    lambda: f64,
    n: usize,
    slack: f64,
) -> Result<CrosscheckReport> {
    if lambda == 0.0 {
        return Err(Error::InvalidParameter(
            "crosscheck needs λ ≠ 0 (the generator has a pole at 0)".into(),
        ));
    }
    let grid = build_grid(Domain::Periodic, n)?;
    let p = crate::discretize::assemble_p(
        &grid,
        spec,
        Complex64::new(lambda, 0.0),
        Complex64::new(lambda * lambda, 0.0),
    )?;
    // flat-H¹ weights: Φ unitary from ℓ²(dx), diag (1+k²)^{1/2} on modes
    let phi = fourier::unitary_dft_matrix(n);
    let phi_h = phi.t().mapv(|z| z.conj());
    let wts = fourier::mode_weights(n, 1.0);

    let p_inv = invert(&p.matrix)?;
    // ‖P⁻¹‖_{L²→L²}: unitary weights cancel
    let (_, smin_p, _) = linalg::svd_extremes(&p.matrix)?;
    if smin_p < SINGULAR_TOL / crate::damping::TAU {
        return Err(Error::Linalg("singular P_lambda in crosscheck".into()));
    }
    let norm_22 = 1.0 / smin_p;
    // ‖P⁻¹‖_{L²→H¹} = σ_max( W Φ P⁻¹ Φ* )
    let mut weighted = phi.dot(&p_inv).dot(&phi_h);
    for (r, mut row) in weighted.outer_iter_mut().enumerate() {
        for z in row.iter_mut() {
            *z *= wts[r];
        }
    }
    let (norm_2h, _, _) = linalg::svd_extremes(&weighted)?;

    // ‖(𝒜+iλ)⁻¹‖ in the flat H¹×L² norm: σ_min of S (𝒜+iλ) S⁻¹
    let a = crate::discretize::assemble_a(&grid, spec)?;
    let mut m = a.matrix;
    for i in 0..2 * n {
        m[[i, i]] += Complex64::new(0.0, lambda);
    }
    let s_fwd = block_weight(&phi, &wts, false);
    let s_inv = block_weight(&phi_h, &wts, true);
    let b = s_fwd.dot(&m).dot(&s_inv);
    let (_, smin_b, _) = linalg::svd_extremes(&b)?;
    let lhs = 1.0 / smin_b;

    let abs_l = lambda.abs();
    let bracket = 1.0 + (1.0 + lambda * lambda).sqrt() / abs_l;
    let rhs_bound = abs_l * norm_22 + norm_2h + bracket * norm_2h + 1.0 / abs_l;
    let lower_bound = abs_l * norm_22;
    Ok(CrosscheckReport {
        lambda,
        lhs,
        rhs_bound,
        lower_bound,
        slack,
        lower_ok: lower_bound <= lhs * (1.0 + 1e-9),
        upper_ok: lhs <= slack * rhs_bound,
    })
}

/// `blockdiag(W·Φ, Φ)` or its inverse `blockdiag(Φ*·W⁻¹, Φ*)`.
fn block_weight(phi: &Array2<Complex64>, wts: &[f64], inverse: bool) -> Array2<Complex64> {
    let n = wts.len();
    let mut s = Array2::zeros((2 * n, 2 * n));
    for i in 0..n {
        for j in 0..n {
            let (u_block, v_block) = if inverse {
                (phi[[i, j]] / wts[j], phi[[i, j]])
            } else {
                (phi[[i, j]] * wts[i], phi[[i, j]])
            };
            s[[i, j]] = u_block;
            s[[n + i, n + j]] = v_block;
        }
    }
    s
}

fn invert(m: &Array2<Complex64>) -> Result<Array2<Complex64>> {
    use ndarray_linalg::Inverse;
    Ok(m.inv()?)
}

/// CSV body for a sweep: `lambda,norm`.
pub fn sweep_to_csv(record: &SweepRecord) -> String {
    let mut out = String::from("lambda,norm\n");
    for (l, v) in &record.samples {
        out.push_str(&format!("{},{}\n", l, v));
    }
    out
}

/// JSON fit summary with the schema pinned by the external interface.
pub fn fit_summary_json(record: &SweepRecord) -> serde_json::Value {
    serde_json::json!({
        "slope": record.fit.slope,
        "intercept": record.fit.intercept,
        "rms": record.fit.fit_residual,
        "window": [record.window.0, record.window.1],
        "n": record.n,
        "spec_hash": record.spec_hash,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discretize::assemble_p;
    use approx::assert_relative_eq;

    fn periodic(n: usize) -> Grid {
        build_grid(Domain::Periodic, n).unwrap()
    }

    #[test]
    fn identity_has_unit_norm() {
        let grid = periodic(32);
        let op = ComplexOperator {
            matrix: Array2::eye(32),
            grid,
            role: crate::discretize::OperatorRole::Laplacian,
        };
        assert_relative_eq!(resolvent_norm(&op).unwrap(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn free_field_low_frequency() {
        // W ≡ 0, λ = 1/2, μ² = λ²: min_k |ℓ_k − 1/4| attained at k = 0 → norm 4
        let grid = periodic(256);
        let spec = DampingSpec::empty();
        let op = assemble_p(
            &grid,
            &spec,
            Complex64::new(0.5, 0.0),
            Complex64::new(0.25, 0.0),
        )
        .unwrap();
        assert_relative_eq!(resolvent_norm(&op).unwrap(), 4.0, max_relative = 1e-10);
        assert_relative_eq!(
            free_field_norm(&grid, Complex64::new(0.25, 0.0)),
            4.0,
            max_relative = 1e-14
        );
    }

    #[test]
    fn free_field_real_pole_flagged_singular() {
        // λ hitting a discrete mode exactly: the undamped problem has a real pole
        let grid = periodic(64);
        let ell1 = grid.stencil_eigenvalues()[1];
        let lam = ell1.sqrt();
        let op = assemble_p(
            &grid,
            &DampingSpec::empty(),
            Complex64::new(lam, 0.0),
            Complex64::new(ell1, 0.0),
        )
        .unwrap();
        match resolvent_norm(&op) {
            Err(Error::NumericallySingular { near_kernel, .. }) => {
                assert_eq!(near_kernel.len(), 64);
            }
            other => panic!("expected singular flag, got {other:?}"),
        }
    }

    #[test]
    fn fast_path_matches_dense_svd() {
        let grid = periodic(96);
        let spec = DampingSpec::sharpness(-0.5).unwrap();
        let w = grid.damping_averages(&spec).unwrap();
        for &(l, m2) in &[(7.3, 53.0), (12.1, 10.0), (25.0, -4.0)] {
            let lambda = Complex64::new(l, 0.0);
            let mu_sq = Complex64::new(m2, 0.0);
            let dense = resolvent_norm(&assemble_p(&grid, &spec, lambda, mu_sq).unwrap()).unwrap();
            let fast = resolvent_norm_fast(&grid, &w, lambda, mu_sq).unwrap();
            assert_relative_eq!(dense, fast, max_relative = 1e-8);
        }
    }

    #[test]
    fn reflection_symmetry_in_lambda() {
        let grid = periodic(64);
        let spec = DampingSpec::sharpness(-0.5).unwrap();
        let w = grid.damping_averages(&spec).unwrap();
        let l = 9.4;
        let a = resolvent_norm_fast(
            &grid,
            &w,
            Complex64::new(l, 0.0),
            Complex64::new(l * l, 0.0),
        )
        .unwrap();
        let b = resolvent_norm_fast(
            &grid,
            &w,
            Complex64::new(-l, 0.0),
            Complex64::new(l * l, 0.0),
        )
        .unwrap();
        assert_relative_eq!(a, b, max_relative = 1e-10);
    }

    #[test]
    fn fit_recovers_pure_power() {
        let samples: Vec<(f64, f64)> = (1..40)
            .map(|i| {
                let x = 1.0 + i as f64;
                (x, x.powf(0.66))
            })
            .collect();
        let fit = fit_exponent(&samples, (samples[0].0, samples.last().unwrap().0)).unwrap();
        assert_relative_eq!(fit.slope, 0.66, epsilon = 1e-6);
        assert!(fit.fit_residual < 1e-10);
    }

    #[test]
    fn fit_constant_has_zero_slope() {
        let samples: Vec<(f64, f64)> = (1..20).map(|i| (i as f64, 3.7)).collect();
        let fit = fit_exponent(&samples, (1.0, 19.0)).unwrap();
        assert!(fit.slope.abs() < 1e-6);
    }

    #[test]
    fn fit_perturbed_power_stays_close() {
        // y = x^{2/3}·(1 + 0.1 sin ln x): slope within 0.1 of 2/3.
        // Independent route: accumulate the normal equations directly here.
        let xs: Vec<f64> = (0..60).map(|i| 5.0 * 1.1f64.powi(i)).collect();
        let samples: Vec<(f64, f64)> = xs
            .iter()
            .map(|&x| (x, x.powf(2.0 / 3.0) * (1.0 + 0.1 * (x.ln()).sin())))
            .collect();
        let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
        for &(x, y) in &samples {
            let (lx, ly) = (x.ln(), y.ln());
            sx += lx;
            sy += ly;
            sxx += lx * lx;
            sxy += lx * ly;
        }
        let n = samples.len() as f64;
        let oracle_slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        let fit = fit_exponent(&samples, (xs[0], *xs.last().unwrap())).unwrap();
        assert_relative_eq!(fit.slope, oracle_slope, epsilon = 1e-12);
        assert!((fit.slope - 2.0 / 3.0).abs() < 0.1);
    }

    #[test]
    fn fit_needs_five_samples() {
        let samples = vec![(1.0, 1.0), (2.0, 2.0), (3.0, 3.0)];
        assert!(matches!(
            fit_exponent(&samples, (1.0, 3.0)),
            Err(Error::TooFewSamples { .. })
        ));
    }

    #[test]
    fn sweep_rejects_under_resolved_grid() {
        let spec = DampingSpec::constant(1.0).unwrap();
        let lambdas = vec![100.0, 150.0, 200.0, 250.0, 300.0];
        assert!(matches!(
            sweep_1d(&spec, &lambdas, 64),
            Err(Error::UnderResolved(_))
        ));
    }

    #[test]
    fn sweep_rejects_empty_spec() {
        let lambdas = lambda_samples(5.0, 20.0, 24);
        assert!(sweep_1d(&DampingSpec::empty(), &lambdas, 256).is_err());
    }

    #[test]
    fn constant_damping_sweep_slope_near_minus_one() {
        // oracle: per-Fourier-mode formula 1/min_k |ℓ_k − iλ − λ²|
        let spec = DampingSpec::constant(1.0).unwrap();
        let lambdas = lambda_samples(10.0, 60.0, 24);
        let n = 1024;
        let record = sweep_1d(&spec, &lambdas, n).unwrap();
        let grid = periodic(n);
        for &(l, measured) in &record.samples {
            let oracle = grid
                .stencil_eigenvalues()
                .iter()
                .map(|&ell| {
                    (Complex64::new(ell - l * l, 0.0) - Complex64::new(0.0, l)).norm()
                })
                .fold(f64::INFINITY, f64::min)
                .recip();
            assert_relative_eq!(measured, oracle, max_relative = 1e-7);
        }
        assert!(
            (record.fit.slope + 1.0).abs() < 0.1,
            "slope {}",
            record.fit.slope
        );
    }

    #[test]
    fn torus_norm_low_frequency_closed_form() {
        // empty spec, λ = 0.5 → max over m of 1/min_k |ℓ_k + m² − 0.25| = 4
        let grid = periodic(64);
        let w = vec![0.0; 64];
        let v = torus_resolvent_on(&grid, &w, 0.5, 6).unwrap();
        assert_relative_eq!(v, 4.0, max_relative = 1e-9);
    }

    #[test]
    fn torus_norm_dominates_every_mode() {
        let grid = periodic(128);
        let spec = DampingSpec::sharpness(-0.5).unwrap();
        let w = grid.damping_averages(&spec).unwrap();
        let lambda = 9.0;
        let modes = torus_modal_norms(&grid, &w, lambda, default_n_modes(lambda)).unwrap();
        let max = torus_resolvent_on(&grid, &w, lambda, default_n_modes(lambda)).unwrap();
        for &(_, v) in &modes {
            assert!(v <= max * (1.0 + 1e-12));
        }
        // includes m = 0, so it dominates the 1D value at μ² = λ²
        let one_d = resolvent_norm_fast(
            &grid,
            &w,
            Complex64::new(lambda, 0.0),
            Complex64::new(lambda * lambda, 0.0),
        )
        .unwrap();
        assert!(max >= one_d * (1.0 - 1e-12));
    }

    #[test]
    fn torus_rejects_small_mode_cutoff() {
        let spec = DampingSpec::sharpness(-0.5).unwrap();
        assert!(torus_resolvent(&spec, 10.0, 3, 64).is_err());
    }

    #[test]
    fn crosscheck_ordering_constant_damping() {
        let spec = DampingSpec::constant(1.0).unwrap();
        let report = a_resolvent_crosscheck(&spec, 10.0, 64, 10.0).unwrap();
        assert!(report.lower_ok, "lower bound violated: {report:?}");
        assert!(report.upper_ok, "upper bound violated: {report:?}");
    }

    #[test]
    fn crosscheck_rejects_lambda_zero() {
        let spec = DampingSpec::constant(1.0).unwrap();
        assert!(a_resolvent_crosscheck(&spec, 0.0, 32, 10.0).is_err());
    }

    #[test]
    fn lambda_samples_are_jittered_geometric() {
        let s = lambda_samples(10.0, 100.0, 24);
        assert_eq!(s.len(), 25);
        assert_relative_eq!(s[0], 10.137, epsilon = 1e-12);
        assert!(s.windows(2).all(|w| w[1] > w[0]));
    }
}
