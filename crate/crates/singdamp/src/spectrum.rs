//! Discrete spectrum of the generator and the paper-side structure checks.
//!
//! Coordinate convention, fixed once: `μ` is a generator eigenvalue and the
//! stationary parameter is `λ = iμ` (equivalently `μ = −iλ`). Poles of `P_λ`
//! on the real λ-axis correspond to purely imaginary generator eigenvalues.

use ndarray::prelude::*;
use num_complex::Complex64;
use serde::Serialize;

use crate::damping::DampingSpec;
use crate::discretize::{assemble_p, Grid};
use crate::error::{Error, Result};
use crate::linalg;

/// Relative scale for the zero-eigenvalue cluster and SVD rank cuts.
pub const TOL_ZERO_REL: f64 = 1e-8;

#[derive(Debug, Clone)]
pub struct SpectrumReport {
    /// All 2n generator eigenvalues.
    pub eigenvalues: Vec<Complex64>,
    /// Max `Re μ` over eigenvalues outside the zero cluster.
    pub spectral_abscissa: f64,
    pub kernel_dim: usize,
    pub kernel_vectors: Vec<Array1<Complex64>>,
    /// Max distance from an eigenvalue to the conjugate-reflected multiset.
    pub symmetry_defect: f64,
    /// Max over sampled eigenvalues of `σ_min(P_{iμ}) / ‖P_{iμ}‖`.
    pub correspondence_defect: f64,
    /// Absolute zero-cluster tolerance used (`TOL_ZERO_REL · ‖𝒜‖`).
    pub tol_zero: f64,
    /// Row-sum norm of the generator, the tolerance scale.
    pub norm_a: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct UpperHalfplaneCheck {
    pub pass: bool,
    /// True when every eigenvalue sits on the imaginary axis within
    /// tolerance (the undamped case).
    pub marginal: bool,
    pub witnesses: Vec<(f64, f64)>,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct KernelReport {
    pub kernel_dim: usize,
    pub generalized_kernel_dim: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct LowerRegionReport {
    /// Smallest `K ≥ 0` such that no computed eigenvalue lies in
    /// `{|Im μ| ≤ M·|Re μ|^{p−δ}, Re μ ≤ −K}`.
    pub k_empirical: f64,
    /// Eigenvalues inside the region for the configured `K`.
    pub violations: Vec<(f64, f64)>,
}

/// Generator eigenstructure from the spec's damping.
pub fn eig_a(grid: &Grid, spec: &DampingSpec, corr_samples: usize) -> Result<SpectrumReport> {
    let w_bar = grid.damping_averages(spec)?;
    eig_a_from_w(grid, &w_bar, spec, corr_samples)
}

/// Test hook: eigenstructure from a raw damping vector (lets tests force
/// sign-violating damping through the assembly).
pub fn eig_a_from_w(
    grid: &Grid,
    w_bar: &[f64],
    spec: &DampingSpec,
    corr_samples: usize,
) -> Result<SpectrumReport> {
    if !grid.is_periodic() {
        return Err(Error::InvalidGrid("generator spectrum needs a periodic grid".into()));
    }
    if grid.n > 1024 {
        return Err(Error::InvalidGrid(format!(
            "dense eigensolve budget is n <= 1024, got {}",
            grid.n
        )));
    }
    let matrix = generator_matrix(grid, w_bar);
    let norm_a = inf_norm(&matrix);
    let tol_zero = TOL_ZERO_REL * norm_a;
    let (vals, vecs) = linalg::eig_complex(&matrix)?;

    let mut kernel_dim = 0;
    let mut kernel_vectors = Vec::new();
    for (i, mu) in vals.iter().enumerate() {
        if mu.norm() < tol_zero {
            kernel_dim += 1;
            kernel_vectors.push(vecs.column(i).to_owned());
        }
    }
    let spectral_abscissa = vals
        .iter()
        .filter(|mu| mu.norm() >= tol_zero)
        .map(|mu| mu.re)
        .fold(f64::NEG_INFINITY, f64::max);

    let symmetry_defect = symmetry_defect(&vals);

    // pole correspondence on the smallest-|μ| sample
    let mut order: Vec<usize> = (0..vals.len()).collect();
    order.sort_by(|&a, &b| vals[a].norm().total_cmp(&vals[b].norm()));
    let mut correspondence_defect = 0.0f64;
    for &i in order.iter().take(corr_samples.min(vals.len())) {
        correspondence_defect = correspondence_defect.max(pole_defect(grid, spec, vals[i])?);
    }

    Ok(SpectrumReport {
        eigenvalues: vals.to_vec(),
        spectral_abscissa,
        kernel_dim,
        kernel_vectors,
        symmetry_defect,
        correspondence_defect,
        tol_zero,
        norm_a,
    })
}

fn generator_matrix(grid: &Grid, w_bar: &[f64]) -> Array2<Complex64> {
    let n = grid.n;
    let s = 1.0 / (grid.dx * grid.dx);
    let mut m = Array2::zeros((2 * n, 2 * n));
    for i in 0..n {
        m[[i, n + i]] = Complex64::new(1.0, 0.0);
        // Δ = −L rows
        m[[n + i, i]] = Complex64::new(-2.0 * s, 0.0);
        m[[n + i, (i + 1) % n]] = Complex64::new(s, 0.0);
        m[[n + i, (i + n - 1) % n]] = Complex64::new(s, 0.0);
        m[[n + i, n + i]] = Complex64::new(-w_bar[i], 0.0);
    }
    m
}

fn inf_norm(m: &Array2<Complex64>) -> f64 {
    m.outer_iter()
        .map(|row| row.iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// Max over eigenvalues of the distance from `conj(μ)` to the multiset.
fn symmetry_defect(vals: &Array1<Complex64>) -> f64 {
    let mut defect = 0.0f64;
    for mu in vals.iter() {
        let c = mu.conj();
        let nearest = vals
            .iter()
            .map(|o| (o - c).norm())
            .fold(f64::INFINITY, f64::min);
        defect = defect.max(nearest);
    }
    defect
}

/// Relative near-singularity of `P_{λ=iμ}` at a generator eigenvalue.
fn pole_defect(grid: &Grid, spec: &DampingSpec, mu: Complex64) -> Result<f64> {
    let lambda = Complex64::new(0.0, 1.0) * mu; // λ = iμ
    let p = assemble_p(grid, spec, lambda, lambda * lambda)?;
    let (smax, smin, _) = linalg::svd_extremes(&p.matrix)?;
    Ok(smin / smax)
}

/// Relative `σ_min` of `P_{iμ}` at an arbitrary probe point (the negative
/// control for the pole correspondence).
pub fn probe_defect(grid: &Grid, spec: &DampingSpec, mu: Complex64) -> Result<f64> {
    pole_defect(grid, spec, mu)
}

/// Every eigenvalue off the zero cluster must satisfy `Re μ < tol`.
pub fn check_upper_halfplane(report: &SpectrumReport) -> UpperHalfplaneCheck {
    let tol = report.tol_zero;
    let mut witnesses = Vec::new();
    let mut marginal = true;
    for mu in &report.eigenvalues {
        if mu.norm() < tol {
            continue;
        }
        if mu.re > tol {
            witnesses.push((mu.re, mu.im));
        }
        if mu.re.abs() > tol {
            marginal = false;
        }
    }
    UpperHalfplaneCheck {
        pass: witnesses.is_empty(),
        marginal,
        witnesses,
    }
}

/// Kernel and generalized-kernel dimensions via SVD rank of `𝒜` and `𝒜²`.
pub fn check_kernel_simplicity(grid: &Grid, spec: &DampingSpec) -> Result<KernelReport> {
    let w_bar = grid.damping_averages(spec)?;
    let a = generator_matrix(grid, &w_bar);
    let a2 = a.dot(&a);
    let kernel_dim = nullity(&a)?;
    let generalized_kernel_dim = nullity(&a2)?;
    Ok(KernelReport {
        kernel_dim,
        generalized_kernel_dim,
    })
}

fn nullity(m: &Array2<Complex64>) -> Result<usize> {
    use ndarray_linalg::SVD;
    let (_, s, _) = m.svd(false, false)?;
    let smax = s.iter().cloned().fold(0.0f64, f64::max);
    Ok(s.iter().filter(|&&x| x < TOL_ZERO_REL * smax).count())
}

/// Max relative defect `σ_min(P_{iμ})/‖P_{iμ}‖` over the `samples`
/// smallest-|μ| eigenvalues of the report.
pub fn check_pole_correspondence(
    report: &SpectrumReport,
    grid: &Grid,
    spec: &DampingSpec,
    samples: usize,
) -> Result<f64> {
    let mut order: Vec<usize> = (0..report.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| {
        report.eigenvalues[a]
            .norm()
            .total_cmp(&report.eigenvalues[b].norm())
    });
    let mut defect = 0.0f64;
    for &i in order.iter().take(samples.min(order.len())) {
        defect = defect.max(pole_defect(grid, spec, report.eigenvalues[i])?);
    }
    Ok(defect)
}

/// Empirical pole-free sleeve in the left half plane: reports the smallest
/// `K` clearing the region `{|Im μ| ≤ M·|Re μ|^{p−δ}, Re μ ≤ −K}` plus the
/// eigenvalues inside it for a configured `K`. Exploratory: the paper proves
/// existence of `K_{M,δ}` but gives no value.
pub fn check_lower_region(
    report: &SpectrumReport,
    p: f64,
    m_coef: f64,
    delta: f64,
    k_configured: f64,
) -> LowerRegionReport {
    let exponent = p - delta;
    let in_sleeve = |mu: &Complex64| -> bool {
        m_coef > 0.0 && mu.re < 0.0 && mu.im.abs() <= m_coef * mu.re.abs().powf(exponent)
    };
    let mut k_empirical = 0.0f64;
    let mut violations = Vec::new();
    for mu in &report.eigenvalues {
        if in_sleeve(mu) {
            k_empirical = k_empirical.max(-mu.re);
            if mu.re <= -k_configured {
                violations.push((mu.re, mu.im));
            }
        }
    }
    LowerRegionReport {
        k_empirical,
        violations,
    }
}

/// CSV body `re,im` for eigenvalue export.
pub fn eigenvalues_to_csv(report: &SpectrumReport) -> String {
    let mut out = String::from("re,im\n");
    let mut sorted = report.eigenvalues.clone();
    sorted.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    for mu in sorted {
        out.push_str(&format!("{},{}\n", mu.re, mu.im));
    }
    out
}

/// Report as JSON with the defects and tolerances recorded.
pub fn report_json(report: &SpectrumReport) -> serde_json::Value {
    serde_json::json!({
        "spectral_abscissa": report.spectral_abscissa,
        "kernel_dim": report.kernel_dim,
        "symmetry_defect": report.symmetry_defect,
        "correspondence_defect": report.correspondence_defect,
        "tol_zero": report.tol_zero,
        "norm_a": report.norm_a,
        "count": report.eigenvalues.len(),
    })
}
