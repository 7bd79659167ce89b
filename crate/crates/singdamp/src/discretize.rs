//! Grids, operator assembly, and discrete norms.
//!
//! Second-order centered finite differences with cell-averaged damping;
//! Fourier is used only for `H^s` norms and diagnostics. The stationary
//! operator is assembled as `P = L − iλ·diag(W̄) − μ²·I` where `L` is the
//! stencil discretization of `−∂²_x`.

use std::f64::consts::PI;

use ndarray::prelude::*;
use num_complex::Complex64;

use crate::damping::{DampingSpec, TAU};
use crate::error::{Error, Result};
use crate::fourier;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundaryCondition {
    Dirichlet,
    Neumann,
    /// `u'(endpoint) = −κ·u(endpoint)` with outward orientation at the
    /// right end (the decaying far-field closure used by the half-line
    /// solver).
    Robin(Complex64),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Domain {
    /// The circle `[−π, π)` with length 2π.
    Periodic,
    Interval {
        a: f64,
        b: f64,
        left: BoundaryCondition,
        right: BoundaryCondition,
    },
}

/// Uniform 1D mesh.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    pub domain: Domain,
    pub n: usize,
    pub dx: f64,
    pub nodes: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum OperatorRole {
    Laplacian,
    StationaryP { lambda: Complex64, mu_sq: Complex64 },
    Generator,
}

/// Dense complex matrix tagged with its grid and semantic role.
#[derive(Debug, Clone)]
pub struct ComplexOperator {
    pub matrix: Array2<Complex64>,
    pub grid: Grid,
    pub role: OperatorRole,
}

/// Pair `(u, ∂_t u)` of complex grid functions.
#[derive(Debug, Clone)]
pub struct State {
    pub u: Array1<Complex64>,
    pub v: Array1<Complex64>,
}

/// Norm selector for [`discrete_norm`].
#[derive(Debug, Clone, Copy)]
pub enum NormKind<'a> {
    L2,
    H1,
    Hs(f64),
    Dnorm(&'a DampingSpec),
    Energy,
}

pub fn build_grid(domain: Domain, n: usize) -> Result<Grid> {
    if n < 16 {
        return Err(Error::InvalidGrid(format!("need n >= 16, got {n}")));
    }
    match domain {
        Domain::Periodic => {
            let dx = TAU / n as f64;
            let nodes = (0..n).map(|i| -PI + i as f64 * dx).collect();
            Ok(Grid {
                domain,
                n,
                dx,
                nodes,
            })
        }
        Domain::Interval { a, b, .. } => {
            if !(a < b) {
                return Err(Error::InvalidGrid(format!(
                    "interval needs a < b, got [{a}, {b}]"
                )));
            }
            let dx = (b - a) / (n - 1) as f64;
            let nodes = (0..n).map(|i| a + i as f64 * dx).collect();
            Ok(Grid {
                domain,
                n,
                dx,
                nodes,
            })
        }
    }
}

impl Grid {
    pub fn is_periodic(&self) -> bool {
        matches!(self.domain, Domain::Periodic)
    }

    /// Cell-averaged damping at every node. Periodic grids wrap the seam
    /// cell; interval grids use half-cells at the two ends.
    pub fn damping_averages(&self, spec: &DampingSpec) -> Result<Vec<f64>> {
        match self.domain {
            Domain::Periodic => spec.cell_averages(self.n),
            Domain::Interval { a, b, .. } => (0..self.n)
                .map(|i| {
                    let x = self.nodes[i];
                    let lo = (x - 0.5 * self.dx).max(a);
                    let hi = (x + 0.5 * self.dx).min(b);
                    spec.cell_average(lo, hi)
                })
                .collect(),
        }
    }

    /// `L u` for the stencil `L ≈ −∂²_x`, matrix-free.
    pub fn apply_neg_laplacian(&self, u: &Array1<Complex64>) -> Array1<Complex64> {
        let n = self.n;
        let s = 1.0 / (self.dx * self.dx);
        let mut out = Array1::zeros(n);
        match &self.domain {
            Domain::Periodic => {
                for i in 0..n {
                    let l = u[(i + n - 1) % n];
                    let r = u[(i + 1) % n];
                    out[i] = (2.0 * u[i] - l - r) * s;
                }
            }
            Domain::Interval { left, right, .. } => {
                for i in 1..n - 1 {
                    out[i] = (2.0 * u[i] - u[i - 1] - u[i + 1]) * s;
                }
                out[0] = match left {
                    BoundaryCondition::Dirichlet => u[0] * (2.0 * s),
                    BoundaryCondition::Neumann => (u[0] - u[1]) * (2.0 * s),
                    BoundaryCondition::Robin(kappa) => {
                        (u[0] - u[1]) * (2.0 * s) + u[0] * kappa * (2.0 / self.dx)
                    }
                };
                out[n - 1] = match right {
                    BoundaryCondition::Dirichlet => u[n - 1] * (2.0 * s),
                    BoundaryCondition::Neumann => (u[n - 1] - u[n - 2]) * (2.0 * s),
                    BoundaryCondition::Robin(kappa) => {
                        (u[n - 1] - u[n - 2]) * (2.0 * s) + u[n - 1] * kappa * (2.0 / self.dx)
                    }
                };
            }
        }
        out
    }

    /// `P u = (L − iλ W̄ − μ²) u`, matrix-free.
    pub fn apply_p(
        &self,
        w_bar: &[f64],
        lambda: Complex64,
        mu_sq: Complex64,
        u: &Array1<Complex64>,
    ) -> Array1<Complex64> {
        let mut out = self.apply_neg_laplacian(u);
        let i_lambda = Complex64::new(0.0, 1.0) * lambda;
        for (j, o) in out.iter_mut().enumerate() {
            *o -= (i_lambda * w_bar[j] + mu_sq) * u[j];
        }
        out
    }

    /// Eigenvalues of the periodic stencil `L`: `(2/dx²)(1 − cos(k dx))`
    /// in FFT mode order.
    pub fn stencil_eigenvalues(&self) -> Vec<f64> {
        debug_assert!(self.is_periodic());
        let s = 2.0 / (self.dx * self.dx);
        fourier::mode_numbers(self.n)
            .iter()
            .map(|&k| s * (1.0 - (k as f64 * self.dx).cos()))
            .collect()
    }
}

/// Stencil discretization of `−∂²_x` (symmetric positive semidefinite on the
/// circle; boundary rows per the grid's conditions on an interval).
pub fn assemble_laplacian(grid: &Grid) -> ComplexOperator {
    let n = grid.n;
    let s = Complex64::new(1.0 / (grid.dx * grid.dx), 0.0);
    let mut m = Array2::zeros((n, n));
    match &grid.domain {
        Domain::Periodic => {
            for i in 0..n {
                m[[i, i]] = 2.0 * s;
                m[[i, (i + 1) % n]] = -s;
                m[[i, (i + n - 1) % n]] = -s;
            }
        }
        Domain::Interval { left, right, .. } => {
            for i in 1..n - 1 {
                m[[i, i]] = 2.0 * s;
                m[[i, i + 1]] = -s;
                m[[i, i - 1]] = -s;
            }
            match left {
                BoundaryCondition::Dirichlet => m[[0, 0]] = 2.0 * s,
                BoundaryCondition::Neumann => {
                    m[[0, 0]] = 2.0 * s;
                    m[[0, 1]] = -2.0 * s;
                }
                BoundaryCondition::Robin(kappa) => {
                    m[[0, 0]] = 2.0 * s + kappa * (2.0 / grid.dx);
                    m[[0, 1]] = -2.0 * s;
                }
            }
            match right {
                BoundaryCondition::Dirichlet => m[[n - 1, n - 1]] = 2.0 * s,
                BoundaryCondition::Neumann => {
                    m[[n - 1, n - 1]] = 2.0 * s;
                    m[[n - 1, n - 2]] = -2.0 * s;
                }
                BoundaryCondition::Robin(kappa) => {
                    m[[n - 1, n - 1]] = 2.0 * s + kappa * (2.0 / grid.dx);
                    m[[n - 1, n - 2]] = -2.0 * s;
                }
            }
        }
    }
    ComplexOperator {
        matrix: m,
        grid: grid.clone(),
        role: OperatorRole::Laplacian,
    }
}

/// Stationary operator `P = L − iλ·diag(W̄) − μ²·I`.
pub fn assemble_p(
    grid: &Grid,
    spec: &DampingSpec,
    lambda: Complex64,
    mu_sq: Complex64,
) -> Result<ComplexOperator> {
    let w_bar = grid.damping_averages(spec)?;
    let mut op = assemble_laplacian(grid);
    let i_lambda = Complex64::new(0.0, 1.0) * lambda;
    for j in 0..grid.n {
        op.matrix[[j, j]] -= i_lambda * w_bar[j] + mu_sq;
    }
    op.role = OperatorRole::StationaryP { lambda, mu_sq };
    Ok(op)
}

/// Generator `𝒜 = [[0, I], [Δ, −diag(W̄)]]` as a dense 2n×2n block matrix.
pub fn assemble_a(grid: &Grid, spec: &DampingSpec) -> Result<ComplexOperator> {
    if !grid.is_periodic() {
        return Err(Error::InvalidGrid("generator assembly needs a periodic grid".into()));
    }
    let n = grid.n;
    let w_bar = grid.damping_averages(spec)?;
    let lap = assemble_laplacian(grid);
    let mut m = Array2::zeros((2 * n, 2 * n));
    for i in 0..n {
        m[[i, n + i]] = Complex64::new(1.0, 0.0);
        for j in 0..n {
            m[[n + i, j]] = -lap.matrix[[i, j]]; // Δ = −L
        }
        m[[n + i, n + i]] = Complex64::new(-w_bar[i], 0.0);
    }
    Ok(ComplexOperator {
        matrix: m,
        grid: grid.clone(),
        role: OperatorRole::Generator,
    })
}

fn l2(grid: &Grid, u: &Array1<Complex64>) -> f64 {
    // uniform weights; trapezoid halves the end weights on an interval
    let mut sum = 0.0;
    let n = grid.n;
    for (i, z) in u.iter().enumerate() {
        let w = if grid.is_periodic() || (i > 0 && i < n - 1) {
            1.0
        } else {
            0.5
        };
        sum += w * z.norm_sqr();
    }
    (sum * grid.dx).sqrt()
}

fn centered_gradient(grid: &Grid, u: &Array1<Complex64>) -> Array1<Complex64> {
    let n = grid.n;
    let inv2 = 0.5 / grid.dx;
    let mut g = Array1::zeros(n);
    if grid.is_periodic() {
        for i in 0..n {
            g[i] = (u[(i + 1) % n] - u[(i + n - 1) % n]) * inv2;
        }
    } else {
        g[0] = (u[1] - u[0]) / grid.dx;
        g[n - 1] = (u[n - 1] - u[n - 2]) / grid.dx;
        for i in 1..n - 1 {
            g[i] = (u[i + 1] - u[i - 1]) * inv2;
        }
    }
    g
}

/// The gradient quadratic form `Σ |u_{i+1} − u_i|² / dx² · dx` compatible
/// with the stencil `L` (so that `⟨L u, u⟩ dx` equals it exactly). Energy
/// and the evolution-module `Ḣ`/`H` norms use this form; the `H1` norm kind
/// keeps centered differences.
pub fn stencil_gradient_sq(grid: &Grid, u: &Array1<Complex64>) -> f64 {
    let n = grid.n;
    let mut sum = 0.0;
    let last = if grid.is_periodic() { n } else { n - 1 };
    for i in 0..last {
        let d = u[(i + 1) % n] - u[i];
        sum += d.norm_sqr();
    }
    sum / grid.dx
}

/// Energy `½(‖∇u‖² + ‖v‖²)` with the stencil gradient form.
pub fn energy(grid: &Grid, state: &State) -> f64 {
    0.5 * (stencil_gradient_sq(grid, &state.u) + l2(grid, &state.v).powi(2))
}

/// Discrete norms of a grid function or state.
pub fn discrete_norm(grid: &Grid, state: &State, kind: NormKind) -> Result<f64> {
    match kind {
        NormKind::L2 => Ok(l2(grid, &state.u)),
        NormKind::H1 => {
            let g = centered_gradient(grid, &state.u);
            Ok((l2(grid, &state.u).powi(2) + l2(grid, &g).powi(2)).sqrt())
        }
        NormKind::Hs(s) => {
            if !grid.is_periodic() {
                return Err(Error::InvalidGrid(
                    "H^s norms need a periodic grid (Fourier multiplier)".into(),
                ));
            }
            Ok(fourier::hs_norm(&state.u, s))
        }
        NormKind::Dnorm(spec) => {
            let w_bar = grid.damping_averages(spec)?;
            let gu = centered_gradient(grid, &state.u);
            let gv = centered_gradient(grid, &state.v);
            let mut r = grid.apply_neg_laplacian(&state.u);
            for (j, rj) in r.iter_mut().enumerate() {
                *rj += w_bar[j] * state.v[j];
            }
            let h1u = l2(grid, &state.u).powi(2) + l2(grid, &gu).powi(2);
            let h1v = l2(grid, &state.v).powi(2) + l2(grid, &gv).powi(2);
            Ok((h1u + h1v + l2(grid, &r).powi(2)).sqrt())
        }
        NormKind::Energy => Ok(energy(grid, state)),
    }
}

/// Convenience for norms of a single grid function.
pub fn function_norm(grid: &Grid, u: &Array1<Complex64>, kind: NormKind) -> Result<f64> {
    let state = State {
        u: u.clone(),
        v: Array1::zeros(u.len()),
    };
    discrete_norm(grid, &state, kind)
}

impl State {
    pub fn zeros(n: usize) -> Self {
        State {
            u: Array1::zeros(n),
            v: Array1::zeros(n),
        }
    }
}

/// Write a grid function as CSV with columns `x,re,im`.
pub fn function_to_csv(grid: &Grid, u: &Array1<Complex64>) -> String {
    let mut out = String::from("x,re,im\n");
    for (x, z) in grid.nodes.iter().zip(u.iter()) {
        out.push_str(&format!("{},{},{}\n", x, z.re, z.im));
    }
    out
}

/// Dense CSV dump of an operator (debug only).
pub fn operator_to_csv(op: &ComplexOperator) -> String {
    let (r, c) = op.matrix.dim();
    let mut out = String::new();
    for i in 0..r {
        let row: Vec<String> = (0..c)
            .map(|j| {
                let z = op.matrix[[i, j]];
                format!("{}{}{}i", z.re, if z.im >= 0.0 { "+" } else { "" }, z.im)
            })
            .collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}
