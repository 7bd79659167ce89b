//! Numerical laboratory for the damped wave equation
//! `(∂²_t − Δ + W ∂_t) u = 0` with singular damping on the circle and,
//! via Fourier-mode reduction, on the 2-torus.
//!
//! The crate measures resolvent-norm scaling of the stationary operator
//! `P_λ = −Δ − iλW − λ²`, spectral structure of the generator
//! `𝒜 = [[0, Id], [Δ, −W]]`, semigroup energy decay, and builds the
//! sharp quasimode family from the half-line complex-Coulomb problem.
//!
//! Modules mirror the experiment pipeline:
//!
//! * [`damping`] — symbolic damping specs, exact quadrature, rate predictions
//! * [`discretize`] — grids, operator assembly, discrete norms
//! * [`resolvent`] — resolvent-norm sweeps and scaling fits
//! * [`spectrum`] — eigenstructure of the generator and pole-free regions
//! * [`evolution`] — Crank–Nicolson time stepping and decay fits
//! * [`quasimode`] — the half-line matching construction and residual sweeps

pub mod damping;
pub mod discretize;
pub mod error;
pub mod evolution;
pub mod fourier;
pub mod linalg;
pub mod quasimode;
pub mod resolvent;
pub mod spectrum;

pub use damping::{DampingPiece, DampingSpec, RatePrediction};
pub use discretize::{BoundaryCondition, ComplexOperator, Domain, Grid, NormKind, OperatorRole, State};
pub use error::{Error, Result};
