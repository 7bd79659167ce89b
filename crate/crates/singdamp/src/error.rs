//! Crate-wide error type.

use num_complex::Complex64;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid damping spec: {0}")]
    InvalidSpec(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("under-resolved grid: {0}")]
    UnderResolved(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("operator is numerically singular (sigma_min = {sigma_min:.3e}, norm = {norm:.3e})")]
    NumericallySingular {
        sigma_min: f64,
        norm: f64,
        /// Unit near-kernel vector attaining `sigma_min`.
        near_kernel: Vec<Complex64>,
    },

    #[error("too few samples: need {needed}, have {got}")]
    TooFewSamples { needed: usize, got: usize },

    #[error("nonpositive energies in fit window")]
    NonpositiveEnergy,

    #[error("linear algebra backend failure: {0}")]
    Linalg(String),

    #[error("root finding failed: {0}")]
    NonConvergence(String),

    #[error("tan pole too close to matching parameter (|cos(pi eta / 2)| = {0:.3e})")]
    TanPole(f64),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

impl From<ndarray_linalg::error::LinalgError> for Error {
    fn from(e: ndarray_linalg::error::LinalgError) -> Self {
        Error::Linalg(e.to_string())
    }
}
