//! Error types shared across the crate.

use thiserror::Error;

/// Everything that can go wrong in a simulation run.
#[derive(Debug, Error)]
pub enum RatchetError {
    /// Bad configuration input (unknown key, unparsable value, missing key).
    #[error("config: {0}")]
    Config(String),

    /// Parameter set violates a model invariant.
    #[error("validation: {0}")]
    Validation(String),

    /// A classical trajectory left the finite domain.
    #[error("integration blowup: trajectory {trajectory} at step {step}")]
    IntegrationBlowup { trajectory: usize, step: usize },

    /// Population reached the edge of the truncated momentum basis.
    #[error("truncation: boundary population {population:.3e} exceeds {limit:.3e} at period {period}")]
    Truncation {
        population: f64,
        limit: f64,
        period: usize,
    },

    /// First-order Kraus construction is invalid at this step size.
    #[error("step size: {0}")]
    StepSize(String),

    /// Density-matrix integrity audit failed during evolution.
    #[error("evolution integrity at period {period}: {detail}")]
    AuditFailure { period: usize, detail: String },

    /// Operation received a density matrix in the wrong representation.
    #[error("representation mismatch: expected {expected}, got {actual}")]
    RepresentationMismatch {
        expected: &'static str,
        actual: &'static str,
    },

    /// Operands live in different momentum bases.
    #[error("basis mismatch: {0}")]
    BasisMismatch(String),

    /// Eigen-iteration did not reach the requested residual.
    #[error("spectrum not converged after {iterations} iterations (worst residual {residual:.3e})")]
    NotConverged { iterations: usize, residual: f64 },

    #[error("linear algebra backend: {0}")]
    Linalg(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl RatchetError {
    /// Stable category tag used for CLI exit codes and error prefixes.
    pub fn category(&self) -> &'static str {
        match self {
            RatchetError::Config(_) => "config",
            RatchetError::Validation(_) => "validation",
            RatchetError::IntegrationBlowup { .. } => "blowup",
            RatchetError::Truncation { .. } => "truncation",
            RatchetError::StepSize(_) => "step-size",
            RatchetError::AuditFailure { .. } => "audit",
            RatchetError::RepresentationMismatch { .. } => "representation",
            RatchetError::BasisMismatch(_) => "basis",
            RatchetError::NotConverged { .. } => "convergence",
            RatchetError::Linalg(_) => "linalg",
            RatchetError::Io(_) => "io",
        }
    }

    /// Nonzero process exit code for this error category.
    pub fn exit_code(&self) -> i32 {
        match self {
            RatchetError::Config(_) => 2,
            RatchetError::Validation(_) => 3,
            RatchetError::Io(_) => 4,
            _ => 5,
        }
    }
}

pub type Result<T> = std::result::Result<T, RatchetError>;
