use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid grid size {n_points}: {reason}")]
    GridSize { n_points: usize, reason: &'static str },

    #[error("length mismatch: expected {expected} values, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("grid mismatch: {left} vs {right} points")]
    GridMismatch { left: usize, right: usize },

    #[error("grid of {n_points} points exceeds the oracle limit of {limit}")]
    GridTooLarge { n_points: usize, limit: usize },

    #[error(
        "starter iteration did not converge after {iterations} iterations (last residual {residual:e}); reduce tau"
    )]
    StarterDiverged { iterations: usize, residual: f64 },

    #[error("non-finite coefficient encountered at t = {t}")]
    NonFinite { t: f64 },

    #[error("reference integrator unstable at t = {t}: norm grew from {initial:e} to {current:e}")]
    Unstable { t: f64, initial: f64, current: f64 },

    #[error("t_end = {t_end} is not an integer multiple of tau = {tau}")]
    StepCount { t_end: f64, tau: f64 },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("slope fit needs at least 3 points, got {0}")]
    TooFewPoints(usize),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{}: {source}", path.display())]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
}

impl Error {
    /// Stable snake_case name of the variant, for machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::GridSize { .. } => "grid_size",
            Error::LengthMismatch { .. } => "length_mismatch",
            Error::GridMismatch { .. } => "grid_mismatch",
            Error::GridTooLarge { .. } => "grid_too_large",
            Error::StarterDiverged { .. } => "starter_diverged",
            Error::NonFinite { .. } => "non_finite",
            Error::Unstable { .. } => "unstable",
            Error::StepCount { .. } => "step_count",
            Error::Parameter(_) => "parameter",
            Error::TooFewPoints(_) => "too_few_points",
            Error::Io { .. } => "io",
            Error::Json { .. } => "json",
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }
}
