//! Crate-wide error type.

use thiserror::Error;

/// Alias used by every fallible operation in the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by design generation, scenario loading, simulation and the
/// model stack.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid experiment-design specification or row.
    #[error("invalid design: {0}")]
    InvalidDesign(String),

    /// Scenario file failed validation; the message names the field.
    #[error("invalid scenario: {0}")]
    InvalidScenario(String),

    /// Simulation input rejected (NaN or negative capacity, dimension
    /// mismatch).
    #[error("invalid simulation input: {0}")]
    InvalidSimulation(String),

    /// Bad input to a model-fitting routine.
    #[error("invalid training input: {0}")]
    InvalidTraining(String),

    /// Training diverged or produced non-finite values.
    #[error("training diverged: {0}")]
    Diverged(String),

    /// Metric undefined for the given data (e.g. R² on a constant target).
    #[error("metric undefined: {0}")]
    UndefinedMetric(String),

    /// Hyperparameter search failed; carries per-trial diagnostics.
    #[error("hyperparameter search failed: {0}")]
    SearchFailed(String),

    /// Optimizer input rejected (NaN prediction, empty front, bad bounds).
    #[error("invalid optimization input: {0}")]
    InvalidOptimization(String),

    /// Attribution request rejected (too many features for exact mode,
    /// empty background).
    #[error("invalid attribution input: {0}")]
    InvalidAttribution(String),

    /// Filesystem error with the offending path.
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    /// Malformed structured-text or CSV content.
    #[error("parse error in {path}: {message}")]
    Parse { path: String, message: String },
}

impl Error {
    pub(crate) fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn parse(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            message: message.into(),
        }
    }
}
