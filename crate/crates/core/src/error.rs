use thiserror::Error;

/// Errors raised by the numerical routines.
///
/// Mathematical failures of an inequality check are never errors; they are
/// reported through [`crate::report::CheckReport`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{op}: domain error: {detail}")]
    Domain { op: &'static str, detail: String },

    #[error("{op}: no convergence after {iterations} iterations (achieved {achieved:e})")]
    NoConvergence {
        op: &'static str,
        iterations: usize,
        achieved: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(op: &'static str, detail: impl Into<String>) -> Error {
    Error::Domain {
        op,
        detail: detail.into(),
    }
}
