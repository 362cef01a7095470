use thiserror::Error;

/// Errors raised by the simulation core.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("unsupported dimension {0}: only 1 and 2 are supported")]
    UnsupportedDimension(usize),

    #[error("unsupported grid size {0}: points per axis must be a power of two and at least 8")]
    UnsupportedGridSize(usize),

    #[error("grid mismatch: {left} vs {right}")]
    GridMismatch { left: String, right: String },

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("non-finite field values at step {step} (t = {time}); reduce the time step")]
    BlowUp { step: usize, time: f64 },

    #[error("decay fit needs at least {needed} usable samples, got {got}")]
    InsufficientSamples { needed: usize, got: usize },
}

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
