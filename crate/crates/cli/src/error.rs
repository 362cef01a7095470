use std::io;
use std::path::PathBuf;

use thiserror::Error;

use crate::config::ConfigError;

/// Errors surfaced by the experiment runner.
#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Config(#[from] ConfigError),

    #[error("{context}: {source}")]
    Simulation {
        context: String,
        #[source]
        source: dkg_core::Error,
    },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error("{0}")]
    Usage(String),

    #[error("imaginary part reached {value:e} at t = {t} for real initial data")]
    ImaginaryDrift { value: f64, t: f64 },
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    pub fn sim(context: impl Into<String>, source: dkg_core::Error) -> Self {
        CliError::Simulation {
            context: context.into(),
            source,
        }
    }

    /// 1 for usage and configuration problems, 2 for runtime failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::Usage(_) => 1,
            CliError::Simulation { .. } | CliError::Io { .. } | CliError::ImaginaryDrift { .. } => {
                2
            }
        }
    }
}
