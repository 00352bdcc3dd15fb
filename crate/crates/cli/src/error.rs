use std::path::PathBuf;

use circuit_core::bounds::BoundError;
use circuit_core::CodeError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("header declares {expected} transitions but the body has {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("transition element {element} exceeds dimension {dimension}")]
    ElementOutOfRange { element: u64, dimension: usize },
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error("no corpus entry named {0:?}")]
    NoEntry(String),
    #[error("table range config: {0}")]
    Config(String),
}

impl CliError {
    /// Process exit status: 1 for failed verification, 3 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Code(
                CodeError::InputNotVerified { .. } | CodeError::PostVerificationFailed { .. },
            ) => 1,
            _ => 3,
        }
    }
}
