use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("invalid config: {0}")]
    InvalidConfig(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("at {param} = {value}: {source}")]
    Internal {
        param: &'static str,
        value: f64,
        #[source]
        source: entsteer::Error,
    },
}

impl SweepError {
    /// Process exit code: 2 invalid config, 3 I/O failure, 4 internal
    /// consistency failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            SweepError::InvalidConfig(_) => 2,
            SweepError::Io { .. } => 3,
            SweepError::Internal { .. } => 4,
        }
    }
}
