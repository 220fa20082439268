use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),

    #[error("numerical failure: {0}")]
    Numerical(sectsqrt::Error),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn config(msg: impl Into<String>) -> Self {
        CliError::Config(msg.into())
    }

    /// 1 for configuration and I/O problems, 2 for numerical failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Numerical(_) => 2,
            CliError::Config(_) | CliError::Io { .. } => 1,
        }
    }
}

impl From<sectsqrt::Error> for CliError {
    fn from(e: sectsqrt::Error) -> Self {
        use sectsqrt::Error as E;
        match e {
            E::InvalidArgument { .. } | E::Parse { .. } | E::Dimension { .. } => {
                CliError::Config(e.to_string())
            }
            other => CliError::Numerical(other),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
