use umbral::UmbralError;

use crate::expr::ParseError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] UmbralError),
    #[error("{failed} of {total} identities failed")]
    Verification { failed: usize, total: usize },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Verification { .. } => 1,
            CliError::Parse(_) | CliError::Usage(_) => 2,
            CliError::Domain(_) => 3,
        }
    }
}
