use std::io;
use std::path::PathBuf;

use symbreak_core::Error as CoreError;

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_UNDEFINED: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_DATA: u8 = 65;
pub const EXIT_NO_INPUT: u8 = 66;
pub const EXIT_SOFTWARE: u8 = 70;
pub const EXIT_IO: u8 = 74;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(String),
    #[error("cannot read {}: {source}", path.display())]
    Read { path: PathBuf, source: io::Error },
    #[error("manifest {}: {message}", path.display())]
    Manifest { path: PathBuf, message: String },
    #[error("cannot write output: {0}")]
    Write(#[from] io::Error),
    /// Computed values disagree with expectations or a check failed.
    #[error("{0}")]
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) => match e {
                CoreError::UndefinedDeterminingIndex(_) => EXIT_UNDEFINED,
                CoreError::BudgetExhausted { .. } => EXIT_BUDGET,
                CoreError::InvalidParameter(_) => EXIT_USAGE,
                CoreError::Invariant(_) => EXIT_SOFTWARE,
                _ => EXIT_DATA,
            },
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Parse(_) | CliError::Manifest { .. } => EXIT_DATA,
            CliError::Read { .. } => EXIT_NO_INPUT,
            CliError::Write(_) => EXIT_IO,
            CliError::Mismatch(_) => EXIT_MISMATCH,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn core_errors_map_to_the_contract() {
        let code = |e: CoreError| CliError::from(e).exit_code();
        assert_eq!(code(CoreError::UndefinedDeterminingIndex("K_2 component {0, 1}".into())), 2);
        assert_eq!(code(CoreError::BudgetExhausted { limit: 5 }), 3);
        assert_eq!(code(CoreError::Graph6 { offset: 0, reason: "x".into() }), 65);
        assert_eq!(code(CoreError::InvalidParameter("n".into())), 64);
        assert_eq!(code(CoreError::Disconnected), 65);
        assert_eq!(code(CoreError::Invariant("bug".into())), 70);
    }
}
