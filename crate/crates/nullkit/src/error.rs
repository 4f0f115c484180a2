use thiserror::Error;

pub type Result<T, E = CliError> = std::result::Result<T, E>;

/// Failures of the command-line layer. All of them are input errors
/// (exit code 2); failed assertions are reported separately.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("syntax error at {line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("inconsistent field tower: {0}")]
    InconsistentTower(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] nullkit_core::Error),
}
