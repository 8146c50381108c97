use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid quantum state: {0}")]
    InvalidState(String),

    #[error("gamma pole in factor {factor}: argument {argument} is not positive")]
    GammaPole { factor: &'static str, argument: f64 },

    #[error("integral diverges at {endpoint}: {reason}")]
    Divergent { endpoint: &'static str, reason: String },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("unknown figure id `{0}` (expected one of n, p1, p2, z)")]
    UnknownFigure(String),

    #[error("empty sweep grid: {0}")]
    EmptyGrid(String),

    #[error("spec file line {line}: {message}")]
    SpecParse { line: usize, message: String },

    #[error("malformed record: {0}")]
    Record(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Record(e.to_string())
    }
}
