use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid numeric context: {0}")]
    Context(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("argument lies within the requested tolerance of a tangent pole")]
    NearPole,

    #[error("degenerate pair: {0}")]
    DegeneratePair(String),

    #[error("invalid input: {0}")]
    Validation(String),

    #[error("orbit quantum number {n_max} does not match subgroup order {expected} of pair ({n1}, {n2})")]
    Mismatch {
        n_max: u64,
        expected: u64,
        n1: u64,
        n2: u64,
    },

    #[error("line {line}: {message}")]
    Parse { line: u64, message: String },

    #[error("line {line}: duplicate constant name `{name}`")]
    DuplicateName { line: u64, name: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Short machine-readable category used in `error:<category>:` lines.
    pub fn category(&self) -> &'static str {
        match self {
            Error::Parse { .. } | Error::DuplicateName { .. } => "parse",
            Error::Io(_) => "io",
            _ => "validation",
        }
    }
}
