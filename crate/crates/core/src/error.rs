use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("singular matrix (rank {rank} < {n})")]
    SingularMatrix { rank: usize, n: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("bad scalar `{text}`: {msg}")]
    ScalarSyntax { text: String, msg: String },

    #[error("parse error at {at}: {msg}")]
    Parse { at: String, msg: String },

    #[error("index out of range in `{field}`: {index} not in 1..={dim}")]
    IndexOutOfRange { field: String, index: usize, dim: usize },

    #[error("unknown catalog id `{0}`")]
    UnknownId(String),

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("centroid obstruction in {m} parameters is not identically zero; exact solving needs m <= 2")]
    ObstructionTooLarge { m: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
