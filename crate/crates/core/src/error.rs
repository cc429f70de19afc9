use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("input has odd length {0}; expected an even number of bits")]
    OddLength(usize),

    #[error("rows have unequal lengths (row {row} has {found}, expected {expected})")]
    RaggedRows {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("a code needs at least one row")]
    NoRows,

    #[error("a code needs positive length")]
    ZeroLength,

    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("duplicate column index {0}")]
    DuplicateIndex(usize),

    #[error("enumeration of 2^{dim2} codewords exceeds the guard of 2^{limit}")]
    EnumerationGuard { dim2: usize, limit: usize },

    #[error("rank deficiency: {0}")]
    RankDeficient(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("invariant subcode check failed: {0}")]
    NotInvariant(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unknown name {0:?}")]
    UnknownName(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}
