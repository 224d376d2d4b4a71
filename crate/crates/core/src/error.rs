use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("position {pos} out of range 1..={len}")]
    PositionOutOfRange { pos: usize, len: usize },

    #[error("invalid binary word {0:?}: expected a string over {{0,1}}")]
    InvalidWord(String),

    #[error("invalid partition {0:?}")]
    InvalidPartition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("singular matrix of size {0}")]
    SingularMatrix(usize),

    #[error("{mu} does not cover {nu}")]
    NotCovering { mu: String, nu: String },

    #[error("denominator of the m_{partition} coefficient does not clear: {value}")]
    DenominatorNotCleared { partition: String, value: String },

    #[error("coefficient {0} is not of the form p/(1-q)^k")]
    NotQSeries(String),

    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),

    #[error("word length {len} exceeds the limit {max}; pass --unsafe-max to override")]
    TooLarge { len: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
