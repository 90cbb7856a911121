use thiserror::Error;

/// Errors raised by the counting, sequence, geometry and rendering layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument must be at least 1, got 0")]
    ZeroArgument,

    #[error("ones count {k} exceeds length {n}")]
    OnesOutOfRange { n: u32, k: u32 },

    #[error("a hexaflexagon needs at least 3 faces, got {0}")]
    TooFewFaces(usize),

    #[error("self-conjugate count is only defined for even lengths, got {0}")]
    OddLength(u32),

    #[error("division by {divisor} in {context} is not exact")]
    InexactDivision { context: &'static str, divisor: u64 },

    #[error("sign entries must be +1 or -1, got {0}")]
    BadSignValue(i64),

    #[error("cannot parse sign sequence {0:?}: expected '+'/'-' characters or comma-separated 1/-1")]
    ParseSigns(String),

    #[error("position {position} is outside 1..={len}")]
    PositionOutOfRange { position: usize, len: usize },

    #[error("entries at cyclic positions {position} and {next} differ, nothing to contract")]
    UnequalPair { position: usize, next: usize },

    #[error("the trihexaflexagon cannot be reduced further")]
    CannotReduceBase,

    #[error("{signs} is not a hexaflexagon sign sequence: {reason}")]
    InvalidSequence { signs: String, reason: String },

    #[error("length {n} exceeds the configured limit of {limit}")]
    LimitExceeded { n: usize, limit: usize },

    #[error("{what}: expected {expected} entries, got {actual}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        actual: usize,
    },

    #[error("label {label} is not in 1..={n} or repeats")]
    BadLabel { label: u32, n: usize },

    #[error("count table is empty")]
    EmptyTable,

    #[error("thread pool: {0}")]
    ThreadPool(String),
}

pub type Result<T> = std::result::Result<T, Error>;
