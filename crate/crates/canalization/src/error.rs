use thiserror::Error;

/// Errors produced by this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count {n} outside supported range 0..={max}")]
    VarCount { n: usize, max: usize },

    #[error("variable index {index} outside 1..={n}")]
    VarIndex { index: usize, n: usize },

    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("constant functions are not canalizing")]
    ConstantFunction,

    #[error("{operation} supports at most {max} variables, got {n}")]
    LimitExceeded {
        operation: &'static str,
        n: usize,
        max: usize,
    },

    #[error("{operation} needs at least {min} variables, got {n}")]
    BelowMinimum {
        operation: &'static str,
        n: usize,
        min: usize,
    },

    #[error("function is not nested canalizing")]
    NotNestedCanalizing,

    #[error("invalid layer decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("invalid canalizing order info: {0}")]
    InvalidOrderInfo(String),

    #[error(
        "fast partition {computed:?} contradicts the engine's layer vector {expected:?}; \
         the supplied order info does not describe this function"
    )]
    PartitionMismatch {
        computed: Vec<usize>,
        expected: Vec<usize>,
    },

    #[error("invalid structure spec: {0}")]
    InvalidStructureSpec(String),

    #[error("syntax error at position {position}: {message}")]
    Parse { position: usize, message: String },
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
