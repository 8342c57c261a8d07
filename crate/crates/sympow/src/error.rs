//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient ring mismatch: [{0}] vs [{1}]")]
    RingMismatch(String, String),

    #[error("exponent overflow in monomial arithmetic")]
    ExponentOverflow,

    #[error("too many variables: {0} (at most {max} supported)", max = crate::ring::MAX_VARS)]
    TooManyVariables(usize),

    #[error("variable names must be nonempty and distinct")]
    BadVariableNames,

    #[error("operation is undefined for the zero ideal")]
    ZeroIdeal,

    #[error("operation is undefined for the unit ideal")]
    UnitIdeal,

    #[error("{arg} must be positive (got {got})")]
    NonPositive { arg: &'static str, got: i64 },

    #[error("strategy `{strategy}` requires {requirement}")]
    StrategyPrecondition {
        strategy: &'static str,
        requirement: &'static str,
    },

    #[error("no containment found up to the big-height bound a = {cap}; symbolic powers of non-squarefree ideals carry no containment guarantee")]
    ContainmentCapExceeded { cap: u32 },

    #[error("ambient dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("inequality index {index} out of range (system has {len})")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("vertex/ray description is empty; conversion needs at least one vertex")]
    EmptyVertexSet,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code the CLI maps this error to: 2 for parse/usage
    /// errors, 3 for domain errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Usage(_) => 2,
            _ => 3,
        }
    }
}
