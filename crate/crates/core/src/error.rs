use thiserror::Error;

/// Errors raised by ring, field and set operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("operands belong to different coefficient fields")]
    BackendMismatch,

    #[error("`{op}` is not computable on this backend: {reason}")]
    NotComputable { op: &'static str, reason: String },

    #[error("`{0}` requires a finite coefficient field")]
    InfiniteBackend(&'static str),

    #[error("`{0}` received a zero input")]
    ZeroInput(&'static str),

    #[error("`{0}` received a unit where a non-unit is required")]
    UnitInput(&'static str),

    #[error("`{op}` requires an atom, got {poly}")]
    NotAnAtom { op: &'static str, poly: String },

    #[error("enumeration of degree {degree} exceeds the configured limit ({limit})")]
    DegreeCap { degree: usize, limit: usize },

    #[error("search space of {size} elements exceeds the configured limit ({limit})")]
    SearchCap { size: u128, limit: u128 },

    #[error("not fully reducible: rank of V(f) is {rank} but length is {length}")]
    NotFullyReducible { rank: usize, length: usize },

    #[error("subset is not full in the ambient set")]
    NotFull,

    #[error("first set is not a subset of the second")]
    NotSubset,

    #[error("factorization does not reconstruct its element")]
    InvalidFactorization,

    #[error("invalid field descriptor: {0}")]
    InvalidField(String),

    #[error("parse error at position {position} near `{token}`: {message}")]
    Parse {
        message: String,
        position: usize,
        token: String,
    },

    #[error("not an element of Z + xQ[[x]]: {0}")]
    NotInSeriesRing(String),

    #[error("order of the series exceeds the truncation order {0}")]
    OrderExceedsTruncation(usize),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
