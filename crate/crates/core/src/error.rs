use thiserror::Error;

/// Errors raised by the construction, verification and search routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("not a permutation of [{len}]: {detail}")]
    NotAPermutation { len: usize, detail: String },

    #[error("sequence lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("niceness is undefined for a = {a}, b = {b} (needs b > a and a not dividing b)")]
    NicenessUndefined { a: usize, b: usize },

    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("labeling has {found} labels but the graph has order {expected}")]
    OrderMismatch { expected: usize, found: usize },

    #[error("difference set {0:?} is not of the form {{1, ..., t}} with 1 <= t <= (n-1)/2")]
    NonContiguousDiffs(Vec<usize>),

    #[error("search budget of {budget} nodes exhausted")]
    BudgetExceeded { budget: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
