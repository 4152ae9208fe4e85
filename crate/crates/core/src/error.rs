use thiserror::Error;

use crate::ordering::Violation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("length mismatch: expected {expected} entries, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unsupported form: {0}")]
    Unsupported(String),

    #[error("instance is infeasible: k({vertex}) = {quota} exceeds u(N[{vertex}]) = {reach}")]
    Infeasible {
        vertex: usize,
        quota: i128,
        reach: i128,
    },

    #[error("labelled instance admits no dominating function")]
    InfeasibleLabelled,

    #[error(
        "instance not normalized at vertex {0}: k(v) must not exceed u(N[v]); normalize first"
    )]
    NotNormalized(usize),

    #[error("wrong sense: {0}")]
    WrongSense(String),

    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),

    #[error("order rejected: {0}")]
    OrderRejected(Violation),

    #[error("no strong elimination ordering found")]
    NoOrder,

    #[error("search space of {space} assignments exceeds the budget of {budget}")]
    BudgetExceeded { space: u128, budget: u128 },

    #[error("value {0} does not fit the weight type")]
    Overflow(i128),
}

impl Error {
    /// Short machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::VertexOutOfRange { .. } => "vertex-out-of-range",
            Error::SelfLoop(_) => "self-loop",
            Error::DuplicateEdge(..) => "duplicate-edge",
            Error::Parse { .. } => "parse",
            Error::SizeMismatch { .. } => "size-mismatch",
            Error::InvalidInput(_) => "invalid-input",
            Error::Unsupported(_) => "unsupported",
            Error::Infeasible { .. } | Error::InfeasibleLabelled => "infeasible",
            Error::NotNormalized(_) => "not-normalized",
            Error::WrongSense(_) => "wrong-sense",
            Error::NotAPermutation(_) => "not-a-permutation",
            Error::OrderRejected(_) => "order-rejected",
            Error::NoOrder => "no-order",
            Error::BudgetExceeded { .. } => "budget-exceeded",
            Error::Overflow(_) => "overflow",
        }
    }

    /// True for malformed input (as opposed to a well-formed instance the
    /// requested operation cannot handle).
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::VertexOutOfRange { .. }
                | Error::SelfLoop(_)
                | Error::DuplicateEdge(..)
                | Error::Parse { .. }
                | Error::SizeMismatch { .. }
                | Error::InvalidInput(_)
                | Error::NotAPermutation(_)
                | Error::Overflow(_)
        )
    }
}
