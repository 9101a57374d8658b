use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("division by the zero series")]
    DivisionByZero,

    #[error("non-polynomial quotient: numerator valuation {numerator} < denominator valuation {denominator}")]
    NonPolynomialQuotient { numerator: usize, denominator: usize },

    #[error("exp requires a zero constant term, got {0}")]
    ExpConstantTerm(String),

    #[error("log requires constant term 1, got {0}")]
    LogConstantTerm(String),

    #[error("coefficient index {index} exceeds truncation order {order}")]
    CoefficientOutOfRange { index: usize, order: usize },

    #[error("cannot truncate a series of order {have} to order {want}")]
    InsufficientOrder { have: usize, want: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("degree must be at least 1, got {0}")]
    InvalidDegree(usize),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("capacity exceeded: {what} (bound {bound})")]
    Capacity { what: String, bound: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("master relation inconsistent: inner ratio has constant term {0}, expected 1")]
    InconsistentMaster(String),

    #[error("the vanishing relation among single Hurwitz numbers needs d >= 2, got d = {0}")]
    HetaDegreeRange(usize),

    #[error("parse error: {0}")]
    Parse(String),
}
