use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid set partition: {0}")]
    InvalidSetPartition(String),

    #[error("invalid lambda set: {0}")]
    InvalidLambdaSet(String),

    #[error("n = {n} is smaller than the base size n0 = {n0}")]
    BelowBaseSize { n: usize, n0: usize },

    #[error("size mismatch: |lambda| + |mu| = {left} but |nu| = {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("expected a homogeneous function, found degrees {0:?}")]
    NotHomogeneous(Vec<usize>),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("phi precondition violated: n = {n} must exceed lambda_1 + alpha_1 = {bound}")]
    PhiPrecondition { n: usize, bound: usize },

    #[error("tableau is not a valid Littlewood-Richardson tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("n = {n} exceeds the oracle limit {limit}")]
    OracleLimit { n: usize, limit: usize },

    #[error("permutation does not stabilize the set partition")]
    NotStabilizing,

    #[error("{0} variables cannot faithfully represent a function of degree {1}")]
    TooFewVariables(usize, usize),

    #[error("non-integral coefficient {0} in a character")]
    NonIntegral(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
