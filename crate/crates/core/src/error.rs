use thiserror::Error;

/// Errors raised by the counting library and the ledger.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("moebius is undefined at 0")]
    MoebiusZero,
    #[error("partial fractions need at least one pole (m_plus = m_minus = 0)")]
    EmptyDecomposition,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("level {requested} is outside the table (rows 1..={available})")]
    MissingRow { requested: usize, available: usize },
    #[error("bracket word uses index {index} outside alphabet 1..={alphabet}")]
    AlphabetMismatch { index: usize, alphabet: usize },
    #[error("invalid scenario: {0}")]
    InvalidScenario(String),
    #[error("outside the theorem's hypotheses: {0}")]
    OutsideHypotheses(String),
}

pub type Result<T> = std::result::Result<T, Error>;
