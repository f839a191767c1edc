use thiserror::Error;

use crate::word::Word;

/// Reasons a candidate set fails to be a maximum independent set.
///
/// Each variant is a distinct, machine-readable cause so callers can branch
/// on it; [`ValidationError::code`] gives the stable string tag used on the
/// command line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("word {word} has length {found}, expected {expected}")]
    WrongLength {
        word: Word,
        expected: usize,
        found: usize,
    },
    #[error("digit {digit} in word {word} is out of range for alphabet size {d}")]
    DigitOutOfRange { word: Word, digit: u8, d: usize },
    #[error("words {from} and {to} are adjacent")]
    Dependent { from: Word, to: Word },
    #[error("expected {expected} words, found {found}")]
    WrongCardinality { expected: usize, found: usize },
    #[error("set has {found} loops, expected one or two")]
    LoopCount { found: usize },
    #[error("no loop x with m_x = 0")]
    MissingDistinguishedLoop,
    #[error("loop-less set contains the loop {word}")]
    LoopInLoopless { word: Word },
    #[error("cycle of {representative} contributes {found} words, expected {expected}")]
    CycleContribution {
        representative: Word,
        expected: usize,
        found: usize,
    },
}

impl ValidationError {
    pub fn code(&self) -> &'static str {
        match self {
            ValidationError::WrongLength { .. } => "wrong-length",
            ValidationError::DigitOutOfRange { .. } => "digit-out-of-range",
            ValidationError::Dependent { .. } => "dependent",
            ValidationError::WrongCardinality { .. } => "wrong-cardinality",
            ValidationError::LoopCount { .. } => "loop-count",
            ValidationError::MissingDistinguishedLoop => "missing-distinguished-loop",
            ValidationError::LoopInLoopless { .. } => "loop-in-loopless",
            ValidationError::CycleContribution { .. } => "cycle-contribution",
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid maximum independent set: {0}")]
    Validation(#[from] ValidationError),
    #[error("budget exceeded: {what} needs {needed}, limit is {limit}")]
    Budget {
        what: &'static str,
        needed: u128,
        limit: u128,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("malformed document: {0}")]
    Malformed(String),
    /// A result contradicting a structural fact the library relies on.
    /// Always a bug in this crate.
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::Validation(v) => v.code(),
            Error::Budget { .. } => "budget-exceeded",
            Error::InvalidArgument(_) => "invalid-argument",
            Error::Malformed(_) => "malformed-document",
            Error::Internal(_) => "internal",
        }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
