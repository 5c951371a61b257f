use core::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("layers were built over different color universes")]
    UniverseMismatch,
    #[error("edge {0}-{1} is already present")]
    DuplicateEdge(u32, u32),
    #[error("patterns over different layer counts ({0} and {1})")]
    SizeMismatch(usize, usize),
    #[error("position {j} is outside 1..={max}")]
    PositionOutOfRange { j: usize, max: usize },
    #[error("k = {k} exceeds the cap of {cap}")]
    CapacityExceeded { k: usize, cap: usize },
    #[error("pattern {pattern} is not a run pattern of sector {sector}")]
    NotInSector {
        pattern: alloc::string::String,
        sector: alloc::string::String,
    },
    #[error("invalid pattern: {0}")]
    InvalidPattern(&'static str),
    #[error("invalid sector: {0}")]
    InvalidSector(&'static str),
    #[error("invalid operator sequence: {0}")]
    InvalidSequence(&'static str),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("relation is not a partial order: {0}")]
    NotAPoset(&'static str),
    #[error("table is not a monoid: {0}")]
    NotAMonoid(&'static str),
    #[error("invalid exception map: {0}")]
    InvalidExceptionMap(&'static str),
    #[error("expected {expected} layers, got {found}")]
    LayerCountMismatch { expected: usize, found: usize },
}

/// A pattern-expression syntax error. `position` is a byte offset into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at position {position}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedEnd,
    EmptyInput,
    RepeatedIndex(usize),
    MissingIndex(usize),
    IndexOutOfRange { index: usize, k: usize },
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            Self::UnexpectedEnd => f.write_str("expected a layer index"),
            Self::EmptyInput => f.write_str("empty pattern"),
            Self::RepeatedIndex(i) => write!(f, "index {i} appears more than once"),
            Self::MissingIndex(i) => write!(f, "index {i} is missing"),
            Self::IndexOutOfRange { index, k } => write!(f, "index {index} is outside 1..={k}"),
        }
    }
}
