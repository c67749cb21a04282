use thiserror::Error;

/// Errors raised by series, group and Hopf-algebra operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("truncation degrees differ: {left} vs {right}")]
    TruncationMismatch { left: usize, right: usize },

    #[error("series is proper (zero constant term) and has no shuffle inverse")]
    NoShuffleInverse,

    #[error("left component is proper; the pair is not in the feedback group")]
    NotInGroup,

    #[error("left component must have constant term 1, found {found}")]
    NotNormalized { found: String },

    #[error("word `{word}` needs truncation degree at least {needed}, have {have}")]
    InsufficientTruncation { word: String, needed: usize, have: usize },

    #[error("word `{word}` has length {len}, above truncation degree {trunc}")]
    WordTooLong { word: String, len: usize, trunc: usize },

    #[error("relative degree undefined: {0}")]
    UndefinedRelativeDegree(String),

    #[error("time {t} outside signal domain [{start}, {end}]")]
    OutsideDomain { t: String, start: String, end: String },

    #[error("invalid signal: {0}")]
    InvalidSignal(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("fixed-point iteration did not settle after {iterations} steps")]
    NoFixedPoint { iterations: usize },
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::TruncationMismatch { .. } => "truncation-mismatch",
            Error::NoShuffleInverse => "no-shuffle-inverse",
            Error::NotInGroup => "not-in-group",
            Error::NotNormalized { .. } => "not-normalized",
            Error::InsufficientTruncation { .. } => "insufficient-truncation",
            Error::WordTooLong { .. } => "word-too-long",
            Error::UndefinedRelativeDegree(_) => "undefined-relative-degree",
            Error::OutsideDomain { .. } => "outside-domain",
            Error::InvalidSignal(_) => "invalid-signal",
            Error::Parse { .. } => "parse",
            Error::NoFixedPoint { .. } => "no-fixed-point",
        }
    }

    /// Input could not be read at all (as opposed to a violated precondition).
    pub fn is_parse(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. } | Error::WordTooLong { .. } | Error::InvalidSignal(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
