use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("bad cycle notation: {0}")]
    CycleNotation(String),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("{what} {value} out of range 1..={max}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        max: usize,
    },

    #[error("invalid constellation: {0}")]
    InvalidConstellation(String),

    #[error("invalid map: {0}")]
    InvalidMap(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("degree {degree} exceeds the canonical-form cap {cap}")]
    DegreeAboveCap { degree: usize, cap: usize },

    #[error("odd face count {0}: no perfect matching")]
    OddFaceCount(usize),

    #[error("no perfect matching: maximum matching covers {matched} of {faces} faces; unmatched {unmatched:?}")]
    NoPerfectMatching {
        matched: usize,
        faces: usize,
        unmatched: Vec<usize>,
    },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
