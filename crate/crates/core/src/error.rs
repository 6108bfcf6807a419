use thiserror::Error;

/// Which defining condition a candidate object failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    Shape,
    Entry,
    Alternation,
    RowSum,
    ColumnSum,
    TopmostNonzero,
    Membership,
    Positivity,
    Row,
    Column,
    Diagonal,
    Bound,
    Forced,
    PartialSum,
    Path,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("rejected ({kind:?}) at {location}")]
    Reject { kind: Violation, location: String },
    #[error("parameters out of range: {0}")]
    ParamRange(String),
    #[error("pfaffian of an odd-size matrix ({0})")]
    OddSize(usize),
    #[error("constant-term oracle supports n <= 4, got n = {0}")]
    NTooLarge(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn reject(kind: Violation, location: impl Into<String>) -> Self {
        Error::Reject {
            kind,
            location: location.into(),
        }
    }

    /// The violated condition, for rejections.
    pub fn violation(&self) -> Option<Violation> {
        match self {
            Error::Reject { kind, .. } => Some(*kind),
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
