use thiserror::Error;

/// Errors raised by the toolkit.
///
/// Input errors describe a violated precondition; resource errors mean a
/// configured cap would have been exceeded. Callers that need to tell the
/// two apart use [`Error::is_resource`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("arity mismatch: expected {expected} generators, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("generator index {index} >= n = {n}")]
    LetterOutOfRange { index: usize, n: usize },

    #[error("zero relation is not allowed")]
    ZeroRelation,

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("operation requires characteristic zero, field has characteristic {0}")]
    Characteristic(u64),

    #[error("resource cap `{cap}` exceeded: limit {limit}, requested {requested}")]
    Resource {
        cap: &'static str,
        limit: u128,
        requested: u128,
    },
}

impl Error {
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource { .. })
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
