use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("undefined profile: zero polynomial")]
    UndefinedProfile,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("degree too small: {0} must have degree >= 1")]
    DegreeTooSmall(&'static str),
    #[error("non-standard zigzag type {0:?}")]
    NonStandardType(Vec<i64>),
    #[error("kind mismatch: {0}")]
    KindMismatch(String),
    #[error("word not composable at letter {index}: {reason}")]
    NotComposable { index: usize, reason: String },
    #[error("word is not closed: end class differs from base")]
    NotClosed,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("free-family certificate failed: {0}")]
    CertificateFailed(String),
    #[error("unknown format {0:?}")]
    UnknownFormat(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
