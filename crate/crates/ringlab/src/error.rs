//! Error type shared by the whole crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A ring descriptor failed validation; the message names the offending field.
    #[error("descriptor error: {0}")]
    Descriptor(String),
    /// An element does not belong to the ring it was used with.
    #[error("encoding error: {0}")]
    Encoding(String),
    /// A construction or scan would exceed a configured size cap.
    #[error("size cap exceeded: {0}")]
    SizeCap(String),
    /// Localization target is not representable (e.g. the fraction field).
    #[error("unsupported localization: {0}")]
    UnsupportedLocalization(String),
    #[error("arity mismatch: {0}")]
    ArityMismatch(String),
    #[error("incompatible rings: {0}")]
    IncompatibleRings(String),
    /// No idempotent-plus-unit decomposition exists; carries the obstruction element.
    #[error("no clean decomposition for {0}")]
    NoDecomposition(String),
    #[error("no idempotent lift: {0}")]
    NoLift(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A supplied local solution failed verification in its factor.
    #[error("local solution rejected in factor {factor}: {reason}")]
    LocalSolution { factor: usize, reason: String },
    #[error("unsupported ring family: {0}")]
    Unsupported(String),
    #[error("invalid poset: {0}")]
    Poset(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// Short machine-parsable tag used as the CLI diagnostic prefix.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Descriptor(_) => "descriptor",
            Error::Encoding(_) => "encoding",
            Error::SizeCap(_) => "size-cap",
            Error::UnsupportedLocalization(_) => "unsupported-localization",
            Error::ArityMismatch(_) => "arity",
            Error::IncompatibleRings(_) => "incompatible-rings",
            Error::NoDecomposition(_) => "no-decomposition",
            Error::NoLift(_) => "no-lift",
            Error::Precondition(_) => "precondition",
            Error::LocalSolution { .. } => "local-solution",
            Error::Unsupported(_) => "unsupported",
            Error::Poset(_) => "poset",
            Error::Parse(_) => "parse",
            Error::Io(_) => "io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
