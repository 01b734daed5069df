use thiserror::Error;

use crate::formula::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("element {element} is not in carrier {carrier}")]
    OutOfCarrier { element: String, carrier: String },
    #[error("sets over different carriers: {0} and {1}")]
    CarrierMismatch(String, String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("variable {0} is not assigned by the valuation")]
    Unassigned(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("invalid {what}: {reason}")]
    Invalid { what: &'static str, reason: String },
    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },
    #[error("not applicable: {0}")]
    Domain(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn invalid(what: &'static str, reason: impl Into<String>) -> Self {
        Error::Invalid { what, reason: reason.into() }
    }

    pub(crate) fn unknown(kind: &'static str, name: impl Into<String>) -> Self {
        Error::Unknown { kind, name: name.into() }
    }

    /// True for errors caused by a resource cap rather than malformed input.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget(_))
    }
}
