use thiserror::Error;

use crate::geometry::PanelViolation;

/// Errors produced by the simulation library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("grid index ({ka}, {kb}) out of bounds for a {count_a}x{count_b} panel")]
    IndexOutOfBounds {
        ka: usize,
        kb: usize,
        count_a: usize,
        count_b: usize,
    },

    #[error("linear element index {k} out of range 1..={total}")]
    LinearIndexOutOfRange { k: usize, total: usize },

    #[error("invalid panel: {}", join_violations(.0))]
    InvalidPanel(Vec<PanelViolation>),

    #[error("zero-length direction vector")]
    ZeroDirection,

    #[error("singular distance: point coincides with an element (path loss undefined)")]
    SingularDistance,

    #[error("channel entry {index} is zero, phase undefined")]
    UndefinedPhase { index: usize },

    #[error("reflection coefficient {index} has modulus {modulus}, must be 1")]
    NotUnitModulus { index: usize, modulus: f64 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("scenario: {0}")]
    Scenario(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn join_violations(v: &[PanelViolation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameter {
        name,
        reason: reason.into(),
    }
}
