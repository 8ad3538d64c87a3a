use thiserror::Error;

/// Errors raised by the exact-arithmetic core.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero form where a nonzero form is required")]
    ZeroForm,

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("not admissible: {0}")]
    NotAdmissible(String),

    #[error("degenerate curve: {0}")]
    DegenerateCurve(String),

    #[error("coordinates are not coprime: common factor {0}")]
    NotContentFree(String),

    #[error("improper parametrization: {0}")]
    ImproperParametrization(String),

    #[error("frame is not integrable: {0}")]
    NotIntegrable(String),

    #[error("out of bounds: {0}")]
    OutOfBounds(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

impl Error {
    /// Short machine-readable tag, stable across releases.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ZeroForm => "zero_form",
            Error::DegreeMismatch(_) => "degree_mismatch",
            Error::DimensionMismatch(_) => "dimension_mismatch",
            Error::NotAdmissible(_) => "not_admissible",
            Error::DegenerateCurve(_) => "degenerate_curve",
            Error::NotContentFree(_) => "not_content_free",
            Error::ImproperParametrization(_) => "improper_parametrization",
            Error::NotIntegrable(_) => "not_integrable",
            Error::OutOfBounds(_) => "out_of_bounds",
            Error::Parse(_) => "parse",
            Error::InternalInconsistency(_) => "internal_inconsistency",
        }
    }

    pub fn is_internal(&self) -> bool {
        matches!(self, Error::InternalInconsistency(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
