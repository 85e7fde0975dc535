use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch { context: &'static str, expected: usize, found: usize },
    #[error("invalid field {0:?}; expected q, f2, f5, f101 or f<p> with p prime")]
    InvalidField(String),
    #[error("scalars from different fields")]
    FieldMismatch,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid degree bounds: m = {m} > n = {n}")]
    InvalidInterval { m: i64, n: i64 },
    #[error("index constraint violated: {0}")]
    IndexConstraint(String),
    #[error("morphism shapes do not compose: {0}")]
    ShapeMismatch(String),
    #[error("not a chain map: {0}")]
    NotAChainMap(String),
    #[error("degree {0} is outside the computed range")]
    DegreeOutOfRange(i64),
    #[error("element is not in the span of the computed basis: {0}")]
    NotInSpan(String),
    #[error("object {0} is not in the window")]
    ObjectNotInWindow(String),
    #[error("homotopy correction failed: {0}")]
    CorrectionUnsolvable(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
