use thiserror::Error;

/// Errors raised by the fuzzy algebra, relation, inference and predication layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum FuzzyError {
    #[error("grade {0} is outside the unit interval [0, 1]")]
    GradeOutOfRange(f64),
    #[error("unknown element `{element}` in universe `{universe}`")]
    UnknownElement { element: String, universe: String },
    #[error("element `{0}` is listed more than once")]
    DuplicateElement(String),
    #[error("universe `{0}` has no elements")]
    EmptyUniverse(String),
    #[error("universe mismatch: expected `{expected}`, found `{found}`")]
    UniverseMismatch { expected: String, found: String },
    #[error("schema mismatch: {0}")]
    SchemaMismatch(String),
}

pub type Result<T, E = FuzzyError> = std::result::Result<T, E>;
