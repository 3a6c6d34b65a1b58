use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    // --- fields ---
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("invalid field: {0}")]
    InvalidField(String),

    // --- groups ---
    #[error("inconsistent pc-presentation: {0}")]
    InconsistentPresentation(String),
    #[error("invalid pc-presentation: {0}")]
    InvalidPresentation(String),
    #[error("generator images violate a defining relation: {0}")]
    RelationViolation(String),
    #[error("generator images do not define a bijection")]
    NotBijective,
    #[error("unknown catalog group `{0}`")]
    UnknownGroup(String),

    // --- group algebra, series ---
    #[error("element is not in J^{degree}")]
    FiltrationError { degree: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("{0}")]
    SocleError(String),
    #[error("Lie structure mismatch: {0}")]
    StructureMismatch(String),

    // --- automorphisms ---
    #[error("element has zero augmentation and is not a unit")]
    NotAUnit,
    #[error("linear part of the substitution is singular")]
    SingularLinearPart,
    #[error("not an algebra automorphism: {0}")]
    NotAnAutomorphism(String),
    #[error("socle is not preserved: alpha(n) is not a multiple of n")]
    SocleNotPreserved,
    #[error("radical filtration is not preserved: {0}")]
    FiltrationNotPreserved(String),
    #[error("image of a lift leaves the Lie subspace in degree {degree}")]
    LieSubspaceViolated { degree: usize },

    // --- truncated symmetric algebra ---
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("substituted top monomial is not a scalar multiple of itself")]
    NotScalarMultiple,

    // --- plumbing ---
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{stage}: {source}")]
    Stage {
        stage: String,
        source: Box<Error>,
    },
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn at(self, stage: impl Into<String>) -> Error {
        Error::Stage {
            stage: stage.into(),
            source: Box::new(self),
        }
    }

    /// Strip any stage wrappers.
    pub fn root(&self) -> &Error {
        match self {
            Error::Stage { source, .. } => source.root(),
            e => e,
        }
    }
}
