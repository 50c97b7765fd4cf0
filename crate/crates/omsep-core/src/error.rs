use thiserror::Error;

/// Errors shared across the engine.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum OmError {
    #[error("ground set has {0} elements; at most 63 are supported")]
    TooManyElements(usize),
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("circuit axioms violated: {0}")]
    AxiomViolation(String),
    #[error("cannot delete coloop `{0}`")]
    CoLoopDeletion(String),
    #[error("cannot contract loop `{0}`")]
    LoopContraction(String),
    #[error("restriction is not of corank 2")]
    NotCorank2,
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("sign map is not a colocalization in general position")]
    NotColocalization,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, OmError>;
