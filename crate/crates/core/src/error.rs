use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid field modulus {0}: must be a prime between 2 and 97")]
    Field(u32),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("capacity exceeded: {what} needs {needed} units of work, limit is {limit}")]
    Capacity { what: String, needed: u128, limit: u64 },

    #[error("invalid quiver: {0}")]
    Quiver(String),

    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),

    #[error("quiver or field mismatch: {0}")]
    Mismatch(String),

    #[error("not a morphism of representations: {0}")]
    NotMorphism(String),

    #[error("invalid subrepresentation: {0}")]
    InvalidSubrep(String),

    #[error("assignment is not natural: {0}")]
    NotNatural(String),

    #[error("invalid indecomposable list: {0}")]
    Indecomposables(String),

    #[error("family is not closed under join/meet: {op} of nodes {left} and {right} is missing")]
    Closure { op: &'static str, left: usize, right: usize },

    #[error("invalid poset: {0}")]
    Poset(String),

    #[error("unresolved label: {0}")]
    Label(String),

    #[error("invalid adjunction: {0}")]
    Adjunction(String),

    #[error("malformed input: {0}")]
    Input(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. })
    }
}
