use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid diagram type: {0}")]
    InvalidType(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("parameter outside D_delta: lambda . delta = {0} != 0")]
    OutsideDelta(String),

    #[error("graph is not an ADE Dynkin diagram: {0}")]
    NotAde(String),

    #[error("not an extended Dynkin quiver: {0}")]
    NotExtended(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("moment maps do not agree on a central value; C_Q(x,y) is not a complex: {0}")]
    NotAComplex(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
