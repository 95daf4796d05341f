//! Crate-wide error type and the CLI exit-code contract.

use thiserror::Error;

/// Which soft-topology axiom a family violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    /// Axiom (i): the null and absolute sets must belong to the family.
    NullAndAbsolute,
    /// Axiom (ii): closure under pairwise intersection.
    Intersection,
    /// Axiom (iii): closure under (finite, hence arbitrary) union.
    Union,
}

impl std::fmt::Display for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Axiom::NullAndAbsolute => write!(f, "(i)"),
            Axiom::Intersection => write!(f, "(ii)"),
            Axiom::Union => write!(f, "(iii)"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("ground mismatch between operands")]
    GroundMismatch,

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("unknown parameter `{0}`")]
    UnknownParameter(String),

    #[error("invalid ground: {0}")]
    InvalidGround(String),

    #[error("axiom {axiom} violated: {witness}")]
    AxiomViolation { axiom: Axiom, witness: String },

    #[error("set is already open: not a proper extension")]
    NotAProperExtension,

    #[error("rejected input: {0}")]
    Rejected(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),

    #[error("method disagreement: {0}")]
    MethodDisagreement(String),

    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Exit status for the CLI: 2 for rejected input, 3 for capacity limits.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Capacity(_) => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
