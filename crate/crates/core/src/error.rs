use thiserror::Error;

use crate::ideal::StabilityViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: expected {expected} variables, found {found}")]
    RingMismatch { expected: usize, found: usize },

    #[error("{0} does not divide {1}")]
    NotDivisible(String, String),

    #[error("min/max variable of the constant term 1 is undefined")]
    UnitTerm,

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: u32, found: u32 },

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("invalid monomial ideal: {0}")]
    InvalidIdeal(String),

    #[error(
        "J is not strongly stable ({0}); marked reduction is refused because the \
         rewriting relation modulo a J-marked set is not Noetherian in general \
         (e.g. J = (xy, z^2) with G = {{xy + yz, z^2 + xz}} loops on xyz)"
    )]
    NotStronglyStable(StabilityViolation),

    #[error("invalid marked set: {0}")]
    InvalidMarkedSet(String),

    #[error("degree {requested} is below the initial degree {initial} of J")]
    BelowInitialDegree { requested: u32, initial: u32 },

    #[error("reduction residual is nonzero: {0}")]
    NonzeroResidual(String),

    #[error("marked set is not a J-marked basis")]
    NotABasis,

    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("{0}")]
    Extraction(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
