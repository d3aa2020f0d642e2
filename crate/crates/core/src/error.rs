use thiserror::Error;

use crate::poly::{LaurentPolynomial, Variable};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable mismatch: {left:?} vs {right:?}")]
    VariableMismatch { left: Variable, right: Variable },

    #[error("operation not defined for variable {0:?}")]
    UnsupportedVariable(Variable),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("not exactly divisible, remainder {remainder}")]
    NotDivisible { remainder: Box<LaurentPolynomial> },

    #[error("odd exponent {exponent} cannot be converted to a power of t^(1/2)")]
    OddExponent { exponent: i64 },

    #[error("degree of the zero polynomial is undefined")]
    ZeroPolynomial,

    #[error("geometric degree of the zero skein element is undefined")]
    ZeroSkeinElement,

    #[error("no image supplied for basis element z^{0}")]
    MissingBasisImage(u32),

    #[error("lasso has a zero twist at position {position}; normalize it first")]
    ZeroTwist { position: usize },

    #[error("twist count must be nonzero")]
    ZeroArgument,

    #[error("invalid braid: {0}")]
    InvalidBraid(String),

    #[error("closure has {components} components, expected a knot")]
    NotAKnot { components: usize },

    #[error("state sum limited to {limit} crossings, got {letters}")]
    GuardExceeded { letters: usize, limit: usize },

    #[error("parse error at position {position} in {input:?}: {message}")]
    Parse {
        input: String,
        position: usize,
        message: String,
    },

    #[error("unknown knot {0:?}")]
    UnknownKnot(String),

    #[error("lasso {lasso} has degree {degree}, which no requested term uses")]
    LassoDegreeUnused { lasso: String, degree: u32 },

    #[error("{what}: routes disagree ({left} vs {right})")]
    RouteMismatch {
        what: String,
        left: String,
        right: String,
    },

    #[error("Alexander normalization failed for {0}")]
    Normalization(String),

    #[error("catalog error: {0}")]
    Catalog(String),
}

impl Error {
    pub(crate) fn parse(input: &str, position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            position,
            message: message.into(),
        }
    }
}
