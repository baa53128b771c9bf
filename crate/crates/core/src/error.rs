use thiserror::Error;

use crate::poly::Degree;

/// Errors shared by all modules of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("the zero polynomial has no leading coefficient")]
    ZeroPolynomial,

    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,

    #[error("declared degree {declared} is smaller than the actual degree {actual}")]
    DegreeTooSmall { declared: usize, actual: usize },

    #[error("degree order violated: deg(f) = {f}, deg(g) = {g}")]
    DegreeOrder { f: Degree, g: Degree },

    #[error("input polynomial must be nonzero")]
    ZeroInput,

    #[error("subresultant index j = {j} out of range (need j < {n})")]
    JOutOfRange { j: usize, n: usize },

    #[error("recursive PRS is not complete")]
    IncompletePrs,

    #[error("border matrix U at level {level} is singular")]
    SingularU { level: usize },

    #[error("sign sequence is empty")]
    EmptySequence,

    #[error("input polynomial must be non-constant")]
    ConstantInput,
}

pub type Result<T> = std::result::Result<T, Error>;
