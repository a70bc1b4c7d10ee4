use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("gram matrix is not symmetric")]
    NotSymmetric,

    #[error("dependent basis: element {index} lies in the span of the preceding ones")]
    DependentBasis { index: usize },

    #[error("not closed under bracket: [b{i}, b{j}] leaves the span")]
    NotClosed { i: usize, j: usize },

    #[error("element {index} is not skew with respect to the form")]
    NotSkew { index: usize },

    #[error("parent algebra is not semisimple (det B = 0): {0}")]
    NotSemisimple(String),

    #[error("degenerate form: {0}")]
    Degenerate(String),

    #[error("constraint violated: {0}")]
    Constraint(String),

    #[error("hypothesis not met: {0}")]
    Hypothesis(String),

    #[error("structural inconsistency: {0}")]
    Inconsistent(String),

    #[error("out of range: {0}")]
    Range(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
