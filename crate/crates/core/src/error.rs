use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch in {op}: {lhs:?} vs {rhs:?}")]
    DimensionMismatch {
        op: &'static str,
        lhs: (usize, usize),
        rhs: (usize, usize),
    },

    #[error("matrix of size {0}x{0} is not nilpotent")]
    NotNilpotent(usize),

    #[error("matrix is singular")]
    Singular,

    #[error("leg embedding: {0}")]
    LegEmbedding(String),

    #[error("duplicate interpolation node {0}")]
    DuplicateNode(String),

    #[error("interpolation degree overflow at entry ({row}, {col})")]
    DegreeOverflow { row: usize, col: usize },

    #[error("rank {0} is too small (need at least 2)")]
    RankTooSmall(usize),

    #[error("link index {k} out of range for so({m}): at most {max} links")]
    LinkOutOfRange { k: usize, m: usize, max: usize },

    #[error("unknown generator {0}")]
    UnknownGenerator(String),

    #[error("subalgebra L_(K={k}, M={m}) requires 2K <= [M/2]")]
    SubalgebraBound { k: usize, m: usize },

    #[error("not a commutative ideal: {0}")]
    NotCommutativeIdeal(String),

    #[error("not a subalgebra: {0}")]
    NotSubalgebra(String),

    #[error("incompatible parameters: {0}")]
    IncompatibleParams(String),

    #[error("invalid chain: {0}")]
    InvalidChain(String),

    #[error("spectral parameter {0} is a pole")]
    Pole(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("counit is not a Gaussian rational: {0}")]
    NonRationalCounit(String),

    #[error("{0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
