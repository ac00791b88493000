use thiserror::Error;

/// Errors raised by the exact linear algebra, the invariant evaluators and
/// the verification driver.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("{op} requires a square matrix, got {rows}x{cols}")]
    NotSquare {
        op: &'static str,
        rows: usize,
        cols: usize,
    },
    #[error("singular")]
    Singular,
    #[error("matrix is not skew-symmetric")]
    NotSkew,
    #[error("pfaffian requires even size, got {0}")]
    OddSize(usize),
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("y must be traceless")]
    NotTraceless,
    #[error("not in open orbit")]
    NotInOpenOrbit,
    #[error("group element is not orthogonal")]
    NotOrthogonal,
    #[error("exotic invariant only for odd n")]
    ExoticNeedsOddN,
    #[error("slice parity mismatch: {0}")]
    ParityMismatch(String),
    #[error("degenerate rng")]
    DegenerateRng,
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),
    #[error("suite `{suite}` does not support algebra `{algebra}`")]
    Unsupported { suite: String, algebra: String },
    #[error("not proportional, investigate ({0})")]
    NotProportional(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
