use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("the empty partition has no Young symmetrizer")]
    EmptyPartition,

    #[error("operation needs degree at least 1")]
    ZeroDegree,

    #[error("{what} exceeds the configured bound ({value} > {bound})")]
    SizeBound {
        what: &'static str,
        value: u128,
        bound: u128,
    },

    #[error("position {position} out of range for degree {degree}")]
    PositionOutOfRange { position: usize, degree: usize },

    #[error("operator is not even")]
    NotEven,

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("column index {l} out of range 1..={max}")]
    ColumnOutOfRange { l: usize, max: usize },

    #[error("m = {m} is below the validity range m >= 2*m0 = {min}")]
    OutsideValidityRange { m: usize, min: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no solution although preconditions hold: {0}")]
    Unsolvable(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn bound(what: &'static str, value: u128, bound: u128) -> Self {
        Error::SizeBound { what, value, bound }
    }
}
