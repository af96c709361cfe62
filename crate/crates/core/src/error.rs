use thiserror::Error;

use crate::ground::Label;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("label {value} is outside E_{n}")]
    LabelOutOfRange { value: i64, n: usize },

    #[error("position {position} is outside [1, {}]", 2 * .n)]
    PositionOutOfRange { position: usize, n: usize },

    #[error("pair {{{0}, {1}}} is not admissible")]
    NotAdmissible(Label, Label),

    #[error("a pair needs two distinct labels, got {0} twice")]
    DegeneratePair(Label),

    #[error("invalid admissible order: {0}")]
    InvalidOrder(String),

    #[error("not a signed permutation: {0}")]
    NotSignedPermutation(String),

    #[error("basis set is empty")]
    Empty,

    #[error("not a rank-2 matroid: {0}")]
    NotAMatroid(String),

    #[error("basis set fails the maximality property for the order {0}")]
    NotSymplectic(String),

    #[error("invalid non-intersecting family: {0}")]
    InvalidFamily(String),

    #[error("invalid partition type: {0}")]
    InvalidPartition(String),

    #[error("invalid move: {0}")]
    InvalidMove(String),

    #[error("symplectic projection is empty")]
    EmptyProjection,

    #[error("no symmetric lifting exists")]
    NoLifting,

    #[error("matroid is not representable over C")]
    NotRepresentable,

    #[error("matrix has rank below 2")]
    RankDeficient,

    #[error("expected a 2 x {expected} matrix, got {rows} x {cols}")]
    Shape { expected: usize, rows: usize, cols: usize },

    #[error("exhaustive mode is limited to n <= {max}, got n = {n}")]
    TooLarge { n: usize, max: usize },

    #[error("ambient dimensions differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("n must be at least {min}, got {n}")]
    RankTooSmall { n: usize, min: usize },

    #[error("witness construction failed: {0}")]
    Construction(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
