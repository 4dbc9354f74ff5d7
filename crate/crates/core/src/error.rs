use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero bracket")]
    DivisionByZeroBracket,
    #[error("bracket of a half-integer weight {0} is not representable")]
    HalfIntegerBracket(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("not invertible as series")]
    NotInvertible,
    #[error("divergent symmetric algebra")]
    DivergentSymmetricAlgebra,
    #[error("divergent plethystic exponential")]
    DivergentPlethysticExp,
    #[error("adams operation requires a positive index")]
    ZeroAdams,
    #[error("cell ({row}, {col}) lies outside the diagram {partition}")]
    CellOutsideDiagram { row: usize, col: usize, partition: String },
    #[error("size mismatch: |{0}| != |{1}|")]
    SizeMismatch(String, String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("mismatch with printed form: {0}")]
    Mismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
