use thiserror::Error;

use crate::pointset::PointSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("a closure space needs at least one point")]
    NoPoints,
    #[error("universe of {points} points exceeds the cap of {cap} points")]
    TooLarge { points: usize, cap: usize },
    #[error("duplicate point label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown point label `{0}`")]
    UnknownLabel(String),
    #[error("subset {0:?} is not contained in the universe")]
    OutOfUniverse(PointSet),
    #[error("subset {0:?} is not a closed set of this space")]
    NotClosed(PointSet),
    #[error("{lower:?} is not below {upper:?}")]
    NotBelow { lower: PointSet, upper: PointSet },
    #[error("{0:?} is not a coatom")]
    NotCoatom(PointSet),
    #[error("map has {got} images but the space has {expected} elements")]
    WrongLength { expected: usize, got: usize },
    #[error("invalid orthocomplementation: {0}")]
    InvalidOrthoMap(String),
    #[error("a product needs at least two factors, got {0}")]
    TooFewFactors(usize),
    #[error("point tuple has {got} coordinates, expected {expected}")]
    BadTuple { expected: usize, got: usize },
    #[error("coordinate {coord} out of range for factor {factor}")]
    CoordinateOutOfRange { factor: usize, coord: usize },
    #[error("orthocomplementation search exceeded the limit of {0} nodes")]
    SearchLimit(u64),
    #[error("zero vector where a nonzero vector is required")]
    ZeroVector,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("unsupported dimension {0}; dimensions must lie in 1..=3")]
    UnsupportedDimension(usize),
    #[error("{0}")]
    Precondition(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
