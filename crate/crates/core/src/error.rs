//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by validation, geometry and pipeline operations.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("toric degree vectors do not sum to zero (sum = {0:?})")]
    SumNotZero(Vec<i64>),
    #[error("toric degree has no vectors")]
    EmptyDegree,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("degenerate toric degree: rank {rank} < ambient dimension {n}")]
    DegenerateDegree { rank: usize, n: usize },
    #[error("coefficient {index} is zero")]
    ZeroCoefficient { index: usize },
    #[error("coordinate {index} is zero; log map undefined")]
    ZeroCoordinate { index: usize },
    #[error("point is not on the image of the line (distance {distance})")]
    PointNotOnLine { distance: f64 },
    #[error("leaf count {leaves} does not match degree with {expected} vectors")]
    InconsistentDegree { leaves: usize, expected: usize },
    #[error("parameter coincides with puncture {index}")]
    AtPuncture { index: usize },
    #[error("recovered exponent {got} disagrees with stored degree entry {expected} (puncture {puncture}, coordinate {coordinate})")]
    DegreeMismatch {
        puncture: usize,
        coordinate: usize,
        expected: i64,
        got: f64,
    },
    #[error("invalid sampling scheme: {0}")]
    BadScheme(String),
    #[error("sample cloud is empty")]
    EmptyCloud,
    #[error("tree has {got} leaves, degree expects {expected}")]
    LeafCountMismatch { expected: usize, got: usize },
    #[error("vertex subset is empty")]
    EmptySubset,
    #[error("degree has {got} vectors, enumeration is limited to {max}")]
    TooLarge { got: usize, max: usize },
    #[error("degeneration datum inconsistent with curve: {0}")]
    InconsistentDatum(String),
    #[error("combinatorial type of the family does not stabilize over the tail")]
    TypeUnstable,
    #[error("insufficient samples to classify {0}")]
    InsufficientSamples(String),
    #[error("punctures too close: |a_{i} - a_{j}| = {separation}")]
    PuncturesTooClose { i: usize, j: usize, separation: f64 },
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
    #[error("schema violation at {pointer}: {message}")]
    SchemaViolation { pointer: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
