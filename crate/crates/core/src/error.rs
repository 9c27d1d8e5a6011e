use thiserror::Error;

use crate::claw::Claw;

/// Errors produced by the construction, verification and IO layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(
        "dimension mismatch: graph has {graph} vertices, representation targets {representation}"
    )]
    DimensionMismatch { graph: usize, representation: usize },

    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("graph contains a claw: center {} with leaves {}, {}, {}", .0.center, .0.leaves[0], .0.leaves[1], .0.leaves[2])]
    ClawFound(Claw),

    #[error("maximum degree {max_degree} exceeds the allowed {allowed}")]
    DegreeTooLarge { max_degree: usize, allowed: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("product encoding disagrees with the graph at pair {0}-{1}")]
    EncodingMismatch(usize, usize),

    #[error(
        "sequence {index} is not a linear extension: {x} is placed before {y} but {y} precedes {x}"
    )]
    NotAnExtension { index: usize, x: usize, y: usize },

    #[error("order relation contains a cycle: {0:?}")]
    Cycle(Vec<usize>),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{path}: {message}")]
    Schema { path: String, message: String },

    #[error("compact record: {0}")]
    Compact(String),

    #[error("input size {n} exceeds the oracle cap {cap}")]
    OracleCap { n: usize, cap: usize },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
