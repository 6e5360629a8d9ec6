use thiserror::Error;

/// Library-wide error type.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {v} out of range for {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("graph on {n} vertices cannot be built: {reason}")]
    BadGraph { n: usize, reason: String },
    #[error("factoring needs at least one factor")]
    NoFactors,
    #[error("factor {index} has {actual} vertices, expected {expected}")]
    FactorSizeMismatch {
        index: usize,
        expected: usize,
        actual: usize,
    },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("instance has {n} vertices, exceeding the exact-solver cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("hypergraph edge {index} is empty")]
    EmptyEdge { index: usize },
    #[error("hypergraph is not uniform: edge {index} has size {size}, expected {expected}")]
    NotUniform {
        index: usize,
        size: usize,
        expected: usize,
    },
    #[error("edge {index} has size {size}, cannot shrink to {r}")]
    ShrinkTooSmall { index: usize, size: usize, r: usize },
    #[error("edge size {r} must be at least 2")]
    RankTooSmall { r: usize },
    #[error("average degree {num}/{den} is below 1")]
    DegreeBelowOne { num: usize, den: usize },
    #[error("probability {p} outside [0, 1]")]
    BadProbability { p: f64 },

    #[error("minimum degree {delta} too small: {context}")]
    MinDegreeTooSmall { delta: usize, context: String },
    #[error("factor {index} is not {expected}")]
    Structure { index: usize, expected: String },
    #[error(
        "block graph is not 1-extendable-dominated: vertex {v} lies in no minimum dominating set"
    )]
    NotOneExtendable { v: usize },
    #[error("factoring is not applicable: {0}")]
    NotApplicable(String),

    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("generation failed: {0}")]
    Generation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
