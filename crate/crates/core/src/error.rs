use thiserror::Error;

/// Errors shared across the crate.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph on {n} vertices exceeds the supported bound {max}")]
    TooLarge { n: usize, max: usize },

    #[error("graph is empty")]
    EmptyGraph,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("vertex {vertex} has degree {degree}, outside the required range {min}..={max}")]
    DegreeOutOfRange {
        vertex: usize,
        degree: usize,
        min: usize,
        max: usize,
    },

    #[error("multigraph has a multi-edge where a simple graph is required")]
    NotSimple,

    #[error("root set must not be empty")]
    NoRoots,

    #[error("permutation is not a free part-swapping involution")]
    NotFreeInvolution,

    #[error("decomposition is not valid: {0}")]
    InvalidDecomposition(&'static str),

    #[error("parameter {name} = {value} outside the allowed range {allowed}")]
    ParameterRange {
        name: &'static str,
        value: i64,
        allowed: &'static str,
    },

    #[error("unknown tag `{0}`")]
    UnknownTag(String),

    #[error("invalid graph6 data: {0}")]
    Graph6(String),

    #[error("QL iteration failed to converge")]
    EigenConvergence,
}
