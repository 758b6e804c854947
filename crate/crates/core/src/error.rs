use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("ideal is not squarefree")]
    NotSquarefree,

    #[error("operation undefined on the zero ideal")]
    ZeroIdeal,

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("invalid vertex {vertex} (graph has {n} vertices)")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    Loop(usize),

    #[error("{what} limit exceeded: {actual} > {limit}")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("part {0:?} does not induce a clique")]
    NotAClique(Vec<usize>),

    #[error("the void complex has no faces")]
    VoidComplex,

    #[error("vertex {0} is not a vertex of the complex")]
    NotAVertex(usize),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("invalid variable order: {0}")]
    InvalidOrder(String),

    #[error("invalid co-complex: {0}")]
    InvalidCoComplex(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
