use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph is not connected")]
    NotConnected,
    #[error("complete graph has no disconnecting set")]
    Complete,
    #[error("graph on {0} vertices exceeds the exact-search kernel width")]
    TooLarge(usize),
    #[error("eigensolver did not converge after {0} sweeps")]
    NoConvergence(usize),
    #[error("largest eigenvalue {found} does not match degree {degree}")]
    DegreeMismatch { found: f64, degree: usize },
    #[error("partition is not equitable: vertices {0} and {1} of part {2} differ on part {3}")]
    NotEquitable(usize, usize, usize, usize),
    #[error("parts do not partition the vertex set")]
    NotAPartition,
    #[error("infeasible strongly regular parameters: {0}")]
    InfeasibleSrg(String),
    #[error("quotient matrix of size {0} is not supported")]
    QuotientTooLarge(usize),
    #[error("set leaves {0} component(s); it does not disconnect the graph")]
    NotDisconnecting(usize),
    #[error("subgraph has {sub} vertices, parent only {parent}")]
    SizeMismatch { sub: usize, parent: usize },
    #[error("certificate is not exhaustive")]
    NotExhaustive,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown check id `{0}`")]
    UnknownCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
