use thiserror::Error;

use crate::certificate::ForestCertificate;
use crate::exact::OracleResult;
use crate::graph::Vertex;
use crate::weights::Rat;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(Vertex, Vertex),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeightError {
    #[error("epsilon {} outside [0, {}]", .0.0, .0.1)]
    EpsOutOfRange(Box<(Rat, Rat)>),
    #[error("k must be at least 2, got {0}")]
    BadK(usize),
    #[error("bound requires a vertex partition")]
    MissingPartition,
    #[error("gain is undefined for degree 0")]
    DegreeZero,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("invalid bound spec `{0}`")]
    InvalidSpec(String),
}

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("graph has isolated vertex {0}")]
    IsolatedVertexPresent(Vertex),
    #[error("vertex {0} has degree {1}, expected 3")]
    NotCubic(Vertex, usize),
    #[error("partition does not match the graph: {0}")]
    BadPartition(String),
    #[error("constructed forest of size {} misses bound {}", .0.len(), .0.claimed_bound)]
    BoundMiss(Box<ForestCertificate>),
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("node budget exhausted; best found {}", .0.alpha)]
    BudgetExceeded(Box<OracleResult>),
    #[error("graph too large for the exact oracle ({0} vertices, max 64)")]
    TooLarge(usize),
    #[error("partition does not match the graph: {0}")]
    BadPartition(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
    #[error("no simple {d}-regular graph on {n} vertices")]
    InfeasibleDegree { n: usize, d: usize },
    #[error("gave up after {0} pairings")]
    RetryLimit(usize),
}
