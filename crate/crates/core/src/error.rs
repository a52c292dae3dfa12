use thiserror::Error;

use crate::graph::Edge;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("node index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("self-loop on node {node} has negative weight; the system is infeasible")]
    NegativeSelfLoop { node: usize },
    #[error("infeasible system: negative cycle found through node {node}")]
    InfeasibleSystem { node: usize },
    #[error("sequence is not a walk: ({0}, {1}) is not an edge")]
    NotAWalk(usize, usize),
    #[error("walk must contain at least one node")]
    EmptyWalk,
    #[error("implication query needs two distinct nodes, got {0} twice")]
    SameNode(usize),
    #[error("graph has a zero-weight cycle; the redundant-edge criterion is unsound here")]
    ZeroWeightCycle,
    #[error("edge ({}, {}) is not in the graph", .0.0, .0.1)]
    NotASubset(Edge),
    #[error("class with {arcs} arcs exceeds the exact solver limit of {limit}")]
    ExactLimitExceeded { arcs: usize, limit: usize },
    #[error("instance with {size} elements exceeds the limit of {limit}")]
    LimitExceeded { size: usize, limit: usize },
    #[error("node counts differ: {0} vs {1}")]
    NodeCountMismatch(usize, usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
