use thiserror::Error;

use crate::claw::Claw;
use crate::graph::NodeId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("node {node} out of range for a graph on {n} nodes")]
    NodeOutOfRange { node: NodeId, n: usize },

    #[error("self-loop on node {0}")]
    SelfLoop(NodeId),

    #[error("node {0} listed twice")]
    DuplicateNode(NodeId),

    #[error("weight vector has {got} entries, graph has {expected} nodes")]
    WeightLength { expected: usize, got: usize },

    #[error("weight {weight} of node {node} exceeds the supported magnitude 2^61")]
    WeightRange { node: NodeId, weight: i64 },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("set is not stable: {0} and {1} are adjacent")]
    NotStable(NodeId, NodeId),

    #[error("sets are not disjoint: node {0} appears in both")]
    Overlap(NodeId),

    #[error("stable set must have 2 or 3 nodes, got {0}")]
    StableSetSize(usize),

    #[error("graph is not claw-free: {0}")]
    NotClawFree(Claw),

    #[error("precondition violated: {0}")]
    Precondition(&'static str),

    #[error("invalid generator parameters: {0}")]
    InvalidSpec(String),

    #[error("oracle cannot handle this instance: {0}")]
    OracleLimit(String),
}
