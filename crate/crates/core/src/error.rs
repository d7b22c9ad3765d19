use thiserror::Error;

use crate::cycle::{CycleEdge, Node};

/// Errors raised by tour, history, graph and experiment operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PedigreeError {
    #[error("node label must be at least 1")]
    ZeroNode,

    #[error("a cycle needs at least 3 nodes, got {0}")]
    TooFewNodes(usize),

    #[error("{0} nodes exceeds the ceiling of {max}", max = crate::cycle::MAX_NODES)]
    TooManyNodes(usize),

    #[error("tour is not a permutation of 1..={n}: {reason}")]
    NotAPermutation { n: usize, reason: String },

    #[error("history entry for node {node}: {edge} is not a cycle-edge at time {time}", time = node - 1)]
    InvalidInsertion { node: u32, edge: CycleEdge },

    #[error("history entries must be listed for consecutive nodes starting at 4; expected {expected}, found {found}")]
    HistoryGap { expected: u32, found: u32 },

    #[error("a cycle-edge needs two distinct endpoints, got {0} twice")]
    LoopEdge(Node),

    #[error("node {node} is outside 1..={n}")]
    NodeOutOfRange { node: u32, n: usize },

    #[error("time {requested} is outside the range 3..={horizon} covered by the history")]
    TimeOutOfRange { requested: usize, horizon: usize },

    #[error("cycle-edge index {index} is outside 1..={n}")]
    EdgeIndexOutOfRange { index: usize, n: usize },

    #[error("{edge} is not a cycle-edge of the current tour")]
    NotACycleEdge { edge: CycleEdge },

    #[error("node {0} is not a vertex of the pedigree graph")]
    NotAVertex(u32),

    #[error("tours are the same vertex of the polytope")]
    SameVertex,

    #[error("tours live on different node sets ({0} vs {1} nodes)")]
    NodeSetMismatch(usize, usize),

    #[error("adjacency is only characterized for n >= 4, got {0}")]
    AdjacencyNeedsFourNodes(usize),

    #[error("graph is at time {graph}, expected {expected}")]
    GraphTimeMismatch { graph: usize, expected: usize },

    #[error("{what} = {value} is outside the supported range {range}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        range: &'static str,
    },

    #[error("Alice's strategy has no move at time {time}")]
    StrategyExhausted { time: usize },

    #[error("Alice's strategy returned {edge}, which is not a cycle-edge of her tour at time {time}")]
    StrategyReturnedNonEdge { edge: CycleEdge, time: usize },
}

pub type Result<T, E = PedigreeError> = std::result::Result<T, E>;
