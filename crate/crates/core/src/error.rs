use alloc::string::String;

use crate::graph::NodeId;

/// Errors produced by the ranking core.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An edge references a node index that does not exist.
    #[error("dangling {kind} edge ({from} -> {to}): {reason}")]
    DanglingEdge {
        kind: &'static str,
        from: usize,
        to: usize,
        reason: &'static str,
    },
    /// A node record is unusable (empty name, duplicate key, ...).
    #[error("invalid node: {0}")]
    InvalidNode(String),
    #[error("unknown node {0}")]
    UnknownNode(NodeId),
    #[error("no wrote edge between {author} and {paper}")]
    MissingEdge { author: NodeId, paper: NodeId },
    #[error("invalid parameter: {0}")]
    InvalidParams(String),
    #[error("empty input: {0}")]
    Empty(&'static str),
    #[error("mismatched node sets: {0}")]
    Mismatch(String),
    #[error("unsupported: {0}")]
    Unsupported(&'static str),
    #[error("graph has {nodes} nodes, above the oracle limit of {limit}")]
    TooLarge { nodes: usize, limit: usize },
    #[error("no convergence after {iterations} iterations (residual {residual:e})")]
    NonConvergence { iterations: usize, residual: f64 },
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
