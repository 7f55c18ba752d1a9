//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A node id outside `0..node_count` was supplied.
    #[error("unknown node id {node} (graph has {node_count} nodes)")]
    UnknownNode { node: usize, node_count: usize },

    /// An edge id that is not present in the graph was supplied.
    #[error("unknown edge id {0}")]
    UnknownEdge(usize),

    /// Loops are not representable.
    #[error("loops are not allowed (edge {0}-{0})")]
    LoopEdge(usize),

    /// Malformed argument (bad partition, parameter out of range, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Edge-list text that does not follow the `n m` / `u v` format.
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A desk-scale limit was exceeded.
    #[error("resource limit exceeded: {what} is {value}, limit {limit}")]
    ResourceLimit {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    /// A documented precondition of an operation does not hold.
    #[error("precondition violated: {predicate}{}", fmt_node(.violating_node))]
    ContractViolation {
        predicate: &'static str,
        violating_node: Option<usize>,
    },

    /// An internal consistency check failed; indicates a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

fn fmt_node(node: &Option<usize>) -> String {
    match node {
        Some(v) => format!(" (violating node {v})"),
        None => String::new(),
    }
}
