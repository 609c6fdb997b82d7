//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by graph construction, codecs and the exact engines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {vertex} rejected")]
    SelfLoop { vertex: usize },

    #[error("requested order {requested} exceeds the representation cap {limit}")]
    CapacityExceeded { requested: usize, limit: usize },

    #[error("exact {what} is limited to {limit} vertices, got {order}")]
    OrderCap {
        what: &'static str,
        order: usize,
        limit: usize,
    },

    #[error("invalid graph6 input: {reason}")]
    Graph6 { reason: String },

    #[error("invalid construction parameters: {reason}")]
    Construction { reason: String },

    #[error("unknown construction name `{name}`")]
    UnknownName { name: String },

    #[error("variant {variant} out of range ({available} available)")]
    VariantOutOfRange { variant: usize, available: usize },

    #[error("decomposition families require chromatic number >= 3, got {chromatic}")]
    BipartiteDecomposition { chromatic: usize },

    #[error("search on {n} vertices exceeds the feasibility guard ({hint})")]
    SearchInfeasible { n: usize, hint: String },

    #[error("node budget exhausted after {explored} extension nodes")]
    BudgetExhausted { explored: u64 },

    #[error("seed bound {seed} exceeds the true maximum; no free graph attains it")]
    SeedExceedsMaximum { seed: u64 },

    #[error("no forbidden-free graph exists on {n} vertices")]
    NoFreeGraphs { n: usize },

    #[error("worker pool setup failed: {reason}")]
    Parallel { reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
