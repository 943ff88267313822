use thiserror::Error;

use crate::graph::MAX_VERTICES;

/// Errors raised by the graph algebra and the enumeration routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {0} vertices; at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}: simple graphs have no loops")]
    Loop(usize),
    #[error("vertex-count mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("operation requires a nonempty vertex set")]
    EmptyVertexSet,
    #[error("{n} vertices exceeds the canonicalization bound {bound}")]
    CanonBoundExceeded { n: usize, bound: usize },
    #[error("pattern order {k} exceeds the host order {n}")]
    PatternTooLarge { k: usize, n: usize },
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("formula undefined: {0}")]
    FormulaDomain(String),
    #[error("empty family has no common core")]
    EmptyFamily,
    #[error("catalog for n = {found} cannot seed n = {wanted}")]
    CatalogMismatch { found: usize, wanted: usize },
    #[error("n = {n} exceeds the transversal limit {limit}")]
    TransversalLimit { n: usize, limit: usize },
    #[error("class key missing from catalog for n = {0}; the catalog is incomplete or corrupt")]
    MissingType(usize),
    #[error("corrupt catalog: {0}")]
    CorruptCatalog(String),
    #[error("invalid graph expression {expr:?}: {reason}")]
    BadExpression { expr: String, reason: String },
}

pub type Result<T, E = GraphError> = std::result::Result<T, E>;
