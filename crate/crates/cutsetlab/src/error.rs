use thiserror::Error;

use crate::graph::VertexSet;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {v} out of range 1..={n}")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("vertex count {n} exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },

    #[error("invalid edge {{{u},{v}}}: {reason}")]
    InvalidEdge { u: usize, v: usize, reason: String },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid graph6 input: {0}")]
    Graph6(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("{0} is not a cut set")]
    NotACutSet(VertexSet),

    #[error("vertex {v} is not a member of {set}")]
    VertexNotInSet { v: usize, set: VertexSet },

    #[error("{set} is not a subset of {of}")]
    NotASubset { set: VertexSet, of: VertexSet },

    #[error("reduction input must be a proper subset of the vertex set")]
    FullVertexSet,

    #[error("no removal order reaches a cut set disjoint from the avoid set {avoid}")]
    AvoidInfeasible { avoid: VertexSet },

    #[error("duplicate set {0} in set system")]
    DuplicateSet(VertexSet),

    #[error("{face} is not a face of the complex")]
    NotAFace { face: String },

    #[error("complex has no facets")]
    EmptyComplex,

    #[error("invalid face string {input:?}: {msg}")]
    FaceParse { input: String, msg: String },

    #[error("max_n {requested} exceeds the safety cap {cap}")]
    CapExceeded { requested: usize, cap: usize },

    #[error("{0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
