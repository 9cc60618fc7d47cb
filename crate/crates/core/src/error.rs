use thiserror::Error;

use crate::graph::{Edge, Vertex};

/// Errors produced by constructions, parsing and the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid torus dimensions {m}x{n}: both sides must be at least 3")]
    InvalidDims { m: usize, n: usize },

    #[error("{u} and {v} are not adjacent on the torus")]
    NotAnEdge { u: Vertex, v: Vertex },

    #[error("vertex {vertex} lies outside a {m}x{n} torus")]
    VertexOutOfRange { vertex: Vertex, m: usize, n: usize },

    #[error("edge set does not form a single simple cycle: {0}")]
    NotACycle(String),

    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },

    #[error("walk {walk}: {msg}")]
    Semantic { walk: usize, msg: String },

    #[error("invalid label {0:?}: labels must be non-empty without whitespace or ':'")]
    InvalidLabel(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("color conflict on edge {edge}: block {block} wants {wanted}, already {existing}")]
    ColorConflict {
        edge: Edge,
        block: String,
        wanted: String,
        existing: String,
    },

    #[error("combine failed: {0}")]
    Combine(String),

    #[error("no admissible factor split for k={k} on m={m}, n={n}")]
    NoFactorSplit { k: usize, m: usize, n: usize },

    #[error("known impossible: {0}")]
    KnownImpossible(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
