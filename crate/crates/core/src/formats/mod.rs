//! graph6 and the toolkit's own `.hg` hypergraph text format.

mod graph6;
mod hg;

use thiserror::Error;

use crate::hypercore::{HypergraphError, Violation};

pub use graph6::{parse_graph6, write_graph6};
pub use hg::{parse_hg, write_hg, HgDocument};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("graph6: byte {byte} at offset {offset} is outside 63..=126")]
    ByteOutOfRange { offset: usize, byte: u8 },
    #[error("graph6: truncated, expected {expected} more bytes but found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("graph6: {extra} trailing bytes after the adjacency bits")]
    TrailingGarbage { extra: usize },
    #[error("graph6: padding bits are not zero")]
    NonZeroPadding,
    #[error("graph6: a graph with no vertices is not representable")]
    EmptyGraph,
    #[error("graph6 only encodes 2-uniform hypergraphs")]
    NotAGraph,
    #[error("line {line}: bad header: {reason}")]
    BadHeader { line: usize, reason: String },
    #[error("line {line}: {token:?} is not a vertex id")]
    BadToken { line: usize, token: String },
    #[error("line {line}: {violation}")]
    BadEdge { line: usize, violation: Violation },
    #[error("header declares {declared} edges but {found} were given")]
    EdgeCount { declared: usize, found: usize },
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}
