//! Text formats for finite-valued networks.
//!
//! Two file formats are covered:
//!
//! * `.net` - a k-valued logical network: one update rule per node, optional
//!   controls, declared outputs, and optional block annotations for
//!   aggregation. Parsed into [`Network`].
//! * `.ts` - a raw (possibly nondeterministic, possibly partial) transition
//!   system given by explicit successor sets and a total observation
//!   labeling. Parsed into [`TransitionSystem`].
//!
//! The crate also builds the dependency graph of a network
//! ([`NetworkGraph`]), evaluates update rules pointwise, and prints
//! expressions back to source form.

mod ast;
mod graph;
mod lexer;
mod parser;
mod pretty;
mod ts;

pub use ast::{BinOp, Block, Expr, Network, Node, Output, TransitionSystem};
pub use graph::{NetworkGraph, Vertex};
pub use parser::{parse_expr, parse_network};
pub use ts::parse_transition_system;

use thiserror::Error;

/// Parse or validation failure, located by source line and column and, when
/// one name is at fault, by that identifier.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, col {col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub identifier: Option<String>,
    pub msg: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, col: usize, msg: impl Into<String>) -> Self {
        Self { line, col, identifier: None, msg: msg.into() }
    }

    pub(crate) fn named(line: usize, col: usize, name: &str, msg: impl Into<String>) -> Self {
        Self { line, col, identifier: Some(name.to_string()), msg: msg.into() }
    }
}
