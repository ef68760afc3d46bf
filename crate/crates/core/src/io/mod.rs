//! Text formats for graphs: standard graph6 and a plain 0-based edge list.

mod edgelist;
mod graph6;

use serde::Serialize;
use thiserror::Error;

pub use edgelist::{decode_edgelist, encode_edgelist};
pub use graph6::{decode_graph6, encode_graph6};

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphFormat {
    Graph6,
    Edgelist,
}

impl GraphFormat {
    /// Guesses the format from a file extension (`g6`, `graph6`, `el`,
    /// `edgelist`, `txt`), falling back to the payload: a first line made of
    /// two integers is an edge list, anything else graph6.
    pub fn detect(extension: Option<&str>, payload: &str) -> Self {
        match extension.map(str::to_ascii_lowercase).as_deref() {
            Some("g6" | "graph6") => return GraphFormat::Graph6,
            Some("el" | "edgelist" | "txt") => return GraphFormat::Edgelist,
            _ => {}
        }
        let first = payload.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
        let fields: Vec<&str> = first.split_whitespace().collect();
        if fields.len() == 2 && fields.iter().all(|f| f.parse::<usize>().is_ok()) {
            GraphFormat::Edgelist
        } else {
            GraphFormat::Graph6
        }
    }
}

/// A graph serialized in one of the supported formats.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphDocument {
    pub format: GraphFormat,
    pub payload: String,
}

impl GraphDocument {
    pub fn new(format: GraphFormat, payload: impl Into<String>) -> Self {
        Self { format, payload: payload.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, byte {byte}: {message}")]
    Syntax { line: usize, byte: usize, message: String },
    #[error("invalid graph: {0}")]
    Validation(#[from] GraphError),
}

impl ParseError {
    pub(crate) fn syntax(line: usize, byte: usize, message: impl Into<String>) -> Self {
        ParseError::Syntax { line, byte, message: message.into() }
    }
}

pub fn parse_graph(doc: &GraphDocument) -> Result<Graph, ParseError> {
    match doc.format {
        GraphFormat::Graph6 => decode_graph6(&doc.payload),
        GraphFormat::Edgelist => decode_edgelist(&doc.payload),
    }
}

pub fn emit_graph(g: &Graph, format: GraphFormat) -> GraphDocument {
    let payload = match format {
        GraphFormat::Graph6 => encode_graph6(g),
        GraphFormat::Edgelist => encode_edgelist(g),
    };
    GraphDocument { format, payload }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detection() {
        assert_eq!(GraphFormat::detect(Some("g6"), "2 1"), GraphFormat::Graph6);
        assert_eq!(GraphFormat::detect(Some("EL"), "C~"), GraphFormat::Edgelist);
        assert_eq!(GraphFormat::detect(None, "2 1\n0 1\n"), GraphFormat::Edgelist);
        assert_eq!(GraphFormat::detect(None, "C~\n"), GraphFormat::Graph6);
    }

    #[test]
    fn documents_round_trip() {
        let g = crate::graph::cycle(7);
        for f in [GraphFormat::Graph6, GraphFormat::Edgelist] {
            assert_eq!(parse_graph(&emit_graph(&g, f)).unwrap(), g);
        }
    }
}
