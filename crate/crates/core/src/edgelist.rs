//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! n 5
//! 0 1
//! 1 2
//! ```
//!
//! The `n <count>` header is optional and must come before the first edge.
//! Without it the vertex count is one more than the largest label.

use std::collections::HashSet;

use crate::error::{Error, ParseError, Result};
use crate::graph::{Graph, Vertex};

pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut seen = HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let malformed = || ParseError::Malformed {
            line,
            content: content.to_string(),
        };
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(malformed().into());
        }
        if fields[0] == "n" {
            if declared.is_some() || !edges.is_empty() {
                return Err(malformed().into());
            }
            declared = Some(fields[1].parse().map_err(|_| malformed())?);
            continue;
        }
        let u: Vertex = fields[0].parse().map_err(|_| malformed())?;
        let v: Vertex = fields[1].parse().map_err(|_| malformed())?;
        if u == v {
            return Err(ParseError::Loop { line, vertex: u }.into());
        }
        if let Some(count) = declared {
            for vertex in [u, v] {
                if vertex >= count {
                    return Err(ParseError::VertexOutOfRange {
                        line,
                        vertex,
                        count,
                    }
                    .into());
                }
            }
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(ParseError::DuplicateEdge { line, u, v }.into());
        }
        edges.push((u, v));
    }
    let n = declared.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Graph::new(n, edges)
}

/// Writes the header and one `u v` line per edge in id order.
pub fn write_edgelist(graph: &Graph) -> String {
    let mut out = format!("n {}\n", graph.vertex_count());
    for &(u, v) in graph.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Input encodings understood by [`read_graphs`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Graph6,
}

impl Format {
    pub fn detect(text: &str) -> Format {
        if crate::graph6::looks_like_graph6(text) {
            Format::Graph6
        } else {
            Format::EdgeList
        }
    }
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" => Ok(Format::EdgeList),
            "graph6" => Ok(Format::Graph6),
            other => Err(Error::BadParameters(format!("unknown format {other:?}"))),
        }
    }
}

/// Reads one edge list, or one graph per line of graph6.
pub fn read_graphs(text: &str, format: Option<Format>) -> Result<Vec<Graph>> {
    match format.unwrap_or_else(|| Format::detect(text)) {
        Format::EdgeList => Ok(vec![parse_edgelist(text)?]),
        Format::Graph6 => {
            let graphs = crate::graph6::parse_graph6_lines(text)?;
            if graphs.is_empty() {
                return Err(ParseError::Empty.into());
            }
            Ok(graphs)
        }
    }
}

pub fn write_graph(graph: &Graph, format: Format) -> String {
    match format {
        Format::EdgeList => write_edgelist(graph),
        Format::Graph6 => crate::graph6::write_graph6(graph) + "\n",
    }
}
