//! graph6 encoding for graphs of up to 62 vertices.
//!
//! The size is a single byte `n + 63`; the upper triangle of the adjacency
//! matrix follows column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`),
//! packed six bits per byte, most significant bit first, zero padded, with
//! 63 added to every byte.

use crate::error::{ParseError, Result};
use crate::graph::{Graph, MAX_VERTICES};

pub const HEADER: &str = ">>graph6<<";

/// Decodes one graph6 line. Edges come out in column order.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let (&first, data) = bytes.split_first().ok_or(ParseError::Empty)?;
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(ParseError::BadCharacter { offset, byte }.into());
        }
    }
    // 126 introduces the multi-byte size field
    if first == 126 {
        return Err(ParseError::UnsupportedSize { max: MAX_VERTICES }.into());
    }
    let n = (first - 63) as usize;
    if n > MAX_VERTICES {
        return Err(ParseError::UnsupportedSize { max: MAX_VERTICES }.into());
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if data.len() != expected {
        return Err(ParseError::Truncated {
            expected,
            found: data.len(),
        }
        .into());
    }
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let padding = expected * 6 - bits;
    if (bits..bits + padding).any(bit) {
        return Err(ParseError::NonZeroPadding.into());
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

/// Encodes `graph` without header or trailing newline.
pub fn write_graph6(graph: &Graph) -> String {
    let n = graph.vertex_count();
    let bits = n * n.saturating_sub(1) / 2;
    let mut data = vec![0u8; bits.div_ceil(6)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if graph.has_edge(i, j) {
                data[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(data.len() + 1);
    out.push((n as u8 + 63) as char);
    out.extend(data.into_iter().map(|b| (b + 63) as char));
    out
}

/// Parses a corpus with one graph6 code per non-empty line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(parse_graph6)
        .collect()
}

/// True when `text` looks like graph6 rather than an edge list.
pub fn looks_like_graph6(text: &str) -> bool {
    let Some(line) = text.lines().map(str::trim).find(|l| !l.is_empty()) else {
        return false;
    };
    line.starts_with(HEADER) || line.bytes().all(|b| (63..=126).contains(&b))
}
