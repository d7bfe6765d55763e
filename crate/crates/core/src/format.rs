//! graph6 and edge-list codecs.
//!
//! graph6 layout (single-byte size form, `n ≤ 62`): every byte stores
//! `63 +` a 6-bit group. The first byte is `63 + n`; the remaining bytes
//! pack the upper-triangle bits x(0,1), x(0,2), x(1,2), x(0,3), …
//! column-major, most significant bit first, zero-padded to a multiple
//! of six.

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("malformed graph6: {0}")]
    Malformed(String),
    #[error("graph6 size {0} not supported (maximum {MAX_VERTICES})")]
    UnsupportedSize(usize),
    #[error("malformed edge list: {0}")]
    MalformedEdges(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Parses one graph6 line.
pub fn parse_graph6(text: &str) -> Result<Graph, FormatError> {
    let bytes = text.trim_end_matches(['\r', '\n']).as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::Malformed("empty line".into()));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(FormatError::Malformed(format!(
                "byte value {b} outside the graph6 range 63..=126"
            )));
        }
    }
    let n = usize::from(bytes[0] - 63);
    if bytes[0] == 126 || n > MAX_VERTICES {
        // 126 introduces the multi-byte size forms (n ≥ 63).
        return Err(FormatError::UnsupportedSize(if bytes[0] == 126 { 63 } else { n }));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() != 1 + nbytes {
        return Err(FormatError::Malformed(format!(
            "expected {} data bytes for n={n}, found {}",
            nbytes,
            bytes.len() - 1
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0usize;
    for col in 1..n {
        for row in 0..col {
            let byte = bytes[1 + k / 6] - 63;
            if (byte >> (5 - (k % 6))) & 1 == 1 {
                edges.push((row, col));
            }
            k += 1;
        }
    }
    // Padding bits past the triangle must be zero.
    for pad in nbits..nbytes * 6 {
        let byte = bytes[1 + pad / 6] - 63;
        if (byte >> (5 - (pad % 6))) & 1 != 0 {
            return Err(FormatError::Malformed("nonzero padding bits".into()));
        }
    }
    Ok(Graph::from_edges(n, edges)?)
}

/// Encodes a graph as one graph6 line (no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let mut out = Vec::with_capacity(1 + nbytes);
    out.push(63 + n as u8);
    out.extend(std::iter::repeat_n(63u8, nbytes));
    let mut k = 0usize;
    for col in 1..n {
        for row in 0..col {
            if g.has_edge(row, col) {
                out[1 + k / 6] += 1 << (5 - (k % 6));
            }
            k += 1;
        }
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses the edge-list format: a header line `n <count>` followed by
/// one `u v` pair per line. Blank lines are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| FormatError::MalformedEdges("missing header".into()))?;
    let mut parts = header.split_whitespace();
    match parts.next() {
        Some("n") => {}
        other => {
            return Err(FormatError::MalformedEdges(format!(
                "header must start with 'n', found {other:?}"
            )))
        }
    }
    let n: usize = parts
        .next()
        .ok_or_else(|| FormatError::MalformedEdges("header missing vertex count".into()))?
        .parse()
        .map_err(|e| FormatError::MalformedEdges(format!("bad vertex count: {e}")))?;
    if parts.next().is_some() {
        return Err(FormatError::MalformedEdges("trailing tokens in header".into()));
    }
    let mut edges = Vec::new();
    for line in lines {
        let mut it = line.split_whitespace();
        let u: usize = it
            .next()
            .ok_or_else(|| FormatError::MalformedEdges(format!("bad edge line {line:?}")))?
            .parse()
            .map_err(|e| FormatError::MalformedEdges(format!("bad endpoint in {line:?}: {e}")))?;
        let v: usize = it
            .next()
            .ok_or_else(|| FormatError::MalformedEdges(format!("edge line {line:?} missing endpoint")))?
            .parse()
            .map_err(|e| FormatError::MalformedEdges(format!("bad endpoint in {line:?}: {e}")))?;
        if it.next().is_some() {
            return Err(FormatError::MalformedEdges(format!(
                "trailing tokens in edge line {line:?}"
            )));
        }
        edges.push((u, v));
    }
    Ok(Graph::from_edges(n, edges)?)
}

/// Renders the edge-list format accepted by [`parse_edge_list`].
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
