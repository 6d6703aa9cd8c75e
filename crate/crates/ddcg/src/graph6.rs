//! graph6 encoding: the standard compact text format for small graphs.
//!
//! A graph on v ≤ 62 vertices encodes as the byte `chr(v + 63)` followed by
//! the upper-triangle adjacency bits read column by column (x(0,1), x(0,2),
//! x(1,2), x(0,3), …), packed big-endian into 6-bit groups, each emitted as
//! `chr(group + 63)`.  Trailing pad bits are zero.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("graph6 string is malformed: {0}")]
    Malformed(&'static str),
    #[error("graph6 supports 1 ≤ v ≤ 62 here, got {0}")]
    UnsupportedSize(usize),
}

/// Encodes a graph as a graph6 string.
pub fn encode(g: &Graph) -> Result<String, Graph6Error> {
    let v = g.v();
    if !(1..=62).contains(&v) {
        return Err(Graph6Error::UnsupportedSize(v));
    }
    let mut out = vec![(v + 63) as u8];
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..v {
        for i in 0..j {
            group = group << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Decodes a graph6 string produced by [`encode`] (single-byte size header).
pub fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end().as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Malformed("empty string"));
    }
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(Graph6Error::Malformed("byte outside graph6 range"));
    }
    let v = (bytes[0] - 63) as usize;
    if !(1..=62).contains(&v) {
        return Err(Graph6Error::Malformed("unsupported vertex count"));
    }
    let bit_count = v * (v - 1) / 2;
    let expected_len = 1 + bit_count.div_ceil(6);
    if bytes.len() != expected_len {
        return Err(Graph6Error::Malformed("wrong length for vertex count"));
    }
    let mut g = Graph::empty(v).expect("v ≤ 62");
    let mut cursor = 0;
    for j in 1..v {
        for i in 0..j {
            let byte = bytes[1 + cursor / 6] - 63;
            if byte >> (5 - cursor % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            cursor += 1;
        }
    }
    // Pad bits must be zero for a canonical encoding.
    if cursor % 6 != 0 {
        let last = bytes[bytes.len() - 1] - 63;
        if last & ((1 << (6 - cursor % 6)) - 1) != 0 {
            return Err(Graph6Error::Malformed("nonzero padding bits"));
        }
    }
    Ok(g)
}
