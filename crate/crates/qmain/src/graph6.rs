//! Short-form graph6 encoding: upper-triangle adjacency bits in
//! column-major order, packed into 6-bit characters offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;
const LONG_FORM: u8 = 126;

fn payload_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Encodes a graph as a short-form graph6 string.
pub fn to_graph6(g: &Graph) -> String {
    String::from_utf8(to_graph6_bytes(g)).expect("graph6 bytes are printable ASCII")
}

pub(crate) fn to_graph6_bytes(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut out = Vec::with_capacity(1 + payload_len(n));
    out.push(n as u8 + OFFSET);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk <<= 1;
            if g.has_edge(i, j) {
                chunk |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(chunk + OFFSET);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + OFFSET);
    }
    out
}

/// Parses a short-form graph6 string. A leading `>>graph6<<` header is
/// tolerated; long-form length headers (n > 62) are rejected.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let trimmed = text.trim();
    let body = trimmed.strip_prefix(">>graph6<<").unwrap_or(trimmed);
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(Error::MalformedEncoding("empty graph6 input".into()));
    }
    if bytes[0] == LONG_FORM {
        return Err(Error::UnsupportedLength);
    }
    if bytes[0] < OFFSET || bytes[0] > OFFSET + 62 {
        return Err(Error::MalformedEncoding(format!(
            "bad graph6 order byte {:#04x}",
            bytes[0]
        )));
    }
    let n = (bytes[0] - OFFSET) as usize;
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let payload = &bytes[1..];
    if payload.len() != payload_len(n) {
        return Err(Error::MalformedEncoding(format!(
            "expected {} payload bytes for n={}, got {}",
            payload_len(n),
            n,
            payload.len()
        )));
    }
    let mut bits = Vec::with_capacity(payload.len() * 6);
    for &b in payload {
        if !(OFFSET..=LONG_FORM).contains(&b) {
            return Err(Error::MalformedEncoding(format!(
                "byte {b:#04x} outside graph6 range"
            )));
        }
        let v = b - OFFSET;
        for shift in (0..6).rev() {
            bits.push((v >> shift) & 1 == 1);
        }
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    if bits[idx..].iter().any(|&b| b) {
        return Err(Error::MalformedEncoding("nonzero padding bits".into()));
    }
    Graph::from_edges(n, &edges)
}
