//! graph6 text encoding: packed upper-triangle adjacency bits, 6 bits per
//! printable byte (offset 63), columns `(0,1), (0,2), (1,2), (0,3), ...`.

use super::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("malformed length header")]
    MalformedHeader,
    #[error("byte {0:#04x} outside the printable graph6 range 63..=126")]
    NonPrintableByte(u8),
    #[error("expected {expected} payload bytes, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("padding bits after the upper triangle are not zero")]
    TrailingBits,
}

/// Encodes a graph as a graph6 line (without trailing newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut used = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            used += 1;
            if used == 6 {
                out.push(acc + 63);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((acc << (6 - used)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 line. A leading `>>graph6<<` marker is accepted.
pub fn decode_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text
        .strip_prefix(">>graph6<<")
        .unwrap_or(text)
        .trim_end_matches(['\r', '\n']);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::MalformedHeader);
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::NonPrintableByte(b));
        }
    }
    let (n, header_len) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(Graph6Error::MalformedHeader);
        }
        let n = ((bytes[1] - 63) as usize) << 12
            | ((bytes[2] - 63) as usize) << 6
            | (bytes[3] - 63) as usize;
        (n, 4)
    } else {
        if bytes.len() < 8 {
            return Err(Graph6Error::MalformedHeader);
        }
        let mut n = 0usize;
        for &b in &bytes[2..8] {
            n = n << 6 | (b - 63) as usize;
        }
        (n, 8)
    };

    let bit_count = n * (n - 1) / 2;
    let expected = bit_count.div_ceil(6);
    let payload = &bytes[header_len..];
    if payload.len() != expected {
        return Err(Graph6Error::WrongLength {
            expected,
            found: payload.len(),
        });
    }

    let mut g = Graph::empty(n);
    let mut idx = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = payload[idx / 6] - 63;
            if byte >> (5 - idx % 6) & 1 == 1 {
                g.try_add_edge(u, v).expect("upper-triangle bits are loop/dup free");
            }
            idx += 1;
        }
    }
    // Padding beyond the triangle must be zero.
    while idx < expected * 6 {
        let byte = payload[idx / 6] - 63;
        if byte >> (5 - idx % 6) & 1 == 1 {
            return Err(Graph6Error::TrailingBits);
        }
        idx += 1;
    }
    g.finish_sort();
    Ok(g)
}

/// Decodes a graph6 file, one graph per line. Returns per-line results so
/// callers can keep processing past bad lines.
pub fn decode_graph6_file(contents: &str) -> Vec<(usize, Result<Graph, Graph6Error>)> {
    contents
        .lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(i, line)| (i + 1, decode_graph6(line)))
        .collect()
}
