//! graph6 encoding and decoding.
//!
//! Layout: one size byte `n + 63`, then the upper triangle of the adjacency
//! matrix in column order `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed
//! big-endian into 6-bit groups (zero-padded), each group offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`decode`] (single-byte size field).
pub const MAX_DECODE_ORDER: usize = 62;

pub fn encode(g: &Graph) -> String {
    String::from_utf8(encode_bytes(g)).expect("graph6 is ASCII")
}

pub(crate) fn encode_bytes(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let nbits = n * (n - 1) / 2;
    let mut out = Vec::with_capacity(4 + nbits.div_ceil(6));
    if n <= MAX_DECODE_ORDER {
        out.push(n as u8 + 63);
    } else {
        // Four-byte size form, only reachable for orders 63 and 64.
        out.extend_from_slice(&[126, 63, 63 + (n >> 6) as u8, 63 + (n & 63) as u8]);
    }
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let row = g.neighbors(j);
        for i in 0..j {
            group = (group << 1) | ((row >> i) & 1) as u8;
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
    out
}

fn parse_err<T>(offset: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        offset,
        message: message.into(),
    })
}

/// Decodes one graph6 string. An optional `>>graph6<<` header and a
/// trailing newline are tolerated.
pub fn decode(s: &str) -> Result<Graph> {
    let mut bytes = s.as_bytes();
    let mut base = 0;
    if let Some(rest) = bytes.strip_prefix(b">>graph6<<") {
        bytes = rest;
        base = 10;
    }
    if let Some(rest) = bytes.strip_suffix(b"\n") {
        bytes = rest;
    }
    if let Some(rest) = bytes.strip_suffix(b"\r") {
        bytes = rest;
    }
    let Some(&size) = bytes.first() else {
        return parse_err(base, "empty graph6 string");
    };
    if !(63..=126).contains(&size) {
        return parse_err(base, format!("size byte {size:#04x} outside 63..=126"));
    }
    if size == 126 {
        return parse_err(base, "multi-byte size form is not supported (order > 62)");
    }
    let n = (size - 63) as usize;
    if n == 0 {
        return parse_err(base, "graph6 order 0 is not a valid graph here");
    }
    let body = &bytes[1..];
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    for (k, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return parse_err(base + 1 + k, format!("byte {b:#04x} outside 63..=126"));
        }
    }
    if body.len() != expected {
        let at = base + 1 + body.len().min(expected);
        return parse_err(
            at,
            format!("expected {expected} data bytes for order {n}, found {}", body.len()),
        );
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let b = body[k / 6] - 63;
            if (b >> (5 - k % 6)) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let pad = body[expected - 1] - 63;
        if pad & ((1u8 << (6 - nbits % 6)) - 1) != 0 {
            return parse_err(base + expected, "nonzero padding bits");
        }
    }
    Graph::from_rows(rows)
}

/// Decodes a newline-separated graph6 stream, skipping blank lines.
pub fn decode_lines(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let trimmed = line.trim_end_matches(['\n', '\r']);
        if !trimmed.is_empty() {
            out.push(decode(trimmed).map_err(|e| match e {
                Error::Parse { offset: o, message } => Error::Parse {
                    offset: offset + o,
                    message,
                },
                other => other,
            })?);
        }
        offset += line.len();
    }
    Ok(out)
}

/// One graph per line with a trailing newline.
pub fn encode_lines<'a>(graphs: impl IntoIterator<Item = &'a Graph>) -> String {
    let mut out = String::new();
    for g in graphs {
        out.push_str(&encode(g));
        out.push('\n');
    }
    out
}
