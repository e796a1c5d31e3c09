//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix in column-major order, six bits per printable byte
//! (offset 63), most significant bit first.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const OFFSET: u8 = 63;

fn parse_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        reason: reason.into(),
    }
}

fn sextet(bytes: &[u8], at: usize) -> Result<u8> {
    match bytes.get(at) {
        None => Err(parse_err(at, "unexpected end of record")),
        Some(&b) if (63..=126).contains(&b) => Ok(b - OFFSET),
        Some(&b) => Err(parse_err(at, format!("byte {b:#04x} outside the graph6 range"))),
    }
}

/// Decodes one graph6 record. Surrounding whitespace and an optional
/// `>>graph6<<` header are ignored.
pub fn from_graph6(text: &str) -> Result<Graph> {
    let mut body = text.trim().as_bytes();
    let mut base = text.len() - text.trim_start().len();
    if let Some(rest) = body.strip_prefix(b">>graph6<<") {
        body = rest;
        base += 10;
    }
    let at = |i: usize| base + i;

    let first = sextet(body, 0).map_err(|e| relocate(e, base))?;
    let (n, mut pos) = if first < 63 {
        (first as usize, 1)
    } else {
        // 126 followed by three sextets; 126,126 (n > 258047) is never valid here.
        if body.get(1) == Some(&126) {
            return Err(parse_err(at(1), "vertex count exceeds 64"));
        }
        let mut n = 0usize;
        for i in 1..4 {
            n = (n << 6) | sextet(body, i).map_err(|e| relocate(e, base))? as usize;
        }
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(parse_err(at(0), format!("vertex count {n} exceeds 64")));
    }

    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if body.len() < pos + nbytes {
        return Err(parse_err(
            at(body.len()),
            format!("truncated bit field: expected {nbytes} data bytes"),
        ));
    }
    if body.len() > pos + nbytes {
        return Err(parse_err(at(pos + nbytes), "trailing bytes after record"));
    }

    let mut rows = vec![0u64; n];
    let mut k = 0usize;
    let mut current = 0u8;
    'outer: for j in 1..n {
        for i in 0..j {
            if k.is_multiple_of(6) {
                current = sextet(body, pos).map_err(|e| relocate(e, base))?;
                pos += 1;
            }
            let set = current & (0b10_0000 >> (k % 6)) != 0;
            if set {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
            if k == nbits {
                break 'outer;
            }
        }
    }
    // Padding bits in the final byte must be zero.
    if nbits % 6 != 0 {
        let pad_mask = (1u8 << (6 - nbits % 6)) - 1;
        if current & pad_mask != 0 {
            return Err(parse_err(at(pos - 1), "nonzero padding bits"));
        }
    }
    Graph::from_rows(rows)
}

fn relocate(e: Error, base: usize) -> Error {
    match e {
        Error::Parse { offset, reason } => Error::Parse {
            offset: offset + base,
            reason,
        },
        other => other,
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n) / 12 + 1);
    if n < 63 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + OFFSET);
        out.push(((n >> 6) & 63) as u8 + OFFSET);
        out.push((n & 63) as u8 + OFFSET);
    }
    let mut acc = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            acc <<= 1;
            if g.has_edge(i, j) {
                acc |= 1;
            }
            k += 1;
            if k.is_multiple_of(6) {
                out.push(acc + OFFSET);
                acc = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        acc <<= 6 - k % 6;
        out.push(acc + OFFSET);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}
