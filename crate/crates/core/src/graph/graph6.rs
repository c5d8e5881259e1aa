//! The graph6 format: a size field `N(v)` followed by the upper triangle of
//! the adjacency matrix in column order `x(0,1), x(0,2), x(1,2), x(0,3), ...`,
//! packed six bits to a byte, most significant bit first, each byte offset
//! by 63.

use alloc::string::String;
use alloc::vec::Vec;

use super::DenseGraph;
use crate::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn push_size(out: &mut Vec<u8>, v: usize) {
    if v <= 62 {
        out.push(63 + v as u8);
    } else if v <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((v >> shift) & 0x3f) as u8);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(63 + ((v >> shift) & 0x3f) as u8);
        }
    }
}

pub fn graph6_encode(g: &DenseGraph) -> String {
    let v = g.vertex_count();
    let nbits = v * v.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(8 + nbits.div_ceil(6));
    push_size(&mut out, v);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..v {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    // Every byte is in 63..=126.
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedGraph6(msg.into())
}

pub fn graph6_decode(s: &str) -> Result<DenseGraph> {
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let s = s.trim_end_matches(['\n', '\r']);
    let bytes = s.as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(malformed(alloc::format!("byte {} at offset {pos} out of range", bytes[pos])));
    }
    let six = |b: u8| usize::from(b - 63);
    let (v, body) = match bytes {
        [] => return Err(malformed("empty string")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(malformed("truncated size field"));
            }
            let v = rest[..6].iter().fold(0usize, |acc, &b| (acc << 6) | six(b));
            (v, &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(malformed("truncated size field"));
            }
            let v = rest[..3].iter().fold(0usize, |acc, &b| (acc << 6) | six(b));
            (v, &rest[3..])
        }
        [first, rest @ ..] => (six(*first), rest),
    };
    let nbits = v * v.saturating_sub(1) / 2;
    if body.len() != nbits.div_ceil(6) {
        return Err(malformed(alloc::format!(
            "expected {} data bytes for {v} vertices, found {}",
            nbits.div_ceil(6),
            body.len()
        )));
    }
    let bit = |k: usize| (six(body[k / 6]) >> (5 - k % 6)) & 1 == 1;
    if (nbits..body.len() * 6).any(bit) {
        return Err(malformed("nonzero padding bits"));
    }
    let mut g = DenseGraph::empty(v);
    let mut k = 0;
    for j in 1..v {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}
