//! graph6 encoding.
//!
//! Format: `N(n)` followed by the upper triangle of the adjacency matrix read
//! column by column (`(0,1), (0,2), (1,2), (0,3), ...`), six bits per byte, most
//! significant first, zero padded, each byte offset by 63. `N(n)` is one byte for
//! `n <= 62` and `~` plus three bytes otherwise.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

pub fn graph6_encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let col = g.neighbors(j);
        for i in 0..j {
            acc = (acc << 1) | ((col >> i) & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

fn parse_err(offset: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        msg: msg.into(),
    }
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and a trailing line
/// ending are accepted; anything else that deviates from the format is an error
/// carrying the byte offset of the problem.
pub fn graph6_decode(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let (skip, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    if body.is_empty() {
        return Err(parse_err(skip, "empty graph6 string"));
    }
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(skip + i, format!("byte {b:#04x} outside the graph6 range")));
        }
    }
    let (n, mut pos) = if body[0] != b'~' {
        ((body[0] - 63) as usize, 1)
    } else {
        if body.get(1) == Some(&b'~') {
            return Err(parse_err(skip + 1, "orders above 258047 are not supported"));
        }
        if body.len() < 4 {
            return Err(parse_err(skip + body.len(), "truncated order field"));
        }
        let n = body[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 4)
    };
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge { n, max: MAX_ORDER });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() - pos != need {
        return Err(parse_err(
            skip + pos.min(body.len()),
            format!("expected {need} edge bytes for n = {n}, found {}", body.len() - pos),
        ));
    }
    let mut g = Graph::empty(n)?;
    let mut t = 0usize;
    let mut byte = 0u8;
    for j in 1..n {
        for i in 0..j {
            if t.is_multiple_of(6) {
                byte = body[pos] - 63;
                pos += 1;
            }
            if (byte >> (5 - t % 6)) & 1 == 1 {
                g.set_edge(i, j);
            }
            t += 1;
        }
    }
    if !t.is_multiple_of(6) {
        let pad = byte & ((1u8 << (6 - t % 6)) - 1);
        if pad != 0 {
            return Err(parse_err(skip + pos - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Reads every non-blank line of a graph6 stream.
pub fn read_graph6<R: BufRead>(reader: R) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| parse_err(0, format!("line {}: {e}", i + 1)))?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(graph6_decode(line.trim())?);
    }
    Ok(out)
}
