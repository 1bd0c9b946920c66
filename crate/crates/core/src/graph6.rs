//! The graph6 text format.
//!
//! A record is `N(n)` followed by the upper triangle of the adjacency matrix,
//! taken column by column (`(0,1), (0,2), (1,2), (0,3), ...`), packed into
//! 6-bit groups, zero padded, each group offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &[u8] = b">>graph6<<";

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    push_size(&mut out, n);

    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
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
    // Every byte is in 63..=126.
    String::from_utf8(out).expect("graph6 output is ASCII")
}

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
}

/// Decodes one graph6 record. An optional `>>graph6<<` header and trailing
/// line terminators are accepted.
pub fn decode_graph6(input: &[u8]) -> Result<Graph> {
    let mut start = 0;
    if input.starts_with(HEADER) {
        start = HEADER.len();
    }
    let mut end = input.len();
    while end > start && matches!(input[end - 1], b'\n' | b'\r') {
        end -= 1;
    }
    let rec = &input[start..end];
    let err = |pos: usize, reason: &str| Error::Parse {
        offset: start + pos,
        reason: reason.to_string(),
    };

    if rec.is_empty() {
        return Err(err(0, "empty record"));
    }
    match rec[0] {
        b':' => return Err(err(0, "sparse6 records are not supported")),
        b'&' => return Err(err(0, "digraph6 records are not supported")),
        _ => {}
    }
    if let Some(pos) = rec.iter().position(|&c| !(63..=126).contains(&c)) {
        return Err(err(pos, "byte outside the printable range 63..=126"));
    }

    let (n, mut pos) = if rec[0] != 126 {
        ((rec[0] - 63) as usize, 1)
    } else if rec.len() >= 2 && rec[1] != 126 {
        if rec.len() < 4 {
            return Err(err(rec.len(), "truncated 4-byte size field"));
        }
        let n = rec[1..4].iter().fold(0usize, |acc, &c| acc << 6 | (c - 63) as usize);
        (n, 4)
    } else {
        if rec.len() < 8 {
            return Err(err(rec.len(), "truncated 8-byte size field"));
        }
        let n = rec[2..8].iter().fold(0usize, |acc, &c| acc << 6 | (c - 63) as usize);
        (n, 8)
    };

    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let body = &rec[pos..];
    if body.len() < nbytes {
        return Err(err(rec.len(), &format!("expected {nbytes} adjacency bytes, found {}", body.len())));
    }
    if body.len() > nbytes {
        return Err(err(pos + nbytes, "trailing bytes after adjacency data"));
    }

    let mut g = Graph::new(n);
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            bit += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = body[nbytes - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            pos += nbytes - 1;
            return Err(err(pos, "non-zero padding bits"));
        }
    }
    Ok(g)
}

/// Decodes every non-empty line of a graph6 file.
pub fn decode_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let trimmed = line.trim_end_matches(['\n', '\r']);
        if !trimmed.is_empty() {
            graphs.push(decode_graph6(trimmed.as_bytes()).map_err(|e| match e {
                Error::Parse { offset: o, reason } => Error::Parse {
                    offset: offset + o,
                    reason,
                },
                other => other,
            })?);
        }
        offset += line.len();
    }
    Ok(graphs)
}
