//! graph6: order `N(n)` followed by the upper triangle of the adjacency
//! matrix in column order, six bits per printable byte (value + 63).

use super::ParseError;
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";
const MAX_ORDER: u64 = (1 << 36) - 1;

fn push_order(out: &mut Vec<u8>, n: usize) {
    let n = n as u64;
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
}

/// # Panics
/// If the order needs more than 36 bits.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n as u64 <= MAX_ORDER, "order too large for graph6");
    let mut out = Vec::new();
    push_order(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Decodes one graph6 line. An optional `>>graph6<<` header and surrounding
/// whitespace are accepted; byte offsets in errors refer to the trimmed line.
pub fn decode_graph6(payload: &str) -> Result<Graph, ParseError> {
    let mut lines = payload.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (idx, line) = lines.next().ok_or_else(|| ParseError::syntax(1, 0, "empty graph6 payload"))?;
    let line_no = idx + 1;
    if let Some((extra, _)) = lines.next() {
        return Err(ParseError::syntax(extra + 1, 0, "graph6 payload must be a single line"));
    }
    let text = line.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let err = |byte: usize, msg: &str| ParseError::syntax(line_no, byte, msg);
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(err(pos, "byte outside the graph6 range 63..=126"));
    }
    let six = |at: usize, count: usize| -> Result<u64, ParseError> {
        if at + count > bytes.len() {
            return Err(err(bytes.len(), "truncated order field"));
        }
        Ok(bytes[at..at + count].iter().fold(0u64, |acc, &b| (acc << 6) | u64::from(b - 63)))
    };
    let (n, body_start) = match bytes {
        [] => return Err(err(0, "missing order field")),
        [126, 126, ..] => (six(2, 6)?, 8),
        [126, ..] => (six(1, 3)?, 4),
        [b, ..] => (u64::from(b - 63), 1),
    };
    let n = usize::try_from(n).map_err(|_| err(0, "order does not fit in memory"))?;
    let bits = n.saturating_sub(1).checked_mul(n).map(|x| x / 2).ok_or_else(|| err(0, "order too large"))?;
    let expected = bits.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() != expected {
        return Err(err(
            body_start + body.len().min(expected),
            &format!("expected {expected} adjacency bytes for {n} vertices, found {}", body.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = body[expected - 1] - 63;
        if last & ((1u8 << (6 - bits % 6)) - 1) != 0 {
            return Err(err(body_start + expected - 1, "nonzero padding bits"));
        }
    }
    Ok(Graph::new(n, edges)?)
}
