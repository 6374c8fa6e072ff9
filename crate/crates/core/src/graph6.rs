//! The graph6 text format (one graph per line, upper triangle packed into
//! printable 6-bit chunks). Only orders up to [`MAX_ORDER`] are accepted, so
//! the order always fits the single-byte header form.

use thiserror::Error;

use crate::graph::{Graph, MAX_ORDER};

const BIAS: u8 = 63;
const OPTIONAL_HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph6 parse error at byte {position}: {kind}")]
pub struct Graph6Error {
    /// Zero-based byte offset into the (header-stripped, trimmed) line.
    pub position: usize,
    pub kind: Graph6ErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6ErrorKind {
    #[error("empty input")]
    Empty,
    #[error("byte {0:#04x} is not a graph6 character")]
    InvalidByte(u8),
    #[error("order {0} is outside 1..={MAX_ORDER}")]
    UnsupportedOrder(usize),
    #[error("expected {expected} data bytes, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("padding bits are not zero")]
    NonzeroPadding,
}

fn data_len(order: usize) -> usize {
    (order * (order.saturating_sub(1)) / 2).div_ceil(6)
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + data_len(n));
    out.push(BIAS + n as u8);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(BIAS + chunk);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(BIAS + (chunk << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

pub fn decode(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.trim();
    let line = line.strip_prefix(OPTIONAL_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let err = |position, kind| Graph6Error { position, kind };

    let &head = bytes.first().ok_or(err(0, Graph6ErrorKind::Empty))?;
    if !(BIAS..=126).contains(&head) {
        return Err(err(0, Graph6ErrorKind::InvalidByte(head)));
    }
    // 126 introduces the multi-byte order form, which always exceeds 16.
    let n = (head - BIAS) as usize;
    if n == 0 || n > MAX_ORDER {
        return Err(err(0, Graph6ErrorKind::UnsupportedOrder(n)));
    }

    let data = &bytes[1..];
    let expected = data_len(n);
    for (i, &b) in data.iter().enumerate() {
        if !(BIAS..=126).contains(&b) {
            return Err(err(1 + i, Graph6ErrorKind::InvalidByte(b)));
        }
    }
    if data.len() != expected {
        return Err(err(
            1 + data.len().min(expected),
            Graph6ErrorKind::WrongLength {
                expected,
                found: data.len(),
            },
        ));
    }

    let mut g = Graph::empty(n).expect("order checked above");
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            let chunk = data[bit / 6] - BIAS;
            if chunk >> (5 - bit % 6) & 1 == 1 {
                g = g.with_edge(i, j);
            }
            bit += 1;
        }
    }
    if bit % 6 != 0 {
        let last = data[data.len() - 1] - BIAS;
        if last & ((1 << (6 - bit % 6)) - 1) != 0 {
            return Err(err(data.len(), Graph6ErrorKind::NonzeroPadding));
        }
    }
    Ok(g)
}

/// Decodes every non-blank line. The reported position is offset into the
/// line, and the line index is returned alongside the error.
pub fn decode_lines(text: &str) -> Result<Vec<Graph>, (usize, Graph6Error)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| decode(l).map_err(|e| (i, e)))
        .collect()
}
