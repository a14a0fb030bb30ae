//! Bit-exact graph6 reading and writing.
//!
//! A record is an optional `>>graph6<<` header, a size field (one byte
//! `n + 63` for `n <= 62`, or `126` followed by three bytes for
//! `63 <= n <= 258047`), then `ceil(n(n-1)/2 / 6)` bytes carrying the
//! upper adjacency triangle in column-major order, six bits per byte,
//! most significant bit first, every byte offset by 63.

use thiserror::Error;

use crate::graph::Graph;

/// Largest order representable with the three-byte size field.
pub const MAX_ORDER: usize = 258047;

const HEADER: &[u8] = b">>graph6<<";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("record is in {0} format, which is not supported; only graph6 is")]
    UnsupportedFormat(&'static str),
    #[error("byte 0x{byte:02x} at offset {position} outside the printable range 63..=126")]
    InvalidByte { byte: u8, position: usize },
    #[error("record truncated: expected {expected} adjacency bytes, got {got}")]
    Truncated { expected: usize, got: usize },
    #[error("record has {extra} byte(s) past the adjacency data")]
    TrailingBytes { extra: usize },
    #[error("nonzero padding bits in the last adjacency byte")]
    NonzeroPadding,
    #[error("size field uses the wide form for an order below 63")]
    NonCanonicalSize,
    #[error("order {order} exceeds the supported maximum {MAX_ORDER}")]
    OrderTooLarge { order: usize },
    #[error("size field declares an order beyond the supported maximum {MAX_ORDER}")]
    SizeFieldTooWide,
    #[error("empty record")]
    Empty,
}

/// How to treat nonzero padding bits: `Strict` rejects the record,
/// `Lenient` masks them off to interoperate with sloppy producers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strictness {
    #[default]
    Strict,
    Lenient,
}

fn decode_size(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let b0 = *bytes.first().ok_or(Graph6Error::Empty)?;
    match b0 {
        126 => {
            if bytes.len() >= 2 && bytes[1] == 126 {
                return Err(Graph6Error::SizeFieldTooWide);
            }
            if bytes.len() < 4 {
                return Err(Graph6Error::Truncated { expected: 4, got: bytes.len() });
            }
            let mut n = 0usize;
            for (i, &b) in bytes[1..4].iter().enumerate() {
                if !(63..=126).contains(&b) {
                    return Err(Graph6Error::InvalidByte { byte: b, position: 1 + i });
                }
                n = n << 6 | (b - 63) as usize;
            }
            if n < 63 {
                return Err(Graph6Error::NonCanonicalSize);
            }
            Ok((n, 4))
        }
        63..=125 => Ok(((b0 - 63) as usize, 1)),
        _ => Err(Graph6Error::InvalidByte { byte: b0, position: 0 }),
    }
}

fn encode_size(n: usize) -> Result<Vec<u8>, Graph6Error> {
    if n <= 62 {
        Ok(vec![n as u8 + 63])
    } else if n <= MAX_ORDER {
        Ok(vec![
            126,
            63 + (n >> 12 & 63) as u8,
            63 + (n >> 6 & 63) as u8,
            63 + (n & 63) as u8,
        ])
    } else {
        Err(Graph6Error::OrderTooLarge { order: n })
    }
}

/// Decodes one graph6 record.
pub fn parse_graph6_record(line: &[u8], strictness: Strictness) -> Result<Graph, Graph6Error> {
    let line = match line.strip_prefix(HEADER) {
        Some(rest) => rest,
        None => {
            if line.starts_with(b">>sparse6<<") {
                return Err(Graph6Error::UnsupportedFormat("sparse6"));
            }
            if line.starts_with(b">>digraph6<<") {
                return Err(Graph6Error::UnsupportedFormat("digraph6"));
            }
            line
        }
    };
    match line.first() {
        None => return Err(Graph6Error::Empty),
        Some(b':') => return Err(Graph6Error::UnsupportedFormat("sparse6")),
        Some(b';') => return Err(Graph6Error::UnsupportedFormat("incremental sparse6")),
        Some(b'&') => return Err(Graph6Error::UnsupportedFormat("digraph6")),
        Some(_) => {}
    }

    let (n, consumed) = decode_size(line)?;
    let body = &line[consumed..];
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    if body.len() < expected {
        return Err(Graph6Error::Truncated { expected, got: body.len() });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingBytes { extra: body.len() - expected });
    }

    let mut g = Graph::edgeless(n);
    // Column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    let (mut row, mut col) = (0usize, 1usize);
    for (idx, &byte) in body.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { byte, position: consumed + idx });
        }
        let group = byte - 63;
        for t in 0..6 {
            let bit = group >> (5 - t) & 1;
            let pos = idx * 6 + t;
            if pos >= bit_count {
                if bit != 0 && strictness == Strictness::Strict {
                    return Err(Graph6Error::NonzeroPadding);
                }
                continue;
            }
            if bit != 0 {
                g.add_edge(row, col).expect("triangle pairs are valid edges");
            }
            row += 1;
            if row == col {
                row = 0;
                col += 1;
            }
        }
    }
    Ok(g)
}

/// Encodes a graph as a canonical graph6 record (zero padding, shortest
/// size field). The inverse of [`parse_graph6_record`] for any graph
/// with at most [`MAX_ORDER`] vertices.
pub fn write_graph6_record(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    let mut out = encode_size(n)?;
    let mut group = 0u8;
    let mut filled = 0u8;
    for col in 1..n {
        for row in 0..col {
            group <<= 1;
            if g.has_edge(row, col) {
                group |= 1;
            }
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
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}
