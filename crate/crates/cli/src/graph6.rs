//! graph6 codec: the compact printable encoding of an undirected graph.
//!
//! A graph6 string is a header carrying the order followed by the
//! upper-triangle adjacency bits.  Orders up to 62 use a single header
//! byte `n + 63`; orders 63..=258047 use `'~'` followed by three bytes
//! encoding 18 bits of `n`, most significant group first.  The payload
//! walks the upper triangle column by column — (0,1), (0,2), (1,2),
//! (0,3), … — packing six bits per byte, most significant bit first,
//! with 63 added to keep every byte printable.  Unused bits in the last
//! payload byte must be zero.

use ramsey_core::Graph;
use std::fmt;

/// Optional file-format marker that may precede the header.
const FORMAT_MARKER: &str = ">>graph6<<";

/// Largest order the three-byte header can carry.
const MAX_ORDER: usize = 258_047;

/// A decode failure, pointing at the offending byte of the input line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input where the problem was detected.
    pub offset: usize,
    /// Human-readable description of the problem.
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph6 parse error at byte {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseError {}

fn fail<T>(offset: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        offset,
        message: message.into(),
    })
}

/// Decodes one graph6 line into a [`Graph`].
///
/// Accepts the optional `>>graph6<<` marker and trailing ASCII
/// whitespace; anything else outside the printable range 63..=126, a
/// short payload, trailing junk, or nonzero padding is an error that
/// reports the byte offset where decoding stopped.
pub fn parse_graph6(line: &str) -> Result<Graph, ParseError> {
    let trimmed = line.trim_end_matches(['\n', '\r', ' ', '\t']);
    let (base, body) = match trimmed.strip_prefix(FORMAT_MARKER) {
        Some(rest) => (FORMAT_MARKER.len(), rest),
        None => (0, trimmed),
    };
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return fail(base, "empty input: expected a graph6 header");
    }

    let sextet = |idx: usize| -> Result<u32, ParseError> {
        let b = bytes[idx];
        if !(63..=126).contains(&b) {
            return fail(
                base + idx,
                format!("byte {b:#04x} is outside the printable graph6 range 63..=126"),
            );
        }
        Ok(u32::from(b - 63))
    };

    let (n, payload_start) = if bytes[0] == b'~' {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            return fail(base + 1, "orders above 258047 are not supported");
        }
        if bytes.len() < 4 {
            return fail(base + bytes.len(), "truncated long-form header: need '~' plus 3 bytes");
        }
        let n = (sextet(1)? << 12) | (sextet(2)? << 6) | sextet(3)?;
        (n as usize, 4)
    } else {
        (sextet(0)? as usize, 1)
    };

    let pairs = n * n.saturating_sub(1) / 2;
    let need = pairs.div_ceil(6);
    let have = bytes.len() - payload_start;
    if have < need {
        return fail(
            base + bytes.len(),
            format!("truncated payload: an order-{n} graph needs {need} payload bytes, found {have}"),
        );
    }
    if have > need {
        return fail(
            base + payload_start + need,
            format!("trailing data after the {need}-byte payload of an order-{n} graph"),
        );
    }

    let mut values = Vec::with_capacity(need);
    for idx in payload_start..payload_start + need {
        values.push(sextet(idx)?);
    }

    let mut g = Graph::new(n);
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            if values[bit / 6] >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(u, v);
            }
            bit += 1;
        }
    }
    for pad in pairs..need * 6 {
        if values[pad / 6] >> (5 - pad % 6) & 1 == 1 {
            return fail(
                base + payload_start + pad / 6,
                "padding bits after the last vertex pair must be zero",
            );
        }
    }
    Ok(g)
}

/// Encodes a graph as a canonical graph6 string (short header for
/// orders up to 62, long header above that).
///
/// # Panics
///
/// Panics if the order exceeds 258047, the largest a graph6 header can
/// carry.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= MAX_ORDER, "graph6 headers carry orders up to {MAX_ORDER}");
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut value = 0u8;
    let mut filled = 0usize;
    for v in 1..n {
        for u in 0..v {
            value <<= 1;
            if g.has_edge(u, v) {
                value |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(value + 63);
                value = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((value << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}
