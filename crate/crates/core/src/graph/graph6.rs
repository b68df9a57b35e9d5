//! The graph6 text format: a size header followed by the upper triangle of
//! the adjacency matrix, column by column, six bits per printable byte.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::Graph;
use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Largest order accepted in either direction.
pub const MAX_GRAPH6_ORDER: usize = 1 << 16;

const HEADER: &str = ">>graph6<<";

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 { offset, reason: reason.into() }
}

fn sextet(bytes: &[u8], at: usize) -> Result<u32> {
    match bytes.get(at) {
        Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as u32),
        Some(&b) => Err(err(at, format!("byte {b:#04x} outside 63..=126"))),
        None => Err(err(at, "unexpected end of input")),
    }
}

/// Decodes one graph. An optional `>>graph6<<` prefix and trailing line
/// break are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let mut pos = if bytes.starts_with(HEADER.as_bytes()) { HEADER.len() } else { 0 };
    let start = pos;
    let first = sextet(bytes, pos)?;
    let n = if first < 63 {
        pos += 1;
        first as u64
    } else if sextet(bytes, pos + 1)? < 63 {
        let mut n = 0u64;
        for i in 1..=3 {
            n = n << 6 | sextet(bytes, pos + i)? as u64;
        }
        pos += 4;
        n
    } else {
        let mut n = 0u64;
        for i in 2..=7 {
            n = n << 6 | sextet(bytes, pos + i)? as u64;
        }
        pos += 8;
        n
    };
    if n > MAX_GRAPH6_ORDER as u64 {
        return Err(err(start, format!("order {n} exceeds the cap of {MAX_GRAPH6_ORDER}")));
    }
    let n = n as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if bytes.len() != pos + needed {
        let at = (pos + needed).min(bytes.len());
        return Err(err(at, format!("expected {needed} data bytes after the header, found {}", bytes.len() - pos)));
    }
    let mut adj: Vec<BitSet> = (0..n).map(|_| BitSet::new(n)).collect();
    let (mut i, mut j) = (0usize, 1usize);
    for k in 0..bits {
        let byte = sextet(bytes, pos + k / 6)?;
        if byte >> (5 - k % 6) & 1 == 1 {
            adj[i].insert(j);
            adj[j].insert(i);
        }
        i += 1;
        if i == j {
            i = 0;
            j += 1;
        }
    }
    if !bits.is_multiple_of(6) {
        let last = pos + needed - 1;
        if sextet(bytes, last)? & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(err(last, "nonzero padding bits"));
        }
    }
    Ok(Graph::from_adjacency(adj))
}

/// Encodes `g` without the optional header.
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::InvalidParameter(format!("order {n} exceeds the graph6 cap of {MAX_GRAPH6_ORDER}")));
    }
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    }
    let (mut acc, mut filled) = (0u8, 0);
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                (acc, filled) = (0, 0);
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, empty, star};

    #[test]
    fn small_examples() {
        assert_eq!(parse_graph6("@").unwrap(), empty(1).unwrap());
        assert_eq!(parse_graph6("A_").unwrap(), complete(2).unwrap());
        assert_eq!(write_graph6(&complete(2).unwrap()).unwrap(), "A_");
        assert_eq!(write_graph6(&empty(1).unwrap()).unwrap(), "@");
        assert_eq!(parse_graph6("?").unwrap().n(), 0);
        // Ten bits 0000001111: vertex 4 joined to 0..4.
        let d = parse_graph6("D?{").unwrap();
        let expected = crate::graph::Graph::from_edges(5, (0..4).map(|i| (i, 4))).unwrap();
        assert_eq!(d, expected);
        assert_eq!(write_graph6(&star(4).unwrap()).unwrap(), "Ds_");
        assert_eq!(parse_graph6(">>graph6<<A_\n").unwrap(), complete(2).unwrap());
    }

    #[test]
    fn long_header() {
        let g = complete(63).unwrap();
        let s = write_graph6(&g).unwrap();
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 63, 126]);
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(parse_graph6("A`"), Err(Error::Graph6 { offset: 1, reason: "nonzero padding bits".into() }));
        assert!(matches!(parse_graph6("A "), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(parse_graph6("B"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(parse_graph6("A__"), Err(Error::Graph6 { offset: 2, .. })));
        assert!(matches!(parse_graph6(""), Err(Error::Graph6 { offset: 0, .. })));
        assert!(matches!(parse_graph6("~~?@????"), Err(Error::Graph6 { offset: 0, .. })));
    }
}
