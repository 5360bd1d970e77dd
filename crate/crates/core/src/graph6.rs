//! graph6 encoding for graphs with at most 62 vertices.
//!
//! Format: one size byte `n + 63`, then the upper triangle of the adjacency
//! matrix in column-major order (`(0,1), (0,2), (1,2), (0,3), ...`) packed
//! big-endian into 6-bit groups, each offset by 63. Padding bits are zero.

use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_VERTICES: usize = 62;
const HEADER: &str = ">>graph6<<";

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_VERTICES {
        return Err(Error::Graph6(format!(
            "{n} vertices exceeds the supported maximum {MAX_VERTICES}"
        )));
    }
    let mut out = String::with_capacity(1 + (n * (n - 1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((chunk << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let (&size, body) = bytes
        .split_first()
        .ok_or_else(|| Error::Graph6("empty input".into()))?;
    if !(63..=126).contains(&size) {
        return Err(Error::Graph6(format!("size byte {size} out of range")));
    }
    if size == 126 {
        return Err(Error::Graph6(format!(
            "multi-byte size headers (n > {MAX_VERTICES}) are unsupported"
        )));
    }
    let n = (size - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() < expected {
        return Err(Error::Graph6(format!(
            "truncated: expected {expected} data bytes, found {}",
            body.len()
        )));
    }
    if body.len() > expected {
        return Err(Error::Graph6(format!(
            "trailing data: expected {expected} data bytes, found {}",
            body.len()
        )));
    }
    if let Some(&b) = body.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(Error::Graph6(format!("data byte {b} out of range")));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// Lazily decodes a graph6 file, one graph per non-empty line. Errors carry
/// 1-based line numbers.
pub fn enumerate_from_file(path: impl AsRef<Path>) -> Result<impl Iterator<Item = Result<Graph>>> {
    let reader = BufReader::new(File::open(path)?);
    Ok(reader
        .lines()
        .enumerate()
        .filter_map(|(i, line)| match line {
            Ok(l) if l.trim().is_empty() => None,
            Ok(l) => Some(from_graph6(l.trim()).map_err(|e| Error::AtLine {
                line: i + 1,
                source: Box::new(e),
            })),
            Err(e) => Some(Err(Error::AtLine {
                line: i + 1,
                source: Box::new(e.into()),
            })),
        }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::construct_h;

    #[test]
    fn star_example() {
        // ten triangle bits 000000 1111(00): vertex 4 joined to 0..3
        let g = from_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(to_graph6(&g).unwrap(), "D?{");
    }

    #[test]
    fn known_encoding() {
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g).unwrap(), "DQc");
        assert_eq!(to_graph6(&Graph::complete(4).unwrap()).unwrap(), "C~");
    }

    #[test]
    fn round_trips() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(from_graph6(&to_graph6(&k4).unwrap()).unwrap(), k4);
        let h = construct_h(62, 5).unwrap();
        assert_eq!(from_graph6(&to_graph6(&h).unwrap()).unwrap(), h);
        assert_eq!(from_graph6("@").unwrap(), Graph::complete(1).unwrap());
        assert_eq!(from_graph6(">>graph6<<C~\n").unwrap(), k4);
    }

    #[test]
    fn malformed() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("D?").is_err());
        assert!(from_graph6("D?{{").is_err());
        assert!(from_graph6("D? ").is_err());
        assert!(from_graph6(" ?").is_err());
        assert!(from_graph6("~??~").is_err());
        // three vertices use 3 of the 6 bits; '@' sets a padding bit
        assert!(from_graph6("B@").is_err());
        // n = 0 is not a graph here
        assert!(from_graph6("?").is_err());
        assert!(to_graph6(&Graph::empty(63).unwrap()).is_err());
    }
}
