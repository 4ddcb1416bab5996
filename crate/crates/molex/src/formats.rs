//! Graph serialization: the standard graph6 text encoding and a plain
//! adjacency-list format (`n m` header line, then one `u v` pair per line).

use crate::graph::{GraphError, MolecularGraph};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
}

fn parse_err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        message: message.into(),
    }
}

/// Encodes a graph as a graph6 line (without trailing newline).
///
/// Bit order is the standard upper-triangle column order: for each column
/// `j = 1..n`, bits `(0,j), (1,j), ..., (j-1,j)`.
pub fn to_graph6(g: &MolecularGraph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        assert!(n <= 258_047, "graph6 long form not supported");
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group <<= 1;
            if g.has_edge(i, j) {
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
    String::from_utf8(out).unwrap()
}

/// Decodes a single graph6 line. An optional `>>graph6<<` header is
/// accepted. `line` is used only for error reporting.
pub fn from_graph6(s: &str, line: usize) -> Result<MolecularGraph, FormatError> {
    let s = s.trim().strip_prefix(">>graph6<<").unwrap_or(s.trim());
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(parse_err(line, "empty graph6 string"));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(parse_err(line, format!("invalid graph6 byte 0x{b:02x}")));
        }
    }
    let (n, mut idx) = if bytes[0] == 126 {
        if bytes.len() < 4 {
            return Err(parse_err(line, "truncated graph6 size field"));
        }
        let n = ((bytes[1] as usize - 63) << 12)
            | ((bytes[2] as usize - 63) << 6)
            | (bytes[3] as usize - 63);
        (n, 4)
    } else {
        (bytes[0] as usize - 63, 1)
    };
    let bit_count = n * (n.saturating_sub(1)) / 2;
    let need = bit_count.div_ceil(6);
    if bytes.len() - idx != need {
        return Err(parse_err(
            line,
            format!(
                "graph6 body length {} does not match n = {n} (expected {need})",
                bytes.len() - idx
            ),
        ));
    }
    let mut edges = Vec::new();
    let mut group = 0u8;
    let mut left = 0u8;
    for j in 1..n {
        for i in 0..j {
            if left == 0 {
                group = bytes[idx] - 63;
                idx += 1;
                left = 6;
            }
            if group & (1 << (left - 1)) != 0 {
                edges.push((i, j));
            }
            left -= 1;
        }
    }
    MolecularGraph::build(n, &edges).map_err(|source| FormatError::Graph { line, source })
}

/// Writes the plain adjacency-list format.
pub fn to_adjacency_text(g: &MolecularGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses a single graph in the plain adjacency-list format.
pub fn from_adjacency_text(text: &str) -> Result<MolecularGraph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "empty adjacency input"))?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(header_line, "expected `n m` header"))?;
    let m: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(header_line, "expected `n m` header"))?;
    if parts.next().is_some() {
        return Err(parse_err(header_line, "trailing tokens after `n m` header"));
    }
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        let mut parts = l.split_whitespace();
        let u: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(line, "expected `u v` pair"))?;
        let v: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(line, "expected `u v` pair"))?;
        if parts.next().is_some() {
            return Err(parse_err(line, "trailing tokens after `u v` pair"));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(
            1,
            format!("header declares m = {m} but {} edges follow", edges.len()),
        ));
    }
    MolecularGraph::build(n, &edges).map_err(|source| FormatError::Graph { line: 1, source })
}

/// Reads one or more graphs from text: graph6 lines, or a single
/// adjacency-list block (auto-detected from the first line).
pub fn parse_graphs(text: &str) -> Result<Vec<MolecularGraph>, FormatError> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| parse_err(1, "empty input"))?;
    let looks_adjacency = {
        let toks: Vec<_> = first.split_whitespace().collect();
        toks.len() == 2 && toks.iter().all(|t| t.parse::<usize>().is_ok())
    };
    if looks_adjacency {
        Ok(vec![from_adjacency_text(text)?])
    } else {
        text.lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty())
            .map(|(i, l)| from_graph6(l, i))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{cycle, path, star};

    #[test]
    fn known_vector() {
        // 5 vertices, edges 0-2, 0-4, 1-3, 3-4.
        let g = MolecularGraph::build(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(from_graph6("DQc", 1).unwrap(), g);
    }

    #[test]
    fn round_trip_small() {
        for g in [
            path(5),
            star(4),
            cycle(6),
            MolecularGraph::build(1, &[]).unwrap(),
        ] {
            let enc = to_graph6(&g);
            assert_eq!(from_graph6(&enc, 1).unwrap(), g);
        }
    }

    #[test]
    fn header_prefix_accepted() {
        let g = path(5);
        let enc = format!(">>graph6<<{}", to_graph6(&g));
        assert_eq!(from_graph6(&enc, 1).unwrap(), g);
    }

    #[test]
    fn decode_rejects_garbage() {
        assert!(matches!(
            from_graph6("D", 3),
            Err(FormatError::Parse { line: 3, .. })
        ));
        assert!(from_graph6("", 1).is_err());
    }

    #[test]
    fn adjacency_round_trip() {
        let g = path(5);
        let text = to_adjacency_text(&g);
        assert_eq!(text.lines().next().unwrap(), "5 4");
        assert_eq!(from_adjacency_text(&text).unwrap(), g);
    }

    #[test]
    fn adjacency_errors_carry_line_numbers() {
        let err = from_adjacency_text("3 2\n0 1\n1 x").unwrap_err();
        assert!(matches!(err, FormatError::Parse { line: 3, .. }));
    }

    #[test]
    fn auto_detection() {
        let g6 = format!("{}\n{}\n", to_graph6(&path(5)), to_graph6(&star(4)));
        assert_eq!(parse_graphs(&g6).unwrap().len(), 2);
        let adj = to_adjacency_text(&cycle(6));
        assert_eq!(parse_graphs(&adj).unwrap(), vec![cycle(6)]);
    }
}
