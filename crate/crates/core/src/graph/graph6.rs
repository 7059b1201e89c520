//! graph6 text encoding: a size prefix `N(n)` followed by the upper triangle
//! of the adjacency matrix, column by column, packed six bits per printable
//! byte (value + 63).

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn push_bits6(out: &mut String, value: u64, groups: usize) {
    for g in (0..groups).rev() {
        out.push(char::from(((value >> (6 * g)) & 63) as u8 + 63));
    }
}

/// Encodes `g` as one graph6 line (no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    if n <= 62 {
        push_bits6(&mut out, n as u64, 1);
    } else if n <= 258_047 {
        out.push('~');
        push_bits6(&mut out, n as u64, 3);
    } else {
        out.push_str("~~");
        push_bits6(&mut out, n as u64, 6);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(char::from(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(char::from((acc << (6 - filled)) + 63));
    }
    out
}

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

fn sextet(bytes: &[u8], at: usize) -> Result<u64> {
    match bytes.get(at) {
        Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as u64),
        Some(&b) => Err(err(at, format!("byte 0x{b:02x} outside the graph6 range"))),
        None => Err(err(at, "line ends inside the size prefix")),
    }
}

/// Parses one graph6 line. An optional `>>graph6<<` header and a trailing
/// line terminator are accepted; error offsets count from the line start.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let trimmed = line.trim_end_matches(['\n', '\r']);
    let start = if trimmed.starts_with(HEADER) {
        HEADER.len()
    } else {
        0
    };
    let bytes = trimmed.as_bytes();
    if bytes.len() == start {
        return Err(err(start, "empty graph6 line"));
    }

    let (n, mut pos) = if bytes[start] != b'~' {
        (sextet(bytes, start)?, start + 1)
    } else if bytes.get(start + 1) != Some(&b'~') {
        let mut n = 0;
        for k in 0..3 {
            n = (n << 6) | sextet(bytes, start + 1 + k)?;
        }
        (n, start + 4)
    } else {
        let mut n = 0;
        for k in 0..6 {
            n = (n << 6) | sextet(bytes, start + 2 + k)?;
        }
        (n, start + 8)
    };
    let n = n as usize;
    if n == 0 {
        return Err(err(start, "graph6 encodes zero vertices"));
    }

    let pairs = n * (n - 1) / 2;
    let expected = pairs.div_ceil(6);
    let body = &bytes[pos..];
    if body.len() != expected {
        let at = pos + body.len().min(expected);
        return Err(err(
            at,
            format!(
                "expected {expected} adjacency bytes for n = {n}, found {}",
                body.len()
            ),
        ));
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    let mut current = 0u64;
    for j in 1..n {
        for i in 0..j {
            if bit.is_multiple_of(6) {
                current = sextet(bytes, pos)?;
                pos += 1;
            }
            if current >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    if !bit.is_multiple_of(6) {
        let used = bit % 6;
        if current & ((1 << (6 - used)) - 1) != 0 {
            return Err(err(pos - 1, "nonzero padding bits"));
        }
    }
    Graph::new(n, edges)
}

/// Parses every nonblank line of `text`; errors carry the 1-based line number.
pub fn parse_graph6_lines(text: &str) -> std::result::Result<Vec<Graph>, (usize, Error)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6(l).map_err(|e| (i + 1, e)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::arb_graph;
    use proptest::prelude::*;

    #[test]
    fn triangle_encodes_as_bw() {
        // size byte 3 + 63 = 'B'; bits 111 padded to 111000 = 56, 56 + 63 = 'w'.
        assert_eq!(to_graph6(&Graph::complete(3).unwrap()), "Bw");
    }

    #[test]
    fn known_five_vertex_encoding() {
        // Edges {0,2} {0,4} {1,3} {3,4}.
        let g = Graph::new(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(parse_graph6("DQc\n").unwrap(), g);
    }

    #[test]
    fn header_and_crlf_are_accepted() {
        let c5 = Graph::cycle(5).unwrap();
        let line = format!(">>graph6<<{}\r\n", to_graph6(&c5));
        assert_eq!(parse_graph6(&line).unwrap(), c5);
    }

    #[test]
    fn parse_errors_report_offsets() {
        assert!(matches!(parse_graph6(""), Err(Error::Graph6 { offset: 0, .. })));
        assert!(matches!(parse_graph6("Bw?"), Err(Error::Graph6 { offset: 2, .. })));
        assert!(matches!(parse_graph6("D"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(parse_graph6("D Qc"), Err(Error::Graph6 { .. })));
        assert!(matches!(parse_graph6("B\x7f"), Err(Error::Graph6 { offset: 1, .. })));
        // 'x' = 57 = 111001 sets a padding bit for n = 3.
        assert!(matches!(parse_graph6("Bx"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(parse_graph6("~?"), Err(Error::Graph6 { offset: 2, .. })));
    }

    #[test]
    fn long_size_prefix_round_trips() {
        let g = Graph::cycle(70).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn lines_report_line_numbers() {
        let err = parse_graph6_lines("Bw\n\nD\n").unwrap_err();
        assert_eq!(err.0, 3);
        assert_eq!(parse_graph6_lines("Bw\nDQc\n").unwrap().len(), 2);
    }

    proptest! {
        #[test]
        fn round_trip(g in arb_graph(20)) {
            let s = to_graph6(&g);
            prop_assert!(s.bytes().all(|b| (63..=126).contains(&b)));
            prop_assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }
}
