//! graph6 (headerless) and plain edge-list text formats.
//!
//! graph6 layout: a length prefix `N(n)` followed by the upper triangle of
//! the adjacency matrix in column order `(0,1), (0,2), (1,2), (0,3), ...`,
//! packed six bits per byte, most significant first, each byte offset by 63.

use super::{Graph, VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

const BIAS: u8 = 63;

fn g6_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Parses one graph6 line. A single trailing newline is tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text
        .strip_suffix('\n')
        .map(|s| s.strip_suffix('\r').unwrap_or(s))
        .unwrap_or(text);
    let bytes = line.as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(BIAS..=126).contains(b)) {
        return Err(g6_err(
            pos,
            format!("byte 0x{:02x} is outside the printable range 63..=126", bytes[pos]),
        ));
    }
    let (n, start) = match bytes.first() {
        None => return Err(g6_err(0, "missing length byte")),
        Some(&b) if b < 126 => ((b - BIAS) as usize, 1),
        Some(_) => {
            if bytes.len() < 4 {
                return Err(g6_err(bytes.len(), "truncated 4-byte length prefix"));
            }
            if bytes[1] == 126 {
                return Err(g6_err(1, "8-byte length prefix: graph too large"));
            }
            let n = bytes[1..4]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
            (n, 4)
        }
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let data = &bytes[start..];
    if data.len() < nbytes {
        return Err(g6_err(
            bytes.len(),
            format!("expected {nbytes} adjacency bytes for n={n}, found {}", data.len()),
        ));
    }
    if data.len() > nbytes {
        return Err(g6_err(start + nbytes, "trailing garbage after adjacency data"));
    }

    let mut adj = vec![VertexSet::empty(); n];
    let mut k = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = data[k / 6] - BIAS;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                adj[u].insert(v);
                adj[v].insert(u);
            }
            k += 1;
        }
    }
    Graph::from_adjacency(adj)
}

/// Canonical graph6 string (no trailing newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses `u v` pairs, one per line, 0-indexed. Blank lines and `#`
/// comments are skipped. An optional first line holding a single integer
/// fixes the order; otherwise it is one more than the largest endpoint.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut order: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen_content = false;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::EdgeList {
                line: line_no,
                reason: format!("`{s}` is not a vertex index"),
            })
        };
        match fields.as_slice() {
            [one] if !seen_content => order = Some(parse(one)?),
            [u, v] => edges.push((parse(u)?, parse(v)?)),
            _ => {
                return Err(Error::EdgeList {
                    line: line_no,
                    reason: "expected `u v`".into(),
                })
            }
        }
        seen_content = true;
    }
    let n = order.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Graph::from_edges(n, edges)
}

/// Edge-list rendering with the order on the first line.
pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Straight transcription of the format description, kept apart from the
    /// bit-twiddling decoder above.
    fn reference_decode(s: &str) -> (usize, Vec<(usize, usize)>) {
        let b: Vec<u8> = s.bytes().map(|c| c - 63).collect();
        let n = b[0] as usize;
        let bits: Vec<bool> = b[1..]
            .iter()
            .flat_map(|&x| (0..6).rev().map(move |i| (x >> i) & 1 == 1))
            .collect();
        let mut edges = Vec::new();
        let mut idx = 0;
        for j in 0..n {
            for i in 0..j {
                if bits[idx] {
                    edges.push((i, j));
                }
                idx += 1;
            }
        }
        edges.sort();
        (n, edges)
    }

    #[test]
    fn star_k14() {
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(reference_decode("D?{"), (5, edges));
    }

    #[test]
    fn small_cases() {
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!(k2.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        let k1 = parse_graph6("@").unwrap();
        assert_eq!((k1.n(), k1.edge_count()), (1, 0));
        assert_eq!(parse_graph6("?").unwrap().n(), 0);
        assert_eq!(parse_graph6("A_\n").unwrap(), k2);
    }

    #[test]
    fn errors_name_offsets() {
        assert!(matches!(parse_graph6(""), Err(Error::Graph6 { offset: 0, .. })));
        assert!(matches!(parse_graph6("A_x"), Err(Error::Graph6 { offset: 2, .. })));
        assert!(matches!(parse_graph6("D?"), Err(Error::Graph6 { offset: 2, .. })));
        assert!(matches!(parse_graph6("A\t"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(parse_graph6("~?"), Err(Error::Graph6 { offset: 2, .. })));
        assert!(matches!(parse_graph6("~?A?"), Err(Error::TooManyVertices(_))));
    }

    #[test]
    fn long_length_prefix() {
        let g = Graph::from_edges(64, (0..63).map(|i| (i, i + 1))).unwrap();
        let s = encode_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = parse_edge_list("# path\n0 1\n1 2\n\n2 3\n").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
        let isolated = parse_edge_list("5\n0 1\n").unwrap();
        assert_eq!(isolated.n(), 5);
        assert!(matches!(parse_edge_list("0 1 2\n"), Err(Error::EdgeList { line: 1, .. })));
        assert!(matches!(parse_edge_list("0 x\n"), Err(Error::EdgeList { line: 1, .. })));
    }

    proptest! {
        #[test]
        fn graph6_round_trip(n in 0usize..20, bits in proptest::collection::vec(any::<bool>(), 190)) {
            let edges = (0..n).flat_map(|v| (0..v).map(move |u| (u, v)))
                .zip(bits.iter())
                .filter(|(_, &b)| b)
                .map(|(e, _)| e);
            let g = Graph::from_edges(n, edges).unwrap();
            let s = encode_graph6(&g);
            prop_assert_eq!(&parse_graph6(&s).unwrap(), &g);
            prop_assert_eq!(encode_graph6(&parse_graph6(&s).unwrap()), s.clone());
            let (rn, redges) = reference_decode(&s);
            prop_assert_eq!(rn, n);
            prop_assert_eq!(redges, g.edges().collect::<Vec<_>>());
        }
    }
}
