//! graph6 and DIMACS edge-format codecs.

use std::fmt::Write as _;

use super::{Graph, GraphError, MAX_VERTICES};
use crate::bits::bits;

const HEADER: &str = ">>graph6<<";

fn g6err(msg: impl Into<String>) -> GraphError {
    GraphError::Graph6(msg.into())
}

fn dimacs_err(line: usize, msg: impl Into<String>) -> GraphError {
    GraphError::Dimacs(format!("line {line}: {}", msg.into()))
}

/// Encodes a graph as a single graph6 line, without header or newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push(126 as char);
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
    // Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
    let mut acc = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            used += 1;
            if used == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push(((acc << (6 - used)) + 63) as char);
    }
    out
}

/// Decodes one graph6 string. A leading `>>graph6<<` header and surrounding
/// whitespace are accepted; anything else that is not bit-exact is rejected,
/// including non-zero padding bits and trailing bytes.
pub fn from_graph6(s: &str) -> Result<Graph, GraphError> {
    let s = s.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(g6err(format!("byte {b:#04x} outside the printable range 63..=126")));
    }
    let (n, body) = match bytes {
        [] => return Err(g6err("empty input")),
        [126, 126, ..] => return Err(g6err("8-byte vertex counts are not supported")),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(g6err("truncated vertex count"));
            }
            let n = rest[..3].iter().fold(0usize, |n, &b| (n << 6) | (b - 63) as usize);
            if n <= 62 {
                return Err(g6err("vertex count below 63 must use the one-byte form"));
            }
            (n, &rest[3..])
        }
        [b, rest @ ..] => ((b - 63) as usize, rest),
    };
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(g6err(format!("expected {expected} data bytes for n={n}, found {}", body.len())));
    }
    let bit_at = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (nbits..expected * 6).any(bit_at) {
        return Err(g6err("non-zero padding bits"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit_at(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

/// Parses a graph6 file: one graph per non-empty line, optional header on each line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, GraphError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| from_graph6(l).map_err(|e| g6err(format!("line {}: {e}", i + 1))))
        .collect()
}

pub fn to_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

/// Parses DIMACS edge format. Comment lines start with `c`; the `p edge n m` line must
/// precede every edge line and `m` must equal the number of distinct edges listed.
pub fn from_dimacs(text: &str) -> Result<Graph, GraphError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let mut tok = line.split_whitespace();
        match tok.next() {
            None | Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(dimacs_err(lineno, "duplicate problem line"));
                }
                match tok.next() {
                    Some("edge") | Some("col") => {}
                    other => return Err(dimacs_err(lineno, format!("unsupported problem kind {other:?}"))),
                }
                let n = parse_num(tok.next(), lineno)?;
                let m = parse_num(tok.next(), lineno)?;
                if tok.next().is_some() {
                    return Err(dimacs_err(lineno, "trailing tokens"));
                }
                if n > MAX_VERTICES {
                    return Err(GraphError::TooManyVertices(n));
                }
                header = Some((n, m));
            }
            Some("e") => {
                let Some((n, _)) = header else {
                    return Err(dimacs_err(lineno, "edge before problem line"));
                };
                let u = parse_num(tok.next(), lineno)?;
                let v = parse_num(tok.next(), lineno)?;
                if tok.next().is_some() {
                    return Err(dimacs_err(lineno, "trailing tokens"));
                }
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(dimacs_err(lineno, format!("vertex {w} outside 1..={n}")));
                    }
                }
                if u == v {
                    return Err(dimacs_err(lineno, format!("self-loop at {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => return Err(dimacs_err(lineno, format!("unknown line type `{other}`"))),
        }
    }
    let (n, m) = header.ok_or_else(|| GraphError::Dimacs("missing problem line".into()))?;
    let g = Graph::from_edges(n, edges)?;
    if g.edge_count() != m {
        return Err(GraphError::Dimacs(format!(
            "problem line declares {m} edges, found {} distinct",
            g.edge_count()
        )));
    }
    Ok(g)
}

fn parse_num(tok: Option<&str>, line: usize) -> Result<usize, GraphError> {
    let t = tok.ok_or_else(|| dimacs_err(line, "missing number"))?;
    t.parse().map_err(|_| dimacs_err(line, format!("bad number `{t}`")))
}

/// Formats an adjacency list for humans: `v: n1 n2 ...` per vertex.
pub fn to_adjacency_text(g: &Graph) -> String {
    let mut out = String::new();
    for v in 0..g.n() {
        let _ = write!(out, "{v}:");
        for u in bits(g.nbrs(v)) {
            let _ = write!(out, " {u}");
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::*;
    use super::*;

    #[test]
    fn known_encodings() {
        // Reference strings from the graph6 format description and common corpora.
        assert_eq!(to_graph6(&gen_cycle(5).unwrap()), "Dhc");
        assert_eq!(to_graph6(&gen_complete(4).unwrap()), "C~");
        assert_eq!(to_graph6(&Graph::empty(0).unwrap()), "?");
        assert_eq!(to_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(to_graph6(&gen_path(2).unwrap()), "A_");
        // Petersen graph, outer 5-cycle 0..5, spokes i - i+5, inner pentagram.
        let petersen = Graph::from_edges(
            10,
            (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]),
        )
        .unwrap();
        assert_eq!(from_graph6("IheA@GUAo").unwrap().edge_count(), 15);
        assert!(are_isomorphic(&from_graph6("IheA@GUAo").unwrap(), &petersen));
    }

    #[test]
    fn header_and_errors() {
        assert_eq!(from_graph6(">>graph6<<Dhc\n").unwrap(), gen_cycle(5).unwrap());
        assert!(from_graph6("").is_err());
        assert!(from_graph6("Dh").is_err());
        assert!(from_graph6("Dhcc").is_err());
        // 'A' with a set padding bit: n = 2 has one data bit.
        assert!(from_graph6("A`").is_err());
        assert!(from_graph6("D h").is_err());
        assert!(matches!(from_graph6("~?@@"), Err(GraphError::TooManyVertices(65))));
    }

    #[test]
    fn large_vertex_count_form() {
        let g = gen_cycle(63).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with("~??~"));
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn dimacs_round_trip_and_errors() {
        let g = NamedGraph::MmG.graph();
        let text = to_dimacs(&g);
        assert_eq!(from_dimacs(&text).unwrap(), g);
        assert_eq!(from_dimacs("c hi\np edge 3 1\ne 1 3\n").unwrap(), Graph::from_edges(3, [(0, 2)]).unwrap());
        assert!(from_dimacs("e 1 2\np edge 2 1\n").is_err());
        assert!(from_dimacs("p edge 2 1\ne 1 3\n").is_err());
        assert!(from_dimacs("p edge 2 2\ne 1 2\n").is_err());
        assert!(from_dimacs("p edge 2 1\ne 1 1\n").is_err());
        assert!(from_dimacs("").is_err());
    }

    #[test]
    fn named_graphs_round_trip() {
        for ng in NamedGraph::ALL {
            let g = ng.graph();
            assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
            assert_eq!(from_dimacs(&to_dimacs(&g)).unwrap(), g);
        }
    }
}
