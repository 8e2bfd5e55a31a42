//! Text serializations: graph6, a plain edge list and Graphviz DOT.

use std::collections::HashSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{EdgeRef, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("graph6: {0}")]
    Graph6(String),
}

fn order_header(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.extend_from_slice(b"~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
}

/// Encodes the upper triangle column by column (`v = 1..n`, `u = 0..v`),
/// six bits per printable byte.
pub fn graph6_encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    order_header(n, &mut out);
    let total = n * n.saturating_sub(1) / 2;
    let mut bits = vec![0u8; total.div_ceil(6) * 6];
    for &(u, v) in g.edges() {
        bits[v * (v - 1) / 2 + u] = 1;
    }
    for chunk in bits.chunks(6) {
        let byte = chunk.iter().fold(0u8, |acc, &b| acc << 1 | b);
        out.push(byte + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

pub fn graph6_decode(text: &str) -> Result<Graph, FormatError> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let err = |m: &str| FormatError::Graph6(m.to_string());
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(FormatError::Graph6(format!("byte {b} outside 63..=126")));
    }
    let six = |s: &[u8]| {
        s.iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize)
    };
    let (n, body) = match bytes {
        [] => return Err(err("empty string")),
        [b'~', b'~', rest @ ..] if rest.len() >= 6 => (six(&rest[..6]), &rest[6..]),
        [b'~', rest @ ..] if rest.len() >= 3 && rest[0] != b'~' => (six(&rest[..3]), &rest[3..]),
        [b'~', ..] => return Err(err("truncated order header")),
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    let total = n * n.saturating_sub(1) / 2;
    if body.len() != total.div_ceil(6) {
        return Err(FormatError::Graph6(format!(
            "expected {} adjacency bytes for order {n}, found {}",
            total.div_ceil(6),
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[idx / 6] - 63;
            if byte >> (5 - idx % 6) & 1 == 1 {
                edges.push((u, v));
            }
            idx += 1;
        }
    }
    if idx % 6 != 0 {
        let pad = (body[idx / 6] - 63) & ((1 << (6 - idx % 6)) - 1);
        if pad != 0 {
            return Err(err("nonzero padding bits"));
        }
    }
    Graph::build(n, edges).map_err(|e| FormatError::Graph6(e.to_string()))
}

/// Header `n m` followed by one `u v` line per edge, in sorted order.
pub fn edge_list_emit(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.order(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize), FormatError> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    let bad = |message: String| FormatError::Parse { line, message };
    match fields.as_slice() {
        [a, b] => {
            let a = a
                .parse()
                .map_err(|_| bad(format!("not an integer: {a:?}")))?;
            let b = b
                .parse()
                .map_err(|_| bad(format!("not an integer: {b:?}")))?;
            Ok((a, b))
        }
        _ => Err(bad(format!("expected two integers, got {text:?}"))),
    }
}

/// Parses the edge-list format; blank lines are ignored. Validation errors
/// carry the line that caused them.
pub fn edge_list_parse(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(FormatError::Parse {
        line: 1,
        message: "missing header".into(),
    })?;
    let (n, m) = parse_pair(hline, header)?;
    if n == 0 {
        return Err(FormatError::Graph {
            line: hline,
            source: GraphError::ZeroOrder,
        });
    }
    let mut seen = HashSet::new();
    let mut edges = Vec::with_capacity(m);
    let mut last = hline;
    for (line, text) in lines {
        last = line;
        if edges.len() == m {
            return Err(FormatError::Parse {
                line,
                message: format!("more than the declared {m} edges"),
            });
        }
        let (u, v) = parse_pair(line, text)?;
        let fail = |source| FormatError::Graph { line, source };
        for x in [u, v] {
            if x >= n {
                return Err(fail(GraphError::VertexOutOfRange {
                    vertex: x,
                    order: n,
                }));
            }
        }
        let e = EdgeRef::new(u, v).ok_or_else(|| fail(GraphError::LoopRejected(u)))?;
        if !seen.insert(e) {
            return Err(fail(GraphError::DuplicateEdge(e.u, e.v)));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(FormatError::Parse {
            line: last,
            message: format!("declared {m} edges, found {}", edges.len()),
        });
    }
    Graph::build(n, edges).map_err(|source| FormatError::Graph {
        line: hline,
        source,
    })
}

pub fn to_dot(g: &Graph, name: &str) -> String {
    let mut s = format!("graph {name} {{\n");
    for v in 0..g.order() {
        let _ = writeln!(s, "  {v};");
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "  {u} -- {v};");
    }
    s.push_str("}\n");
    s
}
