//! graph6 and edge-list text formats.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Decodes a graph6 string. An optional `>>graph6<<` header and trailing
/// whitespace are accepted.
pub fn from_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end();
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::Graph6(format!("byte {pos} outside the printable range 63..=126")));
    }
    let (n, body) = match bytes {
        [] => return Err(Error::Graph6("empty input".into())),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::Graph6("truncated 36-bit order".into()));
            }
            (decode_order(&rest[..6]), &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("truncated 18-bit order".into()));
            }
            (decode_order(&rest[..3]), &rest[3..])
        }
        [b, rest @ ..] => ((b - 63) as u64, rest),
    };
    if n > MAX_VERTICES as u64 {
        return Err(Error::TooManyVertices { n: n as usize, cap: MAX_VERTICES });
    }
    let n = n as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let want = nbits.div_ceil(6);
    if body.len() != want {
        return Err(Error::Graph6(format!(
            "expected {want} adjacency bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (nbits..want * 6).any(bit) {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    let mut g = Graph::with_vertices(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

fn decode_order(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0u64, |acc, b| acc << 6 | (b - 63) as u64)
}

/// Encodes a graph as graph6 (no header).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses the edge-list format: a header line `n m`, then `m` lines `u v`.
/// `#` starts a comment; blank lines are skipped.
pub fn from_edge_list_text(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let parse_pair = |line: usize, l: &str| -> Result<(usize, usize)> {
        let fields: Vec<_> = l.split_whitespace().collect();
        let err = |msg: String| Error::EdgeList { line, msg };
        if fields.len() != 2 {
            return Err(err(format!("expected two integers, found {:?}", l)));
        }
        let a = fields[0].parse().map_err(|e| err(format!("{:?}: {e}", fields[0])))?;
        let b = fields[1].parse().map_err(|e| err(format!("{:?}: {e}", fields[1])))?;
        Ok((a, b))
    };

    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::EdgeList { line: 1, msg: "missing header".into() })?;
    let (n, m) = parse_pair(hline, header)?;
    let mut g = Graph::with_vertices(n)?;
    let mut count = 0;
    for (line, l) in lines {
        let (u, v) = parse_pair(line, l)?;
        g.add_edge(u, v).map_err(|e| Error::EdgeList { line, msg: e.to_string() })?;
        count += 1;
    }
    if count != m {
        return Err(Error::EdgeList {
            line: hline,
            msg: format!("header declares {m} edges, found {count}"),
        });
    }
    Ok(g)
}

pub fn to_edge_list_text(g: &Graph) -> String {
    let edges = g.edges();
    let mut s = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}
