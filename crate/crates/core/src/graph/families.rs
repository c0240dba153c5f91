//! Builders for the standard graph families.
//!
//! Labeling: paths and cycles are numbered along the walk, the wheel hub is
//! the last vertex, and multipartite parts take consecutive label ranges in
//! the order given.

use super::{check_cap, Graph, VertexSet};
use crate::error::{Error, Result};

fn invalid(family: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidSize { family, reason: reason.into() }
}

pub fn empty(n: usize) -> Result<Graph> {
    Graph::with_vertices(n)
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("path", "needs at least 1 vertex"));
    }
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edge_list(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid("cycle", format!("needs at least 3 vertices, got {n}")));
    }
    let mut g = path(n)?;
    g.add_edge(n - 1, 0)?;
    Ok(g)
}

pub fn complete(n: usize) -> Result<Graph> {
    check_cap(n)?;
    let all = VertexSet::full(n);
    let adj = (0..n).map(|v| all - VertexSet::singleton(v)).collect();
    Graph::from_adjacency(adj)
}

/// `K_{1,n-1}` with the center at vertex 0.
pub fn star(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("star", "needs at least 1 vertex"));
    }
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Graph::from_edge_list(n, &edges)
}

/// Wheel `W_n`: rim `C_{n-1}` on vertices `0..n-1`, hub `n-1`.
pub fn wheel(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(invalid("wheel", format!("needs at least 4 vertices, got {n}")));
    }
    cycle(n - 1)?.join(&complete(1)?)
}

pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    let n: usize = parts.iter().sum();
    check_cap(n)?;
    let mut ranges = Vec::with_capacity(parts.len());
    let mut start = 0;
    for &p in parts {
        ranges.push(VertexSet::full(start + p) - VertexSet::full(start));
        start += p;
    }
    let all = VertexSet::full(n);
    let mut adj = vec![VertexSet::EMPTY; n];
    for part in ranges {
        for v in part {
            adj[v] = all - part;
        }
    }
    Graph::from_adjacency(adj)
}

/// `C_n` plus the chord `{i, j}`.
pub fn cycle_plus_chord(n: usize, i: usize, j: usize) -> Result<Graph> {
    if n < 4 {
        return Err(invalid("cycle-chord", format!("needs at least 4 vertices, got {n}")));
    }
    let mut g = cycle(n)?;
    if i >= n || j >= n {
        return Err(Error::VertexOutOfRange { vertex: i.max(j), n });
    }
    if i == j || g.has_edge(i, j) {
        return Err(Error::InvalidChord(format!("{{{i},{j}}}")));
    }
    g.add_edge(i, j)?;
    Ok(g)
}

/// `K_4` with one edge subdivided: the 5-vertex graph sharing the
/// polynomial of `W_5`. The subdividing vertex is 4, between 0 and 1.
pub fn subdivided_k4() -> Graph {
    Graph::from_edge_list(5, &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4)])
        .expect("fixed edge list")
}
