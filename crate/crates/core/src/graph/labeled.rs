//! Exhaustive and random graph corpora.

use std::ops::Range;

use rand::Rng;

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// Largest order for which [`all_labeled_graphs`] will enumerate.
pub const LABELED_CAP: usize = 7;

/// Every labeled graph on `n` vertices, indexed by an edge-subset counter.
///
/// Bit `k` of the counter selects the `k`-th vertex pair in column order
/// `(0,1), (0,2), (1,2), (0,3), ...`. The code range can be split for
/// parallel consumption with [`LabeledGraphs::with_range`].
#[derive(Clone, Debug)]
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    codes: Range<u64>,
}

pub fn all_labeled_graphs(n: usize) -> Result<LabeledGraphs> {
    LabeledGraphs::new(n)
}

impl LabeledGraphs {
    pub fn new(n: usize) -> Result<Self> {
        if n > LABELED_CAP {
            return Err(Error::SearchCap { what: "labeled graph enumeration", n, cap: LABELED_CAP });
        }
        let pairs: Vec<_> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let codes = 0..1u64 << pairs.len();
        Ok(LabeledGraphs { n, pairs, codes })
    }

    /// Total number of codes, `2^(n choose 2)`.
    pub fn total(&self) -> u64 {
        1u64 << self.pairs.len()
    }

    /// Restricts the iterator to a sub-range of codes.
    pub fn with_range(mut self, codes: Range<u64>) -> Self {
        let total = self.total();
        self.codes = codes.start.min(total)..codes.end.min(total);
        self
    }

    pub fn graph(&self, code: u64) -> Graph {
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for (k, &(i, j)) in self.pairs.iter().enumerate() {
            if code >> k & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
        Graph::from_adjacency_unchecked(adj)
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        let code = self.codes.next()?;
        Some(self.graph(code))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.codes.size_hint()
    }
}

/// Erdős–Rényi graph: each pair is an edge independently with probability `p`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    let mut g = Graph::with_vertices(n)?;
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                g.add_edge(i, j)?;
            }
        }
    }
    Ok(g)
}
