//! Simple undirected graphs on at most 64 vertices, stored as one neighbor
//! bitset per vertex.

mod families;
mod io;
mod labeled;
mod search;
mod threshold;
mod vertex_set;

pub use families::*;
pub use io::{from_edge_list_text, from_graph6, to_edge_list_text, to_graph6};
pub use labeled::{all_labeled_graphs, random_graph, LabeledGraphs, LABELED_CAP};
pub use search::{has_hamiltonian_path, is_isomorphic, HAMILTONIAN_CAP, ISOMORPHISM_CAP};
pub use threshold::{block_partition, threshold_from_string, Block, BlockPartition, Symbol};
pub use vertex_set::{Iter as VertexIter, VertexSet};

use crate::error::{Error, Result};

/// Maximum number of vertices a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Graph on `n` vertices and no edges.
    pub fn with_vertices(n: usize) -> Result<Self> {
        check_cap(n)?;
        Ok(Graph { adj: vec![VertexSet::EMPTY; n] })
    }

    /// Builds a graph from an edge list; repeated edges collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::with_vertices(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph directly from neighbor sets, validating symmetry and
    /// irreflexivity.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        check_cap(n)?;
        let all = VertexSet::full(n);
        for (u, &nb) in adj.iter().enumerate() {
            if !nb.is_subset(all) {
                let bad = (nb - all).first().unwrap_or(n);
                return Err(Error::VertexOutOfRange { vertex: bad, n });
            }
            if nb.contains(u) {
                return Err(Error::SelfLoop(u));
            }
            for v in nb {
                if !adj[v].contains(u) {
                    return Err(Error::InvalidArgument(format!(
                        "adjacency not symmetric at ({u}, {v})"
                    )));
                }
            }
        }
        Ok(Graph { adj })
    }

    pub(crate) fn from_adjacency_unchecked(adj: Vec<VertexSet>) -> Self {
        Graph { adj }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|s| s.len()).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(|s| s.len()).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.adj.iter().map(|s| s.len()).max()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (u, &nb) in self.adj.iter().enumerate() {
            for v in nb {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_isolated(&self, v: usize) -> bool {
        self.adj[v].is_empty()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.adj.iter().all(|s| s.len() + 1 == n)
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|s| s.is_empty())
    }

    /// Subgraph induced by `keep`, relabeled in increasing vertex order.
    pub fn induced_subgraph(&self, keep: VertexSet) -> Graph {
        let verts = keep.to_vec();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let adj = verts
            .iter()
            .map(|&v| (self.adj[v] & keep).iter().map(|w| index[w]).collect())
            .collect();
        Graph { adj }
    }

    /// Connected components, each as a vertex set, ordered by minimum vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for start in 0..self.order() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier {
                    next |= self.adj[v];
                }
                frontier = next - comp;
                comp |= next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.connected_components().len() == 1
    }

    /// Structural test for being isomorphic to a path `P_n`.
    pub fn is_path(&self) -> bool {
        let n = self.order();
        match n {
            0 => false,
            1 => true,
            _ => {
                self.is_connected()
                    && self.max_degree().unwrap_or(0) <= 2
                    && self.adj.iter().filter(|s| s.len() <= 1).count() == 2
            }
        }
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let off = self.order();
        check_cap(off + other.order())?;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|s| VertexSet(s.0 << off)));
        Ok(Graph { adj })
    }

    /// Join: the disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        let left = VertexSet::full(self.order());
        let right = g.vertices() - left;
        for v in left {
            g.adj[v] |= right;
        }
        for v in right {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    /// Cartesian product with row-major labels `(u, u') -> u * |V(other)| + u'`.
    pub fn cartesian_product(&self, other: &Graph) -> Result<Graph> {
        let (n1, n2) = (self.order(), other.order());
        check_cap(n1 * n2)?;
        let mut g = Graph::with_vertices(n1 * n2)?;
        for u in 0..n1 {
            for up in 0..n2 {
                let a = u * n2 + up;
                for vp in other.neighbors(up) {
                    g.adj[a].insert(u * n2 + vp);
                }
                for v in self.neighbors(u) {
                    g.adj[a].insert(v * n2 + up);
                }
            }
        }
        Ok(g)
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![VertexSet::EMPTY; self.order()];
        for (u, &nb) in self.adj.iter().enumerate() {
            adj[perm[u]] = nb.iter().map(|v| perm[v]).collect();
        }
        Graph { adj }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}

pub(crate) fn check_cap(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::TooManyVertices { n, cap: MAX_VERTICES })
    } else {
        Ok(())
    }
}
