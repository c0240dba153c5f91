//! The zero forcing color change rule.
//!
//! A colored vertex with exactly one uncolored neighbor forces (colors)
//! that neighbor. The closure of a set is the fixpoint of this rule; it does
//! not depend on the order in which forces are applied.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

/// Closure of `initial` under the color change rule.
pub fn closure(g: &Graph, initial: VertexSet) -> VertexSet {
    let adj = g.adjacency();
    let mut colored = initial;
    loop {
        let before = colored;
        for u in colored {
            let open = adj[u] - colored;
            if open.len() == 1 {
                colored |= open;
            }
        }
        if colored == before {
            return colored;
        }
    }
}

pub fn is_zero_forcing_set(g: &Graph, s: VertexSet) -> bool {
    closure(g, s) == g.vertices()
}

/// A chronological list of forces starting from `initial`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForceRecord {
    pub initial: VertexSet,
    /// `(forcer, forced)` pairs in the order applied.
    pub forces: Vec<(usize, usize)>,
    pub closure: VertexSet,
}

/// Applies forces one at a time, always choosing the smallest
/// `(forcer, forced)` pair available.
pub fn chronological_forces(g: &Graph, initial: VertexSet) -> ForceRecord {
    let adj = g.adjacency();
    let mut colored = initial;
    let mut forces = Vec::new();
    // Each forcer has a single target, so the smallest pair is the
    // smallest forcer that can force.
    while let Some((u, w)) = colored.iter().find_map(|u| {
        let open = adj[u] - colored;
        (open.len() == 1).then(|| (u, open.first().unwrap()))
    }) {
        colored.insert(w);
        forces.push((u, w));
    }
    ForceRecord { initial, forces, closure: colored }
}

impl ForceRecord {
    /// Checks that every force is legal when replayed in order.
    pub fn replay(&self, g: &Graph) -> bool {
        let mut colored = self.initial;
        for &(u, w) in &self.forces {
            if !colored.contains(u) || g.neighbors(u) - colored != VertexSet::singleton(w) {
                return false;
            }
            colored.insert(w);
        }
        colored == self.closure
    }

    /// Maximal forcing chains. Every chain starts at an initially colored
    /// vertex; vertices that never force give length-zero chains. Chains
    /// are ordered by their first vertex.
    pub fn forcing_chains(&self) -> Vec<Vec<usize>> {
        let mut next = [usize::MAX; 64];
        for &(u, w) in &self.forces {
            next[u] = w;
        }
        self.initial
            .iter()
            .map(|start| {
                let mut chain = vec![start];
                let mut v = start;
                while next[v] != usize::MAX {
                    v = next[v];
                    chain.push(v);
                }
                chain
            })
            .collect()
    }

    /// The last vertex of every forcing chain.
    pub fn terminals(&self) -> VertexSet {
        self.forcing_chains().iter().map(|c| *c.last().unwrap()).collect()
    }
}

pub fn forcing_chains(record: &ForceRecord) -> Vec<Vec<usize>> {
    record.forcing_chains()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn k4_minus_01() -> Graph {
        Graph::from_edge_list(4, &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    /// Applies one randomly chosen legal force at a time.
    fn random_order_closure(g: &Graph, s: VertexSet, rng: &mut ChaCha8Rng) -> VertexSet {
        let mut colored = s;
        loop {
            let mut options: Vec<usize> = colored
                .iter()
                .filter_map(|u| {
                    let open = g.neighbors(u) - colored;
                    (open.len() == 1).then(|| open.first().unwrap())
                })
                .collect();
            if options.is_empty() {
                return colored;
            }
            options.shuffle(rng);
            colored.insert(options[0]);
        }
    }

    #[test]
    fn closure_examples() {
        assert_eq!(closure(&complete(3).unwrap(), set(&[0])), set(&[0]));
        assert_eq!(closure(&path(3).unwrap(), set(&[0])), set(&[0, 1, 2]));
        assert_eq!(closure(&cycle(4).unwrap(), set(&[0, 2])), set(&[0, 2]));
    }

    #[test]
    fn zero_forcing_examples() {
        let g = k4_minus_01();
        assert!(is_zero_forcing_set(&g, set(&[0, 2])));
        assert!(!is_zero_forcing_set(&g, set(&[0, 1])));
        for g in [cycle(5).unwrap(), empty(3).unwrap(), wheel(6).unwrap()] {
            assert!(is_zero_forcing_set(&g, g.vertices()));
        }
    }

    #[test]
    fn chronological_examples() {
        let r = chronological_forces(&path(3).unwrap(), set(&[0]));
        assert_eq!(r.forces, vec![(0, 1), (1, 2)]);
        let c4 = cycle(4).unwrap();
        let r = chronological_forces(&c4, set(&[0, 1]));
        assert_eq!(r.forces, vec![(0, 3), (1, 2)]);
        assert!(r.replay(&c4));
        let r = chronological_forces(&complete(3).unwrap(), set(&[0, 1, 2]));
        assert!(r.forces.is_empty());
    }

    #[test]
    fn chain_examples() {
        let r = chronological_forces(&path(5).unwrap(), set(&[0]));
        assert_eq!(r.forcing_chains(), vec![vec![0, 1, 2, 3, 4]]);
        let r = chronological_forces(&cycle(4).unwrap(), set(&[0, 1]));
        assert_eq!(forcing_chains(&r), vec![vec![0, 3], vec![1, 2]]);
        assert_eq!(r.terminals(), set(&[2, 3]));
        let r = chronological_forces(&complete(3).unwrap(), set(&[0, 1, 2]));
        assert_eq!(r.forcing_chains(), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn record_json() {
        let r = chronological_forces(&path(3).unwrap(), set(&[0]));
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, r#"{"initial":[0],"forces":[[0,1],[1,2]],"closure":[0,1,2]}"#);
        assert_eq!(serde_json::from_str::<ForceRecord>(&s).unwrap(), r);
    }

    #[test]
    fn replay_rejects_bad_records() {
        let g = path(3).unwrap();
        let mut r = chronological_forces(&g, set(&[0]));
        r.forces.swap(0, 1);
        assert!(!r.replay(&g));
    }

    #[test]
    fn monotone_on_all_graphs_n5() {
        for g in all_labeled_graphs(5).unwrap() {
            let cl: Vec<VertexSet> = (0..32u64).map(|m| closure(&g, VertexSet(m))).collect();
            for s in 0..32u64 {
                for v in 0..5 {
                    let t = s | 1 << v;
                    assert!(cl[s as usize].is_subset(cl[t as usize]));
                }
            }
        }
    }

    #[test]
    fn chains_are_disjoint_induced_paths_n6() {
        let gen = all_labeled_graphs(6).unwrap();
        for code in (0..gen.total()).step_by(97) {
            let g = gen.graph(code);
            for m in 0..64u64 {
                let s = VertexSet(m);
                if !is_zero_forcing_set(&g, s) {
                    continue;
                }
                let r = chronological_forces(&g, s);
                assert!(r.replay(&g));
                let chains = r.forcing_chains();
                let mut covered = VertexSet::EMPTY;
                for c in &chains {
                    assert!(s.contains(c[0]));
                    for w in c.windows(2) {
                        assert!(g.has_edge(w[0], w[1]));
                    }
                    let cs: VertexSet = c.iter().copied().collect();
                    assert_eq!(cs.len(), c.len());
                    assert!(!cs.intersects(covered));
                    covered |= cs;
                }
                assert_eq!(covered, g.vertices());
                assert!(is_zero_forcing_set(&g, r.terminals()));
            }
        }
    }

    proptest! {
        #[test]
        fn closure_is_order_independent(n in 1usize..=12, p in 0.1f64..0.9, seed in any::<u64>(), mask in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let g = random_graph(n, p, &mut rng).unwrap();
            let s = VertexSet(mask) & g.vertices();
            let det = closure(&g, s);
            prop_assert_eq!(random_order_closure(&g, s, &mut rng), det);
            let rec = chronological_forces(&g, s);
            prop_assert_eq!(rec.closure, det);
            prop_assert!(rec.replay(&g));
            prop_assert_eq!(rec.forces.len(), det.len() - s.len());
        }
    }
}
