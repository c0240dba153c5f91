use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// Largest order accepted by [`is_isomorphic`].
pub const ISOMORPHISM_CAP: usize = 16;

/// Largest order accepted by [`has_hamiltonian_path`].
pub const HAMILTONIAN_CAP: usize = 24;

/// Isomorphism test by backtracking over degree-compatible vertex maps.
pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    let n = g1.order();
    if n > ISOMORPHISM_CAP || g2.order() > ISOMORPHISM_CAP {
        return Err(Error::SearchCap { what: "isomorphism search", n: n.max(g2.order()), cap: ISOMORPHISM_CAP });
    }
    if n != g2.order() || g1.size() != g2.size() {
        return Ok(false);
    }
    let (d1, d2) = (g1.degrees(), g2.degrees());
    let (mut s1, mut s2) = (d1.clone(), d2.clone());
    s1.sort_unstable();
    s2.sort_unstable();
    if s1 != s2 {
        return Ok(false);
    }
    // Map high-degree vertices first; they constrain the search most.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(d1[v]));
    let mut image = vec![usize::MAX; n];
    Ok(extend(g1, g2, &d1, &d2, &order, 0, &mut image, VertexSet::EMPTY))
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g1: &Graph,
    g2: &Graph,
    d1: &[usize],
    d2: &[usize],
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: VertexSet,
) -> bool {
    let Some(&u) = order.get(depth) else {
        return true;
    };
    for w in g2.vertices() - used {
        if d2[w] != d1[u] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&p| g1.has_edge(u, p) == g2.has_edge(w, image[p]));
        if !consistent {
            continue;
        }
        image[u] = w;
        if extend(g1, g2, d1, d2, order, depth + 1, image, used | VertexSet::singleton(w)) {
            return true;
        }
    }
    image[u] = usize::MAX;
    false
}

/// Spanning-path test by dynamic programming over (visited set, endpoint).
pub fn has_hamiltonian_path(g: &Graph) -> Result<bool> {
    let n = g.order();
    if n > HAMILTONIAN_CAP {
        return Err(Error::SearchCap { what: "Hamiltonian path search", n, cap: HAMILTONIAN_CAP });
    }
    if n <= 1 {
        return Ok(true);
    }
    if !g.is_connected() {
        return Ok(false);
    }
    // ends[mask] = endpoints of paths visiting exactly `mask`
    let full = (1usize << n) - 1;
    let mut ends = vec![0u32; 1 << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    for mask in 1..=full {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        if mask == full {
            return Ok(true);
        }
        for v in VertexSet(e as u64) {
            for w in g.neighbors(v) - VertexSet(mask as u64) {
                ends[mask | 1 << w] |= 1 << w;
            }
        }
    }
    Ok(false)
}
