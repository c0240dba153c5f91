//! Zero forcing polynomials of threshold graphs from their block partition.
//!
//! Block indices are 0-based here: block `i` is the `(i+1)`-th run of the
//! generating string.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{block_partition, BlockPartition, Symbol, VertexSet};
use crate::poly::ZfPolynomial;

/// Pairs `(A, k)` of the block-index search: `A` is a set of blocks that may
/// each lose one vertex, `k` records that a 1-block was excluded with no
/// 0-vertex kept after it.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgoOneState {
    entries: BTreeSet<(u64, bool)>,
}

impl AlgoOneState {
    fn insert(&mut self, blocks: u64, k: bool) {
        self.entries.insert((blocks, k));
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries as (sorted block indices, indicator).
    pub fn entries(&self) -> impl Iterator<Item = (Vec<usize>, bool)> + '_ {
        self.entries.iter().map(|&(a, k)| (VertexSet(a).to_vec(), k))
    }

    fn projections(&self) -> BTreeSet<u64> {
        self.entries.iter().map(|&(a, _)| a).collect()
    }
}

fn check_shape(bp: &BlockPartition) -> Result<()> {
    if !bp.is_canonical() {
        return Err(Error::NotCanonical(bp.source().to_owned()));
    }
    if !bp.is_connected() {
        return Err(Error::Disconnected(bp.source().to_owned()));
    }
    Ok(())
}

fn run(bp: &BlockPartition) -> Result<AlgoOneState> {
    check_shape(bp)?;
    let t = bp.len();
    let bit = |i: usize| 1u64 << i;
    let mut state = AlgoOneState::default();
    // `s` below is the 1-based index of the current 1-block
    let mut s;
    if t % 2 == 1 {
        state.insert(0, false);
        state.insert(bit(0), true);
        s = 3;
    } else {
        state.insert(0, false);
        state.insert(bit(0), false);
        state.insert(bit(1), true);
        state.insert(bit(0) | bit(1), true);
        s = 4;
    }
    while s <= t {
        let zero_block = s - 2;
        let one_block = s - 1;
        let gap_is_single = bp.blocks()[zero_block].len == 1;
        let mut next = AlgoOneState::default();
        for &(a, k) in &state.entries {
            next.insert(a, false);
            if k && gap_is_single {
                next.insert(a | bit(zero_block), true);
                next.insert(a | bit(one_block), true);
            } else {
                next.insert(a | bit(zero_block), false);
                next.insert(a | bit(one_block), true);
                next.insert(a | bit(zero_block) | bit(one_block), true);
            }
        }
        state = next;
        s += 2;
    }
    Ok(state)
}

/// All sets of block indices from which one vertex each can be dropped
/// while keeping a zero forcing set. Requires a canonical, connected string.
pub fn algorithm_one(bp: &BlockPartition) -> Result<BTreeSet<BTreeSet<usize>>> {
    Ok(run(bp)?
        .projections()
        .into_iter()
        .map(|a| VertexSet(a).iter().collect())
        .collect())
}

/// Final `(A, k)` state of the search, before projection.
pub fn algorithm_one_state(bp: &BlockPartition) -> Result<AlgoOneState> {
    run(bp)
}

/// `Σ_{A} (Π_{i∈A} |B_i|) x^(n-|A|)` over the output of [`algorithm_one`].
pub fn poly_threshold(s: &str) -> Result<ZfPolynomial> {
    let bp = block_partition(s)?;
    check_shape(&bp)?;
    let n = bp.order();
    if n == 1 {
        return ZfPolynomial::new(vec![BigUint::zero(), BigUint::one()]);
    }
    let mut c = vec![BigUint::zero(); n + 1];
    for a in run(&bp)?.projections() {
        let ways: BigUint = VertexSet(a).iter().map(|i| BigUint::from(bp.blocks()[i].len)).product();
        c[n - a.count_ones() as usize] += ways;
    }
    ZfPolynomial::new(c)
}

/// Characterization of zero forcing sets of a threshold graph: at most one
/// vertex missing from each block, and a kept 0-vertex between any two
/// missing 1-vertices.
pub fn threshold_zfs_check(s: &str, set: VertexSet) -> Result<bool> {
    let bp = block_partition(s)?;
    check_shape(&bp)?;
    let n = bp.order();
    if !set.is_subset(VertexSet::full(n)) {
        return Err(Error::VertexOutOfRange { vertex: (set - VertexSet::full(n)).first().unwrap(), n });
    }
    if n == 1 {
        return Ok(set.contains(0));
    }
    for i in 0..bp.len() {
        if (bp.block_vertices(i) - set).len() > 1 {
            return Ok(false);
        }
    }
    let mut open_one = false;
    for block in bp.blocks() {
        for pos in block.start..block.start + block.len {
            match (block.symbol, set.contains(pos)) {
                (Symbol::One, false) => {
                    if open_one {
                        return Ok(false);
                    }
                    open_one = true;
                }
                (Symbol::Zero, true) => open_one = false,
                _ => {}
            }
        }
    }
    Ok(true)
}
