//! Forts and the fort-cover integer program.
//!
//! A fort is a nonempty set `F` such that no vertex outside `F` has exactly
//! one neighbor in `F`. Every zero forcing set meets every fort, and the
//! zero forcing number is the minimum size of a set meeting all of them.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::closed_forms::binom;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::poly::{zf_polynomial_with, Enumeration, ZfPolynomial};

/// Largest order accepted by [`fort_count_bound_holds`].
pub const FORT_BOUND_CAP: usize = 20;

/// All forts of a graph, sorted by `(size, bits)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FortFamily {
    pub n: usize,
    pub forts: Vec<VertexSet>,
}

impl FortFamily {
    pub fn len(&self) -> usize {
        self.forts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forts.is_empty()
    }

    pub fn contains(&self, f: VertexSet) -> bool {
        self.forts.binary_search_by_key(&sort_key(f), |&g| sort_key(g)).is_ok()
    }

    /// Inclusion-minimal members. A set meets every fort iff it meets every
    /// minimal fort.
    pub fn minimal(&self) -> Vec<VertexSet> {
        minimal_masks(&self.forts.iter().map(|f| f.bits()).collect::<Vec<_>>())
            .into_iter()
            .map(VertexSet)
            .collect()
    }

    /// Whether `s` meets every fort.
    pub fn is_transversal(&self, s: VertexSet) -> bool {
        self.forts.iter().all(|f| f.intersects(s))
    }
}

fn sort_key(f: VertexSet) -> (usize, u64) {
    (f.len(), f.bits())
}

pub fn is_fort(g: &Graph, f: VertexSet) -> bool {
    !f.is_empty() && f.is_subset(g.vertices()) && fort_mask(g.adjacency(), g.vertices().bits(), f.bits())
}

#[inline]
fn fort_mask(adj: &[VertexSet], full: u64, f: u64) -> bool {
    let mut outside = full & !f;
    while outside != 0 {
        let v = outside.trailing_zeros() as usize;
        outside &= outside - 1;
        if (adj[v].bits() & f).count_ones() == 1 {
            return false;
        }
    }
    true
}

/// Bitmasks of all forts in increasing `(popcount, bits)` order.
pub(crate) fn fort_masks(g: &Graph) -> Vec<u64> {
    let adj = g.adjacency();
    let full = g.vertices().bits();
    let mut out: Vec<u64> = (1..=full).filter(|&f| fort_mask(adj, full, f)).collect();
    out.sort_unstable_by_key(|&f| (f.count_ones(), f));
    out
}

/// Keeps the masks with no proper subset in the list. Expects the input
/// sorted by popcount.
pub(crate) fn minimal_masks(sorted: &[u64]) -> Vec<u64> {
    let mut keep: Vec<u64> = Vec::new();
    for &f in sorted {
        if !keep.iter().any(|&m| m & !f == 0) {
            keep.push(f);
        }
    }
    keep
}

pub fn enumerate_forts(g: &Graph) -> Result<FortFamily> {
    enumerate_forts_with(g, &Enumeration::default())
}

/// Plain `2^n` scan; stride-parallel when `opts.jobs > 1`.
pub fn enumerate_forts_with(g: &Graph, opts: &Enumeration) -> Result<FortFamily> {
    let n = g.order();
    if n > opts.cap || n >= 64 {
        return Err(Error::EnumerationCap { n, cap: opts.cap.min(63) });
    }
    let masks = if opts.jobs <= 1 || n < 12 {
        fort_masks(g)
    } else {
        let adj = g.adjacency();
        let full = g.vertices().bits();
        let total = 1u64 << n;
        let strides = opts.jobs as u64 * 4;
        let step = total.div_ceil(strides);
        let pool = rayon::ThreadPoolBuilder::new().num_threads(opts.jobs).build().expect("thread pool");
        let mut all: Vec<u64> = pool.install(|| {
            (0..strides)
                .into_par_iter()
                .flat_map_iter(|k| {
                    let lo = (k * step).max(1);
                    let hi = ((k + 1) * step).min(total);
                    (lo..hi).filter(move |&f| fort_mask(adj, full, f))
                })
                .collect()
        });
        all.sort_unstable_by_key(|&f| (f.count_ones(), f));
        all
    };
    Ok(FortFamily { n, forts: masks.into_iter().map(VertexSet).collect() })
}

/// Optimal fort cover with its witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverCertificate {
    pub size: usize,
    pub witness: VertexSet,
}

/// Minimum set meeting every fort. Among optimal sets the witness is the
/// one with the smallest bitmask.
pub fn min_fort_cover(g: &Graph) -> Result<CoverCertificate> {
    Ok(min_cover_of(&enumerate_forts(g)?))
}

pub fn min_fort_cover_with(g: &Graph, opts: &Enumeration) -> Result<CoverCertificate> {
    Ok(min_cover_of(&enumerate_forts_with(g, opts)?))
}

/// Solves the hitting-set program over a precomputed family.
pub fn min_cover_of(family: &FortFamily) -> CoverCertificate {
    let minimal: Vec<u64> = family.minimal().iter().map(|f| f.bits()).collect();
    let full = VertexSet::full(family.n).bits();
    let size = min_hitting_size(&minimal, full);
    let mut allowed = full;
    for v in (0..family.n).rev() {
        let without = allowed & !(1u64 << v);
        if hitting_size_within(&minimal, without, size).is_some() {
            allowed = without;
        }
    }
    CoverCertificate { size, witness: VertexSet(allowed) }
}

/// Optimum of the hitting-set program over all vertices.
pub(crate) fn min_hitting_size(forts: &[u64], full: u64) -> usize {
    hitting_size_within(forts, full, usize::MAX).expect("the full vertex set meets every fort")
}

/// Smallest hitting set using only `allowed` vertices, if one of size at
/// most `limit` exists.
fn hitting_size_within(forts: &[u64], allowed: u64, limit: usize) -> Option<usize> {
    if forts.iter().any(|&f| f & allowed == 0) {
        return None;
    }
    let greedy = greedy_cover(forts, allowed);
    let mut solver = Solver { best: greedy.count_ones() as usize };
    if solver.best > limit {
        solver.best = limit.saturating_add(1);
    }
    let start = solver.best;
    solver.search(forts.to_vec(), 0, allowed);
    let found = if solver.best < start { solver.best } else { greedy.count_ones() as usize };
    (found <= limit).then_some(found)
}

fn greedy_cover(forts: &[u64], allowed: u64) -> u64 {
    let mut open: Vec<u64> = forts.to_vec();
    let mut chosen = 0u64;
    while !open.is_empty() {
        let v = best_vertex(&open, allowed);
        chosen |= 1 << v;
        open.retain(|&f| f >> v & 1 == 0);
    }
    chosen
}

/// Allowed vertex in the most open forts; ties go to the smaller index.
fn best_vertex(open: &[u64], allowed: u64) -> usize {
    let mut counts = [0u32; 64];
    for &f in open {
        let mut m = f & allowed;
        while m != 0 {
            counts[m.trailing_zeros() as usize] += 1;
            m &= m - 1;
        }
    }
    (0..64).max_by_key(|&v| (counts[v], std::cmp::Reverse(v))).unwrap()
}

struct Solver {
    best: usize,
}

impl Solver {
    fn search(&mut self, open: Vec<u64>, size: usize, allowed: u64) {
        if open.is_empty() {
            self.best = self.best.min(size);
            return;
        }
        if size + packing_bound(&open, allowed) >= self.best {
            return;
        }
        // fail-first: the open fort with the fewest usable vertices
        let pivot = *open.iter().min_by_key(|&&f| (f & allowed).count_ones()).unwrap();
        let mut candidates: Vec<usize> = VertexSet(pivot & allowed).iter().collect();
        let mut degree = [0u32; 64];
        for &f in &open {
            for &v in &candidates {
                degree[v] += (f >> v & 1) as u32;
            }
        }
        candidates.sort_by_key(|&v| std::cmp::Reverse(degree[v]));
        let mut allowed = allowed;
        for v in candidates {
            let rest: Vec<u64> = open.iter().copied().filter(|&f| f >> v & 1 == 0).collect();
            self.search(rest, size + 1, allowed);
            // later branches exclude the vertices already tried
            allowed &= !(1u64 << v);
            if open.iter().any(|&f| f & allowed == 0) {
                break;
            }
        }
    }
}

/// Size of a greedily built family of pairwise disjoint open forts.
fn packing_bound(open: &[u64], allowed: u64) -> usize {
    let mut used = 0u64;
    let mut count = 0;
    for &f in open {
        let f = f & allowed;
        if f & used == 0 {
            used |= f;
            count += 1;
        }
    }
    count
}

fn decimal<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// `|F(G)|` against `2^n - Z(G;1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FortCountBound {
    #[serde(serialize_with = "decimal")]
    pub lhs: BigUint,
    #[serde(serialize_with = "decimal")]
    pub rhs: BigUint,
    pub ok: bool,
}

pub fn fort_count_bound_holds(g: &Graph) -> Result<FortCountBound> {
    let n = g.order();
    if n > FORT_BOUND_CAP {
        return Err(Error::EnumerationCap { n, cap: FORT_BOUND_CAP });
    }
    let forts = enumerate_forts(g)?;
    let poly = zf_polynomial_with(g, &Enumeration::default().with_cap(FORT_BOUND_CAP))?;
    Ok(fort_count_bound_from(&forts, &poly))
}

pub fn fort_count_bound_from(forts: &FortFamily, poly: &ZfPolynomial) -> FortCountBound {
    let at_one = poly.evaluate(&BigRational::one()).to_integer();
    let total = BigUint::one() << poly.order();
    let rhs = (BigInt::from(total) - at_one).to_biguint().expect("Z(G;1) <= 2^n");
    let lhs = BigUint::from(forts.len());
    FortCountBound { ok: lhs <= rhs, lhs, rhs }
}

/// One line of the small-fort coefficient bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientBound {
    pub i: usize,
    #[serde(serialize_with = "decimal")]
    pub coefficient: BigUint,
    #[serde(serialize_with = "decimal")]
    pub bound: BigUint,
    pub holds: bool,
}

/// When some fort has at most `Z(G) + 1` vertices, compares every
/// `z(G;i)` with `C(n,i) - C(n-i-1,i)`. `None` when no fort is that small.
pub fn small_fort_coefficient_bound(g: &Graph) -> Result<Option<Vec<CoefficientBound>>> {
    let forts = enumerate_forts(g)?;
    let poly = zf_polynomial_with(g, &Enumeration::default())?;
    small_fort_coefficient_bound_from(&forts, &poly)
}

pub fn small_fort_coefficient_bound_from(
    forts: &FortFamily,
    poly: &ZfPolynomial,
) -> Result<Option<Vec<CoefficientBound>>> {
    let z = poly.zero_forcing_number()?;
    if !forts.forts.iter().any(|f| f.len() <= z + 1) {
        return Ok(None);
    }
    let n = poly.order() as i64;
    Ok(Some(
        (1..=n)
            .map(|i| {
                let coefficient = poly.coeff(i as usize);
                let bound = binom(n, i) - binom(n - i - 1, i);
                CoefficientBound { i: i as usize, holds: coefficient <= bound, coefficient, bound }
            })
            .collect(),
    ))
}
