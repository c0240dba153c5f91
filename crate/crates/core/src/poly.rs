//! The zero forcing polynomial `Σ z(G;i) x^i` and its brute-force
//! computation.

use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forcing::closure;
use crate::graph::{Graph, VertexSet};

/// Default largest order accepted by the subset enumeration.
pub const DEFAULT_ENUMERATION_CAP: usize = 24;

/// Coefficient vector `coeffs[i] = z(G;i)` for `0 <= i <= n`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PolyRepr", into = "PolyRepr")]
pub struct ZfPolynomial {
    coeffs: Vec<BigUint>,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    n: usize,
    coeffs: Vec<String>,
}

impl From<ZfPolynomial> for PolyRepr {
    fn from(p: ZfPolynomial) -> Self {
        PolyRepr { n: p.order(), coeffs: p.coeffs.iter().map(|c| c.to_string()).collect() }
    }
}

impl TryFrom<PolyRepr> for ZfPolynomial {
    type Error = String;

    fn try_from(r: PolyRepr) -> std::result::Result<Self, String> {
        if r.coeffs.len() != r.n + 1 {
            return Err(format!("expected {} coefficients for n = {}, got {}", r.n + 1, r.n, r.coeffs.len()));
        }
        let coeffs = r
            .coeffs
            .iter()
            .map(|s| s.parse::<BigUint>().map_err(|e| format!("coefficient {s:?}: {e}")))
            .collect::<std::result::Result<_, _>>()?;
        Ok(ZfPolynomial { coeffs })
    }
}

impl ZfPolynomial {
    /// Polynomial of order `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<BigUint>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument("a polynomial needs at least one coefficient".into()));
        }
        Ok(ZfPolynomial { coeffs })
    }

    pub fn from_u64s(coeffs: &[u64]) -> Self {
        assert!(!coeffs.is_empty(), "a polynomial needs at least one coefficient");
        ZfPolynomial { coeffs: coeffs.iter().map(|&c| BigUint::from(c)).collect() }
    }

    /// The polynomial `1` of the empty graph; the identity for [`multiply`](Self::multiply).
    pub fn one() -> Self {
        ZfPolynomial { coeffs: vec![BigUint::one()] }
    }

    /// Order of the underlying graph (the degree of the coefficient array).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// `z(G;i)`, zero outside `0..=n`.
    pub fn coeff(&self, i: usize) -> BigUint {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn multiply(&self, other: &ZfPolynomial) -> ZfPolynomial {
        let mut out = vec![BigUint::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ZfPolynomial { coeffs: out }
    }

    /// Exact Horner evaluation.
    pub fn evaluate(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| {
            acc * x + BigRational::from_integer(c.clone().into())
        })
    }

    /// Index of the first nonzero coefficient.
    pub fn zero_forcing_number(&self) -> Result<usize> {
        self.coeffs.iter().position(|c| !c.is_zero()).ok_or(Error::ZeroPolynomial)
    }

    /// The nonzero segment weakly rises and then weakly falls.
    pub fn is_unimodal(&self) -> bool {
        unimodal_slice(&self.coeffs)
    }

    /// Human-readable form, e.g. `8x^3 + 5x^4 + x^5`.
    pub fn pretty(&self) -> String {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let c = if c.is_one() && i > 0 { String::new() } else { c.to_string() };
                match i {
                    0 => c,
                    1 => format!("{c}x"),
                    _ => format!("{c}x^{i}"),
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

impl fmt::Debug for ZfPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter().map(|c| c.to_string())).finish()
    }
}

impl fmt::Display for ZfPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

pub(crate) fn unimodal_slice<T: Ord + Zero>(c: &[T]) -> bool {
    let Some(first) = c.iter().position(|x| !x.is_zero()) else {
        return true;
    };
    let last = c.iter().rposition(|x| !x.is_zero()).unwrap();
    let mut i = first;
    while i < last && c[i] <= c[i + 1] {
        i += 1;
    }
    while i < last && c[i] >= c[i + 1] {
        i += 1;
    }
    i == last
}

/// How the `2^n` subsets are scanned.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Closure of every subset, split across workers in contiguous strides.
    #[default]
    Direct,
    /// One table over all subsets, filled from the full set downward:
    /// if `S` admits a force onto `w`, `S` forces iff `S + w` does.
    /// Single-threaded; needs `2^n` bits of memory.
    Memoized,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub cap: usize,
    pub jobs: usize,
    pub strategy: Strategy,
}

impl Default for Enumeration {
    fn default() -> Self {
        Enumeration { cap: DEFAULT_ENUMERATION_CAP, jobs: 1, strategy: Strategy::Direct }
    }
}

impl Enumeration {
    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs.max(1);
        self
    }

    pub fn with_strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.cap || n >= 64 {
            Err(Error::EnumerationCap { n, cap: self.cap.min(63) })
        } else {
            Ok(())
        }
    }
}

/// Forcing status of every subset of `V`, one bit per subset.
#[derive(Clone, Debug)]
pub struct ForcingTable {
    n: usize,
    words: Vec<u64>,
}

impl ForcingTable {
    /// Fills the table with the memoized downward sweep.
    pub fn build(g: &Graph) -> Result<Self> {
        let n = g.order();
        if n >= 40 {
            return Err(Error::EnumerationCap { n, cap: 39 });
        }
        let full = (1u64 << n) - 1;
        let adj = g.adjacency();
        let mut words = vec![0u64; ((1u64 << n) as usize).div_ceil(64)];
        let get = |w: &[u64], m: u64| w[(m >> 6) as usize] >> (m & 63) & 1 == 1;
        for mask in (0..=full).rev() {
            let colored = VertexSet(mask);
            let mut forcing = mask == full;
            if !forcing {
                for u in colored {
                    let open = adj[u] - colored;
                    if open.len() == 1 {
                        forcing = get(&words, mask | open.bits());
                        break;
                    }
                }
            }
            if forcing {
                words[(mask >> 6) as usize] |= 1 << (mask & 63);
            }
        }
        Ok(ForcingTable { n, words })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_forcing(&self, s: VertexSet) -> bool {
        let m = s.bits();
        self.words[(m >> 6) as usize] >> (m & 63) & 1 == 1
    }

    /// `counts[i]` = number of forcing sets of size `i`.
    pub fn counts(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.n + 1];
        for (w, &word) in self.words.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let b = bits.trailing_zeros() as u64;
                bits &= bits - 1;
                counts[((w as u64) << 6 | b).count_ones() as usize] += 1;
            }
        }
        counts
    }

    pub fn polynomial(&self) -> ZfPolynomial {
        ZfPolynomial::from_u64s(&self.counts())
    }
}

/// Brute-force zero forcing polynomial with default settings.
pub fn zf_polynomial(g: &Graph) -> Result<ZfPolynomial> {
    zf_polynomial_with(g, &Enumeration::default())
}

pub fn zf_polynomial_with(g: &Graph, opts: &Enumeration) -> Result<ZfPolynomial> {
    let n = g.order();
    opts.check(n)?;
    match opts.strategy {
        Strategy::Memoized => Ok(ForcingTable::build(g)?.polynomial()),
        Strategy::Direct => Ok(ZfPolynomial::from_u64s(&direct_counts(g, opts.jobs))),
    }
}

fn direct_counts(g: &Graph, jobs: usize) -> Vec<u64> {
    let n = g.order();
    let all = g.vertices();
    let total = 1u64 << n;
    let count_range = |lo: u64, hi: u64| {
        let mut counts = vec![0u64; n + 1];
        for mask in lo..hi {
            if closure(g, VertexSet(mask)) == all {
                counts[mask.count_ones() as usize] += 1;
            }
        }
        counts
    };
    if jobs <= 1 || n < 12 {
        return count_range(0, total);
    }
    let strides = (jobs as u64 * 4).min(total);
    let step = total.div_ceil(strides);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool");
    pool.install(|| {
        (0..strides)
            .into_par_iter()
            .map(|k| count_range(k * step, ((k + 1) * step).min(total)))
            .reduce(
                || vec![0u64; n + 1],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            )
    })
}

/// `z(G;i)`: the number of zero forcing sets of size exactly `i`.
pub fn count_zfs(g: &Graph, i: usize) -> Result<BigUint> {
    count_zfs_with(g, i, DEFAULT_ENUMERATION_CAP)
}

pub fn count_zfs_with(g: &Graph, i: usize, cap: usize) -> Result<BigUint> {
    let n = g.order();
    Enumeration::default().with_cap(cap).check(n)?;
    if i > n {
        return Err(Error::InvalidArgument(format!("cardinality {i} exceeds order {n}")));
    }
    let all = g.vertices();
    let mut count = 0u64;
    for_each_k_subset(n, i, |s| {
        if closure(g, s) == all {
            count += 1;
        }
    });
    Ok(count.into())
}

/// Visits every `k`-subset of `0..n` in increasing bit order (Gosper's hack).
pub(crate) fn for_each_k_subset(n: usize, k: usize, mut f: impl FnMut(VertexSet)) {
    if k > n {
        return;
    }
    if k == 0 {
        f(VertexSet::EMPTY);
        return;
    }
    let limit = 1u128 << n;
    let mut s: u128 = (1u128 << k) - 1;
    while s < limit {
        f(VertexSet(s as u64));
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
}

pub fn multiply(p: &ZfPolynomial, q: &ZfPolynomial) -> ZfPolynomial {
    p.multiply(q)
}

pub fn evaluate(p: &ZfPolynomial, x: &BigRational) -> BigRational {
    p.evaluate(x)
}

pub fn zero_forcing_number(p: &ZfPolynomial) -> Result<usize> {
    p.zero_forcing_number()
}

pub fn is_unimodal(p: &ZfPolynomial) -> bool {
    p.is_unimodal()
}

/// Product of the brute-force polynomials of the connected components.
pub fn zf_polynomial_by_components(g: &Graph) -> Result<ZfPolynomial> {
    zf_polynomial_by_components_with(g, &Enumeration::default())
}

pub fn zf_polynomial_by_components_with(g: &Graph, opts: &Enumeration) -> Result<ZfPolynomial> {
    g.connected_components().into_iter().try_fold(ZfPolynomial::one(), |acc, comp| {
        let part = zf_polynomial_with(&g.induced_subgraph(comp), opts)?;
        Ok(acc.multiply(&part))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;
    use num_bigint::BigInt;
    use proptest::prelude::{any, prop_assert, prop_assert_eq, proptest};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn coeffs(p: &ZfPolynomial) -> Vec<u64> {
        p.coeffs().iter().map(|c| c.try_into().unwrap()).collect()
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn polynomial_examples() {
        assert_eq!(coeffs(&zf_polynomial(&path(4).unwrap()).unwrap()), [0, 2, 6, 4, 1]);
        assert_eq!(coeffs(&zf_polynomial(&wheel(5).unwrap()).unwrap()), [0, 0, 0, 8, 5, 1]);
        assert_eq!(coeffs(&zf_polynomial(&empty(3).unwrap()).unwrap()), [0, 0, 0, 1]);
        assert_eq!(coeffs(&zf_polynomial(&empty(0).unwrap()).unwrap()), [1]);
    }

    #[test]
    fn single_coefficients() {
        assert_eq!(count_zfs(&cycle(7).unwrap(), 2).unwrap(), 7u32.into());
        assert_eq!(count_zfs(&complete(4).unwrap(), 3).unwrap(), 4u32.into());
        assert_eq!(count_zfs(&path(4).unwrap(), 2).unwrap(), 6u32.into());
        assert_eq!(count_zfs(&path(4).unwrap(), 0).unwrap(), 0u32.into());
        assert!(count_zfs(&path(4).unwrap(), 5).is_err());
    }

    #[test]
    fn cap_is_enforced() {
        let g = path(25).unwrap();
        assert_eq!(zf_polynomial(&g), Err(Error::EnumerationCap { n: 25, cap: 24 }));
        assert!(zf_polynomial_with(&path(10).unwrap(), &Enumeration::default().with_cap(8)).is_err());
        assert!(count_zfs(&g, 1).is_err());
    }

    #[test]
    fn products() {
        let k2 = zf_polynomial(&complete(2).unwrap()).unwrap();
        assert_eq!(coeffs(&k2.multiply(&k2)), [0, 0, 4, 4, 1]);
        assert_eq!(k2.multiply(&ZfPolynomial::one()), k2);
        let k3 = zf_polynomial(&complete(3).unwrap()).unwrap();
        let prod = multiply(&k2, &k3);
        assert_eq!(coeffs(&prod), [0, 0, 0, 6, 5, 1]);
        let union = complete(2).unwrap().disjoint_union(&complete(3).unwrap()).unwrap();
        assert_eq!(zf_polynomial(&union).unwrap(), prod);
    }

    #[test]
    fn by_components_examples() {
        let g = complete(2).unwrap().disjoint_union(&complete(2).unwrap()).unwrap();
        assert_eq!(coeffs(&zf_polynomial_by_components(&g).unwrap()), [0, 0, 4, 4, 1]);
        let c6 = cycle(6).unwrap();
        assert_eq!(zf_polynomial_by_components(&c6).unwrap(), zf_polynomial(&c6).unwrap());
        let k1 = ZfPolynomial::from_u64s(&[0, 1]);
        assert_eq!(zf_polynomial_by_components(&empty(2).unwrap()).unwrap(), k1.multiply(&k1));
        assert_eq!(coeffs(&zf_polynomial_by_components(&empty(2).unwrap()).unwrap()), [0, 0, 1]);
    }

    #[test]
    fn evaluation() {
        let p4 = zf_polynomial(&path(4).unwrap()).unwrap();
        assert_eq!(evaluate(&p4, &rat(1)), rat(13));
        assert_eq!(p4.evaluate(&rat(0)), rat(0));
        assert_eq!(zf_polynomial(&complete(3).unwrap()).unwrap().evaluate(&rat(1)), rat(4));
        let c4 = zf_polynomial(&cycle(4).unwrap()).unwrap();
        assert_eq!(c4.evaluate(&rat(2)), rat(64));
        let half = BigRational::new(1.into(), 2.into());
        // 2/2 + 6/4 + 4/8 + 1/16 = 49/16
        assert_eq!(p4.evaluate(&half), BigRational::new(49.into(), 16.into()));
    }

    #[test]
    fn zero_forcing_numbers() {
        let z = |g: Graph| zero_forcing_number(&zf_polynomial(&g).unwrap()).unwrap();
        assert_eq!(z(cycle(6).unwrap()), 2);
        assert_eq!(z(complete(5).unwrap()), 4);
        assert_eq!(z(path(9).unwrap()), 1);
        assert_eq!(ZfPolynomial::from_u64s(&[0, 0]).zero_forcing_number(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn unimodality() {
        assert!(is_unimodal(&ZfPolynomial::from_u64s(&[0, 2, 6, 4, 1])));
        assert!(ZfPolynomial::from_u64s(&[0, 0, 4, 4, 1]).is_unimodal());
        assert!(!ZfPolynomial::from_u64s(&[0, 1, 0, 2, 1]).is_unimodal());
        assert!(!ZfPolynomial::from_u64s(&[0, 3, 2, 2, 3]).is_unimodal());
        assert!(ZfPolynomial::from_u64s(&[0, 1]).is_unimodal());
    }

    #[test]
    fn pretty_and_json() {
        let w5 = zf_polynomial(&wheel(5).unwrap()).unwrap();
        assert_eq!(w5.pretty(), "8x^3 + 5x^4 + x^5");
        assert_eq!(ZfPolynomial::from_u64s(&[0, 1]).pretty(), "x");
        assert_eq!(ZfPolynomial::one().pretty(), "1");
        let json = serde_json::to_string(&w5).unwrap();
        assert_eq!(json, r#"{"n":5,"coeffs":["0","0","0","8","5","1"]}"#);
        assert_eq!(serde_json::from_str::<ZfPolynomial>(&json).unwrap(), w5);
        assert!(serde_json::from_str::<ZfPolynomial>(r#"{"n":2,"coeffs":["0","1"]}"#).is_err());
        assert!(serde_json::from_str::<ZfPolynomial>(r#"{"n":1,"coeffs":["0","x"]}"#).is_err());
        let big = ZfPolynomial::new(vec!["123456789012345678901234567890".parse().unwrap()]).unwrap();
        let back: ZfPolynomial = serde_json::from_str(&serde_json::to_string(&big).unwrap()).unwrap();
        assert_eq!(back, big);
    }

    #[test]
    fn k_subsets() {
        let mut seen = Vec::new();
        for_each_k_subset(5, 2, |s| seen.push(s.bits()));
        assert_eq!(seen.len(), 10);
        assert!(seen.windows(2).all(|w| w[0] < w[1]));
        let mut n = 0;
        for_each_k_subset(4, 0, |_| n += 1);
        assert_eq!(n, 1);
        for_each_k_subset(3, 4, |_| unreachable!());
    }

    #[test]
    fn strategies_agree_on_all_graphs_n5() {
        for g in all_labeled_graphs(5).unwrap() {
            let direct = zf_polynomial(&g).unwrap();
            let memo = zf_polynomial_with(&g, &Enumeration::default().with_strategy(Strategy::Memoized)).unwrap();
            assert_eq!(direct, memo, "{g:?}");
            assert_eq!(direct, zf_polynomial_by_components(&g).unwrap(), "{g:?}");
        }
    }

    #[test]
    fn parallel_matches_serial() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..4 {
            let g = random_graph(14, 0.3, &mut rng).unwrap();
            let serial = zf_polynomial(&g).unwrap();
            for jobs in [2, 3, 8] {
                assert_eq!(zf_polynomial_with(&g, &Enumeration::default().with_jobs(jobs)).unwrap(), serial);
            }
            assert_eq!(
                zf_polynomial_with(&g, &Enumeration::default().with_strategy(Strategy::Memoized)).unwrap(),
                serial
            );
        }
    }

    #[test]
    fn forcing_table_matches_closure() {
        let g = cycle_plus_chord(7, 1, 4).unwrap();
        let t = ForcingTable::build(&g).unwrap();
        for m in 0..128u64 {
            assert_eq!(t.is_forcing(VertexSet(m)), crate::forcing::is_zero_forcing_set(&g, VertexSet(m)));
        }
    }

    proptest! {
        #[test]
        fn polynomial_invariants(n in 1usize..=10, p in 0.05f64..0.95, seed in any::<u64>()) {
            let g = random_graph(n, p, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
            let poly = zf_polynomial(&g).unwrap();
            let c = coeffs(&poly);
            prop_assert_eq!(c[n], 1);
            prop_assert_eq!(c[0], 0);
            let z = poly.zero_forcing_number().unwrap();
            for (i, &ci) in c.iter().enumerate() {
                let binom = (0..i).fold(1u64, |acc, j| acc * (n - j) as u64 / (j + 1) as u64);
                prop_assert!(ci <= binom);
                prop_assert_eq!(ci == 0, i < z);
            }
            let non_isolated = (0..n).filter(|&v| !g.is_isolated(v)).count() as u64;
            prop_assert_eq!(c[n - 1], if n == 1 { 0 } else { non_isolated });
            // strictly increasing on [0, inf)
            let vals: Vec<BigRational> = (0..5).map(|k| poly.evaluate(&BigRational::new(k.into(), 2.into()))).collect();
            prop_assert!(vals.windows(2).all(|w| w[0] < w[1]));
        }
    }
}
