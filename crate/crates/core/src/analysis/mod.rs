//! Structural facts about zero forcing polynomials, checked by formula
//! rather than by enumeration.

mod sweep;

pub use sweep::{run_suites, parse_suites, Record, Report, Severity, Suite, SuiteSummary, SweepConfig};

use serde::Serialize;

use crate::closed_forms::{binom, poly_complete, poly_cycle, poly_path, poly_threshold};
use crate::error::{Error, Result};
use crate::graph::{all_labeled_graphs, is_isomorphic, Graph, LABELED_CAP};
use crate::poly::{zf_polynomial, ForcingTable, ZfPolynomial};

/// `(z(G;n), z(G;n-1), z(G;n-2), z(G;1))` from the structural formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalCoefficients {
    pub top: u64,
    pub second: u64,
    pub third: u64,
    pub bottom: u64,
}

pub fn extremal_coefficients(g: &Graph) -> Result<ExtremalCoefficients> {
    let n = g.order();
    if n == 0 {
        return Err(Error::InvalidArgument("extremal coefficients need at least one vertex".into()));
    }
    let active: Vec<usize> = (0..n).filter(|&v| !g.is_isolated(v)).collect();
    let mut third = 0;
    for (a, &u) in active.iter().enumerate() {
        for &v in &active[a + 1..] {
            let mut nu = g.neighbors(u);
            nu.remove(v);
            let mut nv = g.neighbors(v);
            nv.remove(u);
            third += (nu != nv) as u64;
        }
    }
    let bottom = match n {
        1 => 1,
        _ if g.is_path() => 2,
        _ => 0,
    };
    Ok(ExtremalCoefficients { top: 1, second: active.len() as u64, third, bottom })
}

/// `z(G;Z(G)) = C(n, Z(G))`: every set of minimum size is forcing.
pub fn all_min_sets_forcing(g: &Graph) -> Result<bool> {
    all_min_sets_forcing_poly(&zf_polynomial(g)?)
}

pub fn all_min_sets_forcing_poly(p: &ZfPolynomial) -> Result<bool> {
    let z = p.zero_forcing_number()?;
    Ok(p.coeff(z) == binom(p.order() as i64, z as i64))
}

/// `z(G;i) <= z(G;i+1)` for `1 <= i < n/2`.
pub fn hall_monotonicity_holds(p: &ZfPolynomial) -> bool {
    let n = p.order();
    (1..).take_while(|&i| 2 * i < n).all(|i| p.coeff(i) <= p.coeff(i + 1))
}

/// `z(G;i) <= z(P_n;i)` for every `i`.
pub fn path_bound_holds(p: &ZfPolynomial) -> bool {
    let n = p.order();
    if n == 0 {
        return true;
    }
    let path = poly_path(n).expect("n >= 1");
    (0..=n).all(|i| p.coeff(i) <= path.coeff(i))
}

pub fn recognizes_path(p: &ZfPolynomial) -> bool {
    p.order() >= 1 && poly_path(p.order()).is_ok_and(|q| &q == p)
}

pub fn recognizes_complete(p: &ZfPolynomial) -> bool {
    p.order() >= 1 && poly_complete(p.order()).is_ok_and(|q| &q == p)
}

/// Isomorphism class representatives of all graphs on `n` vertices sharing
/// the polynomial of `C_n`, in order of first appearance among labeled
/// graphs.
pub fn cycle_polynomial_class(n: usize) -> Result<Vec<Graph>> {
    if !(3..=LABELED_CAP).contains(&n) {
        return Err(Error::InvalidSize { family: "cycle class", reason: format!("needs 3 <= n <= {LABELED_CAP}, got {n}") });
    }
    let target: Vec<u64> = poly_cycle(n)?.coeffs().iter().map(|c| u64::try_from(c).expect("small")).collect();
    let mut reps: Vec<Graph> = Vec::new();
    for g in all_labeled_graphs(n)? {
        if g.min_degree() == Some(0) {
            continue;
        }
        if ForcingTable::build(&g)?.counts() != target {
            continue;
        }
        let mut seen = false;
        for r in &reps {
            if is_isomorphic(r, &g)? {
                seen = true;
                break;
            }
        }
        if !seen {
            reps.push(g);
        }
    }
    Ok(reps)
}

/// Threshold strings whose 1-blocks have sizes `2, ..., k` in some order,
/// separated by 0-blocks of size 2, with their polynomials.
pub fn same_poly_threshold_family(k: usize) -> Result<Vec<(String, ZfPolynomial)>> {
    if !(3..=5).contains(&k) {
        return Err(Error::InvalidSize { family: "threshold family", reason: format!("needs 3 <= k <= 5, got {k}") });
    }
    let mut out = Vec::new();
    for perm in permutations(&(2..=k).collect::<Vec<_>>()) {
        let s = perm.iter().map(|&len| "1".repeat(len)).collect::<Vec<_>>().join("00");
        let p = poly_threshold(&s)?;
        out.push((s, p));
    }
    Ok(out)
}

/// All orderings of `items`, in lexicographic order of positions.
fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, x);
            out.push(tail);
        }
    }
    out
}

pub(crate) fn to_u64s(p: &ZfPolynomial) -> Vec<u64> {
    p.coeffs().iter().map(|c| u64::try_from(c).unwrap_or(u64::MAX)).collect()
}

pub(crate) fn binom_u64(n: i64, k: i64) -> u64 {
    u64::try_from(&binom(n, k)).unwrap_or(u64::MAX)
}
