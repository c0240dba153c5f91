//! Closed-form zero forcing polynomials for standard families.

mod threshold;

pub use threshold::{algorithm_one, algorithm_one_state, poly_threshold, threshold_zfs_check, AlgoOneState};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::ZfPolynomial;

/// Binomial coefficient, extended by zero: `C(a, b) = 0` whenever `a < 0`,
/// `b < 0` or `b > a`.
pub fn binom(a: i64, b: i64) -> BigUint {
    if a < 0 || b < 0 || b > a {
        return BigUint::zero();
    }
    let b = b.min(a - b) as u64;
    let a = a as u64;
    let mut r = BigUint::one();
    for i in 0..b {
        r *= a - i;
        r /= i + 1;
    }
    r
}

fn exact_div(num: BigUint, den: u64, ctx: impl FnOnce() -> String) -> Result<BigUint> {
    let (q, r) = num.div_rem(&BigUint::from(den));
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::Divisibility(ctx()))
    }
}

fn checked_sub(a: BigUint, b: BigUint, ctx: impl FnOnce() -> String) -> Result<BigUint> {
    if b > a {
        Err(Error::InvalidArgument(format!("negative coefficient in {}", ctx())))
    } else {
        Ok(a - b)
    }
}

/// `x^n + n x^(n-1)`; `K_1` gives `x`.
pub fn poly_complete(n: usize) -> Result<ZfPolynomial> {
    if n == 0 {
        return Err(Error::InvalidSize { family: "complete", reason: "needs at least 1 vertex".into() });
    }
    let mut c = vec![0u64; n + 1];
    c[n] = 1;
    if n >= 2 {
        c[n - 1] = n as u64;
    }
    Ok(ZfPolynomial::from_u64s(&c))
}

/// `K_{a_1,...,a_k}` with every part of size at least 2:
/// `x^n + n x^(n-1) + (Σ_{i<j} a_i a_j) x^(n-2)`.
pub fn poly_multipartite(parts: &[usize]) -> Result<ZfPolynomial> {
    let invalid = |reason: String| Error::InvalidSize { family: "multipartite", reason };
    if parts.len() < 2 {
        return Err(invalid(format!("needs at least 2 parts, got {}", parts.len())));
    }
    if let Some(p) = parts.iter().find(|&&p| p < 2) {
        return Err(invalid(format!("every part needs at least 2 vertices, got {p}")));
    }
    let n: usize = parts.iter().sum();
    let mut pairs = BigUint::zero();
    for (i, &a) in parts.iter().enumerate() {
        for &b in &parts[i + 1..] {
            pairs += (a * b) as u64;
        }
    }
    let mut c = vec![BigUint::zero(); n + 1];
    c[n] = BigUint::one();
    c[n - 1] = BigUint::from(n);
    c[n - 2] = pairs;
    ZfPolynomial::new(c)
}

/// `z(P_n; i) = C(n, i) - C(n - i - 1, i)`.
pub fn poly_path(n: usize) -> Result<ZfPolynomial> {
    if n == 0 {
        return Err(Error::InvalidSize { family: "path", reason: "needs at least 1 vertex".into() });
    }
    let n_ = n as i64;
    let mut c = vec![BigUint::zero(); n + 1];
    for i in 1..=n_ {
        c[i as usize] = checked_sub(binom(n_, i), binom(n_ - i - 1, i), || format!("poly_path({n})"))?;
    }
    ZfPolynomial::new(c)
}

/// Number of `i`-subsets of `C_n` with no two cyclically adjacent members,
/// `n C(n-i-1, i-1) / i`, divided exactly.
fn cycle_independent_sets(n: i64, i: i64) -> Result<BigUint> {
    let num = binom(n - i - 1, i - 1) * BigUint::from(n as u64);
    exact_div(num, i as u64, || format!("n C(n-i-1, i-1) / i at n = {n}, i = {i}"))
}

/// `z(C_n; i) = C(n, i) - (n / i) C(n - i - 1, i - 1)` for `i >= 2`.
pub fn poly_cycle(n: usize) -> Result<ZfPolynomial> {
    if n < 3 {
        return Err(Error::InvalidSize { family: "cycle", reason: format!("needs at least 3 vertices, got {n}") });
    }
    let n_ = n as i64;
    let mut c = vec![BigUint::zero(); n + 1];
    for i in 2..=n_ {
        let bad = cycle_independent_sets(n_, i)?;
        c[i as usize] = checked_sub(binom(n_, i), bad, || format!("poly_cycle({n})"))?;
    }
    ZfPolynomial::new(c)
}

/// `R_m(n, k)`: the number of `k`-subsets of the vertices of `C_n` that
/// contain `m` cyclically consecutive vertices.
///
/// For `m <= k < n` this is the inclusion-exclusion sum
/// `Σ_t (-1)^(t-1) (n/t) C(n-mt-1, t-1) C(n-(m+1)t, k-mt)`.
/// The full vertex set (`k = n`) counts once when `n >= m`; `k < m` and
/// `k > n` give zero.
pub fn count_consecutive_selections(n: usize, k: usize, m: usize) -> Result<BigUint> {
    if m < 3 || n < 3 {
        return Err(Error::InvalidArgument(format!("R_m(n, k) needs m >= 3 and n >= 3, got m = {m}, n = {n}")));
    }
    if k < m || k > n {
        return Ok(BigUint::zero());
    }
    if k == n {
        return Ok(BigUint::one());
    }
    let (n_, k_, m_) = (n as i64, k as i64, m as i64);
    let mut total = BigInt::zero();
    for t in 1..=n_ {
        // number of t-sets of run starts with at least m vertices between
        let starts = exact_div(binom(n_ - m_ * t - 1, t - 1) * BigUint::from(n), t as u64, || {
            format!("n C(n-mt-1, t-1) / t at n = {n}, m = {m}, t = {t}")
        })?;
        let term = BigInt::from(starts * binom(n_ - (m_ + 1) * t, k_ - m_ * t));
        if t % 2 == 1 {
            total += term;
        } else {
            total -= term;
        }
    }
    if total.is_negative() {
        return Err(Error::InvalidArgument(format!("R_{m}({n}, {k}) evaluated negative")));
    }
    Ok(total.to_biguint().expect("nonnegative"))
}

/// `z(W_n; i) = z(C_{n-1}; i-1) + R_3(n-1, i)` for `n >= 5`.
///
/// `W_4` is `K_4`; use [`poly_complete`] for it.
pub fn poly_wheel(n: usize) -> Result<ZfPolynomial> {
    if n < 5 {
        return Err(Error::InvalidSize {
            family: "wheel",
            reason: format!("closed form needs at least 5 vertices, got {n} (W_4 is K_4)"),
        });
    }
    let rim = poly_cycle(n - 1)?;
    let mut c = vec![BigUint::zero(); n + 1];
    for (i, slot) in c.iter_mut().enumerate().skip(1) {
        *slot = rim.coeff(i - 1) + count_consecutive_selections(n - 1, i, 3)?;
    }
    ZfPolynomial::new(c)
}
