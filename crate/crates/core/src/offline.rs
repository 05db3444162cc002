//! Offline optimum for n unit jobs with setup time 1, computed three
//! independent ways.
//!
//! The closed form evaluates a quartic polynomial at the triangular
//! decomposition of n; the table builder runs an incremental recurrence; the
//! brute-force oracle is a quadratic DP over the size of the first batch and
//! shares no formula with the other two. All three must agree, and the tests
//! hold them to that.

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};

/// The unique writing of `n` as `m(m+1)/2 + k` with `0 <= k <= m`.
///
/// The overlapping representation `k = m+1` (allowed by the first-batch
/// theorem's statement) is canonicalized to `(m+1, 0)`; both writings give
/// the same optimum cost, which the tests verify rather than assume.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriangularDecomposition {
    pub n: u64,
    pub m: u64,
    pub k: u64,
}

fn triangular(m: u64) -> u64 {
    m * (m + 1) / 2
}

/// Canonical triangular decomposition of `n`.
pub fn decompose(n: u64) -> TriangularDecomposition {
    // Initial guess from the integer square root, then local fix-up. The
    // ranges [T_m, T_m + m] tile the integers, so the result is unique.
    let s = (8u128 * n as u128 + 1).isqrt();
    let mut m = ((s - 1) / 2) as u64;
    while triangular(m) > n {
        m -= 1;
    }
    while triangular(m + 1) <= n {
        m += 1;
    }
    TriangularDecomposition {
        n,
        m,
        k: n - triangular(m),
    }
}

/// Evaluates the closed-form optimum at an explicit representation
/// `n = m(m+1)/2 + k`, which may be either of the two overlapping writings
/// (so `k = m+1` is accepted here).
///
/// The value is `m(m+1)(m+2)(3m+5)/24 + k(n+m-k+1) + k(k+1)/2`; the quartic
/// product is always divisible by 24. Intermediates are exact 128-bit and the
/// result must fit in 64 bits.
pub fn closed_form_value(m: u64, k: u64, n: u64) -> Result<u64> {
    debug_assert!(k <= m + 1, "k out of range for first-batch representation");
    debug_assert_eq!(triangular(m) + k, n, "not a representation of n");
    let m = m as u128;
    let k = k as u128;
    let n = n as u128;
    let quartic = m
        .checked_mul(m + 1)
        .and_then(|p| p.checked_mul(m + 2))
        .and_then(|p| p.checked_mul(3 * m + 5))
        .ok_or(Error::ArithmeticOverflow("closed-form quartic"))?
        / 24;
    let value = quartic + k * (n + m - k + 1) + k * (k + 1) / 2;
    u64::try_from(value).map_err(|_| Error::ArithmeticOverflow("closed-form value"))
}

/// Offline optimum cost for `n` unit jobs, via the closed form at the
/// canonical decomposition.
pub fn opt_cost_closed(n: u64) -> Result<u64> {
    let d = decompose(n);
    closed_form_value(d.m, d.k, d.n)
}

/// Table of offline optimum costs for every job count up to `max_n`.
///
/// Immutable after construction; index by job count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptTable {
    costs: Vec<u64>,
}

impl OptTable {
    /// Optimum cost for `n` jobs, or `None` beyond the table.
    pub fn get(&self, n: u64) -> Option<u64> {
        usize::try_from(n).ok().and_then(|i| self.costs.get(i)).copied()
    }

    /// Highest job count the table covers.
    pub fn max_n(&self) -> u64 {
        (self.costs.len() - 1) as u64
    }

    pub fn costs(&self) -> &[u64] {
        &self.costs
    }
}

impl Serialize for OptTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("OptTable", 2)?;
        s.serialize_field("costs", &self.costs)?;
        s.serialize_field("max_n", &self.max_n())?;
        s.end()
    }
}

/// Builds the opt table by the incremental recurrence: starting from
/// `costs[0] = 0` with `m = 0`, each step first advances `m` once
/// `2n >= (m+1)(m+2)` and then adds `n + m + 2`.
pub fn build_opt_table(max_n: u64) -> Result<OptTable> {
    let len = usize::try_from(max_n + 1)
        .map_err(|_| Error::InvalidArgument(format!("table of size {} jobs", max_n)))?;
    let mut costs = Vec::with_capacity(len);
    costs.push(0u64);
    let mut m = 0u64;
    for n in 0..max_n {
        let gate = (m + 1)
            .checked_mul(m + 2)
            .ok_or(Error::ArithmeticOverflow("opt recurrence gate"))?;
        if 2 * n >= gate {
            m += 1;
        }
        let step = n + m + 2;
        let next = costs[n as usize]
            .checked_add(step)
            .ok_or(Error::ArithmeticOverflow("opt recurrence step"))?;
        costs.push(next);
    }
    Ok(OptTable { costs })
}

/// Brute-force offline optimum by dynamic programming over the size of the
/// first batch: a first batch of `b` jobs takes `b + 1` time (setup plus
/// jobs), delaying all `n` jobs by that much, so
/// `cost(n) = min over b of n*(b+1) + cost(n-b)`.
///
/// Independent of the closed form; quadratic, intended for n up to a few
/// hundred.
pub fn opt_cost_bruteforce(n: u64) -> u64 {
    let n = n as usize;
    let mut cost = vec![0u64; n + 1];
    for i in 1..=n {
        cost[i] = (1..=i)
            .map(|b| (i as u64) * (b as u64 + 1) + cost[i - b])
            .min()
            .expect("non-empty range");
    }
    cost[n]
}

/// Optimal first-batch sizes for `n >= 1` jobs, sorted.
///
/// With the canonical decomposition `(m, k)`: `{m}` when `k = 0`, otherwise
/// `{m, m+1}`. At triangular `n` the overlapping writing `(m-1, m)` reads
/// "k = m'+1, take m'+1", which is the same set.
pub fn optimal_first_batch_sizes(n: u64) -> Vec<u64> {
    assert!(n >= 1, "no batches for an empty sequence");
    let d = decompose(n);
    if d.k == 0 {
        vec![d.m]
    } else {
        vec![d.m, d.m + 1]
    }
}
