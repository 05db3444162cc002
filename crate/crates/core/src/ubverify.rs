//! Upper-bound certification: a rule's prefix cost ratio never exceeds the
//! bound on any checked prefix, and an analytic per-job bound covers every
//! horizon beyond the rule's periodic tail.
//!
//! The prefix half is an exact sweep: for every n up to the tail start, the
//! rule's cost is compared against bound * opt[n] by cross-multiplication.
//! The tail half bounds the contribution of a single job i past the tail
//! start by `S + ceil((i - start)/T) + i + (T - 1)` (setups before the tail,
//! setups since, the job index, and at most `T - 1` later jobs sharing its
//! batch), relaxes the ceiling to obtain a linear form, and solves the
//! resulting inequality against `bound * (i + 1)` exactly over the integers
//! (any schedule completes job i no earlier than i + 1).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::offline::OptTable;
use crate::ratio::Ratio;
use crate::rules::BatchingRule;

/// A prefix where the rule's cost strictly exceeded the bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub n: u64,
    pub cost: u64,
    pub opt: u64,
}

/// Result of the exact prefix sweep.
///
/// `violations` is empty exactly when the rule is certified on every prefix
/// up to `checked_to`; equality with the bound is not a violation. The
/// `max_ratio_*` fields record the prefix with the largest cost ratio, ties
/// broken toward the smallest n.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UbReport {
    pub max_ratio_n: u64,
    pub max_ratio_cost: u64,
    pub max_ratio_opt: u64,
    pub violations: Vec<Violation>,
    pub checked_to: u64,
}

/// Compares the rule's cost on every prefix 1..=max_n against `r * opt[n]`,
/// exactly. Only strict exceedance is recorded as a violation.
pub fn verify_prefix_ratios(
    rule: &BatchingRule,
    r: Ratio,
    max_n: u64,
    opt: &OptTable,
) -> Result<UbReport> {
    if max_n < 1 {
        return Err(Error::InvalidArgument("prefix check needs max_n >= 1".into()));
    }
    if opt.max_n() < max_n {
        return Err(Error::OptTableTooShort {
            covered: opt.max_n(),
            needed: max_n,
        });
    }
    let costs = rule.prefix_costs(max_n)?;
    let mut violations = Vec::new();
    let (mut best_n, mut best_cost, mut best_opt) = (0u64, 0u64, 1u64);
    for n in 1..=max_n {
        let cost = costs[(n - 1) as usize];
        let opt_n = opt.get(n).expect("coverage checked above");
        if crate::ratio::compare_cost_ratio(cost, opt_n, r)? == std::cmp::Ordering::Greater {
            violations.push(Violation { n, cost, opt: opt_n });
        }
        // argmax by cross-multiplication; 128-bit products of 64-bit values
        // are exact. Strict improvement only, so ties keep the smallest n.
        if cost as u128 * best_opt as u128 > best_cost as u128 * opt_n as u128 {
            (best_n, best_cost, best_opt) = (n, cost, opt_n);
        }
    }
    Ok(UbReport {
        max_ratio_n: best_n,
        max_ratio_cost: best_cost,
        max_ratio_opt: best_opt,
        violations,
        checked_to: max_n,
    })
}

/// Analytic certificate for all horizons beyond the tail start.
///
/// `threshold_i` is the smallest job index from which the per-job bound
/// holds, or absent when it holds at no index. The certificate holds only if
/// the threshold does not exceed `tail_start + 1` (so the analytic bound
/// takes over exactly where the prefix sweep stops) and the prefix sweep up
/// to the tail start itself is violation-free.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TailCertificate {
    pub setups_before_tail: u64,
    pub tail_period: u64,
    pub tail_start: u64,
    pub threshold_i: Option<u64>,
    pub holds: bool,
}

/// Certifies the tail of a rule against the bound `r`.
///
/// The per-job cost of job `i` past the tail start is at most
/// `S + ceil((i - start)/T) + i + (T - 1)`; relaxing the ceiling by one gives
/// the linear form `((T+1)/T) * i + (S + T - start/T)`. The certificate
/// finds the least i from which `(T+1)/T + C/(i+1) <= r` with
/// `C*T = (S+T)*T - start`, entirely in integer arithmetic:
/// `(i+1) * (p*T - q*(T+1)) >= q * C * T`.
pub fn verify_tail(rule: &BatchingRule, r: Ratio, opt: &OptTable) -> Result<TailCertificate> {
    let tail = rule.tail().ok_or(Error::NoTail)?;
    let setups_before_tail = 1 + rule.breakpoints().len() as u64;
    let (p, q) = (r.numer() as i128, r.denom() as i128);
    let t = tail.period as i128;
    let s = setups_before_tail as i128;

    let slope = p
        .checked_mul(t)
        .and_then(|pt| q.checked_mul(t + 1).map(|qt| pt - qt))
        .ok_or(Error::ArithmeticOverflow("tail slope"))?;
    let offset = q
        .checked_mul(
            (s + t)
                .checked_mul(t)
                .ok_or(Error::ArithmeticOverflow("tail offset"))?
                - tail.start as i128,
        )
        .ok_or(Error::ArithmeticOverflow("tail offset"))?;

    // Need (i+1) * slope >= offset for all i at and beyond the threshold.
    let threshold_i: Option<u64> = if slope > 0 {
        if offset <= 0 {
            Some(1)
        } else {
            let min_i_plus_1 = (offset + slope - 1) / slope;
            // a threshold too large for u64 is as good as unattainable
            u64::try_from((min_i_plus_1 - 1).max(1)).ok()
        }
    } else if slope == 0 && offset <= 0 {
        Some(1)
    } else {
        None
    };

    let prefix = verify_prefix_ratios(rule, r, tail.start, opt)?;
    let holds = threshold_i.is_some_and(|thr| thr <= tail.start + 1) && prefix.violations.is_empty();

    Ok(TailCertificate {
        setups_before_tail,
        tail_period: tail.period,
        tail_start: tail.start,
        threshold_i,
        holds,
    })
}
