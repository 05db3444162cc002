//! Batching plans over a job prefix and their sum-of-completion-times cost.
//!
//! A plan records where setups occur as 0-based job counts: `setups[0] = 0`
//! always (the machine sets up before the first job), and a setup at position
//! `b` means job `b+1` opens a new batch. The horizon is an evaluation
//! parameter rather than part of the plan, because the searches evaluate the
//! same prefix plan at successive horizons.

use std::fmt;

use crate::error::{Error, Result};

/// Setup positions of a batching plan. Strictly increasing, starting at 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BatchPlan {
    setups: Vec<u64>,
}

impl BatchPlan {
    pub fn new(setups: Vec<u64>) -> Result<Self> {
        if setups.first() != Some(&0) {
            return Err(Error::InvalidArgument(
                "plan must start with a setup at position 0".into(),
            ));
        }
        if setups.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument(
                "setup positions must be strictly increasing".into(),
            ));
        }
        Ok(BatchPlan { setups })
    }

    pub fn setups(&self) -> &[u64] {
        &self.setups
    }

    fn check_horizon(&self, n: u64) -> Result<()> {
        let last = *self.setups.last().expect("plans are never empty");
        if n == 0 || last >= n {
            return Err(Error::InvalidArgument(format!(
                "horizon {n} leaves the batch opened at {last} empty"
            )));
        }
        Ok(())
    }

    /// Sum of completion times of the first `n` jobs under this plan.
    ///
    /// Batch `j` (1-indexed) ends at job position `e_j` and completes at time
    /// `e_j + j` (jobs so far plus setups so far), so it contributes
    /// `(j + e_j) * (e_j - e_{j-1})`.
    pub fn cost(&self, n: u64) -> Result<u64> {
        self.check_horizon(n)?;
        let mut total = 0u64;
        let r = self.setups.len() as u64;
        for (j, w) in (1..).zip(self.setups.windows(2)) {
            total = total
                .checked_add(
                    (j + w[1])
                        .checked_mul(w[1] - w[0])
                        .ok_or(Error::ArithmeticOverflow("plan cost"))?,
                )
                .ok_or(Error::ArithmeticOverflow("plan cost"))?;
        }
        let last = *self.setups.last().expect("plans are never empty");
        total
            .checked_add(
                (r + n)
                    .checked_mul(n - last)
                    .ok_or(Error::ArithmeticOverflow("plan cost"))?,
            )
            .ok_or(Error::ArithmeticOverflow("plan cost"))
    }

    /// Completion time of each batch at horizon `n`: batch `j` completes at
    /// `e_j + j`. Strictly increasing.
    pub fn batch_completion_times(&self, n: u64) -> Result<Vec<u64>> {
        self.check_horizon(n)?;
        let ends = self.setups[1..].iter().copied().chain(std::iter::once(n));
        Ok((1..).zip(ends).map(|(j, e)| e + j).collect())
    }
}

impl fmt::Display for BatchPlan {
    /// Space-separated setup positions, e.g. `0 2 5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for s in &self.setups {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{s}")?;
            first = false;
        }
        Ok(())
    }
}

/// Cost of a plan extended from horizon `horizon - 1` to `horizon` without
/// opening a new batch.
///
/// `last_setup` is the start position of the open batch and `closed_batches`
/// counts the batches before it (so `closed_batches + 1` setups have
/// occurred). The `horizon - last_setup - 1` jobs already in the open batch
/// are each delayed by one time unit, and the new job completes at
/// `horizon + closed_batches + 1`.
pub fn extend_cost(prev_cost: u64, last_setup: u64, closed_batches: u64, horizon: u64) -> u64 {
    prev_cost + (horizon - last_setup - 1) + (horizon + closed_batches + 1)
}
