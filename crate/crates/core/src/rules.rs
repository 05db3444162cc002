//! Deterministic online algorithms for list batching with unit jobs.
//!
//! The only thing such an algorithm can observe is how many jobs have
//! arrived, so it is fully described by its breakpoints: the job counts
//! after which it opens a new batch ("batches after job b" means job b+1 is
//! the first job of a new batch). A rule is a finite breakpoint list plus an
//! optional arithmetic tail.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::plans::{extend_cost, BatchPlan};

/// Horizon cap that keeps all incremental cost arithmetic within u64:
/// each step adds less than 4*max_n, so totals stay under 4*max_n^2.
const MAX_HORIZON: u64 = 1 << 30;

/// Periodic continuation: breakpoints at `start + t * period` for all t >= 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Tail {
    pub start: u64,
    pub period: u64,
}

/// An online algorithm as breakpoint data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BatchingRule {
    breakpoints: Vec<u64>,
    tail: Option<Tail>,
}

impl BatchingRule {
    pub fn new(breakpoints: Vec<u64>, tail: Option<Tail>) -> Result<Self> {
        if breakpoints.first() == Some(&0) {
            return Err(Error::InvalidArgument(
                "a rule never batches before the first job; breakpoint 0 is invalid".into(),
            ));
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument(
                "breakpoints must be strictly increasing".into(),
            ));
        }
        if let Some(t) = tail {
            if t.period == 0 {
                return Err(Error::InvalidArgument("tail period must be at least 1".into()));
            }
            if t.start == 0 {
                return Err(Error::InvalidArgument("tail start must be at least 1".into()));
            }
            if let Some(&last) = breakpoints.last() {
                if t.start <= last {
                    return Err(Error::InvalidArgument(format!(
                        "tail start {} must exceed the last finite breakpoint {last}",
                        t.start
                    )));
                }
            }
        }
        Ok(BatchingRule { breakpoints, tail })
    }

    pub fn breakpoints(&self) -> &[u64] {
        &self.breakpoints
    }

    pub fn tail(&self) -> Option<Tail> {
        self.tail
    }

    /// All breakpoints of the rule in order, finite part then expanded tail.
    pub fn breakpoints_iter(&self) -> impl Iterator<Item = u64> + '_ {
        let tail = self.tail;
        self.breakpoints.iter().copied().chain(
            (0u64..)
                .map(move |t| tail.map(|tl| tl.start + t * tl.period))
                .take_while(Option::is_some)
                .flatten(),
        )
    }

    /// Breakpoints not exceeding `n`, tail expanded.
    pub fn breakpoints_up_to(&self, n: u64) -> Vec<u64> {
        self.breakpoints_iter().take_while(|&b| b <= n).collect()
    }

    /// The plan this rule has committed to once `n >= 1` jobs have arrived:
    /// a setup at 0 plus every breakpoint before job `n`.
    pub fn to_plan(&self, n: u64) -> BatchPlan {
        assert!(n >= 1, "horizon must be at least one job");
        let mut setups = vec![0u64];
        setups.extend(self.breakpoints_up_to(n - 1));
        BatchPlan::new(setups).expect("breakpoint data always forms a valid plan")
    }

    /// Costs of the rule on every prefix 1..=max_n, incrementally in linear
    /// time; entry `i - 1` is the cost after `i` jobs.
    pub fn prefix_costs(&self, max_n: u64) -> Result<Vec<u64>> {
        if max_n > MAX_HORIZON {
            return Err(Error::ArithmeticOverflow("prefix costs horizon"));
        }
        let mut costs = Vec::with_capacity(max_n as usize);
        let mut bps = self.breakpoints_iter().peekable();
        let mut last_setup = 0u64;
        let mut closed_batches = 0u64;
        let mut cost = 0u64;
        for i in 1..=max_n {
            if bps.peek() == Some(&(i - 1)) {
                bps.next();
                last_setup = i - 1;
                closed_batches += 1;
            }
            cost = extend_cost(cost, last_setup, closed_batches, i);
            costs.push(cost);
        }
        Ok(costs)
    }
}

impl FromStr for BatchingRule {
    type Err = Error;

    /// Rule file format: one integer breakpoint per line, optionally ending
    /// with a line `tail START PERIOD`. Blank lines are ignored.
    fn from_str(text: &str) -> Result<Self> {
        let mut breakpoints = Vec::new();
        let mut tail = None;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if tail.is_some() {
                return Err(Error::InvalidArgument(
                    "tail line must be the last line of a rule file".into(),
                ));
            }
            if let Some(rest) = line.strip_prefix("tail") {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                let [start, period] = parts.as_slice() else {
                    return Err(Error::InvalidArgument(format!(
                        "tail line must be `tail START PERIOD`, got {line:?}"
                    )));
                };
                let parse = |s: &str| {
                    s.parse::<u64>().map_err(|_| {
                        Error::InvalidArgument(format!("bad integer {s:?} in tail line"))
                    })
                };
                tail = Some(Tail {
                    start: parse(start)?,
                    period: parse(period)?,
                });
            } else {
                let b = line.parse::<u64>().map_err(|_| {
                    Error::InvalidArgument(format!("bad breakpoint line {line:?}"))
                })?;
                breakpoints.push(b);
            }
        }
        BatchingRule::new(breakpoints, tail)
    }
}

/// Finite breakpoints of the rule `d`: it batches after these job counts and
/// then after every 40 jobs from 2000 on.
const D_BREAKPOINTS: [u64; 47] = [
    2, 5, 9, 13, 18, 23, 29, 35, 41, 48, 54, 61, 68, 76, 84, 91, 100, 108, 117, 126, 135, 145,
    156, 167, 179, 192, 206, 221, 238, 257, 278, 302, 329, 361, 397, 439, 488, 545, 612, 690,
    781, 888, 1013, 1159, 1329, 1528, 1760,
];

/// The rule whose competitiveness this crate certifies: breakpoints
/// 2, 5, 9, 13, ... , 1760 and then 2000 + 40t for all t >= 0.
pub fn algorithm_d() -> BatchingRule {
    BatchingRule::new(
        D_BREAKPOINTS.to_vec(),
        Some(Tail {
            start: 2000,
            period: 40,
        }),
    )
    .expect("built-in rule data is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::offline::build_opt_table;
    use proptest::prelude::*;

    #[test]
    fn d_breakpoint_data() {
        let d = algorithm_d();
        assert_eq!(d.breakpoints().first(), Some(&2));
        assert_eq!(d.breakpoints().len(), 47);
        assert_eq!(d.breakpoints().last(), Some(&1760));
        assert_eq!(d.tail(), Some(Tail { start: 2000, period: 40 }));
    }

    #[test]
    fn breakpoints_up_to_examples() {
        let d = algorithm_d();
        assert_eq!(d.breakpoints_up_to(10), vec![2, 5, 9]);
        assert_eq!(d.breakpoints_up_to(1), Vec::<u64>::new());
        let up = d.breakpoints_up_to(2040);
        assert!(up.ends_with(&[1760, 2000, 2040]));
        let further = d.breakpoints_up_to(2085);
        assert!(further.ends_with(&[2000, 2040, 2080]));
    }

    #[test]
    fn tail_batches_are_40_wide() {
        let d = algorithm_d();
        let bps = d.breakpoints_up_to(4000);
        let tail: Vec<u64> = bps.into_iter().filter(|&b| b >= 2000).collect();
        assert!(tail.windows(2).all(|w| w[1] - w[0] == 40));
        assert_eq!(tail.len(), 51);
    }

    #[test]
    fn to_plan_examples() {
        let d = algorithm_d();
        assert_eq!(d.to_plan(5).setups(), &[0, 2]);
        assert_eq!(d.to_plan(6).setups(), &[0, 2, 5]);
        assert_eq!(d.to_plan(1).setups(), &[0]);
    }

    #[test]
    fn prefix_cost_examples() {
        let d = algorithm_d();
        assert_eq!(d.prefix_costs(2).unwrap(), vec![2, 6]);
        assert_eq!(d.prefix_costs(5).unwrap(), vec![2, 6, 11, 18, 27]);
        let opt = build_opt_table(3).unwrap();
        assert_eq!(d.prefix_costs(3).unwrap()[2], opt.get(3).unwrap());
    }

    /// Incremental and from-scratch costs agree on every prefix up to 3000.
    #[test]
    fn incremental_matches_plan_cost_to_3000() {
        let d = algorithm_d();
        let costs = d.prefix_costs(3000).unwrap();
        for i in 1..=3000u64 {
            assert_eq!(
                costs[(i - 1) as usize],
                d.to_plan(i).cost(i).unwrap(),
                "n = {i}"
            );
        }
    }

    #[test]
    fn rule_validation() {
        assert!(BatchingRule::new(vec![0, 2], None).is_err());
        assert!(BatchingRule::new(vec![2, 2], None).is_err());
        assert!(BatchingRule::new(vec![5, 2], None).is_err());
        assert!(BatchingRule::new(vec![2], Some(Tail { start: 2, period: 3 })).is_err());
        assert!(BatchingRule::new(vec![2], Some(Tail { start: 5, period: 0 })).is_err());
        assert!(BatchingRule::new(vec![], Some(Tail { start: 4, period: 2 })).is_ok());
        assert!(BatchingRule::new(vec![], None).is_ok());
    }

    #[test]
    fn parse_rule_files() {
        let rule: BatchingRule = "2\n5\n9\n".parse().unwrap();
        assert_eq!(rule.breakpoints(), &[2, 5, 9]);
        assert_eq!(rule.tail(), None);

        let rule: BatchingRule = "2\n5\n\ntail 10 3\n".parse().unwrap();
        assert_eq!(rule.breakpoints(), &[2, 5]);
        assert_eq!(rule.tail(), Some(Tail { start: 10, period: 3 }));

        assert!("tail 10 3\n5\n".parse::<BatchingRule>().is_err());
        assert!("2\nfive\n".parse::<BatchingRule>().is_err());
        assert!("tail 10\n".parse::<BatchingRule>().is_err());
        assert!("2\ntail 1 2 3\n".parse::<BatchingRule>().is_err());
    }

    proptest! {
        /// The plan at horizon n is always a prefix of (or equal to) the plan
        /// at horizon n + 1.
        #[test]
        fn plans_grow_by_prefix(raw in proptest::collection::btree_set(1u64..60, 0..10), n in 1u64..80) {
            let rule = BatchingRule::new(raw.into_iter().collect(), None).unwrap();
            let a = rule.to_plan(n);
            let b = rule.to_plan(n + 1);
            prop_assert!(b.setups().starts_with(a.setups()));
        }

        /// Incremental costs agree with from-scratch evaluation on random rules.
        #[test]
        fn incremental_matches_plan_cost_random(
            raw in proptest::collection::btree_set(1u64..50, 0..12),
            max_n in 1u64..90,
        ) {
            let rule = BatchingRule::new(raw.into_iter().collect(), None).unwrap();
            let costs = rule.prefix_costs(max_n).unwrap();
            for i in 1..=max_n {
                prop_assert_eq!(costs[(i - 1) as usize], rule.to_plan(i).cost(i).unwrap());
            }
        }
    }
}
