//! Exact certification toolkit for online list batching with unit jobs and
//! setup time 1.
//!
//! Jobs arrive one at a time and must be grouped into consecutive batches; a
//! batch takes a setup of length 1 followed by one time unit per job, and
//! every job completes when its batch does. The objective is the sum of
//! completion times. A deterministic online algorithm sees only the number of
//! jobs so far, so it is exactly a sequence of breakpoints: job counts after
//! which it opens a new batch.
//!
//! This crate certifies, with integer arithmetic only, that the best possible
//! competitive ratio for this problem is exactly 619/583:
//!
//! * [`offline`] computes the offline optimum three independent ways
//!   (closed form, incremental recurrence, brute-force DP).
//! * [`ubverify`] checks that the built-in rule ([`rules::algorithm_d`])
//!   never exceeds 619/583 on any prefix up to its periodic tail, and that an
//!   analytic per-job bound covers everything beyond.
//! * [`lbsearch`] exhaustively searches the decision tree of all online
//!   algorithms, with ratio and dominance pruning, to show every algorithm
//!   reaches ratio >= 619/583 within 100 jobs.
//!
//! No floating point is used anywhere on the certification path; all ratio
//! comparisons are cross-multiplications in checked 64-bit arithmetic.

pub mod error;
pub mod lbsearch;
pub mod offline;
pub mod plans;
pub mod ratio;
pub mod rules;
pub mod ubverify;

pub use error::{Error, Result};
pub use lbsearch::{min_establishing_depth, run_search, PartialCandidate, SearchConfig, SearchReport};
pub use offline::{build_opt_table, decompose, opt_cost_bruteforce, opt_cost_closed, OptTable};
pub use plans::{extend_cost, BatchPlan};
pub use ratio::{compare_cost_ratio, Ratio};
pub use rules::{algorithm_d, BatchingRule};
pub use ubverify::{verify_prefix_ratios, verify_tail, TailCertificate, UbReport};
