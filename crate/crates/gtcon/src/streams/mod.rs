//! Decidable fragments of the infinite relations.
//!
//! Everything here works with ultimately linear-periodic presentations:
//! functions, characteristic streams of infinite sets, interval partitions,
//! and chopped sequences (a stream together with a partition).  Decision
//! procedures return a [`Verdict`] that records not just the answer but the
//! scope of the claim: `Exact` answers are proofs over all of the naturals,
//! `Horizon` answers are bounded checks that are complete for refutation
//! under the stated threshold.

pub mod decide;
pub mod partition;
pub mod subset;
pub mod ulp;

pub use decide::{
    almost_constant, engulfs, engulfs_from, leq_star, matches, non_engulf_witness, splits,
};
pub use partition::{
    chop_after, one_interval_past, ChoppedReal, IntervalPartition, Partition, RecurrenceKind,
};
pub use subset::InfiniteSubset;
pub use ulp::UlpFunction;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StreamError {
    #[error("arithmetic overflow while evaluating a stream")]
    Overflow,
    #[error("cycle must be nonempty")]
    EmptyCycle,
    #[error("declared period {period} does not match cycle length {cycle_len}")]
    PeriodMismatch { period: u64, cycle_len: u64 },
    #[error("operation requires a flat (increment 0) function")]
    NotFlat,
    #[error("value {value} at index {index} is outside alphabet of size {alphabet}")]
    AlphabetViolation { index: u64, value: u64, alphabet: u64 },
    #[error("characteristic stream has no 1 in its cycle, so the set is finite")]
    FiniteSet,
    #[error("interval gap at index {index} must be at least 1")]
    ZeroGap { index: u64 },
    #[error("combined analysis window of size {size} exceeds the supported bound")]
    WindowTooLarge { size: u64 },
    #[error("witness construction requires the engulfing claim to fail, but it holds")]
    EngulfsHolds,
    #[error("inputs admit only a bounded-horizon check, not an exact one")]
    ExactUnavailable,
}

/// Scope of a decision: exact over all naturals, or checked up to a horizon.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum Scope {
    /// Settled by periodicity: behaviour beyond `threshold` repeats with
    /// positional period `hyperperiod`, so one window decides the question.
    Exact { threshold: u64, hyperperiod: u64 },
    /// Checked on positions below `horizon`; phenomena before `threshold`
    /// are disregarded and `required_witnesses` occurrences beyond it were
    /// demanded for a positive answer.
    Horizon {
        horizon: u64,
        threshold: u64,
        required_witnesses: u64,
    },
}

impl Scope {
    pub fn is_exact(&self) -> bool {
        matches!(self, Scope::Exact { .. })
    }
}

/// Evidence attached to a verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    None,
    /// The last position violating an eventual claim (the claim holds from
    /// `index + 1` on).
    LastViolation { index: u64 },
    /// An arithmetic progression of violations, refuting an eventual claim.
    ViolationsFrom { start: u64, step: u64 },
    /// Sample positions witnessing an "infinitely often" claim (capped).
    Positions { positions: Vec<u64> },
    /// Start positions of intervals witnessing a matching claim (capped).
    AgreeingIntervals { starts: Vec<u64> },
    /// An interval past the threshold on which the claim fails.
    BadInterval { start: u64, end: u64 },
    /// The single value taken beyond the threshold.
    ConstantValue { value: u64 },
    /// Two positions past the threshold taking different values.
    ValueConflict { pos_a: u64, pos_b: u64 },
    /// The claim holds everywhere from this position on.
    Threshold { position: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub answer: bool,
    pub witness: Witness,
    pub scope: Scope,
}

impl Verdict {
    pub fn is_exact(&self) -> bool {
        self.scope.is_exact()
    }
}

/// Bounds for horizon-mode checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HorizonParams {
    /// Positions below this bound are examined.
    pub horizon: u64,
    /// Occurrences beyond the threshold required to accept an
    /// "infinitely often" claim.
    pub min_witnesses: u64,
}

impl Default for HorizonParams {
    fn default() -> Self {
        HorizonParams {
            horizon: 10_000,
            min_witnesses: 20,
        }
    }
}
