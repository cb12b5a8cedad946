//! Interval partitions of the naturals and chopped sequences.
//!
//! A partition is a strictly increasing endpoint sequence 0 = a_0 < a_1 < ...
//! carving the naturals into intervals [a_k, a_{k+1}).  The workhorse
//! presentation stores the gap sequence a_{k+1} - a_k as an [`UlpFunction`];
//! partitions defined by a growth recurrence against a fast-growing function
//! are kept lazy instead, and upgraded to the gap presentation whenever the
//! recurrence provably stabilizes.

use super::ulp::{lcm, UlpFunction};
use super::StreamError;
use serde::{Deserialize, Serialize};

/// A partition given by its gap sequence (every gap at least 1).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalPartition {
    gaps: UlpFunction,
}

/// Positional periodicity data: interval starts beyond `first_index` repeat
/// with `index_period` intervals spanning `shift` positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PositionalPeriod {
    pub first_index: u64,
    pub index_period: u64,
    pub shift: u64,
}

impl IntervalPartition {
    pub fn new(gaps: UlpFunction) -> Result<Self, StreamError> {
        for (i, &g) in gaps.prefix().iter().chain(gaps.cycle()).enumerate() {
            if g == 0 {
                return Err(StreamError::ZeroGap { index: i as u64 });
            }
        }
        Ok(IntervalPartition { gaps })
    }

    pub fn singletons() -> Self {
        IntervalPartition::new(UlpFunction::constant(1)).expect("gap 1 is positive")
    }

    pub fn gaps(&self) -> &UlpFunction {
        &self.gaps
    }

    /// The k-th endpoint a_k (a_0 = 0), in closed form.
    pub fn endpoint(&self, k: u64) -> Result<u64, StreamError> {
        let t = self.gaps.threshold();
        let p = self.gaps.period();
        let d = self.gaps.increment();
        let mut total: u128 = self.gaps.prefix()[..t.min(k) as usize]
            .iter()
            .map(|&g| g as u128)
            .sum();
        if k > t {
            let full = (k - t) / p;
            let cycle_sum: u128 = self.gaps.cycle().iter().map(|&g| g as u128).sum();
            // Each full pass through the cycle adds cycle_sum plus the
            // accumulated increments p * q * d for pass q.
            let fq = full as u128;
            total += fq * cycle_sum + (d as u128) * (p as u128) * fq * fq.saturating_sub(1) / 2;
            for k2 in t + full * p..k {
                total += self.gaps.eval(k2)? as u128;
            }
        }
        u64::try_from(total).map_err(|_| StreamError::Overflow)
    }

    /// Interval starts repeat positionally iff the gap sequence is flat.
    pub fn positional_period(&self) -> Option<PositionalPeriod> {
        if !self.gaps.is_flat() {
            return None;
        }
        Some(PositionalPeriod {
            first_index: self.gaps.threshold(),
            index_period: self.gaps.period(),
            shift: self.gaps.cycle().iter().sum(),
        })
    }

    /// Largest gap; only bounded (and only used) for flat gap sequences.
    pub fn max_gap(&self) -> u64 {
        self.gaps
            .prefix()
            .iter()
            .chain(self.gaps.cycle())
            .copied()
            .max()
            .expect("cycle nonempty")
    }
}

/// Growth recurrences that define partitions lazily.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RecurrenceKind {
    /// a_0 = 0, a_{k+1} = 1 + max(a_k, f(a_k)): each interval reaches past
    /// f at its left endpoint.
    ChopAfter,
    /// a_0 = 0, a_1 = 1, a_{k+2} = max(a_{k+1} + 1, 1 + max f on
    /// [a_k, a_{k+1})): each interval reaches past f on the whole previous
    /// interval.
    OneIntervalPast,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecurrencePartition {
    pub kind: RecurrenceKind,
    pub f: UlpFunction,
}

impl RecurrencePartition {
    /// Endpoints from a_0 = 0 up to and including the first one exceeding
    /// `limit`, by direct simulation.
    pub fn endpoints_through(&self, limit: u64) -> Result<Vec<u64>, StreamError> {
        let mut out = vec![0u64];
        match self.kind {
            RecurrenceKind::ChopAfter => {
                while *out.last().unwrap() <= limit {
                    let a = *out.last().unwrap();
                    let next = 1 + a.max(self.f.eval(a)?);
                    out.push(next);
                }
            }
            RecurrenceKind::OneIntervalPast => {
                out.push(1);
                while *out.last().unwrap() <= limit {
                    let a = out[out.len() - 2];
                    let b = out[out.len() - 1];
                    let mut m = 0u64;
                    for n in a..b {
                        m = m.max(self.f.eval(n)?);
                    }
                    out.push((b + 1).max(m + 1));
                }
            }
        }
        Ok(out)
    }
}

/// An interval partition in either presentation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "repr", rename_all = "snake_case")]
pub enum Partition {
    Ulp(IntervalPartition),
    Recurrence(RecurrencePartition),
}

impl Partition {
    /// Endpoints from a_0 = 0 up to and including the first one exceeding
    /// `limit`.
    pub fn endpoints_through(&self, limit: u64) -> Result<Vec<u64>, StreamError> {
        match self {
            Partition::Ulp(p) => {
                let mut out = vec![0u64];
                let mut k = 0u64;
                while *out.last().unwrap() <= limit {
                    let a = *out.last().unwrap();
                    out.push(a + p.gaps().eval(k)?);
                    k += 1;
                }
                Ok(out)
            }
            Partition::Recurrence(r) => r.endpoints_through(limit),
        }
    }

    pub fn positional_period(&self) -> Option<PositionalPeriod> {
        match self {
            Partition::Ulp(p) => p.positional_period(),
            Partition::Recurrence(_) => None,
        }
    }

    /// Position from which the gap structure is periodic (start of the first
    /// periodic interval) for the gap presentation; for lazy recurrences the
    /// underlying function's threshold is the only available marker.
    pub fn stable_from(&self) -> Result<u64, StreamError> {
        match self {
            Partition::Ulp(p) => p.endpoint(p.gaps().threshold()),
            Partition::Recurrence(r) => Ok(r.f.threshold()),
        }
    }
}

/// Builds the chop-after partition for f, upgrading to the gap presentation
/// when f's asymptotic rate is at most 1.
pub fn chop_after(f: &UlpFunction) -> Result<Partition, StreamError> {
    let p = f.period();
    let d = f.increment();
    if d > p {
        return Ok(Partition::Recurrence(RecurrencePartition {
            kind: RecurrenceKind::ChopAfter,
            f: f.clone(),
        }));
    }
    let step = |a: u64| -> Result<u64, StreamError> { Ok(1 + a.max(f.eval(a)?)) };
    if d < p {
        // Beyond the last index where f exceeds the identity every gap is 1.
        let settle = match f.last_index_above_identity()? {
            Some(n) => (n + 1).max(f.threshold()),
            None => f.threshold(),
        };
        let mut gaps = Vec::new();
        let mut a = 0u64;
        while a < settle {
            let next = step(a)?;
            gaps.push(next - a);
            a = next;
        }
        let gaps = UlpFunction::new(gaps, 0, vec![1])?;
        return Ok(Partition::Ulp(IntervalPartition::new(gaps)?));
    }
    // d == p: beyond the threshold the gap 1 + max(0, f(a) - a) depends only
    // on a mod p, so the residue orbit of the endpoints closes into a cycle.
    let mut gaps = Vec::new();
    let mut a = 0u64;
    let mut seen: std::collections::HashMap<u64, usize> = std::collections::HashMap::new();
    loop {
        if a >= f.threshold() {
            let r = a % p;
            if let Some(&j) = seen.get(&r) {
                let cycle = gaps.split_off(j);
                let part = IntervalPartition::new(UlpFunction::new(gaps, 0, cycle)?)?;
                return Ok(Partition::Ulp(part));
            }
            seen.insert(r, gaps.len());
        }
        let next = step(a)?;
        gaps.push(next - a);
        a = next;
    }
}

/// Builds the one-interval-past partition for f (the recurrence used on the
/// minus side of the bounding-number connection), upgrading to the gap
/// presentation when f's rate is at most 1.
pub fn one_interval_past(f: &UlpFunction) -> Result<Partition, StreamError> {
    let p = f.period();
    let d = f.increment();
    let lazy = || {
        Partition::Recurrence(RecurrencePartition {
            kind: RecurrenceKind::OneIntervalPast,
            f: f.clone(),
        })
    };
    if d > p {
        return Ok(lazy());
    }
    // Simulate endpoints, recording gaps; the state that determines all
    // future gaps beyond the threshold is (current gap, start residue).
    let mut prev = 0u64;
    let mut cur = 1u64;
    let mut gaps = vec![1u64]; // a_1 - a_0
    let settle = if d < p {
        match f.last_index_above_identity()? {
            Some(n) => Some((n + 1).max(f.threshold())),
            None => Some(f.threshold()),
        }
    } else {
        None
    };
    let mut seen: std::collections::HashMap<(u64, u64), usize> =
        std::collections::HashMap::new();
    for _ in 0..1_000_000 {
        if let Some(s) = settle {
            // Once the determining interval sits past the settle point the
            // recurrence only ever appends gap-1 intervals.
            if prev >= s {
                let gaps = UlpFunction::new(gaps, 0, vec![1])?;
                return Ok(Partition::Ulp(IntervalPartition::new(gaps)?));
            }
        } else if prev >= f.threshold() {
            let state = (cur - prev, prev % p);
            if let Some(&j) = seen.get(&state) {
                let cycle = gaps.split_off(j);
                let part = IntervalPartition::new(UlpFunction::new(gaps, 0, cycle)?)?;
                return Ok(Partition::Ulp(part));
            }
            seen.insert(state, gaps.len());
        }
        let mut m = 0u64;
        for n in prev..cur {
            m = m.max(f.eval(n)?);
        }
        let next = (cur + 1).max(m + 1);
        gaps.push(next - cur);
        prev = cur;
        cur = next;
    }
    // Should be unreachable for rate <= 1; fall back to the lazy form.
    Ok(lazy())
}

/// A chopped sequence: a flat stream together with an interval partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChoppedReal {
    stream: UlpFunction,
    partition: Partition,
}

impl ChoppedReal {
    pub fn new(stream: UlpFunction, partition: Partition) -> Result<Self, StreamError> {
        if !stream.is_flat() {
            return Err(StreamError::NotFlat);
        }
        Ok(ChoppedReal { stream, partition })
    }

    pub fn stream(&self) -> &UlpFunction {
        &self.stream
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    /// Both the stream and the interval pattern are positionally periodic,
    /// so questions about this chopped sequence admit exact answers.
    pub fn is_exact_capable(&self) -> bool {
        self.partition.positional_period().is_some()
    }

    /// Combined positional data: (first stable position, hyperperiod).
    pub(crate) fn positional_data(&self) -> Result<(u64, u64), StreamError> {
        let pp = self
            .partition
            .positional_period()
            .ok_or(StreamError::ExactUnavailable)?;
        let start = self.stream.threshold().max(self.partition.stable_from()?);
        let l = lcm(self.stream.period(), pp.shift)?;
        Ok((start, l))
    }
}
