//! Decision procedures over ultimately linear-periodic presentations.
//!
//! Questions about two presentations are answered by analysing one combined
//! window: beyond the larger threshold, everything repeats with the least
//! common multiple of the periods involved, so a claim about "all but
//! finitely many" or "infinitely many" positions reduces to a finite check.
//! When an interval partition is only available as a lazy recurrence the
//! procedures fall back to a bounded-horizon check and say so in the verdict.

use super::partition::ChoppedReal;
use super::subset::InfiniteSubset;
use super::ulp::{lcm, UlpFunction};
use super::{HorizonParams, Scope, StreamError, Verdict, Witness};

/// Largest combined window the exact procedures will materialize.
const MAX_WINDOW: u64 = 5_000_000;

const WITNESS_CAP: usize = 16;

fn window(l: u64) -> Result<u64, StreamError> {
    if l > MAX_WINDOW {
        Err(StreamError::WindowTooLarge { size: l })
    } else {
        Ok(l)
    }
}

/// Decides whether f(n) <= g(n) for all but finitely many n.  Always exact:
/// per residue class of the combined period the difference g - f is linear
/// in the number of completed periods, so each class either violates the
/// claim finitely often or from some point on.
pub fn leq_star(f: &UlpFunction, g: &UlpFunction) -> Result<Verdict, StreamError> {
    let t = f.threshold().max(g.threshold());
    let l = window(lcm(f.period(), g.period())?)?;
    let df = f.increment() as i128 * (l / f.period()) as i128;
    let dg = g.increment() as i128 * (l / g.period()) as i128;
    let mut last: Option<u64> = None;
    for n in 0..t {
        if f.eval(n)? > g.eval(n)? {
            last = Some(n);
        }
    }
    let mut persistent: Option<u64> = None;
    for r in 0..l {
        let n0 = t + r;
        let base = g.eval(n0)? as i128 - f.eval(n0)? as i128;
        let delta = dg - df;
        if delta > 0 {
            // g pulls ahead: only finitely many violations in this class.
            if base < 0 {
                let q_last = (-base - 1) / delta;
                let n = u64::try_from(n0 as i128 + q_last * l as i128)
                    .map_err(|_| StreamError::Overflow)?;
                if last.map_or(true, |x| n > x) {
                    last = Some(n);
                }
            }
        } else if delta == 0 {
            if base < 0 && persistent.map_or(true, |s| n0 < s) {
                persistent = Some(n0);
            }
        } else {
            // f pulls ahead: violations from some pass onward.
            let q0 = if base < 0 { 0 } else { base / -delta + 1 };
            let n = u64::try_from(n0 as i128 + q0 * l as i128)
                .map_err(|_| StreamError::Overflow)?;
            if persistent.map_or(true, |s| n < s) {
                persistent = Some(n);
            }
        }
    }
    let scope = Scope::Exact {
        threshold: t,
        hyperperiod: l,
    };
    if let Some(start) = persistent {
        return Ok(Verdict {
            answer: false,
            witness: Witness::ViolationsFrom { start, step: l },
            scope,
        });
    }
    Ok(Verdict {
        answer: true,
        witness: last.map_or(Witness::None, |index| Witness::LastViolation { index }),
        scope,
    })
}

/// Decides whether X splits Y: both Y ∩ X and Y \ X are infinite.  Exact.
pub fn splits(x: &InfiniteSubset, y: &InfiniteSubset) -> Result<Verdict, StreamError> {
    let t = x.bits().threshold().max(y.bits().threshold());
    let l = window(lcm(x.bits().period(), y.bits().period())?)?;
    let mut inside: Option<u64> = None;
    let mut outside: Option<u64> = None;
    for n in t..t + l {
        if y.contains(n)? {
            if x.contains(n)? {
                inside.get_or_insert(n);
            } else {
                outside.get_or_insert(n);
            }
        }
    }
    let scope = Scope::Exact {
        threshold: t,
        hyperperiod: l,
    };
    let answer = inside.is_some() && outside.is_some();
    let witness = if answer {
        Witness::Positions { positions: vec![inside.unwrap(), outside.unwrap()] }
    } else {
        Witness::None
    };
    Ok(Verdict {
        answer,
        witness,
        scope,
    })
}

/// Decides whether f is constant on all but finitely many members of Y.
/// Exact for flat f.
pub fn almost_constant(f: &UlpFunction, y: &InfiniteSubset) -> Result<Verdict, StreamError> {
    if !f.is_flat() {
        return Err(StreamError::NotFlat);
    }
    let t = f.threshold().max(y.bits().threshold());
    let l = window(lcm(f.period(), y.bits().period())?)?;
    let mut first: Option<(u64, u64)> = None;
    let mut conflict: Option<(u64, u64)> = None;
    for n in t..t + l {
        if y.contains(n)? {
            let v = f.eval(n)?;
            match first {
                None => first = Some((n, v)),
                Some((m, w)) if w != v => {
                    conflict = Some((m, n));
                    break;
                }
                _ => {}
            }
        }
    }
    let scope = Scope::Exact {
        threshold: t,
        hyperperiod: l,
    };
    match conflict {
        Some((pos_a, pos_b)) => Ok(Verdict {
            answer: false,
            witness: Witness::ValueConflict { pos_a, pos_b },
            scope,
        }),
        None => Ok(Verdict {
            answer: true,
            witness: Witness::ConstantValue { value: first.expect("Y is infinite").1 },
            scope,
        }),
    }
}

fn streams_agree(a: &UlpFunction, b: &UlpFunction, s: u64, e: u64) -> Result<bool, StreamError> {
    for n in s..e {
        if a.eval(n)? != b.eval(n)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Intervals [s, e) delimited by `ends` with lo <= s < hi.
fn intervals_between(ends: &[u64], lo: u64, hi: u64) -> Vec<(u64, u64)> {
    ends.windows(2)
        .filter(|w| w[0] >= lo && w[0] < hi)
        .map(|w| (w[0], w[1]))
        .collect()
}

/// Decides whether y agrees with the chopped sequence on infinitely many of
/// its intervals.  Exact when the partition is positionally periodic,
/// otherwise a bounded-horizon check.
pub fn matches(
    y: &UlpFunction,
    cr: &ChoppedReal,
    hp: &HorizonParams,
) -> Result<Verdict, StreamError> {
    if !y.is_flat() {
        return Err(StreamError::NotFlat);
    }
    if cr.is_exact_capable() {
        let (start0, l0) = cr.positional_data()?;
        let l = window(lcm(l0, y.period())?)?;
        let min_pos = start0.max(y.threshold());
        let pp = cr.partition().positional_period().unwrap();
        let margin = pp.shift.max(1);
        let ends = cr
            .partition()
            .endpoints_through(min_pos + l + 2 * margin + 2)?;
        let t = *ends.iter().find(|&&a| a >= min_pos).unwrap();
        let mut hits = Vec::new();
        for (s, e) in intervals_between(&ends, t, t + l) {
            if streams_agree(y, cr.stream(), s, e)? {
                if hits.len() < WITNESS_CAP {
                    hits.push(s);
                }
            }
        }
        let scope = Scope::Exact {
            threshold: t,
            hyperperiod: l,
        };
        if hits.is_empty() {
            Ok(Verdict {
                answer: false,
                witness: Witness::Threshold { position: t },
                scope,
            })
        } else {
            Ok(Verdict {
                answer: true,
                witness: Witness::AgreeingIntervals { starts: hits },
                scope,
            })
        }
    } else {
        let t = y.threshold().max(cr.stream().threshold()).max(cr.partition().stable_from()?);
        let ends = cr.partition().endpoints_through(hp.horizon)?;
        let mut hits = Vec::new();
        let mut count = 0u64;
        for (s, e) in intervals_between(&ends, t, hp.horizon) {
            if e <= hp.horizon && streams_agree(y, cr.stream(), s, e)? {
                count += 1;
                if hits.len() < WITNESS_CAP {
                    hits.push(s);
                }
            }
        }
        Ok(Verdict {
            answer: count >= hp.min_witnesses,
            witness: Witness::AgreeingIntervals { starts: hits },
            scope: Scope::Horizon {
                horizon: hp.horizon,
                threshold: t,
                required_witnesses: hp.min_witnesses,
            },
        })
    }
}

fn interval_is_engulfed(
    big: &ChoppedReal,
    small: &ChoppedReal,
    small_ends: &[u64],
    s: u64,
    e: u64,
) -> Result<bool, StreamError> {
    for (js, je) in intervals_between(small_ends, s, e) {
        if je <= e && streams_agree(big.stream(), small.stream(), js, je)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Decides whether all but finitely many intervals of `big`'s partition
/// contain an interval of `small`'s partition on which the two streams
/// agree.  Exact when both partitions are positionally periodic.
pub fn engulfs(
    big: &ChoppedReal,
    small: &ChoppedReal,
    hp: &HorizonParams,
) -> Result<Verdict, StreamError> {
    engulfs_from(big, small, None, hp)
}

/// Like [`engulfs`], but disregarding positions below `ignore_below`; used
/// when a separate argument bounds where early failures may occur.
pub fn engulfs_from(
    big: &ChoppedReal,
    small: &ChoppedReal,
    ignore_below: Option<u64>,
    hp: &HorizonParams,
) -> Result<Verdict, StreamError> {
    if big.is_exact_capable() && small.is_exact_capable() {
        let (sb, lb) = big.positional_data()?;
        let (ss, ls) = small.positional_data()?;
        let l = window(lcm(lb, ls)?)?;
        let min_pos = sb.max(ss).max(ignore_below.unwrap_or(0));
        let margin = big.partition().positional_period().unwrap().shift
            + small.partition().positional_period().unwrap().shift;
        let limit = min_pos + l + 2 * margin + 4;
        let big_ends = big.partition().endpoints_through(limit)?;
        let small_ends = small.partition().endpoints_through(limit)?;
        let t = *big_ends.iter().find(|&&a| a >= min_pos).unwrap();
        let scope = Scope::Exact {
            threshold: t,
            hyperperiod: l,
        };
        for (s, e) in intervals_between(&big_ends, t, t + l) {
            if !interval_is_engulfed(big, small, &small_ends, s, e)? {
                return Ok(Verdict {
                    answer: false,
                    witness: Witness::BadInterval { start: s, end: e },
                    scope,
                });
            }
        }
        Ok(Verdict {
            answer: true,
            witness: Witness::Threshold { position: t },
            scope,
        })
    } else {
        let t = big
            .stream()
            .threshold()
            .max(small.stream().threshold())
            .max(big.partition().stable_from()?)
            .max(small.partition().stable_from()?)
            .max(ignore_below.unwrap_or(0));
        let big_ends = big.partition().endpoints_through(hp.horizon)?;
        let small_ends = small.partition().endpoints_through(hp.horizon)?;
        let scope = Scope::Horizon {
            horizon: hp.horizon,
            threshold: t,
            required_witnesses: hp.min_witnesses,
        };
        for (s, e) in intervals_between(&big_ends, t, hp.horizon) {
            if e > hp.horizon {
                continue;
            }
            if !interval_is_engulfed(big, small, &small_ends, s, e)? {
                return Ok(Verdict {
                    answer: false,
                    witness: Witness::BadInterval { start: s, end: e },
                    scope,
                });
            }
        }
        Ok(Verdict {
            answer: true,
            witness: Witness::Threshold { position: t },
            scope,
        })
    }
}

/// Given that `big` does not engulf `small`, produces a stream that agrees
/// with `big` on infinitely many of its intervals yet eventually disagrees
/// with `small` somewhere on every interval of its partition.
///
/// Construction: keep bad intervals of `big` (those with no agreeing
/// `small`-subinterval), greedily thinned so consecutive kept intervals are
/// separated by a full `small`-interval; on kept intervals copy `big`'s
/// stream, elsewhere output a value differing from `small`'s stream.  The
/// kept pattern is driven by a finite-state scan over hyperperiod windows,
/// so the result is again ultimately periodic.
pub fn non_engulf_witness(
    big: &ChoppedReal,
    small: &ChoppedReal,
) -> Result<UlpFunction, StreamError> {
    if !(big.is_exact_capable() && small.is_exact_capable()) {
        return Err(StreamError::ExactUnavailable);
    }
    let verdict = engulfs(big, small, &HorizonParams::default())?;
    if verdict.answer {
        return Err(StreamError::EngulfsHolds);
    }
    let (sb, lb) = big.positional_data()?;
    let (ss, ls) = small.positional_data()?;
    let l = window(lcm(lb, ls)?)?;
    let min_pos = sb.max(ss);
    let margin_b = big.partition().positional_period().unwrap().shift;
    let margin_s = small.partition().positional_period().unwrap().shift;
    // Distinct scan states are bounded by the carry-over reach of one kept
    // interval, so the cycle closes within this many windows.
    let max_windows = (margin_b + 2) * (margin_b + margin_s + 2) + 2;
    let limit = min_pos
        + (max_windows + 2)
            .checked_mul(l)
            .ok_or(StreamError::Overflow)?
        + 2 * (margin_b + margin_s)
        + 4;
    window(limit)?;
    let big_ends = big.partition().endpoints_through(limit)?;
    let small_ends = small.partition().endpoints_through(limit)?;
    let t = *big_ends.iter().find(|&&a| a >= min_pos).unwrap();
    // Bad intervals repeat per window; record their offsets once.
    let bad_offsets: Vec<(u64, u64)> = intervals_between(&big_ends, t, t + l)
        .into_iter()
        .filter(|&(s, e)| {
            !interval_is_engulfed(big, small, &small_ends, s, e).unwrap_or(true)
        })
        .map(|(s, e)| (s - t, e - t))
        .collect();
    assert!(!bad_offsets.is_empty(), "engulfing already refuted");
    let small_end_after = |pos: u64| -> u64 {
        *small_ends
            .iter()
            .find(|&&a| a > pos)
            .expect("small endpoints cover the scanned range")
    };
    let mut kept: Vec<(u64, u64)> = Vec::new();
    let mut block = 0u64;
    let mut seen: std::collections::HashMap<(u64, u64), u64> =
        std::collections::HashMap::new();
    let mut cycle_range: Option<(u64, u64)> = None;
    for w in 0..max_windows {
        let win_start = t + w * l;
        // The state must determine both future keep decisions (via the
        // blocked-until offset) and the stream values already committed past
        // the window boundary (via the last kept interval's overhang).
        let state = (
            block.saturating_sub(win_start),
            kept.last().map_or(0, |&(_, e)| e.saturating_sub(win_start)),
        );
        if let Some(&j) = seen.get(&state) {
            cycle_range = Some((j, w));
            break;
        }
        seen.insert(state, w);
        for &(ds, de) in &bad_offsets {
            let (s, e) = (win_start + ds, win_start + de);
            if s >= block {
                kept.push((s, e));
                // Blocked until the end of the small interval reaching the
                // kept interval's last position.
                block = small_end_after(e - 1);
            }
        }
    }
    let (j, w) = cycle_range.expect("bounded state space forces a repeat");
    let y_threshold = t + j * l;
    let period = (w - j) * l;
    let value_at = |pos: u64| -> Result<u64, StreamError> {
        if kept.iter().any(|&(s, e)| s <= pos && pos < e) {
            big.stream().eval(pos)
        } else {
            // Any value different from small's stream; stays within any
            // alphabet of size >= 2.
            Ok(if small.stream().eval(pos)? == 0 { 1 } else { 0 })
        }
    };
    let mut prefix = Vec::with_capacity(y_threshold as usize);
    for pos in 0..y_threshold {
        prefix.push(value_at(pos)?);
    }
    let mut cycle = Vec::with_capacity(period as usize);
    for pos in y_threshold..y_threshold + period {
        cycle.push(value_at(pos)?);
    }
    UlpFunction::new(prefix, 0, cycle)
}
