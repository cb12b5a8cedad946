//! Seeded random instance generators for the catalog checkers.
//!
//! Implication checkers are worthless when the premise never holds, so most
//! generators post-process a random instance to make the premise true with
//! high probability (e.g. boosting the dominating function pointwise, or
//! building a matcher by copying the stream on selected intervals).  The
//! remaining fraction stays fully random to exercise the vacuous path.

use super::{addb_minus, maxmin_beta};
use crate::streams::partition::{IntervalPartition, Partition};
use crate::streams::{ChoppedReal, HorizonParams, InfiniteSubset, StreamError, UlpFunction};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Flat stream over the given alphabet with small random prefix and cycle.
pub fn random_flat(rng: &mut ChaCha8Rng, alphabet: u64) -> UlpFunction {
    let prefix_len = rng.gen_range(0..4);
    let period = rng.gen_range(1..=6);
    let prefix = (0..prefix_len).map(|_| rng.gen_range(0..alphabet)).collect();
    let cycle = (0..period).map(|_| rng.gen_range(0..alphabet)).collect();
    UlpFunction::new(prefix, 0, cycle).expect("nonempty cycle")
}

/// ULP function with rate at most `max_rate` (increment <= max_rate * period).
pub fn random_ulp(rng: &mut ChaCha8Rng, max_rate: u64) -> UlpFunction {
    let prefix_len = rng.gen_range(0..4);
    let period: u64 = rng.gen_range(1..=5);
    let increment = rng.gen_range(0..=max_rate * period);
    let prefix = (0..prefix_len).map(|_| rng.gen_range(0..20)).collect();
    let cycle = (0..period).map(|_| rng.gen_range(0..15)).collect();
    UlpFunction::new(prefix, increment, cycle).expect("nonempty cycle")
}

pub fn random_subset(rng: &mut ChaCha8Rng) -> InfiniteSubset {
    loop {
        let bits = random_flat(rng, 2);
        if let Ok(s) = InfiniteSubset::new(bits) {
            return s;
        }
    }
}

/// Flat-gap interval partition with gaps in 1..=max_gap.
pub fn random_flat_partition(rng: &mut ChaCha8Rng, max_gap: u64) -> IntervalPartition {
    let prefix_len = rng.gen_range(0..3);
    let period = rng.gen_range(1..=4);
    let prefix = (0..prefix_len).map(|_| rng.gen_range(1..=max_gap)).collect();
    let cycle = (0..period).map(|_| rng.gen_range(1..=max_gap)).collect();
    IntervalPartition::new(UlpFunction::new(prefix, 0, cycle).unwrap()).unwrap()
}

/// Exact-capable chopped sequence: flat binary stream, flat-gap partition.
pub fn random_chopped(rng: &mut ChaCha8Rng) -> ChoppedReal {
    ChoppedReal::new(
        random_flat(rng, 2),
        Partition::Ulp(random_flat_partition(rng, 4)),
    )
    .expect("flat stream")
}

/// The same stream, re-presented with `extra` explicit prefix positions,
/// `mutated` of which are randomized.
pub fn with_noisy_prefix(
    f: &UlpFunction,
    rng: &mut ChaCha8Rng,
    alphabet: u64,
) -> Result<UlpFunction, StreamError> {
    let extra = rng.gen_range(1..=4u64);
    let t = f.threshold() + extra;
    let mut prefix = Vec::with_capacity(t as usize);
    for n in 0..t {
        prefix.push(if rng.gen_bool(0.5) {
            rng.gen_range(0..alphabet)
        } else {
            f.eval(n)?
        });
    }
    let mut cycle = Vec::with_capacity(f.period() as usize);
    for n in t..t + f.period() {
        cycle.push(f.eval(n)?);
    }
    UlpFunction::new(prefix, 0, cycle)
}

/// Pairs up consecutive intervals of an exact-capable chopped sequence,
/// producing a coarser partition that engulfs the original (same stream).
pub fn coarsen_pairs(cr: &ChoppedReal) -> Result<ChoppedReal, StreamError> {
    let part = match cr.partition() {
        Partition::Ulp(p) => p,
        Partition::Recurrence(_) => return Err(StreamError::ExactUnavailable),
    };
    let g = part.gaps();
    if !g.is_flat() {
        return Err(StreamError::ExactUnavailable);
    }
    let t = g.threshold();
    let pair = |k: u64| -> Result<u64, StreamError> { Ok(g.eval(2 * k)? + g.eval(2 * k + 1)?) };
    let mut prefix = Vec::with_capacity(t as usize);
    for k in 0..t {
        prefix.push(pair(k)?);
    }
    let mut cycle = Vec::with_capacity(g.period() as usize);
    for k in t..t + g.period() {
        cycle.push(pair(k)?);
    }
    let gaps = UlpFunction::new(prefix, 0, cycle)?;
    ChoppedReal::new(
        cr.stream().clone(),
        Partition::Ulp(IntervalPartition::new(gaps)?),
    )
}

/// A stream that provably matches the chopped sequence: copy the stream on a
/// random nonempty selection of intervals within one hyperperiod window,
/// random bits elsewhere.
pub fn random_matcher(
    cr: &ChoppedReal,
    rng: &mut ChaCha8Rng,
) -> Result<UlpFunction, StreamError> {
    let (start0, l) = cr.positional_data()?;
    let shift = cr.partition().positional_period().unwrap().shift;
    let ends = cr.partition().endpoints_through(start0 + l + 2 * shift + 2)?;
    let t = *ends.iter().find(|&&a| a >= start0).unwrap();
    let inside: Vec<(u64, u64)> = ends
        .windows(2)
        .map(|w| (w[0], w[1]))
        .filter(|&(s, e)| s >= t && e <= t + l)
        .collect();
    assert!(!inside.is_empty(), "window holds at least one full interval");
    let mut chosen: Vec<(u64, u64)> = inside
        .iter()
        .copied()
        .filter(|_| rng.gen_bool(0.5))
        .collect();
    if chosen.is_empty() {
        chosen.push(inside[rng.gen_range(0..inside.len())]);
    }
    let mut value = |pos: u64| -> Result<u64, StreamError> {
        if chosen.iter().any(|&(s, e)| s <= pos && pos < e) {
            cr.stream().eval(pos)
        } else {
            Ok(rng.gen_range(0..2))
        }
    };
    let mut prefix = Vec::with_capacity(t as usize);
    for pos in 0..t {
        prefix.push(cr.stream().eval(pos)?);
    }
    let mut cycle = Vec::with_capacity(l as usize);
    for pos in t..t + l {
        cycle.push(value(pos)?);
    }
    UlpFunction::new(prefix, 0, cycle)
}

/// Instance for the splitting-vs-dominating checker.
pub fn s_le_d_instance(rng: &mut ChaCha8Rng) -> (UlpFunction, InfiniteSubset) {
    let y = random_subset(rng);
    let roll: f64 = rng.gen();
    let f = if roll < 0.65 {
        // Premise-true: dominate the next-element function pointwise.
        let g = y.next_element_fn().expect("infinite set");
        g.add_const(rng.gen_range(0..4)).expect("small values")
    } else if roll < 0.8 {
        // Rate above 1: premise true, lazy chop partition.
        UlpFunction::new(vec![], rng.gen_range(2..4), vec![rng.gen_range(0..5)]).unwrap()
    } else {
        random_ulp(rng, 1)
    };
    (f, y)
}

/// Instance for the additivity-vs-covering checker.
pub fn addcov_instance(rng: &mut ChaCha8Rng) -> (ChoppedReal, ChoppedReal) {
    let big = random_chopped(rng);
    if rng.gen_bool(0.7) {
        // Premise-true: same stream up to prefix noise, singleton intervals.
        let stream = with_noisy_prefix(big.stream(), rng, 2).expect("re-presentation");
        let small =
            ChoppedReal::new(stream, Partition::Ulp(IntervalPartition::singletons())).unwrap();
        (big, small)
    } else {
        let small = random_chopped(rng);
        (big, small)
    }
}

/// Instance for the additivity-vs-bounding checker.
pub fn addb_instance(rng: &mut ChaCha8Rng) -> (UlpFunction, ChoppedReal) {
    let f = if rng.gen_bool(0.85) {
        random_ulp(rng, 1)
    } else {
        random_ulp(rng, 3)
    };
    let cr = match addb_minus(&f)
        .ok()
        .filter(|_| rng.gen_bool(0.75))
        .and_then(|minus| coarsen_pairs(&minus).ok())
    {
        Some(coarse) => coarse,
        None => random_chopped(rng),
    };
    (f, cr)
}

/// Instance for the max-min triple checker.
pub fn maxmin_instance(
    rng: &mut ChaCha8Rng,
    hp: &HorizonParams,
) -> (ChoppedReal, UlpFunction, UlpFunction) {
    let c = random_chopped(rng);
    let y = if rng.gen_bool(0.8) {
        random_matcher(&c, rng).expect("exact-capable instance")
    } else {
        random_flat(rng, 2)
    };
    let g = if rng.gen_bool(0.75) {
        // Premise-true: dominate the next-agreeing-endpoint function.
        let beta = maxmin_beta(&c, &y, hp).expect("exact-capable instance");
        beta.add_const(rng.gen_range(0..4)).expect("small values")
    } else {
        random_ulp(rng, 1)
    };
    (c, y, g)
}

/// Instance for the two-step reaping checker.
pub fn r3_instance(
    rng: &mut ChaCha8Rng,
) -> (UlpFunction, InfiniteSubset, InfiniteSubset) {
    let y = random_subset(rng);
    let y2 = random_subset(rng);
    if rng.gen_bool(0.7) {
        // Premise-true: pin f's recodings to constants on Y and on the
        // transferred set Z = e_Y(Y').
        let z = y.transfer(&y2).expect("transfer of infinite sets");
        // Feasible (f', f'') targets: f = 0 -> (0, 0), 1 -> (1, 1), 2 -> (1, 0).
        let options = [(0u64, 0u64, 0u64), (1, 1, 1), (1, 0, 2)];
        let (c1, _c2, v12) = options[rng.gen_range(0..3)];
        let t = y
            .bits()
            .threshold()
            .max(y2.bits().threshold())
            .max(z.bits().threshold());
        let period = crate::streams::ulp::lcm(y.bits().period(), z.bits().period())
            .expect("small periods");
        let prefix = (0..t).map(|_| rng.gen_range(0..3)).collect();
        let mut cycle = Vec::with_capacity(period as usize);
        for pos in t..t + period {
            cycle.push(if z.contains(pos).unwrap() {
                v12
            } else if y.contains(pos).unwrap() {
                if c1 == 0 {
                    0
                } else {
                    [1, 2][rng.gen_range(0..2)]
                }
            } else {
                rng.gen_range(0..3)
            });
        }
        let f = UlpFunction::new(prefix, 0, cycle).unwrap();
        (f, y, y2)
    } else {
        (random_flat(rng, 3), y, y2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::streams::{engulfs, matches};

    #[test]
    fn matcher_actually_matches() {
        let mut rng = rng_from_seed(11);
        let hp = HorizonParams::default();
        for _ in 0..30 {
            let c = random_chopped(&mut rng);
            let y = random_matcher(&c, &mut rng).unwrap();
            let v = matches(&y, &c, &hp).unwrap();
            assert!(v.answer && v.is_exact());
        }
    }

    #[test]
    fn coarsened_partition_engulfs_original() {
        let mut rng = rng_from_seed(12);
        let hp = HorizonParams::default();
        for _ in 0..30 {
            let c = random_chopped(&mut rng);
            let coarse = coarsen_pairs(&c).unwrap();
            let v = engulfs(&coarse, &c, &hp).unwrap();
            assert!(v.answer && v.is_exact());
        }
    }

    #[test]
    fn noisy_prefix_preserves_the_tail() {
        let mut rng = rng_from_seed(13);
        for _ in 0..20 {
            let f = random_flat(&mut rng, 2);
            let g = with_noisy_prefix(&f, &mut rng, 2).unwrap();
            for n in g.threshold()..g.threshold() + 50 {
                assert_eq!(f.eval(n).unwrap(), g.eval(n).unwrap());
            }
        }
    }

    #[test]
    fn generators_are_deterministic_per_seed() {
        let a = random_flat(&mut rng_from_seed(42), 2);
        let b = random_flat(&mut rng_from_seed(42), 2);
        assert_eq!(a, b);
    }
}
