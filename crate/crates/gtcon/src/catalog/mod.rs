//! Executable morphism constructions between the classical infinite
//! relations, each bundled with a checker for the implication it must
//! satisfy.
//!
//! The relations involved are tagged U (chopped sequences vs. binary streams
//! under "is matched by"), V (chopped sequences under "is engulfed by"),
//! W (Baire-space functions under eventual domination), S (functions vs.
//! infinite sets under splitting), and R / R3 (streams over 2 or 3 symbols
//! vs. infinite sets under almost-constancy).  Each checker instantiates the
//! morphism condition "source relation on mapped inputs implies target
//! relation on mapped outputs" and reports pass, fail, or vacuous (premise
//! not met).

pub mod gen;

use crate::streams::partition::{chop_after, one_interval_past, IntervalPartition};
use crate::streams::ulp::lcm;
use crate::streams::{
    almost_constant, engulfs, engulfs_from, leq_star, matches, splits, ChoppedReal,
    HorizonParams, InfiniteSubset, Partition, Scope, StreamError, UlpFunction, Verdict, Witness,
};
use serde::{Deserialize, Serialize};

/// Metadata for one catalog entry.
#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub source: &'static str,
    pub target: &'static str,
    pub inequality: &'static str,
    pub description: &'static str,
}

pub fn entries() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            name: "s_le_d",
            source: "W",
            target: "S",
            inequality: "s <= d",
            description: "next-element function vs. even-interval union of the chop partition",
        },
        CatalogEntry {
            name: "addcov",
            source: "V",
            target: "U",
            inequality: "add(B) <= cov(B)",
            description: "identity on chopped sequences, forget the partition on the other side",
        },
        CatalogEntry {
            name: "addb",
            source: "V",
            target: "W",
            inequality: "add(B) <= b",
            description: "one-interval-past partition vs. right endpoint two intervals on",
        },
        CatalogEntry {
            name: "maxmin",
            source: "U;W",
            target: "V",
            inequality: "add(B) >= min(cov(B), b)",
            description: "identity / next-agreeing-endpoint / chop-past-g triple",
        },
        CatalogEntry {
            name: "r3",
            source: "R;R",
            target: "R3",
            inequality: "r3 <= r * r",
            description: "binary recodings f', f'' and enumeration transfer e_Y(Y')",
        },
    ]
}

/// Outcome of one checker run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum CheckOutcome {
    /// Premises held and the conclusion held.
    Pass { conclusion: Verdict },
    /// A premise failed; the implication holds vacuously.
    Vacuous { premise: String, verdict: Verdict },
    /// Premises held but the conclusion failed: the construction is wrong.
    Fail { conclusion: Verdict },
}

impl CheckOutcome {
    pub fn is_fail(&self) -> bool {
        matches!(self, CheckOutcome::Fail { .. })
    }

    pub fn is_vacuous(&self) -> bool {
        matches!(self, CheckOutcome::Vacuous { .. })
    }
}

fn conclude(v: Verdict) -> CheckOutcome {
    if v.answer {
        CheckOutcome::Pass { conclusion: v }
    } else {
        CheckOutcome::Fail { conclusion: v }
    }
}

/// The union of even-indexed intervals of a partition, in whichever
/// presentation the partition supports.
#[derive(Clone, Debug)]
pub enum EvenUnion {
    Exact(InfiniteSubset),
    Lazy(Partition),
}

/// Characteristic stream of the even-indexed intervals of a positionally
/// periodic partition.
fn even_interval_bits(p: &IntervalPartition) -> Result<InfiniteSubset, StreamError> {
    let pp = p.positional_period().ok_or(StreamError::ExactUnavailable)?;
    let t0 = p.endpoint(pp.first_index)?;
    // One positional period advances the interval index by `index_period`;
    // parity of the index repeats after one period if that is even, else two.
    let pos_period = if pp.index_period % 2 == 0 {
        pp.shift
    } else {
        2 * pp.shift
    };
    let ends = Partition::Ulp(p.clone()).endpoints_through(t0 + pos_period)?;
    let mut bits = Vec::with_capacity((t0 + pos_period) as usize);
    let mut k = 0usize;
    for pos in 0..t0 + pos_period {
        while ends[k + 1] <= pos {
            k += 1;
        }
        bits.push(u64::from(k % 2 == 0));
    }
    let cycle = bits.split_off(t0 as usize);
    InfiniteSubset::new(UlpFunction::new(bits, 0, cycle)?)
}

/// The chop partition of f (each interval reaches past f at its left
/// endpoint) together with the union of its even-indexed intervals.
pub fn xf_partition(f: &UlpFunction) -> Result<(Partition, EvenUnion), StreamError> {
    let part = chop_after(f)?;
    let union = match &part {
        Partition::Ulp(p) => EvenUnion::Exact(even_interval_bits(p)?),
        Partition::Recurrence(_) => EvenUnion::Lazy(part.clone()),
    };
    Ok((part, union))
}

/// splits(X, Y) where X is the even-interval union of a lazy partition:
/// bounded-horizon count of Y-members inside and outside X.
fn splits_even_union_lazy(
    part: &Partition,
    y: &InfiniteSubset,
    hp: &HorizonParams,
) -> Result<Verdict, StreamError> {
    let t = y.bits().threshold().max(part.stable_from()?);
    let ends = part.endpoints_through(hp.horizon)?;
    let mut k = 0usize;
    let (mut inside, mut outside) = (0u64, 0u64);
    for pos in t..hp.horizon {
        while ends[k + 1] <= pos {
            k += 1;
        }
        if y.contains(pos)? {
            if k % 2 == 0 {
                inside += 1;
            } else {
                outside += 1;
            }
        }
    }
    Ok(Verdict {
        answer: inside >= hp.min_witnesses && outside >= hp.min_witnesses,
        witness: Witness::None,
        scope: Scope::Horizon {
            horizon: hp.horizon,
            threshold: t,
            required_witnesses: hp.min_witnesses,
        },
    })
}

/// Checker for the splitting-vs-dominating entry: if the next-element
/// function of Y is eventually dominated by f, then the even-interval union
/// of f's chop partition splits Y.
pub fn check_s_le_d(
    f: &UlpFunction,
    y: &InfiniteSubset,
    hp: &HorizonParams,
) -> Result<CheckOutcome, StreamError> {
    let g = y.next_element_fn()?;
    let premise = leq_star(&g, f)?;
    if !premise.answer {
        return Ok(CheckOutcome::Vacuous {
            premise: "next_element_fn(Y) <=* f".into(),
            verdict: premise,
        });
    }
    let (_, union) = xf_partition(f)?;
    let conclusion = match union {
        EvenUnion::Exact(x) => splits(&x, y)?,
        EvenUnion::Lazy(part) => splits_even_union_lazy(&part, y, hp)?,
    };
    Ok(conclude(conclusion))
}

/// Checker for the additivity-vs-covering entry: if `small` is engulfed by
/// `big`, then `big`'s stream matches `small`.
pub fn check_addcov(
    big: &ChoppedReal,
    small: &ChoppedReal,
    hp: &HorizonParams,
) -> Result<CheckOutcome, StreamError> {
    let premise = engulfs(big, small, hp)?;
    if !premise.answer {
        return Ok(CheckOutcome::Vacuous {
            premise: "small is engulfed by big".into(),
            verdict: premise,
        });
    }
    let conclusion = matches(big.stream(), small, hp)?;
    Ok(conclude(conclusion))
}

/// Minus map of the additivity-vs-bounding entry: the all-zero stream
/// chopped so that f(n) is never more than one interval past n, with
/// canonically minimal endpoints.
pub fn addb_minus(f: &UlpFunction) -> Result<ChoppedReal, StreamError> {
    ChoppedReal::new(UlpFunction::constant(0), one_interval_past(f)?)
}

/// Plus map of the additivity-vs-bounding entry: n goes to the right
/// endpoint of the interval after the one containing n.  Requires a
/// positionally periodic partition so the result is again ULP.
pub fn addb_plus(cr: &ChoppedReal) -> Result<UlpFunction, StreamError> {
    let part = match cr.partition() {
        Partition::Ulp(p) => p,
        Partition::Recurrence(_) => return Err(StreamError::ExactUnavailable),
    };
    let pp = part.positional_period().ok_or(StreamError::ExactUnavailable)?;
    let t0 = part.endpoint(pp.first_index)?;
    let s = pp.shift;
    let limit = t0 + s + 3 * part.max_gap() + 2;
    let ends = cr.partition().endpoints_through(limit)?;
    let eval = |n: u64| -> u64 {
        let k = ends.iter().rposition(|&a| a <= n).unwrap();
        ends[k + 2]
    };
    let prefix = (0..t0).map(eval).collect();
    let cycle = (t0..t0 + s).map(eval).collect();
    UlpFunction::new(prefix, s, cycle)
}

/// Checker for the additivity-vs-bounding entry: if the canonical chop of f
/// is engulfed by (x, Pi), then f is eventually dominated by the
/// right-endpoint function of (x, Pi).
pub fn check_addb(
    f: &UlpFunction,
    cr: &ChoppedReal,
    hp: &HorizonParams,
) -> Result<CheckOutcome, StreamError> {
    let minus = addb_minus(f)?;
    let premise = engulfs(cr, &minus, hp)?;
    if !premise.answer {
        return Ok(CheckOutcome::Vacuous {
            premise: "addb_minus(f) is engulfed by (x, Pi)".into(),
            verdict: premise,
        });
    }
    let conclusion = leq_star(f, &addb_plus(cr)?)?;
    Ok(conclude(conclusion))
}

/// n goes to the right endpoint of the next interval strictly after the one
/// containing n on which y agrees with the chopped sequence's stream.
/// Defined (and ULP) when y matches the chopped sequence exactly.
pub fn next_agreeing_endpoint_fn(
    c: &ChoppedReal,
    y: &UlpFunction,
) -> Result<UlpFunction, StreamError> {
    let (start0, l0) = c.positional_data()?;
    let l = lcm(l0, y.period())?;
    let pp = c.partition().positional_period().unwrap();
    let t0 = start0.max(y.threshold());
    let limit = t0 + 3 * l + 4 * pp.shift.max(1) + 4;
    let ends = c.partition().endpoints_through(limit)?;
    let eval = |n: u64| -> Result<u64, StreamError> {
        let k = ends.iter().rposition(|&a| a <= n).unwrap();
        for j in k + 1..ends.len() - 1 {
            let (s, e) = (ends[j], ends[j + 1]);
            let mut agree = true;
            for pos in s..e {
                if y.eval(pos)? != c.stream().eval(pos)? {
                    agree = false;
                    break;
                }
            }
            if agree {
                return Ok(e);
            }
        }
        // A matching y agrees within every hyperperiod window beyond the
        // threshold, so the scan above cannot run dry.
        Err(StreamError::ExactUnavailable)
    };
    let mut prefix = Vec::with_capacity(t0 as usize);
    for n in 0..t0 {
        prefix.push(eval(n)?);
    }
    let mut cycle = Vec::with_capacity(l as usize);
    for n in t0..t0 + l {
        cycle.push(eval(n)?);
    }
    UlpFunction::new(prefix, l, cycle)
}

/// The middle map of the max-min triple, including the fallback: the zero
/// function whenever y fails to match.
pub fn maxmin_beta(
    c: &ChoppedReal,
    y: &UlpFunction,
    hp: &HorizonParams,
) -> Result<UlpFunction, StreamError> {
    if matches(y, c, hp)?.answer {
        next_agreeing_endpoint_fn(c, y)
    } else {
        Ok(UlpFunction::constant(0))
    }
}

/// The third map of the max-min triple: y together with the canonical
/// minimal partition whose every interval reaches past g at its left
/// endpoint.
pub fn maxmin_gamma(y: &UlpFunction, g: &UlpFunction) -> Result<ChoppedReal, StreamError> {
    ChoppedReal::new(y.clone(), chop_after(g)?)
}

/// Checker for the max-min triple: if y matches (x, Pi) and the
/// next-agreeing-endpoint function is eventually dominated by g, then
/// (y, chop(g)) engulfs (x, Pi).
pub fn check_maxmin(
    c: &ChoppedReal,
    y: &UlpFunction,
    g: &UlpFunction,
    hp: &HorizonParams,
) -> Result<CheckOutcome, StreamError> {
    let m = matches(y, c, hp)?;
    if !m.answer {
        return Ok(CheckOutcome::Vacuous {
            premise: "y matches (x, Pi)".into(),
            verdict: m,
        });
    }
    let beta = maxmin_beta(c, y, hp)?;
    let dom = leq_star(&beta, g)?;
    if !dom.answer {
        return Ok(CheckOutcome::Vacuous {
            premise: "beta((x, Pi), y) <=* g".into(),
            verdict: dom,
        });
    }
    // Early intervals may predate the domination threshold; exclude them.
    let ignore_below = match dom.witness {
        Witness::LastViolation { index } => Some(index + 1),
        _ => None,
    };
    let gamma = maxmin_gamma(y, g)?;
    let conclusion = engulfs_from(&gamma, c, ignore_below, hp)?;
    Ok(conclude(conclusion))
}

/// First binary recoding of a stream over 3: 0 stays 0, everything else
/// becomes 1.
pub fn f_prime(f: &UlpFunction) -> Result<UlpFunction, StreamError> {
    f.check_alphabet(3)?;
    f.recode(|v| u64::from(v != 0))
}

/// Second binary recoding of a stream over 3: 0 and 2 become 0, 1 stays 1.
pub fn f_double_prime(f: &UlpFunction) -> Result<UlpFunction, StreamError> {
    f.check_alphabet(3)?;
    f.recode(|v| u64::from(v == 1))
}

/// Checker for the inclusion direction: a binary stream viewed over three
/// symbols is almost constant on Y exactly when it already was over two.
pub fn check_r3_xi(f: &UlpFunction, y: &InfiniteSubset) -> Result<CheckOutcome, StreamError> {
    f.check_alphabet(2)?;
    let premise = almost_constant(f, y)?;
    if !premise.answer {
        return Ok(CheckOutcome::Vacuous {
            premise: "f (viewed over 3) almost constant on Y".into(),
            verdict: premise,
        });
    }
    Ok(conclude(almost_constant(f, y)?))
}

/// Checker for the two-step reaping entry: if f' is almost constant on Y
/// and f'' composed with Y's enumeration is almost constant on Y', then f
/// is almost constant on the transferred set e_Y(Y').
pub fn check_r3_eta(
    f: &UlpFunction,
    y: &InfiniteSubset,
    y2: &InfiniteSubset,
) -> Result<CheckOutcome, StreamError> {
    f.check_alphabet(3)?;
    let fp = f_prime(f)?;
    let p1 = almost_constant(&fp, y)?;
    if !p1.answer {
        return Ok(CheckOutcome::Vacuous {
            premise: "f' almost constant on Y".into(),
            verdict: p1,
        });
    }
    let e_y = y.increasing_enumeration()?;
    let g_of_y = UlpFunction::compose_flat(&f_double_prime(f)?, &e_y)?;
    let p2 = almost_constant(&g_of_y, y2)?;
    if !p2.answer {
        return Ok(CheckOutcome::Vacuous {
            premise: "f'' o e_Y almost constant on Y'".into(),
            verdict: p2,
        });
    }
    let z = y.transfer(y2)?;
    Ok(conclude(almost_constant(f, &z)?))
}

#[derive(Debug, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),
    #[error(transparent)]
    Stream(#[from] StreamError),
}

/// Aggregate result of running one entry's checker over hand-picked plus
/// randomized instances.
#[derive(Clone, Debug, Serialize)]
pub struct SweepSummary {
    pub entry: String,
    pub seed: u64,
    pub instances: u64,
    pub pass: u64,
    pub vacuous: u64,
    pub fail: u64,
    /// Debug renderings of failing instances (empty on a healthy sweep).
    pub failures: Vec<String>,
}

impl SweepSummary {
    pub fn vacuous_fraction(&self) -> f64 {
        if self.instances == 0 {
            0.0
        } else {
            self.vacuous as f64 / self.instances as f64
        }
    }
}

/// Runs `n` seeded random instances of the named entry's checker.
pub fn sweep_entry(
    name: &str,
    n: u64,
    seed: u64,
    hp: &HorizonParams,
) -> Result<SweepSummary, CatalogError> {
    let mut rng = gen::rng_from_seed(seed);
    let mut summary = SweepSummary {
        entry: name.to_string(),
        seed,
        instances: n,
        pass: 0,
        vacuous: 0,
        fail: 0,
        failures: Vec::new(),
    };
    for _ in 0..n {
        let (outcome, detail) = match name {
            "s_le_d" => {
                let (f, y) = gen::s_le_d_instance(&mut rng);
                (check_s_le_d(&f, &y, hp)?, format!("f={f:?} Y={y:?}"))
            }
            "addcov" => {
                let (big, small) = gen::addcov_instance(&mut rng);
                (
                    check_addcov(&big, &small, hp)?,
                    format!("big={big:?} small={small:?}"),
                )
            }
            "addb" => {
                let (f, cr) = gen::addb_instance(&mut rng);
                (check_addb(&f, &cr, hp)?, format!("f={f:?} cr={cr:?}"))
            }
            "maxmin" => {
                let (c, y, g) = gen::maxmin_instance(&mut rng, hp);
                (
                    check_maxmin(&c, &y, &g, hp)?,
                    format!("c={c:?} y={y:?} g={g:?}"),
                )
            }
            "r3" => {
                let (f, y, y2) = gen::r3_instance(&mut rng);
                (
                    check_r3_eta(&f, &y, &y2)?,
                    format!("f={f:?} Y={y:?} Y'={y2:?}"),
                )
            }
            other => return Err(CatalogError::UnknownEntry(other.to_string())),
        };
        match outcome {
            CheckOutcome::Pass { .. } => summary.pass += 1,
            CheckOutcome::Vacuous { .. } => summary.vacuous += 1,
            CheckOutcome::Fail { conclusion } => {
                summary.fail += 1;
                if summary.failures.len() < 8 {
                    summary.failures.push(format!("{detail} -> {conclusion:?}"));
                }
            }
        }
    }
    Ok(summary)
}

/// Fixed, human-auditable instances for one entry, run by the CLI before
/// the randomized sweep.  Every instance is premise-true by construction,
/// so a healthy checker reports Pass on each.
pub fn hand_instances(
    name: &str,
    hp: &HorizonParams,
) -> Result<Vec<(String, CheckOutcome)>, CatalogError> {
    let alternating = UlpFunction::new(vec![], 0, vec![0, 1]).expect("nonempty cycle");
    let gap3 = Partition::Ulp(IntervalPartition::new(UlpFunction::constant(3))?);
    let instances = match name {
        "s_le_d" => {
            let y = InfiniteSubset::evens();
            let f = y.next_element_fn()?.add_const(1)?;
            vec![(
                "f = next-element function of the evens plus 1, Y = evens".to_string(),
                check_s_le_d(&f, &y, hp)?,
            )]
        }
        "addcov" => {
            let big = ChoppedReal::new(alternating.clone(), gap3)?;
            let small =
                ChoppedReal::new(alternating, Partition::Ulp(IntervalPartition::singletons()))?;
            vec![(
                "shared alternating stream, gap-3 intervals vs singletons".to_string(),
                check_addcov(&big, &small, hp)?,
            )]
        }
        "addb" => {
            let f = UlpFunction::new(vec![], 1, vec![2]).expect("nonempty cycle");
            let cr = gen::coarsen_pairs(&addb_minus(&f)?)?;
            vec![(
                "f(n) = n + 2 against its paired-up chop partition".to_string(),
                check_addb(&f, &cr, hp)?,
            )]
        }
        "maxmin" => {
            let c = ChoppedReal::new(alternating.clone(), gap3)?;
            let g = maxmin_beta(&c, &alternating, hp)?.add_const(1)?;
            vec![(
                "y copies the chopped stream, g dominates the agreeing-endpoint function"
                    .to_string(),
                check_maxmin(&c, &alternating, &g, hp)?,
            )]
        }
        "r3" => {
            let f = UlpFunction::constant(2);
            let y = InfiniteSubset::evens();
            let y2 = InfiniteSubset::odds();
            vec![(
                "constant stream 2, Y = evens, Y' = odds".to_string(),
                check_r3_eta(&f, &y, &y2)?,
            )]
        }
        other => return Err(CatalogError::UnknownEntry(other.to_string())),
    };
    Ok(instances)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::streams::decide::non_engulf_witness;

    fn evens() -> InfiniteSubset {
        InfiniteSubset::evens()
    }

    #[test]
    fn hand_instances_all_pass() {
        let hp = HorizonParams::default();
        for entry in entries() {
            let runs = hand_instances(entry.name, &hp).unwrap();
            assert!(!runs.is_empty(), "{}", entry.name);
            for (desc, outcome) in runs {
                assert!(
                    matches!(outcome, CheckOutcome::Pass { .. }),
                    "{}: {desc}: {outcome:?}",
                    entry.name
                );
            }
        }
        assert!(matches!(
            hand_instances("nope", &hp),
            Err(CatalogError::UnknownEntry(_))
        ));
    }

    #[test]
    fn xf_partition_of_identity_is_evens() {
        // f(n) = n gives unit gaps, so the even union is the evens.
        let (part, union) = xf_partition(&UlpFunction::identity()).unwrap();
        let ends = part.endpoints_through(10).unwrap();
        assert_eq!(&ends[..11], &[0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10]);
        match union {
            EvenUnion::Exact(x) => {
                for n in 0..50 {
                    assert_eq!(x.contains(n).unwrap(), n % 2 == 0);
                }
            }
            EvenUnion::Lazy(_) => panic!("unit gaps are periodic"),
        }
    }

    #[test]
    fn xf_partition_of_constant_zero_is_evens() {
        let (part, _) = xf_partition(&UlpFunction::constant(0)).unwrap();
        let ends = part.endpoints_through(6).unwrap();
        assert_eq!(&ends[..7], &[0, 1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn xf_partition_of_doubling_function() {
        // f(n) = 2n: endpoints 0, 1, 3, 7, 15, ... (a' = 2a + 1).
        let f = UlpFunction::new(vec![], 2, vec![0]).unwrap();
        let (part, union) = xf_partition(&f).unwrap();
        let ends = part.endpoints_through(15).unwrap();
        assert_eq!(&ends[..6], &[0, 1, 3, 7, 15, 31]);
        assert!(matches!(union, EvenUnion::Lazy(_)));
    }

    #[test]
    fn s_le_d_hand_instances() {
        let hp = HorizonParams::default();
        // f(n) = n + 2 dominates the next-element function of the evens.
        let f = UlpFunction::identity().add_const(2).unwrap();
        let out = check_s_le_d(&f, &evens(), &hp).unwrap();
        assert!(matches!(out, CheckOutcome::Pass { .. }), "{out:?}");
        // f = 0 cannot dominate: vacuous.
        let out = check_s_le_d(&UlpFunction::constant(0), &evens(), &hp).unwrap();
        assert!(out.is_vacuous());
        // A fast-growing f exercises the lazy branch.
        let f = UlpFunction::new(vec![], 2, vec![5]).unwrap();
        let out = check_s_le_d(&f, &evens(), &hp).unwrap();
        assert!(matches!(out, CheckOutcome::Pass { .. }), "{out:?}");
    }

    #[test]
    fn addcov_hand_instances() {
        let hp = HorizonParams::default();
        let parity = UlpFunction::new(vec![], 0, vec![0, 1]).unwrap();
        let big = ChoppedReal::new(
            parity.clone(),
            Partition::Ulp(IntervalPartition::new(UlpFunction::constant(4)).unwrap()),
        )
        .unwrap();
        // A chopped sequence engulfs itself, and its stream matches it.
        let out = check_addcov(&big, &big, &hp).unwrap();
        assert!(matches!(out, CheckOutcome::Pass { .. }), "{out:?}");
        // Complementary streams: premise fails.
        let flipped = UlpFunction::new(vec![], 0, vec![1, 0]).unwrap();
        let small = ChoppedReal::new(
            flipped,
            Partition::Ulp(IntervalPartition::new(UlpFunction::constant(1)).unwrap()),
        )
        .unwrap();
        assert!(check_addcov(&big, &small, &hp).unwrap().is_vacuous());
    }

    #[test]
    fn addb_minus_of_zero_is_singletons() {
        let cr = addb_minus(&UlpFunction::constant(0)).unwrap();
        let ends = cr.partition().endpoints_through(6).unwrap();
        assert_eq!(&ends[..7], &[0, 1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn addb_plus_on_singletons_is_n_plus_2() {
        let cr = ChoppedReal::new(
            UlpFunction::constant(0),
            Partition::Ulp(IntervalPartition::singletons()),
        )
        .unwrap();
        let h = addb_plus(&cr).unwrap();
        for n in 0..50 {
            assert_eq!(h.eval(n).unwrap(), n + 2);
        }
    }

    #[test]
    fn addb_hand_instance_passes() {
        let hp = HorizonParams::default();
        // f below identity; engulfing partner built by pairing up the
        // canonical partition's intervals.
        let f = UlpFunction::constant(3);
        let cr = gen::coarsen_pairs(&addb_minus(&f).unwrap()).unwrap();
        let out = check_addb(&f, &cr, &hp).unwrap();
        assert!(matches!(out, CheckOutcome::Pass { .. }), "{out:?}");
    }

    #[test]
    fn maxmin_beta_example_and_fallback() {
        let hp = HorizonParams::default();
        let zeros = UlpFunction::constant(0);
        let c = ChoppedReal::new(
            zeros.clone(),
            Partition::Ulp(IntervalPartition::singletons()),
        )
        .unwrap();
        // y = x: the next agreeing interval after [n, n+1) is [n+1, n+2).
        let beta = maxmin_beta(&c, &zeros, &hp).unwrap();
        for n in 0..40 {
            assert_eq!(beta.eval(n).unwrap(), n + 2);
        }
        // Fallback: a never-agreeing y yields the zero function.
        let ones = UlpFunction::constant(1);
        let beta = maxmin_beta(&c, &ones, &hp).unwrap();
        assert_eq!(beta, UlpFunction::constant(0));
    }

    #[test]
    fn maxmin_gamma_example() {
        let g = UlpFunction::identity().add_const(2).unwrap();
        let gamma = maxmin_gamma(&UlpFunction::constant(0), &g).unwrap();
        let ends = gamma.partition().endpoints_through(9).unwrap();
        assert_eq!(&ends[..4], &[0, 3, 6, 9]);
    }

    #[test]
    fn maxmin_hand_instance_passes() {
        let hp = HorizonParams::default();
        let zeros = UlpFunction::constant(0);
        let c = ChoppedReal::new(
            zeros.clone(),
            Partition::Ulp(IntervalPartition::singletons()),
        )
        .unwrap();
        let g = UlpFunction::identity().add_const(2).unwrap();
        let out = check_maxmin(&c, &zeros, &g, &hp).unwrap();
        assert!(matches!(out, CheckOutcome::Pass { .. }), "{out:?}");
        // Premise failure: y never matches.
        let out = check_maxmin(&c, &UlpFunction::constant(1), &g, &hp).unwrap();
        assert!(out.is_vacuous());
    }

    #[test]
    fn recodings_follow_the_case_split() {
        let f = UlpFunction::new(vec![], 0, vec![0, 1, 2]).unwrap();
        assert_eq!(
            f_prime(&f).unwrap(),
            UlpFunction::new(vec![], 0, vec![0, 1, 1]).unwrap()
        );
        assert_eq!(
            f_double_prime(&f).unwrap(),
            UlpFunction::new(vec![], 0, vec![0, 1, 0]).unwrap()
        );
        let two = UlpFunction::constant(2);
        assert_eq!(f_prime(&two).unwrap(), UlpFunction::constant(1));
        assert_eq!(f_double_prime(&two).unwrap(), UlpFunction::constant(0));
        // Binary streams are fixed by f'.
        let b = UlpFunction::new(vec![1], 0, vec![0, 1]).unwrap();
        assert_eq!(f_prime(&b).unwrap(), b);
    }

    #[test]
    fn r3_eta_hand_instances() {
        // f cycles 0,1,2; on multiples of 3 it is constantly 0.
        let f = UlpFunction::new(vec![], 0, vec![0, 1, 2]).unwrap();
        let y = InfiniteSubset::new(UlpFunction::new(vec![], 0, vec![1, 0, 0]).unwrap()).unwrap();
        let out = check_r3_eta(&f, &y, &InfiniteSubset::all()).unwrap();
        assert!(matches!(out, CheckOutcome::Pass { .. }), "{out:?}");
        // On all of omega f' is not almost constant: vacuous.
        let out = check_r3_eta(&f, &InfiniteSubset::all(), &InfiniteSubset::all()).unwrap();
        assert!(out.is_vacuous());
    }

    #[test]
    fn r3_xi_trivial_direction() {
        let b = UlpFunction::new(vec![1, 1, 0], 0, vec![0]).unwrap();
        let out = check_r3_xi(&b, &InfiniteSubset::all()).unwrap();
        assert!(matches!(out, CheckOutcome::Pass { .. }));
    }

    #[test]
    fn engulf_witness_feeds_addcov_contrapositive() {
        // When engulfing fails, the constructed matcher separates big from
        // small, confirming the premise truly failed.
        let parity = UlpFunction::new(vec![], 0, vec![0, 1]).unwrap();
        let flipped = UlpFunction::new(vec![], 0, vec![1, 0]).unwrap();
        let big = ChoppedReal::new(
            parity,
            Partition::Ulp(IntervalPartition::new(UlpFunction::constant(4)).unwrap()),
        )
        .unwrap();
        let small = ChoppedReal::new(
            flipped,
            Partition::Ulp(IntervalPartition::singletons()),
        )
        .unwrap();
        let hp = HorizonParams::default();
        assert!(!engulfs(&big, &small, &hp).unwrap().answer);
        let y = non_engulf_witness(&big, &small).unwrap();
        assert!(matches(&y, &big, &hp).unwrap().answer);
        assert!(!matches(&y, &small, &hp).unwrap().answer);
    }
}
