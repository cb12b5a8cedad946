//! Law sweeps: exhaustive checks over all small admissible relations, plus
//! seeded randomized populations for the larger cases.

use crate::catalog::gen::{self, rng_from_seed};
use crate::combinators::{
    old_product, oldprod_from_seq, prod_from_oldprod, product, seq_compose, CombinatorError,
};
use crate::morphism::{search_morphism, verify, MorphismError, MorphismVerdict};
use crate::relation::FiniteRelation;
use crate::streams::decide::non_engulf_witness;
use crate::streams::{engulfs, matches, HorizonParams, StreamError};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("unknown sweep suite {0:?}")]
    UnknownSuite(String),
    #[error(transparent)]
    Combinator(#[from] CombinatorError),
    #[error(transparent)]
    Morphism(#[from] MorphismError),
    #[error(transparent)]
    Stream(#[from] StreamError),
}

/// Aggregate result of one sweep suite.
#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub suite: String,
    pub checked: u64,
    pub violations: u64,
    pub seed: Option<u64>,
    /// Human-readable notes: strictness witnesses, counts per direction, and
    /// (on failure) descriptions of violating instances.
    pub notes: Vec<String>,
}

impl SweepReport {
    fn new(suite: &str, seed: Option<u64>) -> Self {
        SweepReport {
            suite: suite.to_string(),
            checked: 0,
            violations: 0,
            seed,
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    fn violation(&mut self, note: String) {
        self.violations += 1;
        if self.notes.len() < 16 {
            self.notes.push(note);
        }
    }
}

/// All admissible relations with both sides of size at most `max_side`,
/// enumerated deterministically (sides ascending, matrices in binary order).
pub fn enumerate_admissible(max_side: usize) -> Vec<FiniteRelation> {
    let mut out = Vec::new();
    for m in 1..=max_side {
        for p in 1..=max_side {
            for code in 0..(1u32 << (m * p)) {
                let matrix: Vec<Vec<bool>> = (0..m)
                    .map(|r| (0..p).map(|c| code >> (r * p + c) & 1 == 1).collect())
                    .collect();
                let minus = (0..m).map(|i| i.to_string()).collect();
                let plus = (0..p).map(|i| i.to_string()).collect();
                if let Ok(rel) = FiniteRelation::new(minus, plus, matrix) {
                    out.push(rel);
                }
            }
        }
    }
    out
}

/// Random admissible relation with sides in 2..=max_side.
pub fn random_relation(rng: &mut ChaCha8Rng, max_side: usize) -> FiniteRelation {
    loop {
        let m = rng.gen_range(2..=max_side);
        let p = rng.gen_range(2..=max_side);
        let matrix: Vec<Vec<bool>> = (0..m)
            .map(|_| (0..p).map(|_| rng.gen_bool(0.5)).collect())
            .collect();
        let minus = (0..m).map(|i| i.to_string()).collect();
        let plus = (0..p).map(|i| i.to_string()).collect();
        if let Ok(rel) = FiniteRelation::new(minus, plus, matrix) {
            return rel;
        }
    }
}

/// Sequential composition laws, exhaustively: norm(A;B) = norm(A) * norm(B)
/// and dual_norm(A;B) = min of the dual norms.
pub fn prop2_sweep(max_side: usize, cap: u64) -> Result<SweepReport, SweepError> {
    let rels = enumerate_admissible(max_side);
    let mut report = SweepReport::new("prop2", None);
    for a in &rels {
        for b in &rels {
            let seq = seq_compose(a, b, cap)?;
            let norm = seq.relation.norm().value.0;
            let dual = seq.relation.dual_norm().value.0;
            let expect_norm = a.norm().value.0 * b.norm().value.0;
            let expect_dual = a.dual_norm().value.0.min(b.dual_norm().value.0);
            report.checked += 1;
            if norm != expect_norm || dual != expect_dual {
                report.violation(format!(
                    "seq({:?}, {:?}): norm {norm} (want {expect_norm}), dual {dual} (want {expect_dual})",
                    a.matrix(),
                    b.matrix()
                ));
            }
        }
    }
    Ok(report)
}

fn check_product_laws(
    a: &FiniteRelation,
    b: &FiniteRelation,
    report: &mut SweepReport,
    strict_above_max: &mut bool,
    strict_below_product: &mut bool,
) -> Result<(), SweepError> {
    let (na, nb) = (a.norm().value.0, b.norm().value.0);
    let (da, db) = (a.dual_norm().value.0, b.dual_norm().value.0);
    let pr = product(a, b)?;
    let op = old_product(a, b)?;
    let pn = pr.norm().value.0;
    let pd = pr.dual_norm().value.0;
    let on = op.norm().value.0;
    let od = op.dual_norm().value.0;
    report.checked += 1;
    if pn != na.max(nb) || pd != da.min(db) {
        report.violation(format!(
            "product({:?}, {:?}): norm {pn} dual {pd}, want max {} / min {}",
            a.matrix(),
            b.matrix(),
            na.max(nb),
            da.min(db)
        ));
    }
    if od != da.min(db) || on < na.max(nb) || on > na * nb {
        report.violation(format!(
            "old_product({:?}, {:?}): norm {on} dual {od}, want dual {} and norm in [{}, {}]",
            a.matrix(),
            b.matrix(),
            da.min(db),
            na.max(nb),
            na * nb
        ));
    }
    if on > na.max(nb) {
        *strict_above_max = true;
    }
    if on < na * nb {
        *strict_below_product = true;
    }
    Ok(())
}

/// Product and old-product norm laws: exhaustive over sides <= max_side plus
/// `random_pairs` random pairs with sides <= random_side.
pub fn product_law_sweep(
    max_side: usize,
    random_pairs: u64,
    random_side: usize,
    seed: u64,
) -> Result<SweepReport, SweepError> {
    let rels = enumerate_admissible(max_side);
    let mut report = SweepReport::new("product-laws", Some(seed));
    let mut strict_above = false;
    let mut strict_below = false;
    for a in &rels {
        for b in &rels {
            check_product_laws(a, b, &mut report, &mut strict_above, &mut strict_below)?;
        }
    }
    let mut rng = rng_from_seed(seed);
    for _ in 0..random_pairs {
        let a = random_relation(&mut rng, random_side);
        let b = random_relation(&mut rng, random_side);
        check_product_laws(&a, &b, &mut report, &mut strict_above, &mut strict_below)?;
    }
    report.notes.push(format!(
        "old product norm strictly above max observed: {strict_above}; strictly below product observed: {strict_below}"
    ));
    Ok(report)
}

/// Morphism soundness: whenever an exhaustive search finds a morphism
/// A -> B, norm(A) >= norm(B) and dual_norm(A) <= dual_norm(B).
pub fn morphism_soundness_sweep(max_side: usize, cap: u128) -> Result<SweepReport, SweepError> {
    let rels = enumerate_admissible(max_side);
    let mut report = SweepReport::new("morphism-soundness", None);
    let mut found = 0u64;
    for a in &rels {
        for b in &rels {
            report.checked += 1;
            if let Some(m) = search_morphism(a, b, cap)? {
                found += 1;
                let sound = a.norm().value >= b.norm().value
                    && a.dual_norm().value <= b.dual_norm().value;
                if !sound {
                    report.violation(format!(
                        "morphism {:?} -> {:?} found but norms violate soundness",
                        a.matrix(),
                        b.matrix()
                    ));
                }
                // The transported cover must be a cover of the target.
                let cover = m.transport_cover(&a.norm().witness)?;
                if !b.is_cover(&cover) {
                    report.violation(format!(
                        "transported cover fails for {:?} -> {:?}",
                        a.matrix(),
                        b.matrix()
                    ));
                }
            }
        }
    }
    report.notes.push(format!("morphisms found: {found}"));
    Ok(report)
}

/// Composition chain: the sequential-composition-to-old-product and
/// old-product-to-product morphisms verify, as does their composite.
pub fn chain_sweep(random_pairs: u64, seed: u64, cap: u64) -> Result<SweepReport, SweepError> {
    let mut report = SweepReport::new("chain", Some(seed));
    let mut pairs: Vec<(FiniteRelation, FiniteRelation)> = Vec::new();
    let small = enumerate_admissible(2);
    for a in &small {
        for b in &small {
            pairs.push((a.clone(), b.clone()));
        }
    }
    let mut rng = rng_from_seed(seed);
    for _ in 0..random_pairs {
        pairs.push((random_relation(&mut rng, 3), random_relation(&mut rng, 3)));
    }
    for (a, b) in &pairs {
        report.checked += 1;
        // Constructors verify eagerly; reaching here means both legs pass.
        let leg1 = oldprod_from_seq(a, b, cap)?;
        let leg2 = prod_from_oldprod(a, b, 0, 0)?;
        let composite = leg1.compose(&leg2)?;
        let verdict = verify(
            composite.minus_map(),
            composite.plus_map(),
            composite.source(),
            composite.target(),
        )?;
        if verdict != MorphismVerdict::Pass {
            report.violation(format!(
                "composite chain fails for {:?}, {:?}",
                a.matrix(),
                b.matrix()
            ));
        }
    }
    Ok(report)
}

/// Both directions of the matching/engulfing equivalence on seeded random
/// instances: engulfing pairs transfer sampled matchers; non-engulfing pairs
/// admit a constructed separating stream.
pub fn engulf_lemma_sweep(
    per_direction: u64,
    seed: u64,
    hp: &HorizonParams,
) -> Result<SweepReport, SweepError> {
    let mut rng = rng_from_seed(seed);
    let mut report = SweepReport::new("engulf-lemma", Some(seed));
    let mut matchers_sampled = 0u64;
    // Forward: build engulfing pairs by coarsening, then check that every
    // sampled matcher of the coarse side matches the fine side.
    let mut forward = 0u64;
    while forward < per_direction {
        let fine = gen::random_chopped(&mut rng);
        let coarse = gen::coarsen_pairs(&fine)?;
        if !engulfs(&coarse, &fine, hp)?.answer {
            report.violation("coarsened partition fails to engulf".to_string());
            break;
        }
        forward += 1;
        report.checked += 1;
        for _ in 0..2 {
            let y = gen::random_matcher(&coarse, &mut rng)?;
            matchers_sampled += 1;
            if !matches(&y, &fine, hp)?.answer {
                report.violation("matcher of engulfing side misses engulfed side".to_string());
            }
        }
    }
    // Reverse: random pairs that fail to engulf yield a separating stream.
    let mut reverse = 0u64;
    while reverse < per_direction {
        let big = gen::random_chopped(&mut rng);
        let small = gen::random_chopped(&mut rng);
        if engulfs(&big, &small, hp)?.answer {
            continue;
        }
        reverse += 1;
        report.checked += 1;
        let y = non_engulf_witness(&big, &small)?;
        let hit = matches(&y, &big, hp)?;
        let miss = matches(&y, &small, hp)?;
        if !(hit.answer && hit.is_exact() && !miss.answer && miss.is_exact()) {
            report.violation("constructed stream fails to separate the pair".to_string());
        }
    }
    report
        .notes
        .push(format!("matchers sampled: {matchers_sampled}"));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinators::DEFAULT_CAP;

    #[test]
    fn admissible_counts_small_sides() {
        // Brute-force census: no admissible relations with a side of 1,
        // 2 each at 2x2, 12 each at 2x3 and 3x2, 174 at 3x3.
        let rels = enumerate_admissible(3);
        assert_eq!(rels.len(), 200);
        let count = |m: usize, p: usize| {
            rels.iter()
                .filter(|r| r.minus_len() == m && r.plus_len() == p)
                .count()
        };
        assert_eq!(count(2, 2), 2);
        assert_eq!(count(2, 3), 12);
        assert_eq!(count(3, 2), 12);
        assert_eq!(count(3, 3), 174);
        assert_eq!(enumerate_admissible(1).len(), 0);
    }

    #[test]
    fn prop2_holds_on_sides_up_to_2() {
        let r = prop2_sweep(2, DEFAULT_CAP).unwrap();
        assert!(r.passed(), "{:?}", r.notes);
        assert_eq!(r.checked, 4);
    }

    #[test]
    fn product_laws_hold_on_small_random_sample() {
        let r = product_law_sweep(2, 50, 4, 5).unwrap();
        assert!(r.passed(), "{:?}", r.notes);
    }

    #[test]
    fn chain_holds_on_sample() {
        let r = chain_sweep(25, 3, DEFAULT_CAP).unwrap();
        assert!(r.passed(), "{:?}", r.notes);
        assert_eq!(r.checked, 4 + 25);
    }

    #[test]
    fn engulf_lemma_holds_on_sample() {
        let r = engulf_lemma_sweep(10, 2, &HorizonParams::default()).unwrap();
        assert!(r.passed(), "{:?}", r.notes);
        assert_eq!(r.checked, 20);
    }

    #[test]
    fn morphism_soundness_on_sides_up_to_2() {
        let r = morphism_soundness_sweep(2, 1 << 20).unwrap();
        assert!(r.passed(), "{:?}", r.notes);
    }

    #[test]
    fn random_relations_are_deterministic_per_seed() {
        let a = random_relation(&mut rng_from_seed(9), 4);
        let b = random_relation(&mut rng_from_seed(9), 4);
        assert_eq!(a, b);
    }
}
