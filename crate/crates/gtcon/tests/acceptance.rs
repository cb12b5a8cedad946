//! The acceptance gate: one test per criterion, each printing a single
//! PASS/FAIL line.  Run with `cargo test --test acceptance`.

use gtcon::catalog::{self, CheckOutcome};
use gtcon::combinators::old_product;
use gtcon::morphism::search_morphism;
use gtcon::relation::neq;
use gtcon::streams::HorizonParams;
use gtcon::sweeps;
use std::process::Command;
use std::time::{Duration, Instant};

struct Criterion {
    number: u32,
    name: &'static str,
    start: Instant,
}

impl Criterion {
    fn begin(number: u32, name: &'static str) -> Self {
        Criterion {
            number,
            name,
            start: Instant::now(),
        }
    }

    fn finish(self, ok: bool, budget: Option<Duration>) {
        let elapsed = self.start.elapsed();
        let within = budget.is_none_or(|b| elapsed <= b);
        let verdict = if ok && within { "PASS" } else { "FAIL" };
        println!(
            "ACCEPTANCE {} ({}): {verdict} [{} ms]",
            self.number,
            self.name,
            elapsed.as_millis()
        );
        assert!(ok, "criterion {} ({}) failed", self.number, self.name);
        assert!(
            within,
            "criterion {} ({}) exceeded its time budget: {:?} > {:?}",
            self.number,
            self.name,
            elapsed,
            budget.unwrap()
        );
    }
}

#[test]
fn criterion_1_inequality_on_three_points() {
    let c = Criterion::begin(1, "norm 2, old self-product norm 3");
    let r = neq(3);
    let op = old_product(&r, &r).unwrap();
    let ok = r.norm().value.0 == 2 && op.norm().value.0 == 3;
    c.finish(ok, Some(Duration::from_secs(1)));
}

#[test]
fn criterion_2_sequential_composition_scale_facts() {
    let c = Criterion::begin(2, "norm multiplies, dual norm is the min, exhaustively");
    let report = sweeps::prop2_sweep(3, 100_000_000).unwrap();
    c.finish(report.passed(), Some(Duration::from_secs(300)));
}

#[test]
fn criterion_3_product_norm_laws() {
    let c = Criterion::begin(3, "product laws, exhaustive plus 1000 random pairs");
    let report = sweeps::product_law_sweep(3, 1000, 4, 3).unwrap();
    c.finish(report.passed(), None);
}

#[test]
fn criterion_4_morphism_soundness() {
    let c = Criterion::begin(4, "found morphisms respect norms; none into a harder target");
    let report = sweeps::morphism_soundness_sweep(3, 1 << 40).unwrap();
    let none = search_morphism(&neq(3), &neq(2), 1 << 40).unwrap().is_none();
    c.finish(report.passed() && none, None);
}

#[test]
fn criterion_5_composition_chain() {
    let c = Criterion::begin(5, "two-leg morphism chains compose and verify");
    let report = sweeps::chain_sweep(200, 5, 1_000_000).unwrap();
    c.finish(report.passed(), None);
}

#[test]
fn criterion_6_engulfing_both_directions() {
    let c = Criterion::begin(6, "engulfing implies matching; refutations separate");
    let report = sweeps::engulf_lemma_sweep(100, 1, &HorizonParams::default()).unwrap();
    let matchers: u64 = report
        .notes
        .iter()
        .find_map(|n| n.strip_prefix("matchers sampled: "))
        .and_then(|n| n.parse().ok())
        .unwrap_or(0);
    c.finish(report.passed() && matchers >= 50, None);
}

#[test]
fn criterion_7_catalog_checkers() {
    let c = Criterion::begin(7, "all catalog entries: hand instances and 100-instance sweeps");
    let hp = HorizonParams::default();
    let mut ok = true;
    for entry in catalog::entries() {
        for (desc, outcome) in catalog::hand_instances(entry.name, &hp).unwrap() {
            if !matches!(outcome, CheckOutcome::Pass { .. }) {
                eprintln!("hand instance failed: {}: {desc}: {outcome:?}", entry.name);
                ok = false;
            }
        }
        let summary = catalog::sweep_entry(entry.name, 100, 7, &hp).unwrap();
        if summary.fail > 0 || summary.vacuous_fraction() > 0.9 {
            eprintln!(
                "sweep unhealthy: {}: fail {} vacuous fraction {:.2}",
                entry.name,
                summary.fail,
                summary.vacuous_fraction()
            );
            ok = false;
        }
    }
    c.finish(ok, Some(Duration::from_secs(120)));
}

#[test]
fn criterion_8_deterministic_reports() {
    let c = Criterion::begin(8, "same seed gives byte-identical reports");
    let bin = env!("CARGO_BIN_EXE_gtcon");
    let mut ok = true;
    for args in [
        vec!["catalog", "maxmin", "--sweep", "30", "--seed", "9"],
        vec!["sweep", "engulf-lemma", "--n", "10", "--seed", "2"],
        vec!["sweep", "chain", "--n", "25", "--seed", "4"],
    ] {
        let first = Command::new(bin).args(&args).output().unwrap();
        let second = Command::new(bin).args(&args).output().unwrap();
        if !first.status.success() || first.stdout != second.stdout {
            eprintln!("non-deterministic or failing: {args:?}");
            ok = false;
        }
    }
    c.finish(ok, None);
}
