//! The catalog of classical reductions, checked on concrete instances.
//!
//! Each catalog entry is an executable implication: a checker that takes a
//! concrete instance, decides the premise, and when the premise holds
//! verifies the promised conclusion.  Randomized, premise-boosted sweeps
//! keep the vacuous fraction low so the conclusions are genuinely
//! exercised.
//!
//! Run with: cargo run --example catalog_sweeps

use gtcon::catalog::{entries, hand_instances, sweep_entry, CheckOutcome};
use gtcon::streams::HorizonParams;

fn main() {
    let hp = HorizonParams::default();

    println!("catalog:");
    for e in entries() {
        println!("  {:8} {} -> {}  ({})", e.name, e.source, e.target, e.inequality);
    }
    println!();

    for e in entries() {
        // Fixed instances first: each is premise-true by construction.
        for (desc, outcome) in hand_instances(e.name, &hp).unwrap() {
            let verdict = match outcome {
                CheckOutcome::Pass { .. } => "pass",
                CheckOutcome::Vacuous { .. } => "vacuous",
                CheckOutcome::Fail { .. } => "FAIL",
            };
            println!("{:8} hand instance ({desc}): {verdict}", e.name);
        }
        // Then a seeded sweep of 100 randomized instances.
        let s = sweep_entry(e.name, 100, 7, &hp).unwrap();
        println!(
            "{:8} sweep: {} pass, {} vacuous, {} fail (vacuous fraction {:.0}%)",
            e.name,
            s.pass,
            s.vacuous,
            s.fail,
            100.0 * s.vacuous_fraction()
        );
        assert_eq!(s.fail, 0, "checker violated on {}", e.name);
    }
}
