//! Command-line front door.
//!
//! Construction verbs (dual, product, oldprod, seqcomp) write a relation
//! file to standard output so they compose in pipelines; analysis verbs
//! (norm, verify, search, catalog, sweep) write a report object.  Human
//! summaries and wall-clock timing go to standard error, keeping standard
//! output byte-identical across runs for the same inputs, flags, and seed.
//!
//! Exit codes: 0 success, 1 a verdict failed (morphism check failed, no
//! morphism found, sweep violations, catalog FAIL outcomes), 2 usage or
//! validation error (bad arguments, file not found, schema violation,
//! search/size cap exceeded).

use clap::{Parser, Subcommand};
use gtcon::catalog;
use gtcon::combinators::{old_product, product, seq_compose};
use gtcon::io::{
    load_morphism_file, load_relation, relation_to_string, write_output, Report,
};
use gtcon::morphism::{search_morphism, verify, MorphismVerdict};
use gtcon::relation::FiniteRelation;
use gtcon::streams::HorizonParams;
use gtcon::sweeps;
use serde_json::json;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "gtcon",
    about = "Norms, morphisms, and combinators for finite relation triples",
    version
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Compute the exact norm (minimum cover size) of a relation.
    Norm {
        /// Relation file, or "-" for standard input.
        relation: String,
    },
    /// Emit the dual of a relation (sides swapped, complemented converse).
    Dual {
        relation: String,
        /// Output path ("-" for standard output).
        #[arg(short, long, default_value = "-")]
        output: String,
    },
    /// Emit the product of two relations (norm = max, dual norm = min).
    Product {
        left: String,
        right: String,
        #[arg(short, long, default_value = "-")]
        output: String,
    },
    /// Emit the old product of two relations (minus side is a full cross).
    Oldprod {
        left: String,
        right: String,
        #[arg(short, long, default_value = "-")]
        output: String,
    },
    /// Emit the sequential composition A;B (norm multiplies).
    Seqcomp {
        left: String,
        right: String,
        /// Refuse to build a minus side larger than this.
        #[arg(long, default_value_t = 1_000_000)]
        cap: u64,
        #[arg(short, long, default_value = "-")]
        output: String,
    },
    /// Check the morphism condition for a morphism file.
    Verify {
        /// Morphism file with source, target, minus_map, plus_map.
        morphism: String,
    },
    /// Exhaustively search for a morphism between two relations.
    Search {
        source: String,
        target: String,
        /// Refuse to enumerate a map space larger than this.
        #[arg(long, default_value_t = 100_000_000)]
        cap: u128,
    },
    /// Run a catalog entry's checker: hand instances plus a seeded sweep.
    /// Without an entry name, list the catalog.
    Catalog {
        /// Entry name (s_le_d, addcov, addb, maxmin, r3).
        entry: Option<String>,
        /// Number of randomized instances.
        #[arg(long, default_value_t = 100)]
        sweep: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Bounded-check horizon for instances without an exact window.
        #[arg(long, default_value_t = 10_000)]
        horizon: u64,
        /// Positive witnesses required before a bounded check passes.
        #[arg(long, default_value_t = 20)]
        witnesses: u64,
    },
    /// Run an invariant suite: prop2, product-laws, morphism-soundness,
    /// chain, or engulf-lemma.
    Sweep {
        suite: String,
        /// Largest side length for exhaustive enumeration.
        #[arg(long, default_value_t = 3)]
        max_side: usize,
        /// Randomized instances (pairs, or per direction for engulf-lemma).
        #[arg(long, default_value_t = 100)]
        n: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1_000_000)]
        cap: u64,
        #[arg(long, default_value_t = 10_000)]
        horizon: u64,
        #[arg(long, default_value_t = 20)]
        witnesses: u64,
    },
}

/// Anything that should terminate with exit 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let code = match run(cli.verb) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    eprintln!("elapsed: {} ms", start.elapsed().as_millis());
    ExitCode::from(code)
}

fn emit_relation(r: &FiniteRelation, output: &str) -> Result<(), UsageError> {
    let mut text = relation_to_string(r);
    text.push('\n');
    write_output(output, &text)?;
    eprintln!(
        "{}: {} x {} relation",
        r.provenance.as_deref().unwrap_or("relation"),
        r.minus_len(),
        r.plus_len()
    );
    Ok(())
}

fn emit_report(report: &Report) {
    println!("{}", report.to_string_pretty());
}

fn run(verb: Verb) -> Result<u8, UsageError> {
    match verb {
        Verb::Norm { relation } => {
            let r = load_relation(&relation)?;
            let norm = r.norm();
            let labels: Vec<&str> = norm
                .witness
                .iter()
                .map(|&i| r.plus_labels()[i].as_str())
                .collect();
            let mut report = Report::new("norm", vec![relation]);
            report.result = json!({ "norm": norm.value.0 });
            report.witness = json!({ "cover": norm.witness, "labels": labels });
            emit_report(&report);
            eprintln!("norm = {} with witness cover {:?}", norm.value.0, norm.witness);
            Ok(0)
        }
        Verb::Dual { relation, output } => {
            let r = load_relation(&relation)?;
            let name = r.provenance.clone().unwrap_or(relation);
            let d = r.dual().with_provenance(format!("dual({name})"));
            emit_relation(&d, &output)?;
            Ok(0)
        }
        Verb::Product { left, right, output } => {
            let (a, b) = (load_relation(&left)?, load_relation(&right)?);
            emit_relation(&product(&a, &b)?, &output)?;
            Ok(0)
        }
        Verb::Oldprod { left, right, output } => {
            let (a, b) = (load_relation(&left)?, load_relation(&right)?);
            emit_relation(&old_product(&a, &b)?, &output)?;
            Ok(0)
        }
        Verb::Seqcomp { left, right, cap, output } => {
            let (a, b) = (load_relation(&left)?, load_relation(&right)?);
            emit_relation(&seq_compose(&a, &b, cap)?.relation, &output)?;
            Ok(0)
        }
        Verb::Verify { morphism } => {
            let (file, base) = load_morphism_file(&morphism)?;
            let source = file.source.resolve(&base)?;
            let target = file.target.resolve(&base)?;
            let verdict = verify(&file.minus_map, &file.plus_map, &source, &target)?;
            let mut report = Report::new("verify", vec![morphism]);
            let code = match verdict {
                MorphismVerdict::Pass => {
                    report.result = json!("pass");
                    eprintln!("morphism condition holds");
                    0
                }
                MorphismVerdict::Fail { b, a } => {
                    report.result = json!("fail");
                    report.witness = json!({ "b": b, "a": a });
                    eprintln!("morphism condition fails at (b={b}, a={a})");
                    1
                }
            };
            emit_report(&report);
            Ok(code)
        }
        Verb::Search { source, target, cap } => {
            let s = load_relation(&source)?;
            let t = load_relation(&target)?;
            let found = search_morphism(&s, &t, cap)?;
            let mut report = Report::new("search", vec![source, target]);
            let code = match &found {
                Some(m) => {
                    report.result = json!("found");
                    report.witness = json!({
                        "minus_map": m.minus_map(),
                        "plus_map": m.plus_map(),
                    });
                    eprintln!(
                        "morphism found: minus_map {:?}, plus_map {:?}",
                        m.minus_map(),
                        m.plus_map()
                    );
                    0
                }
                None => {
                    report.result = json!("none");
                    eprintln!("no morphism exists");
                    1
                }
            };
            emit_report(&report);
            Ok(code)
        }
        Verb::Catalog { entry: None, .. } => {
            let entries: Vec<_> = catalog::entries()
                .into_iter()
                .map(|e| {
                    json!({
                        "name": e.name,
                        "source": e.source,
                        "target": e.target,
                        "inequality": e.inequality,
                        "description": e.description,
                    })
                })
                .collect();
            let mut report = Report::new("catalog", vec![]);
            report.result = json!(entries);
            emit_report(&report);
            eprintln!("{} catalog entries", entries.len());
            Ok(0)
        }
        Verb::Catalog { entry: Some(entry), sweep, seed, horizon, witnesses } => {
            let hp = HorizonParams { horizon, min_witnesses: witnesses };
            let hand = catalog::hand_instances(&entry, &hp)?;
            let summary = catalog::sweep_entry(&entry, sweep, seed, &hp)?;
            let hand_failed = hand.iter().any(|(_, o)| o.is_fail());
            let hand_json: Vec<_> = hand
                .iter()
                .map(|(desc, outcome)| json!({ "instance": desc, "outcome": outcome }))
                .collect();
            let mut report = Report::new("catalog", vec![entry.clone()]);
            report.result = json!({
                "entry": summary.entry,
                "hand_instances": hand_json,
                "sweep": {
                    "instances": summary.instances,
                    "pass": summary.pass,
                    "vacuous": summary.vacuous,
                    "fail": summary.fail,
                },
            });
            report.witness = json!(summary.failures);
            report.mode = Some(format!("horizon(h={horizon},k={witnesses})"));
            report.seed = Some(seed);
            emit_report(&report);
            eprintln!(
                "{entry}: hand {}/{} pass; sweep pass {} vacuous {} fail {}",
                hand.len() - hand.iter().filter(|(_, o)| o.is_fail()).count(),
                hand.len(),
                summary.pass,
                summary.vacuous,
                summary.fail
            );
            Ok(u8::from(hand_failed || summary.fail > 0))
        }
        Verb::Sweep { suite, max_side, n, seed, cap, horizon, witnesses } => {
            let hp = HorizonParams { horizon, min_witnesses: witnesses };
            let result = match suite.as_str() {
                "prop2" => sweeps::prop2_sweep(max_side, cap)?,
                "product-laws" => {
                    sweeps::product_law_sweep(max_side, n, max_side.max(1), seed)?
                }
                "morphism-soundness" => {
                    sweeps::morphism_soundness_sweep(max_side, cap as u128)?
                }
                "chain" => sweeps::chain_sweep(n, seed, cap)?,
                "engulf-lemma" => sweeps::engulf_lemma_sweep(n, seed, &hp)?,
                other => {
                    return Err(UsageError(format!(
                        "unknown sweep suite {other:?} (expected prop2, product-laws, \
                         morphism-soundness, chain, or engulf-lemma)"
                    )))
                }
            };
            let mut report = Report::new("sweep", vec![suite]);
            report.result = json!({
                "suite": result.suite,
                "checked": result.checked,
                "violations": result.violations,
            });
            report.witness = json!(result.notes);
            report.seed = result.seed;
            emit_report(&report);
            eprintln!(
                "{}: {} checked, {} violations",
                result.suite, result.checked, result.violations
            );
            Ok(u8::from(!result.passed()))
        }
    }
}
