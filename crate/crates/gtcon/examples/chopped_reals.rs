//! Exact decisions about infinite streams and chopped reals.
//!
//! Streams and interval partitions are presented as ultimately linear
//! periodic (ULP) functions: a finite prefix, then a repeating cycle with a
//! constant per-cycle increment.  On such presentations the library decides
//! eventual domination, matching, and engulfing exactly, with finite
//! witnesses; for partitions that grow too fast it falls back to a bounded
//! check that is refutation-complete.
//!
//! Run with: cargo run --example chopped_reals

use gtcon::streams::decide::{engulfs, leq_star, matches, non_engulf_witness};
use gtcon::streams::{
    chop_after, ChoppedReal, HorizonParams, IntervalPartition, Partition, UlpFunction,
};

fn main() {
    let hp = HorizonParams::default();

    // f(n) = 2n against g(n) = n + 10: domination fails from 11 on, and the
    // verdict carries the whole arithmetic progression of violations.
    let f = UlpFunction::new(vec![0], 2, vec![2]).unwrap();
    let g = UlpFunction::new(vec![], 1, vec![10]).unwrap();
    let v = leq_star(&f, &g).unwrap();
    println!("2n eventually below n+10? {} ({:?})", v.answer, v.witness);
    let v = leq_star(&g, &f).unwrap();
    println!("n+10 eventually below 2n? {} ({:?})", v.answer, v.witness);

    // A chopped real: an alternating 0/1 stream cut into length-3 blocks.
    let stream = UlpFunction::new(vec![], 0, vec![0, 1]).unwrap();
    let gaps = Partition::Ulp(IntervalPartition::new(UlpFunction::constant(3)).unwrap());
    let big = ChoppedReal::new(stream.clone(), gaps).unwrap();

    // The stream itself matches its chopped version on every block.
    let v = matches(&stream, &big, &hp).unwrap();
    println!("stream matches its own chop? {} (exact: {})", v.answer, v.is_exact());

    // Chopping the same stream into singletons is engulfed by the coarser
    // chop: every length-3 block fully contains a singleton block.
    let small = ChoppedReal::new(stream, Partition::Ulp(IntervalPartition::singletons())).unwrap();
    let v = engulfs(&big, &small, &hp).unwrap();
    println!("coarse chop engulfs the singleton chop? {}", v.answer);

    // When engulfing fails, a separating stream exists: it matches the
    // first chopped real on infinitely many blocks but agrees with the
    // second only finitely often.  Both verdicts below are exact.
    let other_stream = UlpFunction::new(vec![], 0, vec![1, 1, 0]).unwrap();
    let other = ChoppedReal::new(
        other_stream,
        Partition::Ulp(IntervalPartition::new(UlpFunction::constant(5)).unwrap()),
    )
    .unwrap();
    if !engulfs(&big, &other, &hp).unwrap().answer {
        let y = non_engulf_witness(&big, &other).unwrap();
        let hit = matches(&y, &big, &hp).unwrap();
        let miss = matches(&y, &other, &hp).unwrap();
        println!(
            "separating stream: matches the first? {} -- matches the second? {}",
            hit.answer, miss.answer
        );
    }

    // Partitions can also be defined by recurrences from a growth function;
    // for slowly growing f the result collapses back to a ULP presentation.
    let part = chop_after(&UlpFunction::new(vec![], 1, vec![2]).unwrap()).unwrap();
    println!(
        "chop partition of f(n) = n + 2: endpoints {:?} ...",
        part.endpoints_through(12).unwrap()
    );
}
