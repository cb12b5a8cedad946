//! Verifying and searching for morphisms between relation triples.
//!
//! A morphism from A to B is a pair of maps (minus: B- -> A-,
//! plus: A+ -> B+) such that A(minus(b), a) implies B(b, plus(a)).  Its
//! existence forces norm(A) >= norm(B) and the reverse inequality on dual
//! norms, which the example demonstrates by transporting a minimum cover.
//!
//! Run with: cargo run --example morphism_search

use gtcon::morphism::{search_morphism, verify, MorphismVerdict};
use gtcon::relation::{eq, neq};

fn main() {
    let source = eq(2);
    let target = neq(3);

    // Hand-checked morphism: the minus map folds three points onto two, the
    // plus map must send each point to something it differs from.
    let verdict = verify(&[0, 1, 0], &[1, 0], &source, &target).unwrap();
    println!("hand-written maps: {verdict:?}");
    assert_eq!(verdict, MorphismVerdict::Pass);

    // Flipping the plus map breaks the implication, and the verifier
    // reports the least counterexample pair.
    let verdict = verify(&[0, 1, 0], &[0, 1], &source, &target).unwrap();
    println!("flipped plus map: {verdict:?}");

    // Exhaustive search finds the lexicographically least passing pair.
    let found = search_morphism(&source, &target, 1 << 30).unwrap().unwrap();
    println!(
        "search found: minus_map {:?}, plus_map {:?}",
        found.minus_map(),
        found.plus_map()
    );

    // Transport: a cover of the source pushes forward to a cover of the
    // target, which is why the norm can only drop along a morphism.
    let cover = source.norm().witness;
    let moved = found.transport_cover(&cover).unwrap();
    println!("cover {cover:?} of the source transports to {moved:?} of the target");
    assert!(target.is_cover(&moved));

    // Dual norms obstruct some directions outright: a morphism from the
    // 3-point inequality (dual norm 3) to the 2-point one (dual norm 2)
    // would need 3 <= 2.  Searching the full space confirms none exists.
    let none = search_morphism(&neq(3), &neq(2), 1 << 30).unwrap();
    println!(
        "morphism from 3-point inequality to 2-point inequality: {}",
        if none.is_some() { "found" } else { "none" }
    );
}
