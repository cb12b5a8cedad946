//! Norms of finite relation triples.
//!
//! A relation triple (A-, A+, A) is admissible when every element of A- is
//! related to something and no single element of A+ is related to
//! everything.  Its norm is the size of a smallest subset of A+ that covers
//! all of A-; the dual swaps the sides and complements the converse.
//!
//! Run with: cargo run --example norms

use gtcon::combinators::old_product;
use gtcon::relation::{eq, neq};

fn main() {
    // Inequality on three points: any two distinct columns cover all rows.
    let r = neq(3);
    let norm = r.norm();
    println!(
        "inequality on 3 points: norm = {} (witness cover {:?})",
        norm.value.0, norm.witness
    );

    // The dual of inequality is equality, whose only cover is everything.
    let dual = r.dual();
    println!(
        "its dual: norm = {} (covers need every column)",
        dual.norm().value.0
    );

    // Equality norms grow with the side; inequality norms stay at 2.
    for n in 2..=5 {
        println!(
            "n = {n}: norm(eq) = {}, norm(neq) = {}",
            eq(n).norm().value.0,
            neq(n).norm().value.0
        );
    }

    // The old product keeps the full cross on the minus side, so the norm
    // can exceed the max of the factors: here 3 instead of 2.
    let op = old_product(&r, &r).unwrap();
    println!(
        "old product of the 3-point inequality with itself: norm = {}",
        op.norm().value.0
    );
    println!("provenance: {}", op.provenance.as_deref().unwrap_or("-"));
}
