//! Sequential composition and the two products.
//!
//! For relation triples A and B, the sequential composition A;B pairs each
//! x in A- with a table rho: A+ -> B-, relating ((x, rho), (u, w)) iff
//! A(x, u) and B(rho(u), w).  Its norm is the product of the factor norms
//! and its dual norm the minimum, while the ordinary product tops out at
//! the max of the norms.  The old product sits strictly between the two,
//! and canonical morphisms chain A;B -> old product -> product.
//!
//! Run with: cargo run --example sequential_composition

use gtcon::combinators::{old_product, oldprod_from_seq, prod_from_oldprod, product, seq_compose};
use gtcon::relation::neq;

fn main() {
    let a = neq(3);
    let b = neq(3);

    let pr = product(&a, &b).unwrap();
    let op = old_product(&a, &b).unwrap();
    let seq = seq_compose(&a, &b, 1_000_000).unwrap();

    println!("factor norms: {} and {}", a.norm().value.0, b.norm().value.0);
    println!("product:        norm = {} (the max)", pr.norm().value.0);
    println!("old product:    norm = {} (strictly between)", op.norm().value.0);
    println!(
        "sequential A;B: norm = {} (the product), minus side {} x {}",
        seq.relation.norm().value.0,
        seq.relation.minus_len(),
        seq.relation.plus_len()
    );
    println!(
        "dual norms all agree on the min: {} / {} / {}",
        pr.dual_norm().value.0,
        op.dual_norm().value.0,
        seq.relation.dual_norm().value.0
    );

    // The canonical two-leg chain, verified end to end by construction.
    let leg1 = oldprod_from_seq(&a, &b, 1_000_000).unwrap();
    let leg2 = prod_from_oldprod(&a, &b, 0, 0).unwrap();
    let composite = leg1.compose(&leg2).unwrap();
    println!(
        "chain A;B -> old product -> product composes: {} -> {}",
        composite.source().minus_len(),
        composite.target().minus_len()
    );
}
