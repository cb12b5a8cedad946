//! Property-based invariants for streams, relations, and morphisms.

use gtcon::morphism::search_morphism;
use gtcon::relation::FiniteRelation;
use gtcon::streams::decide::leq_star;
use gtcon::streams::UlpFunction;
use gtcon::sweeps::random_relation;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn small_ulp() -> impl Strategy<Value = UlpFunction> {
    (
        prop::collection::vec(0u64..50, 0..6),
        0u64..6,
        prop::collection::vec(0u64..50, 1..6),
    )
        .prop_map(|(prefix, increment, cycle)| {
            UlpFunction::new(prefix, increment, cycle).expect("nonempty cycle")
        })
}

proptest! {
    /// The defining law: past the prefix, values repeat with a per-cycle
    /// additive increment.
    #[test]
    fn ulp_law_holds_at_many_indices(f in small_ulp()) {
        let t = f.threshold();
        let p = f.period();
        let d = f.increment();
        for i in 0..1000u64 {
            let expected = if i < t {
                f.prefix()[i as usize]
            } else {
                let q = (i - t) / p;
                let r = (i - t) % p;
                f.cycle()[r as usize] + q * d
            };
            prop_assert_eq!(f.eval(i).unwrap(), expected, "index {}", i);
        }
    }

    #[test]
    fn eventual_domination_is_reflexive(f in small_ulp()) {
        let v = leq_star(&f, &f).unwrap();
        prop_assert!(v.answer);
        prop_assert!(v.is_exact());
    }

    #[test]
    fn eventual_domination_is_transitive(
        f in small_ulp(),
        g in small_ulp(),
        h in small_ulp(),
    ) {
        if leq_star(&f, &g).unwrap().answer && leq_star(&g, &h).unwrap().answer {
            prop_assert!(leq_star(&f, &h).unwrap().answer);
        }
    }

    /// Verdicts depend on the function, not on which of its presentations
    /// was supplied.
    #[test]
    fn re_presentation_does_not_change_verdicts(f in small_ulp(), g in small_ulp()) {
        let base = leq_star(&f, &g).unwrap();
        let fat = leq_star(&f.doubled_period().unwrap(), &g).unwrap();
        prop_assert_eq!(base.answer, fat.answer);
        prop_assert_eq!(base.is_exact(), fat.is_exact());
    }

    #[test]
    fn dual_is_an_involution(seed in 0u64..500) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = random_relation(&mut rng, 5);
        prop_assert_eq!(r.dual().dual(), r);
    }

    /// A morphism transports covers: pushing a minimum cover of the source
    /// through the plus map covers the target, so norms can only drop.
    #[test]
    fn morphisms_transport_covers(seed in 0u64..200) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a: FiniteRelation = random_relation(&mut rng, 3);
        let b: FiniteRelation = random_relation(&mut rng, 3);
        if let Some(m) = search_morphism(&a, &b, 1 << 40).unwrap() {
            let cover = a.norm().witness;
            let moved = m.transport_cover(&cover).unwrap();
            prop_assert!(b.is_cover(&moved));
            prop_assert!(a.norm().value >= b.norm().value);
            prop_assert!(a.dual_norm().value <= b.dual_norm().value);
        }
    }
}
