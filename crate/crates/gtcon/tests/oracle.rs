//! Cross-checks the branch-and-bound norm against an independent oracle:
//! exhaustive enumeration of all column subsets.

use gtcon::relation::{eq, neq, FiniteRelation};
use gtcon::sweeps::{enumerate_admissible, random_relation};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Minimum cover size by trying every one of the 2^plus subsets.
fn brute_norm(r: &FiniteRelation) -> u64 {
    let m = r.plus_len();
    let n = r.minus_len();
    let mut best = u32::MAX;
    for mask in 0u32..(1 << m) {
        if mask.count_ones() >= best {
            continue;
        }
        let covered = (0..n).all(|x| (0..m).any(|z| mask & (1 << z) != 0 && r.holds(x, z)));
        if covered {
            best = mask.count_ones();
        }
    }
    u64::from(best)
}

#[test]
fn norm_matches_brute_force_on_all_small_relations() {
    for r in enumerate_admissible(3) {
        let norm = r.norm();
        assert_eq!(norm.value.0, brute_norm(&r), "{r:?}");
        assert!(r.is_cover(&norm.witness), "{r:?}");
        assert_eq!(norm.witness.len() as u64, norm.value.0);
    }
}

#[test]
fn norm_matches_brute_force_on_random_relations() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let r = random_relation(&mut rng, 6);
        let norm = r.norm();
        assert_eq!(norm.value.0, brute_norm(&r), "{r:?}");
        assert!(r.is_cover(&norm.witness));
    }
}

#[test]
fn dual_norm_is_norm_of_dual() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..100 {
        let r = random_relation(&mut rng, 5);
        assert_eq!(r.dual_norm().value, r.dual().norm().value);
    }
}

#[test]
fn fixed_instances_have_known_norms() {
    // Inequality on n points: any two distinct columns cover everything.
    assert_eq!(neq(3).norm().value.0, 2);
    assert_eq!(neq(5).norm().value.0, 2);
    // Equality on n points: only the full column set covers.
    assert_eq!(eq(2).norm().value.0, 2);
    assert_eq!(eq(4).norm().value.0, 4);
    // Duals swap the roles.
    assert_eq!(neq(3).dual_norm().value.0, 3);
    assert_eq!(eq(4).dual_norm().value.0, 2);
}
