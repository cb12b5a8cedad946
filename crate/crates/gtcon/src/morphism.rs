//! Morphisms between finite relation triples.
//!
//! A morphism from A to B is a pair of maps (minus: B- -> A-, plus: A+ -> B+)
//! such that A(minus(b), a) implies B(b, plus(a)) for all b in B-, a in A+.
//! Construction verifies the condition eagerly; an unverified morphism value
//! cannot be obtained.

use crate::relation::FiniteRelation;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MorphismError {
    #[error("minus map has {got} entries but the target minus side has {expected}")]
    MinusMapLength { got: usize, expected: usize },
    #[error("plus map has {got} entries but the source plus side has {expected}")]
    PlusMapLength { got: usize, expected: usize },
    #[error("minus map entry {index} is {value}, out of range for the source minus side of size {bound}")]
    MinusMapRange { index: usize, value: usize, bound: usize },
    #[error("plus map entry {index} is {value}, out of range for the target plus side of size {bound}")]
    PlusMapRange { index: usize, value: usize, bound: usize },
    #[error("morphism condition fails at b={b}, a={a}")]
    ConditionFails { b: usize, a: usize },
    #[error("endpoint mismatch: first morphism's target differs from second morphism's source")]
    EndpointMismatch,
    #[error("search space of {size} map pairs exceeds the cap {cap}")]
    SearchCapExceeded { size: u128, cap: u128 },
    #[error("column set is not a cover of the source relation (row {row} uncovered)")]
    NotACover { row: usize },
}

/// Outcome of checking the morphism condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MorphismVerdict {
    Pass,
    /// Lexicographically least (b, a) with A(minus(b), a) true and
    /// B(b, plus(a)) false.
    Fail { b: usize, a: usize },
}

impl MorphismVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, MorphismVerdict::Pass)
    }
}

/// A verified generalized Galois-Tukey connection from `source` to `target`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteMorphism {
    source: FiniteRelation,
    target: FiniteRelation,
    minus_map: Vec<usize>,
    plus_map: Vec<usize>,
}

fn check_maps(
    minus_map: &[usize],
    plus_map: &[usize],
    source: &FiniteRelation,
    target: &FiniteRelation,
) -> Result<(), MorphismError> {
    if minus_map.len() != target.minus_len() {
        return Err(MorphismError::MinusMapLength {
            got: minus_map.len(),
            expected: target.minus_len(),
        });
    }
    if plus_map.len() != source.plus_len() {
        return Err(MorphismError::PlusMapLength {
            got: plus_map.len(),
            expected: source.plus_len(),
        });
    }
    for (i, &v) in minus_map.iter().enumerate() {
        if v >= source.minus_len() {
            return Err(MorphismError::MinusMapRange {
                index: i,
                value: v,
                bound: source.minus_len(),
            });
        }
    }
    for (i, &v) in plus_map.iter().enumerate() {
        if v >= target.plus_len() {
            return Err(MorphismError::PlusMapRange {
                index: i,
                value: v,
                bound: target.plus_len(),
            });
        }
    }
    Ok(())
}

/// Checks the morphism condition, returning the lexicographically least
/// counterexample on failure.
pub fn verify(
    minus_map: &[usize],
    plus_map: &[usize],
    source: &FiniteRelation,
    target: &FiniteRelation,
) -> Result<MorphismVerdict, MorphismError> {
    check_maps(minus_map, plus_map, source, target)?;
    for (b, &mb) in minus_map.iter().enumerate() {
        for (a, &pa) in plus_map.iter().enumerate() {
            if source.holds(mb, a) && !target.holds(b, pa) {
                return Ok(MorphismVerdict::Fail { b, a });
            }
        }
    }
    Ok(MorphismVerdict::Pass)
}

impl FiniteMorphism {
    pub fn new(
        source: FiniteRelation,
        target: FiniteRelation,
        minus_map: Vec<usize>,
        plus_map: Vec<usize>,
    ) -> Result<Self, MorphismError> {
        match verify(&minus_map, &plus_map, &source, &target)? {
            MorphismVerdict::Pass => Ok(FiniteMorphism {
                source,
                target,
                minus_map,
                plus_map,
            }),
            MorphismVerdict::Fail { b, a } => Err(MorphismError::ConditionFails { b, a }),
        }
    }

    pub fn identity(r: &FiniteRelation) -> Self {
        FiniteMorphism::new(
            r.clone(),
            r.clone(),
            (0..r.minus_len()).collect(),
            (0..r.plus_len()).collect(),
        )
        .expect("identity maps satisfy the morphism condition")
    }

    pub fn source(&self) -> &FiniteRelation {
        &self.source
    }

    pub fn target(&self) -> &FiniteRelation {
        &self.target
    }

    pub fn minus_map(&self) -> &[usize] {
        &self.minus_map
    }

    pub fn plus_map(&self) -> &[usize] {
        &self.plus_map
    }

    /// Categorical composition: self: A -> B, then other: B -> C.
    pub fn compose(&self, other: &FiniteMorphism) -> Result<FiniteMorphism, MorphismError> {
        if self.target != other.source {
            return Err(MorphismError::EndpointMismatch);
        }
        let minus_map = other.minus_map.iter().map(|&c| self.minus_map[c]).collect();
        let plus_map = self.plus_map.iter().map(|&a| other.plus_map[a]).collect();
        // Holds by composing the two implications; verified anyway by `new`.
        FiniteMorphism::new(self.source.clone(), other.target.clone(), minus_map, plus_map)
    }

    /// Interchanging the two components gives a morphism dual(target) ->
    /// dual(source).
    pub fn dualize(&self) -> FiniteMorphism {
        FiniteMorphism::new(
            self.target.dual(),
            self.source.dual(),
            self.plus_map.clone(),
            self.minus_map.clone(),
        )
        .expect("dual of a verified morphism is a verified morphism")
    }

    /// Pushes a cover of the source forward along the plus component.  The
    /// image covers the target and is no larger, which is how a morphism
    /// forces norm(source) >= norm(target).
    pub fn transport_cover(&self, cover: &[usize]) -> Result<Vec<usize>, MorphismError> {
        if let Some(row) = (0..self.source.minus_len())
            .find(|&r| !cover.iter().any(|&c| self.source.holds(r, c)))
        {
            return Err(MorphismError::NotACover { row });
        }
        let mut image: Vec<usize> = cover.iter().map(|&c| self.plus_map[c]).collect();
        image.sort_unstable();
        image.dedup();
        Ok(image)
    }
}

/// Size of the map search space for `search_morphism`.
pub fn search_space_size(source: &FiniteRelation, target: &FiniteRelation) -> u128 {
    let minus = (source.minus_len() as u128).pow(target.minus_len() as u32);
    let plus = (target.plus_len() as u128).pow(source.plus_len() as u32);
    minus.saturating_mul(plus)
}

/// Exhaustively searches for a morphism from `source` to `target`.  Maps are
/// enumerated lexicographically (minus map outer, plus map inner) and the
/// first passing pair is returned, so the result is deterministic.  Returns
/// `Ok(None)` when no morphism exists.
pub fn search_morphism(
    source: &FiniteRelation,
    target: &FiniteRelation,
    cap: u128,
) -> Result<Option<FiniteMorphism>, MorphismError> {
    let size = search_space_size(source, target);
    if size > cap {
        return Err(MorphismError::SearchCapExceeded { size, cap });
    }
    let mut minus_map = vec![0usize; target.minus_len()];
    loop {
        let mut plus_map = vec![0usize; source.plus_len()];
        loop {
            if verify(&minus_map, &plus_map, source, target)? == MorphismVerdict::Pass {
                return Ok(Some(
                    FiniteMorphism::new(
                        source.clone(),
                        target.clone(),
                        minus_map,
                        plus_map,
                    )
                    .expect("just verified"),
                ));
            }
            if !increment(&mut plus_map, target.plus_len()) {
                break;
            }
        }
        if !increment(&mut minus_map, source.minus_len()) {
            return Ok(None);
        }
    }
}

/// Lexicographic successor of a bounded index vector (last index fastest).
fn increment(v: &mut [usize], base: usize) -> bool {
    for slot in v.iter_mut().rev() {
        *slot += 1;
        if *slot < base {
            return true;
        }
        *slot = 0;
    }
    false
}
