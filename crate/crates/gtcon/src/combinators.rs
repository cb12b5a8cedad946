//! Product, old product, and sequential composition of finite relations,
//! plus the currying adapter and the morphism chain
//! A;B -> old_product(A,B) -> product(A,B).

use crate::morphism::{FiniteMorphism, MorphismError};
use crate::relation::{FiniteRelation, RelationError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default bound on the minus side of a sequential composition.
pub const DEFAULT_CAP: u64 = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CombinatorError {
    #[error("sequential composition would have {size} minus-side elements, over the cap {cap}")]
    CapExceeded { size: u128, cap: u64 },
    #[error("basepoint {name} = {value} out of range ({bound} elements)")]
    BasepointRange { name: &'static str, value: usize, bound: usize },
    #[error("{map} map entry {index:?} is {value}, out of range ({bound})")]
    MapRange { map: &'static str, index: Vec<usize>, value: usize, bound: usize },
    #[error("{map} map has wrong shape")]
    MapShape { map: &'static str },
    #[error("combinator produced an inadmissible relation: {0}")]
    Inadmissible(#[from] RelationError),
    #[error(transparent)]
    Morphism(#[from] MorphismError),
}

/// An explicit finite function A+ -> B-, one element of the exponential
/// component of a sequential composition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionTable {
    pub domain_size: usize,
    pub codomain_size: usize,
    pub values: Vec<usize>,
}

impl FunctionTable {
    pub fn new(domain_size: usize, codomain_size: usize, values: Vec<usize>) -> Result<Self, CombinatorError> {
        if values.len() != domain_size {
            return Err(CombinatorError::MapShape { map: "function table" });
        }
        for (i, &v) in values.iter().enumerate() {
            if v >= codomain_size {
                return Err(CombinatorError::MapRange {
                    map: "function table",
                    index: vec![i],
                    value: v,
                    bound: codomain_size,
                });
            }
        }
        Ok(FunctionTable { domain_size, codomain_size, values })
    }

    pub fn constant(domain_size: usize, codomain_size: usize, value: usize) -> Result<Self, CombinatorError> {
        FunctionTable::new(domain_size, codomain_size, vec![value; domain_size])
    }

    pub fn apply(&self, u: usize) -> usize {
        self.values[u]
    }

    /// Rank of this table in the lexicographic enumeration of all tables
    /// with the same domain and codomain (index 0 most significant).
    pub fn lex_rank(&self) -> usize {
        self.values
            .iter()
            .fold(0, |acc, &v| acc * self.codomain_size + v)
    }

    /// Inverse of `lex_rank`.
    pub fn from_lex_rank(domain_size: usize, codomain_size: usize, mut rank: usize) -> Self {
        let mut values = vec![0; domain_size];
        for slot in values.iter_mut().rev() {
            *slot = rank % codomain_size;
            rank /= codomain_size;
        }
        FunctionTable { domain_size, codomain_size, values }
    }

    fn label(&self) -> String {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        format!("[{}]", parts.join(","))
    }
}

/// All function tables A+ -> B- in lexicographic order.
pub fn enumerate_tables(domain_size: usize, codomain_size: usize) -> Vec<FunctionTable> {
    let count = (codomain_size as u128).pow(domain_size as u32);
    (0..count)
        .map(|r| FunctionTable::from_lex_rank(domain_size, codomain_size, r as usize))
        .collect()
}

fn pair_label(a: &str, b: &str) -> String {
    format!("({a}|{b})")
}

/// Categorical product: C- = A- disjoint-union B- (tagged "L:"/"R:"),
/// C+ = A+ x B+, related when the A or B component relates.
/// norm = max of the factor norms, dual norm = min of the dual norms.
pub fn product(a: &FiniteRelation, b: &FiniteRelation) -> Result<FiniteRelation, CombinatorError> {
    let minus: Vec<String> = a
        .minus_labels()
        .iter()
        .map(|l| format!("L:{l}"))
        .chain(b.minus_labels().iter().map(|l| format!("R:{l}")))
        .collect();
    let mut plus = Vec::new();
    for la in a.plus_labels() {
        for lb in b.plus_labels() {
            plus.push(pair_label(la, lb));
        }
    }
    let mut matrix = Vec::with_capacity(minus.len());
    for x in 0..a.minus_len() {
        let mut row = Vec::with_capacity(plus.len());
        for u in 0..a.plus_len() {
            for _w in 0..b.plus_len() {
                row.push(a.holds(x, u));
            }
        }
        matrix.push(row);
    }
    for y in 0..b.minus_len() {
        let mut row = Vec::with_capacity(plus.len());
        for _u in 0..a.plus_len() {
            for w in 0..b.plus_len() {
                row.push(b.holds(y, w));
            }
        }
        matrix.push(row);
    }
    Ok(FiniteRelation::new(minus, plus, matrix)?.with_provenance(provenance("product", a, b)))
}

/// Old product: C- = A- x B-, C+ = A+ x B+, related when both components
/// relate.  dual norm = min of dual norms; norm lies between max and product
/// of the factor norms, with (3,3,!=) witnessing both bounds strict.
pub fn old_product(a: &FiniteRelation, b: &FiniteRelation) -> Result<FiniteRelation, CombinatorError> {
    let mut minus = Vec::new();
    for la in a.minus_labels() {
        for lb in b.minus_labels() {
            minus.push(pair_label(la, lb));
        }
    }
    let mut plus = Vec::new();
    for la in a.plus_labels() {
        for lb in b.plus_labels() {
            plus.push(pair_label(la, lb));
        }
    }
    let mut matrix = Vec::with_capacity(minus.len());
    for x in 0..a.minus_len() {
        for y in 0..b.minus_len() {
            let mut row = Vec::with_capacity(plus.len());
            for u in 0..a.plus_len() {
                for w in 0..b.plus_len() {
                    row.push(a.holds(x, u) && b.holds(y, w));
                }
            }
            matrix.push(row);
        }
    }
    Ok(FiniteRelation::new(minus, plus, matrix)?.with_provenance(provenance("old_product", a, b)))
}

/// A sequential composition A;B together with its factor bookkeeping.
/// The minus side is A- x (tables A+ -> B-), x-index major, tables in
/// lexicographic order; the plus side is A+ x B+.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeqComposition {
    pub relation: FiniteRelation,
    pub a_minus: usize,
    pub a_plus: usize,
    pub b_minus: usize,
    pub b_plus: usize,
}

impl SeqComposition {
    pub fn table_count(&self) -> usize {
        (self.b_minus as u128).pow(self.a_plus as u32) as usize
    }

    /// Minus-side index of the pair (x, table).
    pub fn minus_index(&self, x: usize, table: &FunctionTable) -> usize {
        x * self.table_count() + table.lex_rank()
    }

    /// Inverse of `minus_index`.
    pub fn minus_pair(&self, index: usize) -> (usize, FunctionTable) {
        let tc = self.table_count();
        (
            index / tc,
            FunctionTable::from_lex_rank(self.a_plus, self.b_minus, index % tc),
        )
    }

    /// Plus-side index of the pair (u, w).
    pub fn plus_index(&self, u: usize, w: usize) -> usize {
        u * self.b_plus + w
    }

    pub fn plus_pair(&self, index: usize) -> (usize, usize) {
        (index / self.b_plus, index % self.b_plus)
    }
}

/// Sequential composition A;B: related at ((x, rho), (u, w)) iff A(x, u) and
/// B(rho(u), w).  Norm = norm(A) * norm(B) and dual norm = min of the dual
/// norms (both scale facts are checked exhaustively in the sweeps).
pub fn seq_compose(
    a: &FiniteRelation,
    b: &FiniteRelation,
    cap: u64,
) -> Result<SeqComposition, CombinatorError> {
    let tables_size = (b.minus_len() as u128).pow(a.plus_len() as u32);
    let minus_size = tables_size * a.minus_len() as u128;
    if minus_size > cap as u128 {
        return Err(CombinatorError::CapExceeded { size: minus_size, cap });
    }
    let tables = enumerate_tables(a.plus_len(), b.minus_len());
    let mut minus = Vec::with_capacity(minus_size as usize);
    let mut matrix = Vec::with_capacity(minus_size as usize);
    let plus_len = a.plus_len() * b.plus_len();
    for (x, lx) in a.minus_labels().iter().enumerate() {
        for rho in &tables {
            minus.push(pair_label(lx, &rho.label()));
            let mut row = Vec::with_capacity(plus_len);
            for u in 0..a.plus_len() {
                for w in 0..b.plus_len() {
                    row.push(a.holds(x, u) && b.holds(rho.apply(u), w));
                }
            }
            matrix.push(row);
        }
    }
    let mut plus = Vec::with_capacity(plus_len);
    for lu in a.plus_labels() {
        for lw in b.plus_labels() {
            plus.push(pair_label(lu, lw));
        }
    }
    let relation =
        FiniteRelation::new(minus, plus, matrix)?.with_provenance(provenance("seq_compose", a, b));
    Ok(SeqComposition {
        relation,
        a_minus: a.minus_len(),
        a_plus: a.plus_len(),
        b_minus: b.minus_len(),
        b_plus: b.plus_len(),
    })
}

fn provenance(op: &str, a: &FiniteRelation, b: &FiniteRelation) -> String {
    let name = |r: &FiniteRelation| {
        r.provenance
            .clone()
            .unwrap_or_else(|| format!("{}x{}", r.minus_len(), r.plus_len()))
    };
    format!("{op}({}, {})", name(a), name(b))
}

/// Curries a max-min triple (alpha: C- -> A-, beta: C- x A+ -> B-,
/// gamma: A+ x B+ -> C+) into a morphism A;B -> C.  On failure of the key
/// property, the error carries the violating (c, (u, w)).
#[allow(clippy::too_many_arguments)]
pub fn curry_triple(
    alpha: &[usize],
    beta: &[Vec<usize>],
    gamma: &[Vec<usize>],
    a: &FiniteRelation,
    b: &FiniteRelation,
    c: &FiniteRelation,
    cap: u64,
) -> Result<FiniteMorphism, CombinatorError> {
    let seq = seq_compose(a, b, cap)?;
    if alpha.len() != c.minus_len() {
        return Err(CombinatorError::MapShape { map: "alpha" });
    }
    for (i, &v) in alpha.iter().enumerate() {
        if v >= a.minus_len() {
            return Err(CombinatorError::MapRange {
                map: "alpha",
                index: vec![i],
                value: v,
                bound: a.minus_len(),
            });
        }
    }
    if beta.len() != c.minus_len() || beta.iter().any(|row| row.len() != a.plus_len()) {
        return Err(CombinatorError::MapShape { map: "beta" });
    }
    for (i, row) in beta.iter().enumerate() {
        for (u, &v) in row.iter().enumerate() {
            if v >= b.minus_len() {
                return Err(CombinatorError::MapRange {
                    map: "beta",
                    index: vec![i, u],
                    value: v,
                    bound: b.minus_len(),
                });
            }
        }
    }
    if gamma.len() != a.plus_len() || gamma.iter().any(|row| row.len() != b.plus_len()) {
        return Err(CombinatorError::MapShape { map: "gamma" });
    }
    for (u, row) in gamma.iter().enumerate() {
        for (w, &v) in row.iter().enumerate() {
            if v >= c.plus_len() {
                return Err(CombinatorError::MapRange {
                    map: "gamma",
                    index: vec![u, w],
                    value: v,
                    bound: c.plus_len(),
                });
            }
        }
    }
    let minus_map: Vec<usize> = (0..c.minus_len())
        .map(|ci| {
            let rho = FunctionTable::new(a.plus_len(), b.minus_len(), beta[ci].clone())
                .expect("beta row validated above");
            seq.minus_index(alpha[ci], &rho)
        })
        .collect();
    let mut plus_map = vec![0; a.plus_len() * b.plus_len()];
    for u in 0..a.plus_len() {
        for w in 0..b.plus_len() {
            plus_map[seq.plus_index(u, w)] = gamma[u][w];
        }
    }
    // A failing key property surfaces as the seq-side counterexample
    // (c, (u, w)).
    Ok(FiniteMorphism::new(seq.relation, c.clone(), minus_map, plus_map)?)
}

/// Recovers (alpha, beta) from the minus component of a morphism out of a
/// sequential composition (the uncurrying direction of the adjunction).
pub fn uncurry_minus(seq: &SeqComposition, morphism: &FiniteMorphism) -> (Vec<usize>, Vec<Vec<usize>>) {
    let mut alpha = Vec::new();
    let mut beta = Vec::new();
    for &idx in morphism.minus_map() {
        let (x, rho) = seq.minus_pair(idx);
        alpha.push(x);
        beta.push(rho.values);
    }
    (alpha, beta)
}

/// The morphism A;B -> old_product(A, B): plus component is the identity on
/// A+ x B+, minus component sends (x, y) to (x, constant-y table).
pub fn oldprod_from_seq(
    a: &FiniteRelation,
    b: &FiniteRelation,
    cap: u64,
) -> Result<FiniteMorphism, CombinatorError> {
    let seq = seq_compose(a, b, cap)?;
    let op = old_product(a, b)?;
    let mut minus_map = Vec::with_capacity(op.minus_len());
    for x in 0..a.minus_len() {
        for y in 0..b.minus_len() {
            let rho = FunctionTable::constant(a.plus_len(), b.minus_len(), y)?;
            minus_map.push(seq.minus_index(x, &rho));
        }
    }
    let plus_map = (0..op.plus_len()).collect();
    Ok(FiniteMorphism::new(seq.relation, op, minus_map, plus_map)?)
}

/// The morphism old_product(A, B) -> product(A, B): plus component identity,
/// minus component fills in the basepoints (a0, b0).
pub fn prod_from_oldprod(
    a: &FiniteRelation,
    b: &FiniteRelation,
    a0: usize,
    b0: usize,
) -> Result<FiniteMorphism, CombinatorError> {
    if a0 >= a.minus_len() {
        return Err(CombinatorError::BasepointRange { name: "a0", value: a0, bound: a.minus_len() });
    }
    if b0 >= b.minus_len() {
        return Err(CombinatorError::BasepointRange { name: "b0", value: b0, bound: b.minus_len() });
    }
    let op = old_product(a, b)?;
    let pr = product(a, b)?;
    let mut minus_map = Vec::with_capacity(pr.minus_len());
    for x in 0..a.minus_len() {
        minus_map.push(x * b.minus_len() + b0);
    }
    for y in 0..b.minus_len() {
        minus_map.push(a0 * b.minus_len() + y);
    }
    let plus_map = (0..op.plus_len()).collect();
    Ok(FiniteMorphism::new(op, pr, minus_map, plus_map)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphism::verify;
    use crate::relation::{eq, neq, Cardinal};

    #[test]
    fn oldprod_neq3_norm_is_3() {
        let r = neq(3);
        let op = old_product(&r, &r).unwrap();
        assert_eq!(op.norm().value, Cardinal(3));
        assert_eq!(r.norm().value, Cardinal(2));
    }

    #[test]
    fn product_eq2_eq2_shape_and_norm() {
        let p = product(&eq(2), &eq(2)).unwrap();
        assert_eq!(p.minus_len(), 4);
        assert_eq!(p.plus_len(), 4);
        assert_eq!(p.norm().value, Cardinal(2));
        assert_eq!(p.dual_norm().value, Cardinal(2));
    }

    #[test]
    fn seq_eq2_eq2_norms() {
        let seq = seq_compose(&eq(2), &eq(2), DEFAULT_CAP).unwrap();
        assert_eq!(seq.relation.minus_len(), 8);
        assert_eq!(seq.relation.plus_len(), 4);
        assert_eq!(seq.relation.norm().value, Cardinal(4));
        assert_eq!(seq.relation.dual_norm().value, Cardinal(2));
    }

    #[test]
    fn seq_cap_enforced() {
        let err = seq_compose(&eq(2), &eq(2), 7).unwrap_err();
        assert!(matches!(err, CombinatorError::CapExceeded { size: 8, cap: 7 }));
    }

    #[test]
    fn table_enumeration_is_lexicographic() {
        let tables = enumerate_tables(2, 2);
        let values: Vec<Vec<usize>> = tables.iter().map(|t| t.values.clone()).collect();
        assert_eq!(values, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        for (i, t) in tables.iter().enumerate() {
            assert_eq!(t.lex_rank(), i);
        }
    }

    #[test]
    fn chain_morphisms_pass_for_eq2() {
        let a = eq(2);
        let b = eq(2);
        let m1 = oldprod_from_seq(&a, &b, DEFAULT_CAP).unwrap();
        let m2 = prod_from_oldprod(&a, &b, 0, 0).unwrap();
        // plus components are identities
        assert!(m1.plus_map().iter().enumerate().all(|(i, &v)| i == v));
        assert!(m2.plus_map().iter().enumerate().all(|(i, &v)| i == v));
        let composite = m1.compose(&m2).unwrap();
        assert!(verify(
            composite.minus_map(),
            composite.plus_map(),
            composite.source(),
            composite.target()
        )
        .unwrap()
        .passed());
    }

    #[test]
    fn prod_from_oldprod_any_basepoint() {
        let a = neq(3);
        let b = eq(2);
        for a0 in 0..3 {
            for b0 in 0..2 {
                prod_from_oldprod(&a, &b, a0, b0).unwrap();
            }
        }
        let err = prod_from_oldprod(&a, &b, 3, 0).unwrap_err();
        assert!(matches!(err, CombinatorError::BasepointRange { name: "a0", .. }));
    }

    #[test]
    fn curry_triple_eq2_example_fails_with_witness() {
        // alpha constant 0, beta(c, u) = u, gamma(u, w) = w.  Brute force over
        // the 2*2*2 triples shows the key property fails first at c = 1 with
        // (u, w) = (0, 0).
        let a = eq(2);
        let err = curry_triple(
            &[0, 0],
            &[vec![0, 1], vec![0, 1]],
            &[vec![0, 1], vec![0, 1]],
            &a,
            &a,
            &a,
            DEFAULT_CAP,
        )
        .unwrap_err();
        match err {
            CombinatorError::Morphism(MorphismError::ConditionFails { b, a }) => {
                assert_eq!((b, a), (1, 0));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn curry_uncurry_round_trip() {
        let a = eq(2);
        let b = eq(2);
        let seq = seq_compose(&a, &b, DEFAULT_CAP).unwrap();
        let m = oldprod_from_seq(&a, &b, DEFAULT_CAP).unwrap();
        let (alpha, beta) = uncurry_minus(&seq, &m);
        let c = m.target().clone();
        let mut gamma = vec![vec![0; b.plus_len()]; a.plus_len()];
        for u in 0..a.plus_len() {
            for w in 0..b.plus_len() {
                gamma[u][w] = m.plus_map()[seq.plus_index(u, w)];
            }
        }
        let rebuilt = curry_triple(&alpha, &beta, &gamma, &a, &b, &c, DEFAULT_CAP).unwrap();
        assert_eq!(rebuilt, m);
    }
}
