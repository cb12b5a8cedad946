//! Finite relation triples with exact norms.
//!
//! A [`FiniteRelation`] is a triple (A-, A+, A): two labeled index sets and a
//! boolean matrix, with the admissibility requirements that every row has a
//! true entry and no column is all-true.  Those requirements make both the
//! norm (minimum set cover of the rows by columns) and the norm of the dual
//! well defined and at least 2.

use crate::cover::{min_cover, Bits};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RelationError {
    #[error("matrix has {got} rows but {expected} minus labels")]
    RowCountMismatch { got: usize, expected: usize },
    #[error("row {row} has {got} entries but there are {expected} plus labels")]
    RowWidthMismatch { row: usize, got: usize, expected: usize },
    #[error("the {side} side is empty")]
    EmptySide { side: &'static str },
    #[error("duplicate label {label:?} on the {side} side")]
    DuplicateLabel { side: &'static str, label: String },
    #[error("row {row} ({label:?}) is related to nothing, so the norm would be undefined")]
    EmptyRow { row: usize, label: String },
    #[error("column {col} ({label:?}) is related to every row, so the dual norm would be undefined")]
    AllTrueColumn { col: usize, label: String },
}

/// A finite cardinal; norms of admissible relations are always >= 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cardinal(pub u64);

impl std::fmt::Display for Cardinal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FiniteRelation {
    minus_labels: Vec<String>,
    plus_labels: Vec<String>,
    matrix: Vec<Vec<bool>>,
    /// Names the combinator and factors for constructed relations.
    pub provenance: Option<String>,
}

/// Equality ignores provenance: two relations are the same object when they
/// have the same labels and the same matrix.
impl PartialEq for FiniteRelation {
    fn eq(&self, other: &Self) -> bool {
        self.minus_labels == other.minus_labels
            && self.plus_labels == other.plus_labels
            && self.matrix == other.matrix
    }
}
impl Eq for FiniteRelation {}

/// The exact norm together with one minimum-size witness cover.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormResult {
    pub value: Cardinal,
    /// Column indices of a cover of minimum size.
    pub witness: Vec<usize>,
}

impl FiniteRelation {
    /// Validating constructor enforcing admissibility.
    pub fn new(
        minus_labels: Vec<String>,
        plus_labels: Vec<String>,
        matrix: Vec<Vec<bool>>,
    ) -> Result<Self, RelationError> {
        if minus_labels.is_empty() {
            return Err(RelationError::EmptySide { side: "minus" });
        }
        if plus_labels.is_empty() {
            return Err(RelationError::EmptySide { side: "plus" });
        }
        for (side, labels) in [("minus", &minus_labels), ("plus", &plus_labels)] {
            for (i, l) in labels.iter().enumerate() {
                if labels[..i].contains(l) {
                    return Err(RelationError::DuplicateLabel {
                        side,
                        label: l.clone(),
                    });
                }
            }
        }
        if matrix.len() != minus_labels.len() {
            return Err(RelationError::RowCountMismatch {
                got: matrix.len(),
                expected: minus_labels.len(),
            });
        }
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != plus_labels.len() {
                return Err(RelationError::RowWidthMismatch {
                    row: i,
                    got: row.len(),
                    expected: plus_labels.len(),
                });
            }
        }
        for (i, row) in matrix.iter().enumerate() {
            if !row.iter().any(|&b| b) {
                return Err(RelationError::EmptyRow {
                    row: i,
                    label: minus_labels[i].clone(),
                });
            }
        }
        for c in 0..plus_labels.len() {
            if matrix.iter().all(|row| row[c]) {
                return Err(RelationError::AllTrueColumn {
                    col: c,
                    label: plus_labels[c].clone(),
                });
            }
        }
        Ok(FiniteRelation {
            minus_labels,
            plus_labels,
            matrix,
            provenance: None,
        })
    }

    /// Convenience constructor from integer labels and a predicate.
    pub fn from_predicate(
        minus: usize,
        plus: usize,
        pred: impl Fn(usize, usize) -> bool,
    ) -> Result<Self, RelationError> {
        let minus_labels = (0..minus).map(|i| i.to_string()).collect();
        let plus_labels = (0..plus).map(|i| i.to_string()).collect();
        let matrix = (0..minus)
            .map(|x| (0..plus).map(|z| pred(x, z)).collect())
            .collect();
        FiniteRelation::new(minus_labels, plus_labels, matrix)
    }

    pub fn minus_len(&self) -> usize {
        self.minus_labels.len()
    }

    pub fn plus_len(&self) -> usize {
        self.plus_labels.len()
    }

    pub fn minus_labels(&self) -> &[String] {
        &self.minus_labels
    }

    pub fn plus_labels(&self) -> &[String] {
        &self.plus_labels
    }

    /// Whether A(x, z) holds, by index.
    pub fn holds(&self, x: usize, z: usize) -> bool {
        self.matrix[x][z]
    }

    pub fn matrix(&self) -> &[Vec<bool>] {
        &self.matrix
    }

    pub fn with_provenance(mut self, provenance: String) -> Self {
        self.provenance = Some(provenance);
        self
    }

    /// The dual (A+, A-, complement of the converse).  Admissibility of the
    /// dual is guaranteed by admissibility of `self`.
    pub fn dual(&self) -> FiniteRelation {
        let matrix = (0..self.plus_len())
            .map(|z| (0..self.minus_len()).map(|x| !self.matrix[x][z]).collect())
            .collect();
        FiniteRelation::new(self.plus_labels.clone(), self.minus_labels.clone(), matrix)
            .expect("dual of an admissible relation is admissible")
    }

    /// Exact norm: the least number of columns covering every row, with a
    /// witness cover of that size.
    pub fn norm(&self) -> NormResult {
        let n_rows = self.minus_len();
        let cols: Vec<Bits> = (0..self.plus_len())
            .map(|c| {
                let mut b = Bits::empty(n_rows);
                for r in 0..n_rows {
                    if self.matrix[r][c] {
                        b.set(r);
                    }
                }
                b
            })
            .collect();
        let (size, witness) =
            min_cover(n_rows, &cols).expect("admissible relation always has a cover");
        NormResult {
            value: Cardinal(size as u64),
            witness,
        }
    }

    /// norm(dual(self)).
    pub fn dual_norm(&self) -> NormResult {
        self.dual().norm()
    }

    /// Whether the given set of plus-side indices covers every minus element.
    pub fn is_cover(&self, cols: &[usize]) -> bool {
        (0..self.minus_len()).all(|r| cols.iter().any(|&c| self.matrix[r][c]))
    }
}

/// The (n, n, !=) relation; (3, 3, !=) has norm 2.
pub fn neq(n: usize) -> FiniteRelation {
    FiniteRelation::from_predicate(n, n, |x, z| x != z).expect("neq(n) admissible for n >= 3 or n == 2")
}

/// The (n, n, =) relation.
pub fn eq(n: usize) -> FiniteRelation {
    FiniteRelation::from_predicate(n, n, |x, z| x == z).expect("eq(n) admissible for n >= 2")
}
