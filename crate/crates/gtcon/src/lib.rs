//! Generalized Galois-Tukey connections at desk scale.
//!
//! Finite relation triples with exact set-cover norms, verified morphisms
//! between them, the product / old product / sequential composition
//! combinators, and exact decision procedures for eventual-domination,
//! splitting, matching, and engulfing over ultimately-linear-periodic
//! presentations of infinite objects, together with a catalog of executable
//! morphism constructions between the classical relations.

pub mod catalog;
pub mod combinators;
pub mod cover;
pub mod io;
pub mod morphism;
pub mod relation;
pub mod streams;
pub mod sweeps;

pub use combinators::{old_product, product, seq_compose, FunctionTable, SeqComposition};
pub use morphism::{search_morphism, verify, FiniteMorphism, MorphismVerdict};
pub use relation::{Cardinal, FiniteRelation, NormResult};
