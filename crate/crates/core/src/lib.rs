//! Ramsey algebras on finite and rule-defined homogeneous algebras.
//!
//! The crate decides the Ramsey property for finite algebras (every singly
//! generated subalgebra must contain an idempotent), for finite unary systems
//! (every element must reach a common fixed point), and semi-decides it for
//! unary rule algebras by bounded search. Around that sit the usual
//! constructions (products, quotients, one-point extensions), the finite
//! reduction machinery on sequence prefixes, and the subalgebra topology.

pub mod algebra;
pub mod constructions;
pub mod decision;
pub mod error;
pub mod reduction;
pub mod regression;
pub mod text;
pub mod topology;

pub use algebra::{
    closure, enumerate_orderly_terms, enumerate_subalgebras, evaluate, fixed_points, idempotents,
    Element, ElementSet, FiniteAlgebra, FixedPointHint, Interpretation, OrderlyTerm, RuleAlgebra,
    Signature, SubalgebraOptions, SymbolId,
};
pub use error::{Error, Result};
