//! Finite inference systems with corules.
//!
//! The crate computes the inductive, coinductive and corule-generated
//! interpretations of a finite inference system, checks the associated
//! proof-principle obligations, builds and validates derivation witnesses,
//! and instantiates a family of list predicates over eventually periodic
//! colists as concrete inference systems.

pub mod colist;
pub mod error;
pub mod inference;
pub mod predicates;
pub mod proof;
pub mod set;

pub use colist::{Colist, SuffixAutomaton};
pub use error::{Error, ProofError};
pub use inference::{
    BoundedCoinductionReport, CheckReport, Failure, FailureReason, Fixpoint, GenTrace,
    InferenceSystem, Judgment, Rule,
};
pub use predicates::{ElementPredicate, JudgmentScheme, PredicateKind, Query};
pub use proof::{FiniteProofTree, RationalNode, RationalProofTree, RuleRef};
pub use set::JudgmentSet;
