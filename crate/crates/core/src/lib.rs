//! Fuzzy sets over finite universes, max-min relations, single-step fuzzy
//! inference (R1-R5) and seven-fold predication, driven by a small DSL.

pub mod cli;
pub mod dsl;
pub mod error;
pub mod fuzzy;
pub mod inference;
pub mod relation;
pub mod saptabhangi;

pub use error::FuzzyError;
pub use fuzzy::{Connective, FuzzySet, Grade, Hedge, Universe};
pub use inference::{
    apply_rule, generalized_modus_ponens, Conditional, Proposition, Rule, Subjects,
};
pub use relation::{cartesian_product, compose, implication_relation, FuzzyRelation};
pub use saptabhangi::{Predication, SevenValuation, SyadState};
