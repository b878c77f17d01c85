//! A finite-model checker and entailment engine for a doxastic team
//! semantics: formulas describe properties of belief sets (teams of
//! first-order assignments) and of the ways those belief sets update.
//!
//! The crate evaluates the full connective language — belief and
//! possibility statements, the dependency atoms, classical connectives,
//! element quantifiers, the four update connectives with their adjoint and
//! minimal implications, and the forgetting/disbelief/doubting quantifier
//! pairs — on teams over finite structures by exhaustive search, and
//! decides model-relative entailment with counterexample extraction.

pub mod entailment;
pub mod error;
pub mod evaluator;
pub mod fo_eval;
pub mod model;
pub mod pool;
pub mod syntax;
pub mod updates;

pub use entailment::{bel, entails, entails_batch, equivalent, EntailmentResult, Theory};
pub use error::{Error, ParseError, Result};
pub use evaluator::{evaluate, Evaluator, Query, Verdict, Witness};
pub use fo_eval::{eval_term, tarski_sat};
pub use model::{
    load_structure, load_team, validate_structure, x_variants, Assignment, Element, Scope,
    Structure, StructureData, Team, TeamData, TeamSpace, DEFAULT_CAP,
};
pub use syntax::{parse, FoFormula, TeamFormula, TeamQuantifier, Term};
pub use updates::{
    apply_update, check_laws, derived_operator, leq, leq_reachable, minimal_apply, Law,
    LawReport, SymmetricDifference, UpdateKind, UpdateOperator, UpdateOutcome,
};
