//! A workbench for abstract consequence relations.
//!
//! A logic is given as an explicit finite consequence table ([`FiniteStructure`]), a
//! finite matrix over a formula language ([`Matrix`]), a variable-inclusion companion of a
//! matrix ([`CompanionLogic`]), or a structure on a countable carrier whose trivial sets
//! have a closed-form description ([`RuleStructure`]). [`principles::check`] decides the
//! explosion principles exactly on finite tables and checks them over bounded fragments
//! elsewhere, always recording which of the two it did.

pub mod companions;
pub mod error;
pub mod family;
pub mod formula;
pub mod gallery;
pub mod io;
pub mod matrix;
pub mod miner;
pub mod par;
pub mod partial;
pub mod principles;
pub mod rule;
pub mod set;
pub mod structure;

pub use companions::{CompanionLogic, CompanionMode, CompanionOptions};
pub use error::{Error, Result};
pub use formula::{Formula, Signature};
pub use matrix::Matrix;
pub use principles::{check, Budget, Logic, PrincipleId, Status, Verdict};
pub use rule::RuleStructure;
pub use set::{Carrier, SentenceId, SentenceSet};
pub use structure::{ConsequenceStructure, FiniteStructure, TarskianReport};
