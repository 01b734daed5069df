//! Structures on countable carriers with a closed-form description of their trivial sets.
//!
//! Only finite and cofinite sets are representable, so every check over a rule structure
//! quantifies over that fragment. The consequence operator and the triviality oracle are
//! supplied separately so that each can be tested against the other.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::set::{Carrier, SentenceId, SentenceSet};
use crate::structure::ConsequenceStructure;

/// Exact answers to the questions the explosion principles ask of a structure.
pub trait TrivialityOracle: Send + Sync {
    fn is_trivial(&self, s: &SentenceSet) -> bool;
    /// A trivial `Δ ⊇ Γ`, with `Δ` a proper subset of the carrier when `proper` is set.
    fn trivial_superset(&self, gamma: &SentenceSet, proper: bool) -> Option<SentenceSet>;
    /// Some `α` with `Γ ∪ {α}` proper and trivial.
    fn trivial_one_extension(&self, gamma: &SentenceSet) -> Option<SentenceId>;
    /// Some `β` with `{α, β}` trivial.
    fn trivial_pair(&self, alpha: SentenceId) -> Option<SentenceId>;
    /// A trivial set of at most `bound` elements.
    fn finite_trivial(&self, bound: usize) -> Option<SentenceSet>;
}

type ConsequenceFn = dyn Fn(&SentenceSet) -> SentenceSet + Send + Sync;
type UnaryFn = fn(SentenceId) -> SentenceId;

/// Places where a checker should look first: sets and elements at which a principle is
/// known to fail or to need a particular witness.
#[derive(Clone, Debug, Default)]
pub struct Hints {
    pub sets: Vec<SentenceSet>,
    pub elements: Vec<SentenceId>,
}

#[derive(Clone)]
pub struct RuleStructure {
    name: String,
    carrier: Carrier,
    consequence: Arc<ConsequenceFn>,
    oracle: Arc<dyn TrivialityOracle>,
    oracle_complete: bool,
    justification: Option<String>,
    unary_ops: Vec<(String, UnaryFn)>,
    hints: Hints,
}

impl fmt::Debug for RuleStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RuleStructure")
            .field("name", &self.name)
            .field("carrier", &self.carrier)
            .field("oracle_complete", &self.oracle_complete)
            .finish_non_exhaustive()
    }
}

impl RuleStructure {
    /// A structure whose oracle is not known to be complete: refutations that rest on the
    /// oracle finding nothing are reported as unknown.
    pub fn new(
        name: impl Into<String>,
        carrier: Carrier,
        consequence: impl Fn(&SentenceSet) -> SentenceSet + Send + Sync + 'static,
        oracle: impl TrivialityOracle + 'static,
    ) -> Result<Self> {
        if carrier.is_finite() {
            return Err(Error::invalid("rule structure", "use a finite structure for finite carriers"));
        }
        Ok(RuleStructure {
            name: name.into(),
            carrier,
            consequence: Arc::new(consequence),
            oracle: Arc::new(oracle),
            oracle_complete: false,
            justification: None,
            unary_ops: Vec::new(),
            hints: Hints::default(),
        })
    }

    pub(crate) fn complete(mut self, justification: impl Into<String>) -> Self {
        self.oracle_complete = true;
        self.justification = Some(justification.into());
        self
    }

    pub fn with_unary_op(mut self, name: impl Into<String>, f: UnaryFn) -> Self {
        self.unary_ops.push((name.into(), f));
        self
    }

    pub fn with_hints(mut self, hints: Hints) -> Self {
        self.hints = hints;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn oracle(&self) -> &dyn TrivialityOracle {
        &*self.oracle
    }

    pub fn oracle_complete(&self) -> bool {
        self.oracle_complete
    }

    /// Why the oracle characterizes every trivial fin/cofin set, when it does.
    pub fn justification(&self) -> Option<&str> {
        self.justification.as_deref()
    }

    pub fn hints(&self) -> &Hints {
        &self.hints
    }

    pub fn unary_op(&self, name: &str) -> Result<UnaryFn> {
        self.unary_ops
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, f)| *f)
            .ok_or_else(|| Error::Domain(format!("{} has no unary operation `{name}`", self.name)))
    }

    pub fn unary_op_names(&self) -> impl Iterator<Item = &str> {
        self.unary_ops.iter().map(|(n, _)| n.as_str())
    }

    pub fn set(&self, elems: impl IntoIterator<Item = SentenceId>) -> Result<SentenceSet> {
        SentenceSet::finite(self.carrier, elems)
    }

    pub fn cofinite(&self, excluded: impl IntoIterator<Item = SentenceId>) -> Result<SentenceSet> {
        SentenceSet::cofinite(self.carrier, excluded)
    }

    fn check(&self, gamma: &SentenceSet) -> Result<()> {
        if gamma.carrier() != self.carrier {
            return Err(Error::CarrierMismatch(gamma.carrier().to_string(), self.carrier.to_string()));
        }
        Ok(())
    }

    /// Triviality according to the oracle.
    pub fn oracle_trivial(&self, gamma: &SentenceSet) -> Result<bool> {
        self.check(gamma)?;
        Ok(self.oracle.is_trivial(gamma))
    }
}

impl ConsequenceStructure for RuleStructure {
    fn carrier(&self) -> Carrier {
        self.carrier
    }

    fn consequence(&self, gamma: &SentenceSet) -> Result<SentenceSet> {
        self.check(gamma)?;
        Ok((self.consequence)(gamma))
    }

    /// Answered by the oracle; `consequence(Γ).is_full()` is the independent route.
    fn is_trivial(&self, gamma: &SentenceSet) -> Result<bool> {
        self.oracle_trivial(gamma)
    }
}
