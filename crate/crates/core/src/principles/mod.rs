//! Checking principles of explosion and paraconsistency.
//!
//! [`check`] dispatches on the kind of logic. Finite structures are decided exactly by
//! enumeration. Matrices and their companions are checked over a pool of formulas, rule
//! structures over a generated family of finite and cofinite sets. Every [`Verdict`]
//! records which of the two happened.

pub mod battery;
pub mod bounded;
pub mod exact;
pub mod finite;
pub mod id;
pub mod lfi;
pub mod qn;
pub mod rules;
pub mod universe;
pub mod verdict;

use std::cell::OnceCell;

use serde::{Deserialize, Serialize};

pub use id::PrincipleId;
pub use verdict::{Clause, Instance, Members, Scope, ScopeKind, Status, Verdict, Witness};

use crate::companions::CompanionLogic;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rule::RuleStructure;
use crate::structure::FiniteStructure;
use bounded::FormulaEngine;
use universe::Backend;

/// Limits for bounded checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Budget {
    /// Variables of the formula pool.
    pub pool_vars: usize,
    /// Greatest formula depth in the pool.
    pub pool_depth: usize,
    /// Largest witness set searched.
    pub max_size: usize,
    /// Largest finite carrier on which quantification over pairs of sets is attempted.
    pub carrier_cap: usize,
    pub seed: u64,
    /// Random premise sets drawn for universal quantifiers over sets.
    pub samples: usize,
    /// Most formula classes in a pool.
    pub pool_cap: usize,
    /// Rule structures: outer quantifiers range over sets built from this many elements
    /// around the origin.
    pub window: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            pool_vars: 2,
            pool_depth: 3,
            max_size: 3,
            carrier_cap: 6,
            seed: 0,
            samples: 2000,
            pool_cap: 100_000,
            window: 10,
        }
    }
}

/// Anything [`check`] accepts.
#[derive(Clone, Debug)]
pub enum Logic {
    Finite(FiniteStructure),
    Matrix(Matrix),
    Companion(CompanionLogic),
    Rule(RuleStructure),
}

impl Logic {
    pub fn name(&self) -> String {
        match self {
            Logic::Finite(s) => format!("finite structure on {} elements", s.size()),
            Logic::Matrix(m) => m.name().to_string(),
            Logic::Companion(c) => c.name(),
            Logic::Rule(r) => r.name().to_string(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Logic::Finite(_) => "finite",
            Logic::Matrix(_) => "matrix",
            Logic::Companion(_) => "companion",
            Logic::Rule(_) => "rule",
        }
    }

    /// Premises and conclusion are formulas for matrices and companions, element names for
    /// finite structures and integers for rule structures.
    pub fn entails(&self, premises: &[&str], conclusion: &str) -> Result<bool> {
        use crate::structure::ConsequenceStructure;
        let int = |t: &str| -> Result<crate::set::SentenceId> {
            t.trim().parse().map_err(|_| Error::invalid("sentence", format!("`{t}` is not an integer")))
        };
        match self {
            Logic::Finite(s) => {
                let g = premises.iter().map(|t| s.element(t).map(crate::family::bit)).try_fold(0, |m, b| b.map(|b| m | b))?;
                Ok(s.apply(g) & crate::family::bit(s.element(conclusion)?) != 0)
            }
            Logic::Rule(r) => {
                let g = r.set(premises.iter().map(|t| int(t)).collect::<Result<Vec<_>>>()?)?;
                Ok(r.consequence(&g)?.contains(int(conclusion)?))
            }
            Logic::Matrix(m) => {
                let sig = m.signature();
                let g = premises.iter().map(|t| sig.parse(t)).collect::<std::result::Result<Vec<_>, _>>()?;
                m.entails(&g, &sig.parse(conclusion)?)
            }
            Logic::Companion(c) => {
                let sig = c.base().signature();
                let g = premises.iter().map(|t| sig.parse(t)).collect::<std::result::Result<Vec<_>, _>>()?;
                c.entails(&g, &sig.parse(conclusion)?)
            }
        }
    }

    fn backend(&self) -> Option<Backend<'_>> {
        match self {
            Logic::Matrix(m) => Some(Backend { matrix: m, mode: None }),
            Logic::Companion(c) => Some(Backend { matrix: c.base(), mode: Some(c.mode()) }),
            _ => None,
        }
    }
}

/// Checks several principles against one logic, sharing the formula pool between them.
pub struct Checker<'a> {
    logic: &'a Logic,
    budget: Budget,
    engine: OnceCell<FormulaEngine<'a>>,
}

impl<'a> Checker<'a> {
    pub fn new(logic: &'a Logic, budget: &Budget) -> Self {
        Checker { logic, budget: budget.clone(), engine: OnceCell::new() }
    }

    pub fn engine(&self) -> Result<&FormulaEngine<'a>> {
        if let Some(e) = self.engine.get() {
            return Ok(e);
        }
        let backend = self.logic.backend().ok_or_else(|| Error::Domain(format!("{} has no formula language", self.logic.name())))?;
        let e = FormulaEngine::new(backend, &self.budget)?;
        Ok(self.engine.get_or_init(|| e))
    }

    /// Errors from exhausted budgets become unknown verdicts; other errors are returned.
    pub fn check(&self, p: &PrincipleId) -> Result<Verdict> {
        match self.check_inner(p) {
            Err(e) if e.is_budget() => Ok(Verdict::unknown(Scope::bounded(vec![e.to_string()]))),
            r => r,
        }
    }

    fn check_inner(&self, p: &PrincipleId) -> Result<Verdict> {
        match self.logic {
            Logic::Finite(s) => finite::check(s, p, &self.budget),
            Logic::Rule(r) => rules::check(r, p, &self.budget),
            Logic::Companion(c) if matches!(p, PrincipleId::Lfi { .. } | PrincipleId::GentleExplosion { .. }) => {
                Err(Error::Domain(format!("{} is only checked on matrices, not on {}", p.name(), c.name())))
            }
            Logic::Matrix(_) | Logic::Companion(_) => self.engine()?.check(p),
        }
    }
}

pub fn check(logic: &Logic, p: &PrincipleId, budget: &Budget) -> Result<Verdict> {
    Checker::new(logic, budget).check(p)
}
