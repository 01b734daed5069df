//! Variable-inclusion companions of a matrix logic.
//!
//! * left: some `Δ ⊆ Γ` with `var(Δ) ⊆ var(α)` entails `α`
//! * pure left: as left, with `Δ` non-empty
//! * right: `Γ` contains an antitheorem, or `Γ ⊨ α` with `var(α) ⊆ var(Γ)`
//! * pure right: `Γ ⊨ α` with `var(α) ⊆ var(Γ)`

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formula::{fresh_var, vars_of, Formula};
use crate::matrix::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CompanionMode {
    Left,
    PureLeft,
    Right,
    PureRight,
}

impl CompanionMode {
    pub const ALL: [CompanionMode; 4] =
        [CompanionMode::Left, CompanionMode::PureLeft, CompanionMode::Right, CompanionMode::PureRight];

    pub fn suffix(self) -> &'static str {
        match self {
            CompanionMode::Left => "l",
            CompanionMode::PureLeft => "pl",
            CompanionMode::Right => "r",
            CompanionMode::PureRight => "pr",
        }
    }
}

impl fmt::Display for CompanionMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CompanionMode::Left => "left",
            CompanionMode::PureLeft => "pure_left",
            CompanionMode::Right => "right",
            CompanionMode::PureRight => "pure_right",
        })
    }
}

impl FromStr for CompanionMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" | "l" => Ok(CompanionMode::Left),
            "pure_left" | "pure-left" | "pl" => Ok(CompanionMode::PureLeft),
            "right" | "r" => Ok(CompanionMode::Right),
            "pure_right" | "pure-right" | "pr" => Ok(CompanionMode::PureRight),
            _ => Err(Error::unknown("companion mode", s)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompanionOptions {
    /// Largest premise set whose subsets are searched.
    pub subset_cap: usize,
    /// Right companion clause "`Γ` is an antitheorem" instead of "`Γ` contains one".
    pub strict_right: bool,
}

impl Default for CompanionOptions {
    fn default() -> Self {
        CompanionOptions { subset_cap: 12, strict_right: false }
    }
}

fn check_cap(n: usize, opts: &CompanionOptions) -> Result<()> {
    if n > opts.subset_cap {
        Err(Error::Budget(format!("{n} premises exceed the companion subset cap of {}", opts.subset_cap)))
    } else {
        Ok(())
    }
}

fn subset(items: &[&Formula], mask: u32) -> Vec<Formula> {
    items.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, f)| (*f).clone()).collect()
}

pub fn entails_companion(
    base: &Matrix,
    mode: CompanionMode,
    gamma: &[Formula],
    alpha: &Formula,
    opts: &CompanionOptions,
) -> Result<bool> {
    let va = alpha.vars();
    match mode {
        CompanionMode::Left | CompanionMode::PureLeft => {
            let eligible: Vec<&Formula> = gamma.iter().filter(|g| g.vars().is_subset(&va)).collect();
            check_cap(eligible.len(), opts)?;
            let lowest = if mode == CompanionMode::PureLeft { 1 } else { 0 };
            let top = (1u32 << eligible.len()) - 1;
            for mask in (lowest..=top).rev() {
                if base.entails(&subset(&eligible, mask), alpha)? {
                    return Ok(true);
                }
            }
            Ok(false)
        }
        CompanionMode::Right | CompanionMode::PureRight => {
            if mode == CompanionMode::Right && contains_antitheorem(base, gamma, opts)? {
                return Ok(true);
            }
            Ok(va.is_subset(&vars_of(gamma)) && base.entails(gamma, alpha)?)
        }
    }
}

fn contains_antitheorem(base: &Matrix, gamma: &[Formula], opts: &CompanionOptions) -> Result<bool> {
    if opts.strict_right {
        return base.is_antitheorem(gamma);
    }
    check_cap(gamma.len(), opts)?;
    let items: Vec<&Formula> = gamma.iter().collect();
    for mask in 1..(1u32 << items.len()) {
        if base.is_antitheorem(&subset(&items, mask))? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `C(Γ) = L` in the companion, decided by entailment of a fresh variable.
pub fn companion_trivializes(base: &Matrix, mode: CompanionMode, gamma: &[Formula], opts: &CompanionOptions) -> Result<bool> {
    let q = fresh_var(&vars_of(gamma));
    entails_companion(base, mode, gamma, &Formula::Var(q), opts)
}

/// A companion logic as a first-class value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompanionLogic {
    base: Matrix,
    mode: CompanionMode,
    opts: CompanionOptions,
}

impl CompanionLogic {
    pub fn new(base: Matrix, mode: CompanionMode) -> Self {
        CompanionLogic { base, mode, opts: CompanionOptions::default() }
    }

    pub fn with_options(mut self, opts: CompanionOptions) -> Self {
        self.opts = opts;
        self
    }

    pub fn base(&self) -> &Matrix {
        &self.base
    }

    pub fn mode(&self) -> CompanionMode {
        self.mode
    }

    pub fn options(&self) -> &CompanionOptions {
        &self.opts
    }

    pub fn name(&self) -> String {
        format!("{}^{}", self.base.name(), self.mode.suffix())
    }

    pub fn entails(&self, gamma: &[Formula], alpha: &Formula) -> Result<bool> {
        entails_companion(&self.base, self.mode, gamma, alpha, &self.opts)
    }

    pub fn trivializes(&self, gamma: &[Formula]) -> Result<bool> {
        companion_trivializes(&self.base, self.mode, gamma, &self.opts)
    }

    /// Closed-form triviality: for the left companions the variable-free members of `Γ`
    /// must be unsatisfiable (and non-empty for the pure variant); for the right companion
    /// `Γ` must contain an antitheorem; the pure right companion has no trivial sets.
    pub fn trivializes_direct(&self, gamma: &[Formula]) -> Result<bool> {
        match self.mode {
            CompanionMode::Left | CompanionMode::PureLeft => {
                let closed: Vec<Formula> = gamma.iter().filter(|g| g.vars().is_empty()).cloned().collect();
                Ok(!closed.is_empty() && self.base.trivializes(&closed)?)
            }
            CompanionMode::Right => contains_antitheorem(&self.base, gamma, &self.opts),
            CompanionMode::PureRight => Ok(false),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery::matrices;

    #[test]
    fn modes_differ_on_disjoint_variables() {
        let cpc = matrices::cpc();
        let s = cpc.signature().clone();
        let f = |t: &str| s.parse(t).unwrap();
        let o = CompanionOptions::default();
        // p ∧ ¬p ⊨ q classically, but q shares no variable with the premise.
        let g = [f("p ∧ ¬p")];
        assert!(!entails_companion(&cpc, CompanionMode::Left, &g, &f("q"), &o).unwrap());
        assert!(entails_companion(&cpc, CompanionMode::Right, &g, &f("q"), &o).unwrap());
        assert!(!entails_companion(&cpc, CompanionMode::PureRight, &g, &f("q"), &o).unwrap());
        // ⊥ has no variables, so the left companion explodes from it.
        assert!(entails_companion(&cpc, CompanionMode::Left, &[f("⊥")], &f("q"), &o).unwrap());
        assert!(entails_companion(&cpc, CompanionMode::PureLeft, &[f("⊥")], &f("q"), &o).unwrap());
        // Theorems follow from nothing in the left companion but not in the pure one.
        assert!(entails_companion(&cpc, CompanionMode::Left, &[], &f("p → p"), &o).unwrap());
        assert!(!entails_companion(&cpc, CompanionMode::PureLeft, &[], &f("p → p"), &o).unwrap());
        assert!(!entails_companion(&cpc, CompanionMode::PureRight, &[], &f("p → p"), &o).unwrap());
    }

    #[test]
    fn strict_right_needs_the_whole_set() {
        let cpc = matrices::cpc();
        let s = cpc.signature().clone();
        let f = |t: &str| s.parse(t).unwrap();
        let strict = CompanionOptions { strict_right: true, ..Default::default() };
        let g = [f("p ∧ ¬p"), f("r")];
        assert!(entails_companion(&cpc, CompanionMode::Right, &g, &f("q"), &Default::default()).unwrap());
        // The whole set is still unsatisfiable, so both variants agree here.
        assert!(entails_companion(&cpc, CompanionMode::Right, &g, &f("q"), &strict).unwrap());
    }

    #[test]
    fn subset_cap_is_enforced() {
        let cpc = matrices::cpc();
        let opts = CompanionOptions { subset_cap: 2, ..Default::default() };
        let g: Vec<Formula> = (0..3).map(Formula::Var).collect();
        let err = entails_companion(&cpc, CompanionMode::Right, &g, &Formula::Var(0), &opts).unwrap_err();
        assert!(err.is_budget());
    }
}
