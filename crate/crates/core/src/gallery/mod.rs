//! Built-in logics.
//!
//! Builtins are named by a short string, optionally followed by `:ARG`:
//!
//! | name | kind | argument |
//! |---|---|---|
//! | `cpc`, `lp`, `pac`, `p1`, `pwk`, `b3` | matrix | connectives to keep, e.g. `cpc:¬,∧,∨,→` |
//! | `NAME^MODE` for a matrix `NAME` | companion | as for the matrix; `MODE` is `l`, `pl`, `r` or `pr` |
//! | `pure-reflexive` | finite | carrier size (default 3) |
//! | `poset-forward`, `poset-backward` | finite | `antichainK` or `chainK` (default `antichain2`) |
//! | `poset-valuation` | finite | none; JSON params give `carrier`, `poset`, `valuations` |
//! | `qcons` | finite | `identity:N`, `empty:N` or `full:N` (default `empty:3`) |
//! | `ex-3-5`, `ex-3-9`, `ex-3-10`, `ex-3-13`, `ex-3-17`, `ex-4-6` | rule | none |
//!
//! Intuitionistic logic and its weak Kleene companion have no finite characteristic matrix
//! and are not included; neither are Sette's higher `P^m` for `m ≥ 2`.

pub mod finite;
pub mod matrices;
pub mod rules;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value as Json;

use crate::companions::{CompanionLogic, CompanionMode};
use crate::error::{Error, Result};
use crate::family::{full_mask, Mask};
use crate::matrix::Matrix;
use crate::principles::Logic;
use finite::{Direction, PosetSpec};

/// A builtin name with its parameters.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BuiltinId {
    pub name: String,
    #[serde(default, skip_serializing_if = "Json::is_null")]
    pub params: Json,
}

impl BuiltinId {
    pub fn new(name: impl Into<String>) -> Self {
        BuiltinId { name: name.into(), params: Json::Null }
    }

    pub fn with_params(name: impl Into<String>, params: Json) -> Self {
        BuiltinId { name: name.into(), params }
    }
}

impl FromStr for BuiltinId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix("builtin:").unwrap_or(s);
        Ok(match s.split_once(':') {
            Some((n, arg)) => BuiltinId::with_params(n.trim(), Json::String(arg.trim().to_string())),
            None => BuiltinId::new(s),
        })
    }
}

impl fmt::Display for BuiltinId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.params {
            Json::Null => f.write_str(&self.name),
            Json::String(a) => write!(f, "{}:{a}", self.name),
            p => write!(f, "{} {p}", self.name),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BuiltinKind {
    Matrix,
    Finite,
    Rule,
}

#[derive(Clone, Debug, Serialize)]
pub struct BuiltinInfo {
    pub name: &'static str,
    pub kind: BuiltinKind,
    pub summary: &'static str,
}

const LIST: &[BuiltinInfo] = &[
    BuiltinInfo { name: "cpc", kind: BuiltinKind::Matrix, summary: "classical two-valued logic over ¬ ∧ ∨ → ⊥" },
    BuiltinInfo { name: "lp", kind: BuiltinKind::Matrix, summary: "Priest's logic of paradox over ¬ ∧ ∨" },
    BuiltinInfo { name: "pac", kind: BuiltinKind::Matrix, summary: "LP with a detachable implication" },
    BuiltinInfo { name: "p1", kind: BuiltinKind::Matrix, summary: "Sette's three-valued P1 over ¬ →" },
    BuiltinInfo { name: "pwk", kind: BuiltinKind::Matrix, summary: "paraconsistent weak Kleene, e and 1 designated" },
    BuiltinInfo { name: "b3", kind: BuiltinKind::Matrix, summary: "Bochvar's weak Kleene logic, 1 designated" },
    BuiltinInfo { name: "pure-reflexive", kind: BuiltinKind::Finite, summary: "C(Γ) = Γ on n sentences" },
    BuiltinInfo { name: "poset-forward", kind: BuiltinKind::Finite, summary: "Γ ⊢ φ iff γ ≤ φ for all γ ∈ Γ" },
    BuiltinInfo { name: "poset-backward", kind: BuiltinKind::Finite, summary: "Γ ⊢ φ iff φ ≤ γ for all γ ∈ Γ" },
    BuiltinInfo { name: "poset-valuation", kind: BuiltinKind::Finite, summary: "consequence induced by poset-valued valuations" },
    BuiltinInfo { name: "qcons", kind: BuiltinKind::Finite, summary: "structure induced by a q-consequence operator" },
    BuiltinInfo { name: "ex-3-5", kind: BuiltinKind::Rule, summary: "ℕ⁺, trivial sets {n, …, 2n}" },
    BuiltinInfo { name: "ex-3-9", kind: BuiltinKind::Rule, summary: "ℕ, exactly the infinite sets explode" },
    BuiltinInfo { name: "ex-3-10", kind: BuiltinKind::Rule, summary: "ℕ, trivial sets {n, n+1}" },
    BuiltinInfo { name: "ex-3-13", kind: BuiltinKind::Rule, summary: "ℤ with f(n) = −n, non-empty f-closed sets explode" },
    BuiltinInfo { name: "ex-3-17", kind: BuiltinKind::Rule, summary: "ℕ, finite sets never explode" },
    BuiltinInfo { name: "ex-4-6", kind: BuiltinKind::Rule, summary: "ℕ, only {0} explodes" },
];

pub fn list() -> &'static [BuiltinInfo] {
    LIST
}

fn matrix_by_name(name: &str) -> Option<Matrix> {
    Some(match name {
        "cpc" => matrices::cpc(),
        "lp" => matrices::lp(),
        "pac" => matrices::pac(),
        "p1" => matrices::p1(),
        "pwk" => matrices::pwk(),
        "b3" => matrices::b3(),
        _ => return None,
    })
}

fn bad(id: &BuiltinId, reason: impl Into<String>) -> Error {
    Error::invalid("builtin parameters", format!("{}: {}", id.name, reason.into()))
}

fn sized(id: &BuiltinId, default: usize) -> Result<usize> {
    match &id.params {
        Json::Null => Ok(default),
        Json::String(s) => s.parse().map_err(|_| bad(id, format!("`{s}` is not a size"))),
        Json::Number(n) => n.as_u64().map(|n| n as usize).ok_or_else(|| bad(id, "size must be a natural number")),
        Json::Object(o) => match o.get("n").or_else(|| o.get("carrier")) {
            Some(v) => v.as_u64().map(|n| n as usize).ok_or_else(|| bad(id, "size must be a natural number")),
            None => Ok(default),
        },
        _ => Err(bad(id, "expected a size")),
    }
}

fn poset_param(id: &BuiltinId, v: &Json) -> Result<PosetSpec> {
    match v {
        Json::Null => Ok(PosetSpec::antichain(2)),
        Json::String(s) => {
            let (shape, k) = s.split_at(s.find(|c: char| c.is_ascii_digit()).unwrap_or(s.len()));
            let k: usize = k.parse().map_err(|_| bad(id, format!("`{s}`: expected antichainK or chainK")))?;
            match shape {
                "antichain" => Ok(PosetSpec::antichain(k)),
                "chain" => Ok(PosetSpec::chain(k)),
                _ => Err(bad(id, format!("`{s}`: expected antichainK or chainK"))),
            }
        }
        v => Ok(serde_json::from_value(v.clone())?),
    }
}

fn matrix_builtin(id: &BuiltinId, base: &str, mode: Option<CompanionMode>) -> Result<Logic> {
    let mut m = matrix_by_name(base).ok_or_else(|| Error::unknown("builtin", &id.name))?;
    let (keep, mode) = match &id.params {
        Json::Null => (None, mode),
        Json::String(s) => (Some(s.split(',').map(|x| x.trim().to_string()).collect::<Vec<_>>()), mode),
        Json::Object(o) => {
            let keep = match o.get("connectives") {
                Some(v) => Some(serde_json::from_value::<Vec<String>>(v.clone())?),
                None => None,
            };
            let mode = match o.get("companion").and_then(Json::as_str) {
                Some(s) => Some(s.parse()?),
                None => mode,
            };
            (keep, mode)
        }
        _ => return Err(bad(id, "expected a connective list")),
    };
    if let Some(keep) = keep {
        let names: Vec<&str> = keep.iter().map(String::as_str).collect();
        m = m.restrict(&names)?;
    }
    Ok(match mode {
        None => Logic::Matrix(m),
        Some(mode) => Logic::Companion(CompanionLogic::new(m, mode)),
    })
}

type TableRow = (Vec<usize>, Vec<usize>);

fn qcons_builtin(id: &BuiltinId) -> Result<finite::QCons> {
    let (preset, n, table): (String, usize, Option<Vec<TableRow>>) = match &id.params {
        Json::Null => ("empty".into(), 3, None),
        Json::String(s) => match s.split_once(':') {
            Some((p, n)) => (p.to_string(), n.parse().map_err(|_| bad(id, format!("bad size `{n}`")))?, None),
            None => (s.clone(), 3, None),
        },
        Json::Object(o) => {
            let n = sized(id, 3)?;
            match o.get("table") {
                Some(t) => ("table".into(), n, Some(serde_json::from_value(t.clone())?)),
                None => (o.get("preset").and_then(Json::as_str).unwrap_or("empty").to_string(), n, None),
            }
        }
        _ => return Err(bad(id, "expected a preset or a table")),
    };
    if n == 0 || n > 16 {
        return Err(bad(id, "carrier size must be between 1 and 16"));
    }
    let full = full_mask(n);
    let w: Vec<Mask> = match preset.as_str() {
        "identity" => (0..=full).collect(),
        "empty" => vec![0; full as usize + 1],
        "full" => vec![full; full as usize + 1],
        "table" => {
            let mut w: Vec<Option<Mask>> = vec![None; full as usize + 1];
            let mask = |xs: &[usize]| -> Result<Mask> {
                xs.iter().try_fold(0, |m, &x| if x < n { Ok(m | 1 << x) } else { Err(bad(id, format!("element {x} out of range"))) })
            };
            for (g, c) in table.unwrap_or_default() {
                w[mask(&g)? as usize] = Some(mask(&c)?);
            }
            w.into_iter().map(|x| x.ok_or_else(|| bad(id, "the table must list every subset"))).collect::<Result<_>>()?
        }
        p => return Err(bad(id, format!("unknown preset `{p}`"))),
    };
    finite::qcons_structure(n, w)
}

/// The q-consequence operator of a `qcons` builtin, with its validity flags.
pub fn load_qcons(id: &BuiltinId) -> Result<finite::QCons> {
    qcons_builtin(id)
}

pub fn load_builtin(id: &BuiltinId) -> Result<Logic> {
    let name = id.name.as_str();
    if let Some((base, mode)) = name.split_once('^') {
        return matrix_builtin(id, base, Some(mode.parse()?));
    }
    if matrix_by_name(name).is_some() {
        return matrix_builtin(id, name, None);
    }
    let no_params = || match &id.params {
        Json::Null => Ok(()),
        _ => Err(bad(id, "takes no parameters")),
    };
    match name {
        "pure-reflexive" => Ok(Logic::Finite(finite::pure_reflexive(sized(id, 3)?)?)),
        "poset-forward" => Ok(Logic::Finite(finite::poset_logic(&poset_param(id, &id.params)?, Direction::Forward)?)),
        "poset-backward" => Ok(Logic::Finite(finite::poset_logic(&poset_param(id, &id.params)?, Direction::Backward)?)),
        "poset-valuation" => {
            let (n, poset, vals) = match &id.params {
                Json::Null => (2, PosetSpec::antichain(2), vec![vec!["u0".to_string(), "u1".to_string()]]),
                Json::Object(o) => {
                    let n = sized(id, 2)?;
                    let poset = poset_param(id, o.get("poset").unwrap_or(&Json::Null))?;
                    let vals = o.get("valuations").ok_or_else(|| bad(id, "`valuations` is required"))?;
                    (n, poset, serde_json::from_value(vals.clone())?)
                }
                _ => return Err(bad(id, "expected an object with carrier, poset and valuations")),
            };
            Ok(Logic::Finite(finite::poset_valuation_logic(n, &poset, &vals)?))
        }
        "qcons" => Ok(Logic::Finite(qcons_builtin(id)?.structure)),
        "ex-3-5" => no_params().map(|_| Logic::Rule(rules::doubling_intervals())),
        "ex-3-9" => no_params().map(|_| Logic::Rule(rules::infinite_sets())),
        "ex-3-10" => no_params().map(|_| Logic::Rule(rules::adjacent_pairs())),
        "ex-3-13" => no_params().map(|_| Logic::Rule(rules::negation_closed())),
        "ex-3-17" => no_params().map(|_| Logic::Rule(rules::finite_sets_survive())),
        "ex-4-6" => no_params().map(|_| Logic::Rule(rules::zero_explodes())),
        _ => Err(Error::unknown("builtin", name)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn load(s: &str) -> Logic {
        load_builtin(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn every_listed_builtin_loads() {
        for b in list() {
            let l = load(b.name);
            let kind = match l {
                Logic::Matrix(_) => BuiltinKind::Matrix,
                Logic::Finite(_) => BuiltinKind::Finite,
                Logic::Rule(_) => BuiltinKind::Rule,
                Logic::Companion(_) => unreachable!(),
            };
            assert_eq!(kind, b.kind, "{}", b.name);
        }
    }

    #[test]
    fn parameters() {
        match load("builtin:pure-reflexive:4") {
            Logic::Finite(s) => assert_eq!(s.size(), 4),
            _ => panic!(),
        }
        match load("poset-forward:chain3") {
            Logic::Finite(s) => assert_eq!(s.apply(0b001), 0b111),
            _ => panic!(),
        }
        match load("cpc^pl:¬,∧,∨,→") {
            Logic::Companion(c) => {
                assert_eq!(c.mode(), CompanionMode::PureLeft);
                assert!(c.base().signature().lookup("⊥").is_none());
            }
            _ => panic!(),
        }
        assert!(load_builtin(&"poset-forward:ladder2".parse().unwrap()).is_err());
        assert!(load_builtin(&"ex-3-5:1".parse().unwrap()).is_err());
        assert!(load_builtin(&"nope".parse().unwrap()).is_err());
    }

    #[test]
    fn qcons_presets() {
        for (p, valid) in [("identity:3", true), ("empty:3", true), ("full:3", true)] {
            assert_eq!(load_qcons(&BuiltinId::with_params("qcons", Json::String(p.into()))).unwrap().is_valid(), valid);
        }
        let table = serde_json::json!({"carrier": 1, "table": [[[], [0]], [[0], []]]});
        let q = load_qcons(&BuiltinId::with_params("qcons", table)).unwrap();
        assert!(!q.monotone);
    }
}
