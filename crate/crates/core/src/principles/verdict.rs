use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Proven,
    Refuted,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Proven => "proven",
            Status::Refuted => "refuted",
            Status::Unknown => "unknown",
        })
    }
}

impl std::str::FromStr for Status {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "proven" | "holds" | "true" => Ok(Status::Proven),
            "refuted" | "fails" | "false" => Ok(Status::Refuted),
            "unknown" => Ok(Status::Unknown),
            _ => Err(crate::Error::unknown("status", s)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScopeKind {
    Exact,
    Bounded,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scope {
    pub kind: ScopeKind,
    /// What was enumerated, for bounded verdicts; restrictions that apply even to exact
    /// ones (finite premise sets, finite/cofinite fragment).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub limits: Vec<String>,
}

impl Scope {
    pub fn exact() -> Self {
        Scope { kind: ScopeKind::Exact, limits: Vec::new() }
    }

    pub fn bounded(limits: Vec<String>) -> Self {
        Scope { kind: ScopeKind::Bounded, limits }
    }

    pub fn with(mut self, limit: impl Into<String>) -> Self {
        self.limits.push(limit.into());
        self
    }

    pub fn is_exact(&self) -> bool {
        self.kind == ScopeKind::Exact
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ScopeKind::Exact => f.write_str("exact")?,
            ScopeKind::Bounded => f.write_str("bounded")?,
        }
        if !self.limits.is_empty() {
            write!(f, " ({})", self.limits.join("; "))?;
        }
        Ok(())
    }
}

/// A finite set, or the carrier minus the listed elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Members {
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub cofinite: bool,
    pub elements: Vec<String>,
}

impl Members {
    pub fn finite<S: ToString>(xs: impl IntoIterator<Item = S>) -> Self {
        Members { cofinite: false, elements: xs.into_iter().map(|x| x.to_string()).collect() }
    }

    pub fn cofinite<S: ToString>(xs: impl IntoIterator<Item = S>) -> Self {
        Members { cofinite: true, elements: xs.into_iter().map(|x| x.to_string()).collect() }
    }
}

impl fmt::Display for Members {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = format!("{{{}}}", self.elements.join(", "));
        if self.cofinite {
            if self.elements.is_empty() {
                f.write_str("L")
            } else {
                write!(f, "L \\ {body}")
            }
        } else {
            f.write_str(&body)
        }
    }
}

/// One instance of a universally quantified principle and the witness found for it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub at: String,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clause {
    pub clause: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `C(set) = L`.
    Explodes { set: Members },
    /// `C(set) ≠ L`; `unreached` is a sentence outside `C(set)`.
    Survives { set: Members, unreached: String },
    /// An element for which the required partner or set does not exist.
    Element { alpha: String },
    /// A set at which a universally quantified condition fails.
    Set { gamma: Members },
    /// Two sets standing in the required relation.
    Pair { gamma: Members, delta: Members },
    /// Witnesses for a universal claim, with a single witness that served every instance
    /// when there is one.
    Instances {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        uniform: Option<String>,
        checked: usize,
        sample: Vec<Instance>,
    },
    Clauses { clauses: Vec<Clause> },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Explodes { set } => write!(f, "C({set}) = L"),
            Witness::Survives { set, unreached } => write!(f, "{set} ⊬ {unreached}"),
            Witness::Element { alpha } => write!(f, "α = {alpha}"),
            Witness::Set { gamma } => write!(f, "Γ = {gamma}"),
            Witness::Pair { gamma, delta } => write!(f, "Γ = {gamma}, Δ = {delta}"),
            Witness::Instances { uniform: Some(u), checked, .. } => write!(f, "{u} for all {checked} instances"),
            Witness::Instances { uniform: None, checked, sample } => {
                write!(f, "{checked} instances")?;
                if let Some(first) = sample.first() {
                    write!(f, ", e.g. {} ↦ {}", first.at, first.witness)?;
                }
                Ok(())
            }
            Witness::Clauses { clauses } => {
                let parts: Vec<String> = clauses.iter().map(|c| format!("{}: {}", c.clause, c.status)).collect();
                f.write_str(&parts.join(", "))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    pub scope: Scope,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn new(status: Status, scope: Scope, witness: Option<Witness>) -> Self {
        Verdict { status, scope, witness }
    }

    pub fn proven(scope: Scope, witness: Witness) -> Self {
        Self::new(Status::Proven, scope, Some(witness))
    }

    pub fn refuted(scope: Scope, witness: Witness) -> Self {
        Self::new(Status::Refuted, scope, Some(witness))
    }

    pub fn unknown(scope: Scope) -> Self {
        Self::new(Status::Unknown, scope, None)
    }

    pub fn is(&self, status: Status) -> bool {
        self.status == status
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.status, self.scope)?;
        if let Some(w) = &self.witness {
            write!(f, ": {w}")?;
        }
        Ok(())
    }
}

/// Collects per-instance witnesses for universal claims.
#[derive(Debug, Default)]
pub(crate) struct InstanceLog {
    uniform: Option<Option<String>>,
    checked: usize,
    sample: Vec<Instance>,
}

impl InstanceLog {
    const SAMPLE: usize = 8;

    pub fn record(&mut self, at: impl Into<String>, witness: impl Into<String>) {
        let witness = witness.into();
        self.uniform = match self.uniform.take() {
            None => Some(Some(witness.clone())),
            Some(Some(u)) if u == witness => Some(Some(u)),
            Some(_) => Some(None),
        };
        self.checked += 1;
        if self.sample.len() < Self::SAMPLE {
            self.sample.push(Instance { at: at.into(), witness });
        }
    }

    pub fn finish(self) -> Witness {
        let uniform = self.uniform.flatten().filter(|_| self.checked > 1);
        Witness::Instances { uniform, checked: self.checked, sample: self.sample }
    }
}
