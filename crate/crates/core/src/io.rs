//! JSON logic specifications and check reports.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::family::{bit, elements, Mask};
use crate::gallery::{load_builtin, BuiltinId};
use crate::matrix::{Matrix, MatrixSpec};
use crate::principles::{Budget, Logic, PrincipleId, Verdict};
use crate::structure::FiniteStructure;

/// A logic as read from a file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum LogicSpecFile {
    Matrix { matrix: MatrixSpec },
    Finite { finite: FiniteSpec },
    Builtin { builtin: BuiltinId },
}

impl LogicSpecFile {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// `builtin:NAME[:ARG]` or the contents of a spec file.
    pub fn builtin(text: &str) -> Result<Self> {
        Ok(LogicSpecFile::Builtin { builtin: text.parse()? })
    }

    pub fn load(&self) -> Result<Logic> {
        match self {
            LogicSpecFile::Matrix { matrix } => Ok(Logic::Matrix(Matrix::try_from(matrix.clone())?)),
            LogicSpecFile::Finite { finite } => Ok(Logic::Finite(FiniteStructure::try_from(finite)?)),
            LogicSpecFile::Builtin { builtin } => load_builtin(builtin),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CarrierSpec {
    Size(usize),
    Names(Vec<String>),
}

/// A finite structure. `table` lists `[Γ, C(Γ)]` for every subset, in increasing bitmask
/// order, with sets as sorted index arrays.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiniteSpec {
    pub carrier: CarrierSpec,
    pub table: Vec<(Vec<usize>, Vec<usize>)>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub unary_ops: BTreeMap<String, Vec<usize>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub constants: BTreeMap<String, usize>,
}

fn indices(m: Mask) -> Vec<usize> {
    elements(m).collect()
}

impl From<&FiniteStructure> for FiniteSpec {
    fn from(s: &FiniteStructure) -> Self {
        let default = (0..s.size()).all(|i| s.names()[i] == ((b'a' + i as u8) as char).to_string());
        FiniteSpec {
            carrier: if default { CarrierSpec::Size(s.size()) } else { CarrierSpec::Names(s.names().to_vec()) },
            table: s.table().iter().enumerate().map(|(m, &c)| (indices(m as Mask), indices(c))).collect(),
            unary_ops: s.unary_ops().iter().map(|o| (o.name.clone(), o.map.clone())).collect(),
            constants: s.constants().iter().cloned().collect(),
        }
    }
}

impl TryFrom<&FiniteSpec> for FiniteStructure {
    type Error = Error;

    fn try_from(spec: &FiniteSpec) -> Result<Self> {
        let n = match &spec.carrier {
            CarrierSpec::Size(n) => *n,
            CarrierSpec::Names(v) => v.len(),
        };
        if n == 0 || n > crate::family::MAX_CARRIER {
            return Err(Error::invalid("finite structure", format!("carrier size {n} outside 1..={}", crate::family::MAX_CARRIER)));
        }
        if spec.table.len() != 1 << n {
            return Err(Error::invalid("finite structure", format!("table has {} rows; a total table has {}", spec.table.len(), 1 << n)));
        }
        let mask = |xs: &[usize]| -> Result<Mask> {
            xs.iter().try_fold(0, |m, &i| {
                if i >= n {
                    Err(Error::invalid("finite structure", format!("index {i} outside a carrier of {n}")))
                } else {
                    Ok(m | bit(i))
                }
            })
        };
        let mut table = Vec::with_capacity(spec.table.len());
        for (row, (g, c)) in spec.table.iter().enumerate() {
            if mask(g)? as usize != row {
                return Err(Error::invalid("finite structure", format!("row {row} lists {g:?}; rows must follow bitmask order")));
            }
            table.push(mask(c)?);
        }
        let mut s = FiniteStructure::new(n, table)?;
        if let CarrierSpec::Names(names) = &spec.carrier {
            s = s.with_names(names.clone())?;
        }
        for (name, map) in &spec.unary_ops {
            s = s.with_unary_op(name.clone(), map.clone())?;
        }
        for (name, &e) in &spec.constants {
            s = s.with_constant(name.clone(), e)?;
        }
        Ok(s)
    }
}

/// Everything needed to reproduce a report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportInput {
    pub logic: LogicSpecFile,
    pub principles: Vec<PrincipleId>,
    pub budget: Budget,
}

impl ReportInput {
    /// SHA-256 of the compact JSON form.
    pub fn digest(&self) -> String {
        let text = serde_json::to_string(self).expect("inputs serialize");
        Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub principle: PrincipleId,
    #[serde(flatten)]
    pub verdict: Verdict,
    pub timing_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub input_digest: String,
    pub logic: String,
    pub input: ReportInput,
    pub checks: Vec<CheckEntry>,
}

impl Report {
    pub fn new(logic: &Logic, input: ReportInput, checks: Vec<CheckEntry>) -> Self {
        Report {
            tool: "paracon".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            input_digest: input.digest(),
            logic: logic.name(),
            input,
            checks,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery::finite::pure_reflexive;

    #[test]
    fn finite_round_trip() {
        let s = pure_reflexive(3).unwrap().with_unary_op("neg", vec![1, 0, 2]).unwrap();
        let spec = FiniteSpec::from(&s);
        let text = serde_json::to_string(&LogicSpecFile::Finite { finite: spec.clone() }).unwrap();
        let back = LogicSpecFile::from_json(&text).unwrap();
        let Logic::Finite(t) = back.load().unwrap() else { panic!() };
        assert_eq!(s, t);
    }

    #[test]
    fn rejects_partial_tables() {
        let mut spec = FiniteSpec::from(&pure_reflexive(2).unwrap());
        spec.table.pop();
        assert!(FiniteStructure::try_from(&spec).is_err());
        let mut spec = FiniteSpec::from(&pure_reflexive(2).unwrap());
        spec.table.swap(1, 2);
        assert!(FiniteStructure::try_from(&spec).is_err());
    }

    #[test]
    fn digest_is_stable() {
        let input = ReportInput { logic: LogicSpecFile::builtin("cpc").unwrap(), principles: vec![PrincipleId::Gecq], budget: Budget::default() };
        assert_eq!(input.digest(), input.clone().digest());
        assert_eq!(input.digest().len(), 64);
    }
}
