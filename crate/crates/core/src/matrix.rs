//! Finite logical matrices and their single-conclusion consequence relation.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formula::{fresh_var, var_name, vars_of, Connective, Formula, Op, Signature, Var};

pub type Value = u8;
pub type Valuation = BTreeMap<Var, Value>;

/// Default limit on the number of variables whose valuations are enumerated.
pub const DEFAULT_VAR_CAP: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    name: String,
    sig: Signature,
    values: Vec<String>,
    designated: Vec<bool>,
    /// One table per connective, arguments in mixed radix with the first argument most
    /// significant.
    tables: Vec<Vec<Value>>,
    var_cap: usize,
}

impl Matrix {
    /// The designated values must be a non-empty proper subset of the values.
    pub fn new(
        name: impl Into<String>,
        sig: Signature,
        values: Vec<String>,
        designated: &[usize],
        tables: Vec<Vec<Value>>,
    ) -> Result<Self> {
        let name = name.into();
        let nv = values.len();
        if !(2..=64).contains(&nv) {
            return Err(Error::invalid("matrix", format!("{name}: need between 2 and 64 values")));
        }
        let mut des = vec![false; nv];
        for &d in designated {
            *des.get_mut(d).ok_or_else(|| Error::invalid("matrix", format!("{name}: designated value {d} out of range")))? = true;
        }
        let count = des.iter().filter(|&&d| d).count();
        if count == 0 || count == nv {
            return Err(Error::invalid("matrix", format!("{name}: designated values must be a non-empty proper subset")));
        }
        if tables.len() != sig.connectives().len() {
            return Err(Error::invalid("matrix", format!("{name}: one table per connective required")));
        }
        for (c, t) in sig.connectives().iter().zip(&tables) {
            let want = nv.checked_pow(c.arity as u32).filter(|&w| w <= 1 << 20);
            if want != Some(t.len()) {
                return Err(Error::invalid("matrix", format!("{name}: table for `{}` has wrong size", c.name)));
            }
            if t.iter().any(|&x| x as usize >= nv) {
                return Err(Error::invalid("matrix", format!("{name}: table for `{}` leaves the value set", c.name)));
            }
        }
        Ok(Matrix { name, sig, values, designated: des, tables, var_cap: DEFAULT_VAR_CAP })
    }

    /// Builds tables from per-connective functions on value indices.
    pub fn from_fns(
        name: impl Into<String>,
        sig: Signature,
        values: &[&str],
        designated: &[usize],
        f: impl Fn(&Connective, &[Value]) -> Value,
    ) -> Result<Self> {
        let nv = values.len();
        let tables = sig
            .connectives()
            .iter()
            .map(|c| {
                let rows = nv.pow(c.arity as u32);
                (0..rows)
                    .map(|r| {
                        let mut args = vec![0; c.arity];
                        let mut x = r;
                        for k in (0..c.arity).rev() {
                            args[k] = (x % nv) as Value;
                            x /= nv;
                        }
                        f(c, &args)
                    })
                    .collect()
            })
            .collect();
        Self::new(name, sig, values.iter().map(|s| s.to_string()).collect(), designated, tables)
    }

    pub fn with_var_cap(mut self, cap: usize) -> Self {
        self.var_cap = cap;
        self
    }

    /// The reduct to the named connectives, in the given order.
    pub fn restrict(&self, names: &[&str]) -> Result<Matrix> {
        let sig = self.sig.restrict(names)?;
        let tables = names.iter().map(|n| self.sig.require(n).map(|op| self.tables[op as usize].clone())).collect::<Result<Vec<_>>>()?;
        let designated: Vec<usize> = self.designated().map(|d| d as usize).collect();
        let name = format!("{}[{}]", self.name, names.join(","));
        Ok(Matrix::new(name, sig, self.values.clone(), &designated, tables)?.with_var_cap(self.var_cap))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn values(&self) -> &[String] {
        &self.values
    }

    pub fn value_count(&self) -> usize {
        self.values.len()
    }

    pub fn value(&self, name: &str) -> Result<Value> {
        self.values
            .iter()
            .position(|v| v == name)
            .map(|i| i as Value)
            .ok_or_else(|| Error::unknown("truth value", name))
    }

    pub fn is_designated(&self, x: Value) -> bool {
        self.designated[x as usize]
    }

    pub fn designated(&self) -> impl Iterator<Item = Value> + '_ {
        (0..self.values.len() as Value).filter(|&x| self.is_designated(x))
    }

    pub fn var_cap(&self) -> usize {
        self.var_cap
    }

    pub fn table(&self, op: Op) -> &[Value] {
        &self.tables[op as usize]
    }

    #[inline]
    pub fn apply(&self, op: Op, args: &[Value]) -> Value {
        let nv = self.values.len();
        let idx = args.iter().fold(0usize, |acc, &a| acc * nv + a as usize);
        self.tables[op as usize][idx]
    }

    pub fn evaluate(&self, v: &Valuation, f: &Formula) -> Result<Value> {
        match f {
            Formula::Var(x) => v.get(x).copied().ok_or_else(|| Error::Unassigned(var_name(*x))),
            Formula::App(op, args) => {
                let vals = args.iter().map(|a| self.evaluate(v, a)).collect::<Result<Vec<_>>>()?;
                Ok(self.apply(*op, &vals))
            }
        }
    }

    /// Values of `f` under every valuation of `vars`; row `r` gives `vars[i]` the value
    /// `(r / |V|^i) % |V|`.
    pub fn column(&self, vars: &[Var], f: &Formula) -> Result<Vec<Value>> {
        let nv = self.values.len();
        let rows = self.row_count(vars.len())?;
        self.column_rec(vars, nv, rows, f)
    }

    fn column_rec(&self, vars: &[Var], nv: usize, rows: usize, f: &Formula) -> Result<Vec<Value>> {
        match f {
            Formula::Var(x) => {
                let i = vars.iter().position(|v| v == x).ok_or_else(|| Error::Unassigned(var_name(*x)))?;
                let stride = nv.pow(i as u32);
                Ok((0..rows).map(|r| ((r / stride) % nv) as Value).collect())
            }
            Formula::App(op, args) => {
                let cols = args.iter().map(|a| self.column_rec(vars, nv, rows, a)).collect::<Result<Vec<_>>>()?;
                let mut buf = vec![0; args.len()];
                Ok((0..rows)
                    .map(|r| {
                        for (b, c) in buf.iter_mut().zip(&cols) {
                            *b = c[r];
                        }
                        self.apply(*op, &buf)
                    })
                    .collect())
            }
        }
    }

    pub fn row_count(&self, k: usize) -> Result<usize> {
        if k > self.var_cap {
            return Err(Error::Budget(format!(
                "{} variables exceed the valuation cap of {} for matrix {}",
                k, self.var_cap, self.name
            )));
        }
        self.values
            .len()
            .checked_pow(k as u32)
            .ok_or_else(|| Error::Budget(format!("{k} variables overflow the valuation count")))
    }

    /// `Γ ⊨ α`: every valuation designating all of `Γ` designates `α`.
    pub fn entails(&self, gamma: &[Formula], alpha: &Formula) -> Result<bool> {
        let vars: Vec<Var> = vars_of(gamma.iter().chain([alpha])).into_iter().collect();
        let cols = gamma.iter().map(|g| self.column(&vars, g)).collect::<Result<Vec<_>>>()?;
        let a = self.column(&vars, alpha)?;
        Ok((0..a.len()).all(|r| !cols.iter().all(|c| self.is_designated(c[r])) || self.is_designated(a[r])))
    }

    /// Whether some valuation designates every member of `Γ`.
    pub fn satisfiable(&self, gamma: &[Formula]) -> Result<bool> {
        let vars: Vec<Var> = vars_of(gamma).into_iter().collect();
        let rows = self.row_count(vars.len())?;
        let cols = gamma.iter().map(|g| self.column(&vars, g)).collect::<Result<Vec<_>>>()?;
        Ok((0..rows).any(|r| cols.iter().all(|c| self.is_designated(c[r]))))
    }

    /// `C(Γ) = L`. Since some value is undesignated, this holds exactly when `Γ` entails a
    /// variable that does not occur in it, that is, when no valuation designates all of `Γ`.
    pub fn trivializes(&self, gamma: &[Formula]) -> Result<bool> {
        Ok(!self.satisfiable(gamma)?)
    }

    /// The literal reduction: `Γ ⊨ q` for a fresh variable `q`.
    pub fn trivializes_via_fresh_variable(&self, gamma: &[Formula]) -> Result<bool> {
        let q = fresh_var(&vars_of(gamma));
        self.entails(gamma, &Formula::Var(q))
    }

    /// For matrices an antitheorem is exactly a trivial set.
    pub fn is_antitheorem(&self, gamma: &[Formula]) -> Result<bool> {
        self.trivializes(gamma)
    }

    pub fn to_spec(&self) -> MatrixSpec {
        MatrixSpec {
            name: self.name.clone(),
            values: self.values.clone(),
            designated: self.designated().map(|d| self.values[d as usize].clone()).collect(),
            connectives: self
                .sig
                .connectives()
                .iter()
                .zip(&self.tables)
                .map(|(c, t)| ConnectiveSpec {
                    connective: c.clone(),
                    table: t.iter().map(|&x| self.values[x as usize].clone()).collect(),
                })
                .collect(),
        }
    }
}

/// JSON form of a matrix. Tables list value names in row-major order of the arguments.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixSpec {
    pub name: String,
    pub values: Vec<String>,
    pub designated: Vec<String>,
    pub connectives: Vec<ConnectiveSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectiveSpec {
    #[serde(flatten)]
    pub connective: Connective,
    pub table: Vec<String>,
}

impl TryFrom<MatrixSpec> for Matrix {
    type Error = Error;

    fn try_from(spec: MatrixSpec) -> Result<Self> {
        let index = |v: &str| {
            spec.values
                .iter()
                .position(|x| x == v)
                .ok_or_else(|| Error::invalid("matrix", format!("{}: unknown value `{v}`", spec.name)))
        };
        let distinct: BTreeSet<&String> = spec.values.iter().collect();
        if distinct.len() != spec.values.len() {
            return Err(Error::invalid("matrix", format!("{}: duplicate value names", spec.name)));
        }
        let designated = spec.designated.iter().map(|d| index(d)).collect::<Result<Vec<_>>>()?;
        let sig = Signature::new(spec.connectives.iter().map(|c| c.connective.clone()).collect())?;
        let tables = spec
            .connectives
            .iter()
            .map(|c| c.table.iter().map(|v| index(v).map(|i| i as Value)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Matrix::new(spec.name.clone(), sig, spec.values.clone(), &designated, tables)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cpc() -> Matrix {
        Matrix::from_fns("cpc", Signature::classical(), &["0", "1"], &[1], |c, a| match c.name.as_str() {
            "¬" => 1 - a[0],
            "∧" => a[0] & a[1],
            "∨" => a[0] | a[1],
            "→" => (1 - a[0]) | a[1],
            _ => 0,
        })
        .unwrap()
    }

    #[test]
    fn classical_entailment() {
        let m = cpc();
        let s = m.signature().clone();
        let f = |t: &str| s.parse(t).unwrap();
        assert!(m.entails(&[f("p"), f("p → q")], &f("q")).unwrap());
        assert!(!m.entails(&[f("q")], &f("p")).unwrap());
        assert!(m.trivializes(&[f("p"), f("¬p")]).unwrap());
        assert!(m.trivializes(&[f("⊥")]).unwrap());
        assert!(!m.trivializes(&[]).unwrap());
        for g in [vec![f("p"), f("¬p")], vec![f("p ∧ q")], vec![f("⊥")]] {
            assert_eq!(m.trivializes(&g).unwrap(), m.trivializes_via_fresh_variable(&g).unwrap());
        }
    }

    #[test]
    fn spec_round_trip() {
        let m = cpc();
        let json = serde_json::to_string(&m.to_spec()).unwrap();
        let back: MatrixSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(Matrix::try_from(back).unwrap(), m);
    }

    #[test]
    fn rejects_degenerate_designation() {
        let sig = Signature::classical().restrict(&["¬"]).unwrap();
        assert!(Matrix::new("m", sig.clone(), vec!["0".into(), "1".into()], &[0, 1], vec![vec![1, 0]]).is_err());
        assert!(Matrix::new("m", sig, vec!["0".into(), "1".into()], &[], vec![vec![1, 0]]).is_err());
    }

    #[test]
    fn var_cap_is_a_budget_error() {
        let m = cpc().with_var_cap(2);
        let s = m.signature().clone();
        let g = vec![s.parse("p ∧ q ∧ r").unwrap()];
        assert!(m.trivializes(&g).unwrap_err().is_budget());
    }
}
