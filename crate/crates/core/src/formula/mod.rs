//! Propositional formulas over a user-declared signature.

mod parse;
mod pool;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use parse::{parse, ParseError, ParseErrorKind};
pub use pool::{enumerate_pool, pool_size, pool_size_by_depth};

pub type Var = u32;

/// Index of a connective in its [`Signature`].
pub type Op = u16;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Var(Var),
    App(Op, Arc<[Formula]>),
}

impl Formula {
    pub fn var(v: Var) -> Self {
        Formula::Var(v)
    }

    pub fn constant(op: Op) -> Self {
        Formula::App(op, Arc::from(Vec::new()))
    }

    pub fn app(op: Op, args: Vec<Formula>) -> Self {
        Formula::App(op, Arc::from(args))
    }

    pub fn unary(op: Op, a: Formula) -> Self {
        Self::app(op, vec![a])
    }

    pub fn binary(op: Op, a: Formula, b: Formula) -> Self {
        Self::app(op, vec![a, b])
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Var(_) => 0,
            Formula::App(_, args) if args.is_empty() => 0,
            Formula::App(_, args) => 1 + args.iter().map(Formula::depth).max().unwrap_or(0),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Formula::Var(_) => 1,
            Formula::App(_, args) => 1 + args.iter().map(Formula::size).sum::<usize>(),
        }
    }

    pub fn is_var(&self) -> bool {
        matches!(self, Formula::Var(_))
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<Var>) {
        match self {
            Formula::Var(v) => {
                out.insert(*v);
            }
            Formula::App(_, args) => args.iter().for_each(|a| a.collect_vars(out)),
        }
    }

    pub fn substitute(&self, s: &Substitution) -> Formula {
        match self {
            Formula::Var(v) => s.get(*v).cloned().unwrap_or_else(|| self.clone()),
            Formula::App(op, args) => Formula::app(*op, args.iter().map(|a| a.substitute(s)).collect()),
        }
    }

    /// Replaces the variable `v` everywhere.
    pub fn instantiate(&self, v: Var, by: &Formula) -> Formula {
        self.substitute(&Substitution::single(v, by.clone()))
    }

    pub fn display<'a>(&'a self, sig: &'a Signature) -> Display<'a> {
        Display { f: self, sig }
    }
}

/// Variables of a set of formulas.
pub fn vars_of<'a>(fs: impl IntoIterator<Item = &'a Formula>) -> BTreeSet<Var> {
    let mut out = BTreeSet::new();
    for f in fs {
        f.collect_vars(&mut out);
    }
    out
}

/// The least variable not in `used`.
pub fn fresh_var(used: &BTreeSet<Var>) -> Var {
    (0..).find(|v| !used.contains(v)).expect("unbounded")
}

pub fn var_name(v: Var) -> String {
    match v {
        0 => "p".into(),
        1 => "q".into(),
        2 => "r".into(),
        _ => format!("v{v}"),
    }
}

/// A finite map from variables to formulas.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Substitution(BTreeMap<Var, Formula>);

impl Substitution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(v: Var, f: Formula) -> Self {
        Substitution(BTreeMap::from([(v, f)]))
    }

    pub fn insert(&mut self, v: Var, f: Formula) {
        self.0.insert(v, f);
    }

    pub fn get(&self, v: Var) -> Option<&Formula> {
        self.0.get(&v)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Substitution) -> Substitution {
        let mut out: BTreeMap<Var, Formula> = other.0.iter().map(|(&v, f)| (v, f.substitute(self))).collect();
        for (&v, f) in &self.0 {
            out.entry(v).or_insert_with(|| f.clone());
        }
        Substitution(out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Fixity {
    Prefix,
    Infix,
    Constant,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Connective {
    pub name: String,
    pub arity: usize,
    pub fixity: Fixity,
    #[serde(default)]
    pub aliases: Vec<String>,
    /// Binding strength of infix connectives; higher binds tighter.
    #[serde(default)]
    pub precedence: u8,
}

impl Connective {
    pub fn new(name: &str, arity: usize, fixity: Fixity, aliases: &[&str], precedence: u8) -> Self {
        Connective {
            name: name.to_string(),
            arity,
            fixity,
            aliases: aliases.iter().map(|s| s.to_string()).collect(),
            precedence,
        }
    }

    pub fn neg() -> Self {
        Self::new("¬", 1, Fixity::Prefix, &["~", "neg", "not"], 0)
    }
    pub fn and() -> Self {
        Self::new("∧", 2, Fixity::Infix, &["&", "and", "/\\"], 3)
    }
    pub fn or() -> Self {
        Self::new("∨", 2, Fixity::Infix, &["|", "or", "\\/"], 2)
    }
    pub fn imp() -> Self {
        Self::new("→", 2, Fixity::Infix, &["->", "imp", "⊃", ">"], 1)
    }
    pub fn bot() -> Self {
        Self::new("⊥", 0, Fixity::Constant, &["bot", "_|_"], 0)
    }

    fn spellings(&self) -> impl Iterator<Item = &str> {
        std::iter::once(self.name.as_str()).chain(self.aliases.iter().map(String::as_str))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Connective>", into = "Vec<Connective>")]
pub struct Signature {
    connectives: Vec<Connective>,
}

impl Signature {
    pub fn new(connectives: Vec<Connective>) -> Result<Self> {
        for (i, c) in connectives.iter().enumerate() {
            let ok = match c.fixity {
                Fixity::Constant => c.arity == 0,
                Fixity::Infix => c.arity == 2,
                Fixity::Prefix => c.arity >= 1,
            };
            if !ok {
                return Err(Error::invalid("signature", format!("`{}` has arity {} but is {:?}", c.name, c.arity, c.fixity)));
            }
            for s in c.spellings() {
                if s.is_empty() || s.chars().any(|ch| ch.is_whitespace() || "(),".contains(ch)) {
                    return Err(Error::invalid("signature", format!("bad connective spelling `{s}`")));
                }
                if is_var_name(s) {
                    return Err(Error::invalid("signature", format!("`{s}` clashes with a variable name")));
                }
                let clash = connectives[..i].iter().any(|d| d.spellings().any(|t| t == s))
                    || c.spellings().filter(|t| *t == s).count() > 1;
                if clash {
                    return Err(Error::invalid("signature", format!("connective spelling `{s}` is used twice")));
                }
            }
        }
        if connectives.len() > Op::MAX as usize {
            return Err(Error::invalid("signature", "too many connectives"));
        }
        Ok(Signature { connectives })
    }

    /// `{¬, ∧, ∨, →, ⊥}`.
    pub fn classical() -> Self {
        Self::new(vec![Connective::neg(), Connective::and(), Connective::or(), Connective::imp(), Connective::bot()])
            .expect("valid")
    }

    pub fn connectives(&self) -> &[Connective] {
        &self.connectives
    }

    pub fn get(&self, op: Op) -> &Connective {
        &self.connectives[op as usize]
    }

    /// Connective by name or alias.
    pub fn lookup(&self, name: &str) -> Option<Op> {
        self.connectives.iter().position(|c| c.spellings().any(|s| s == name)).map(|i| i as Op)
    }

    pub fn require(&self, name: &str) -> Result<Op> {
        self.lookup(name).ok_or_else(|| Error::unknown("connective", name))
    }

    pub fn ops(&self) -> impl Iterator<Item = (Op, &Connective)> {
        self.connectives.iter().enumerate().map(|(i, c)| (i as Op, c))
    }

    pub fn constants(&self) -> impl Iterator<Item = Op> + '_ {
        self.ops().filter(|(_, c)| c.arity == 0).map(|(i, _)| i)
    }

    /// The sub-signature with the named connectives, in the given order.
    pub fn restrict(&self, names: &[&str]) -> Result<Self> {
        let cs = names.iter().map(|n| self.require(n).map(|op| self.get(op).clone())).collect::<Result<Vec<_>>>()?;
        Self::new(cs)
    }

    pub fn parse(&self, text: &str) -> Result<Formula> {
        Ok(parse(self, text)?)
    }

    /// Checks that every application matches its connective's arity.
    pub fn check(&self, f: &Formula) -> Result<()> {
        match f {
            Formula::Var(_) => Ok(()),
            Formula::App(op, args) => {
                let c = self
                    .connectives
                    .get(*op as usize)
                    .ok_or_else(|| Error::unknown("connective", format!("#{op}")))?;
                if c.arity != args.len() {
                    return Err(Error::invalid("formula", format!("`{}` applied to {} arguments", c.name, args.len())));
                }
                args.iter().try_for_each(|a| self.check(a))
            }
        }
    }
}

impl TryFrom<Vec<Connective>> for Signature {
    type Error = Error;
    fn try_from(v: Vec<Connective>) -> Result<Self> {
        Signature::new(v)
    }
}

impl From<Signature> for Vec<Connective> {
    fn from(s: Signature) -> Self {
        s.connectives
    }
}

pub(crate) fn is_var_name(s: &str) -> bool {
    matches!(s, "p" | "q" | "r")
        || (s.len() > 1 && s.starts_with('v') && s[1..].chars().all(|c| c.is_ascii_digit()))
}

pub(crate) fn var_of_name(s: &str) -> Option<Var> {
    match s {
        "p" => Some(0),
        "q" => Some(1),
        "r" => Some(2),
        _ if is_var_name(s) => s[1..].parse().ok(),
        _ => None,
    }
}

pub struct Display<'a> {
    f: &'a Formula,
    sig: &'a Signature,
}

impl Display<'_> {
    fn write(&self, f: &Formula, out: &mut fmt::Formatter<'_>, nested: bool) -> fmt::Result {
        match f {
            Formula::Var(v) => out.write_str(&var_name(*v)),
            Formula::App(op, args) => {
                let c = self.sig.get(*op);
                match c.fixity {
                    Fixity::Constant => out.write_str(&c.name),
                    Fixity::Infix => {
                        if nested {
                            out.write_str("(")?;
                        }
                        self.write(&args[0], out, true)?;
                        write!(out, " {} ", c.name)?;
                        self.write(&args[1], out, true)?;
                        if nested {
                            out.write_str(")")?;
                        }
                        Ok(())
                    }
                    Fixity::Prefix if c.arity == 1 && !c.name.chars().any(char::is_alphanumeric) => {
                        out.write_str(&c.name)?;
                        self.write(&args[0], out, true)
                    }
                    Fixity::Prefix => {
                        write!(out, "{}(", c.name)?;
                        for (i, a) in args.iter().enumerate() {
                            if i > 0 {
                                out.write_str(", ")?;
                            }
                            self.write(a, out, false)?;
                        }
                        out.write_str(")")
                    }
                }
            }
        }
    }
}

impl fmt::Display for Display<'_> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(self.f, out, false)
    }
}
