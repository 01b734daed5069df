//! Abstract consequence structures over a finite carrier.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{bit, elements, full_mask, Mask, Trivials, MAX_CARRIER};
use crate::set::{Carrier, SentenceSet};

/// Operations shared by finite and rule-based structures.
pub trait ConsequenceStructure {
    fn carrier(&self) -> Carrier;
    fn consequence(&self, gamma: &SentenceSet) -> Result<SentenceSet>;

    fn is_trivial(&self, gamma: &SentenceSet) -> Result<bool> {
        Ok(self.consequence(gamma)?.is_full())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnaryOp {
    pub name: String,
    pub map: Vec<usize>,
}

/// A consequence operator given by its full table: `table[m]` is `C(m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteStructure {
    n: usize,
    table: Vec<Mask>,
    names: Vec<String>,
    unary_ops: Vec<UnaryOp>,
    constants: Vec<(String, usize)>,
}

impl FiniteStructure {
    pub fn new(n: usize, table: Vec<Mask>) -> Result<Self> {
        if n == 0 || n > MAX_CARRIER {
            return Err(Error::invalid("structure", format!("carrier size {n} outside 1..={MAX_CARRIER}")));
        }
        if table.len() != 1 << n {
            return Err(Error::invalid(
                "structure",
                format!("table has {} entries, expected {}", table.len(), 1usize << n),
            ));
        }
        let full = full_mask(n);
        if let Some(m) = table.iter().position(|&c| c & !full != 0) {
            return Err(Error::invalid("structure", format!("C({m:#b}) leaves the carrier")));
        }
        let names = (0..n).map(default_name).collect();
        Ok(FiniteStructure { n, table, names, unary_ops: Vec::new(), constants: Vec::new() })
    }

    pub fn from_fn(n: usize, f: impl Fn(Mask) -> Mask) -> Result<Self> {
        if n == 0 || n > MAX_CARRIER {
            return Err(Error::invalid("structure", format!("carrier size {n} outside 1..={MAX_CARRIER}")));
        }
        Self::new(n, (0..=full_mask(n)).map(f).collect())
    }

    /// `C(Γ) = L` for `Γ ∈ trivial`, otherwise `C(Γ) = Γ`, except that `C(L) = ∅` when
    /// `L` itself is not meant to be trivial.
    pub fn from_trivials<T: Trivials>(family: &T) -> Result<Self> {
        let full = family.full();
        Self::from_fn(family.size(), |m| {
            if family.is_trivial(m) {
                full
            } else if m == full {
                0
            } else {
                m
            }
        })
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.n {
            return Err(Error::invalid("structure", "one name per element required"));
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(Error::invalid("structure", format!("duplicate element name `{a}`")));
            }
        }
        self.names = names;
        Ok(self)
    }

    pub fn with_unary_op(mut self, name: impl Into<String>, map: Vec<usize>) -> Result<Self> {
        let name = name.into();
        if map.len() != self.n || map.iter().any(|&x| x >= self.n) {
            return Err(Error::invalid("unary operation", format!("`{name}` must map the carrier into itself")));
        }
        self.unary_ops.retain(|o| o.name != name);
        self.unary_ops.push(UnaryOp { name, map });
        Ok(self)
    }

    pub fn with_constant(mut self, name: impl Into<String>, element: usize) -> Result<Self> {
        if element >= self.n {
            return Err(Error::invalid("constant", format!("element {element} outside carrier")));
        }
        self.constants.push((name.into(), element));
        Ok(self)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn table(&self) -> &[Mask] {
        &self.table
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn unary_ops(&self) -> &[UnaryOp] {
        &self.unary_ops
    }

    pub fn unary_op(&self, name: &str) -> Result<&UnaryOp> {
        self.unary_ops
            .iter()
            .find(|o| o.name == name)
            .ok_or_else(|| Error::unknown("unary operation", name))
    }

    pub fn constants(&self) -> &[(String, usize)] {
        &self.constants
    }

    #[inline]
    pub fn apply(&self, m: Mask) -> Mask {
        self.table[m as usize]
    }

    pub fn full(&self) -> Mask {
        full_mask(self.n)
    }

    /// Element index by name or by decimal index.
    pub fn element(&self, token: &str) -> Result<usize> {
        let token = token.trim();
        if let Some(i) = self.names.iter().position(|n| n == token) {
            return Ok(i);
        }
        match token.parse::<usize>() {
            Ok(i) if i < self.n => Ok(i),
            _ => Err(Error::OutOfCarrier { element: token.to_string(), carrier: self.carrier().to_string() }),
        }
    }

    pub fn mask_of(&self, s: &SentenceSet) -> Result<Mask> {
        if s.carrier() != self.carrier() {
            return Err(Error::CarrierMismatch(s.carrier().to_string(), self.carrier().to_string()));
        }
        Ok(s.listed().fold(0, |m, x| m | bit(x as usize)))
    }

    pub fn set_of(&self, m: Mask) -> SentenceSet {
        SentenceSet::finite(self.carrier(), elements(m).map(|i| i as i64)).expect("mask within carrier")
    }

    /// `{a, b}` using element names.
    pub fn show(&self, m: Mask) -> String {
        let names: Vec<&str> = elements(m).map(|i| self.names[i].as_str()).collect();
        format!("{{{}}}", names.join(", "))
    }

    pub fn tarskian_report(&self) -> TarskianReport {
        tarskian_report(self.n, |m| self.apply(m))
    }

    /// The same structure with elements renamed by `perm` (old index to new index).
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let map = |m: Mask| elements(m).fold(0, |acc, i| acc | bit(perm[i]));
        let mut table = vec![0; self.table.len()];
        for (m, &c) in self.table.iter().enumerate() {
            table[map(m as Mask) as usize] = map(c);
        }
        let mut names = vec![String::new(); self.n];
        for (i, name) in self.names.iter().enumerate() {
            names[perm[i]] = name.clone();
        }
        let unary_ops = self
            .unary_ops
            .iter()
            .map(|o| {
                let mut new = vec![0; self.n];
                for (i, &x) in o.map.iter().enumerate() {
                    new[perm[i]] = perm[x];
                }
                UnaryOp { name: o.name.clone(), map: new }
            })
            .collect();
        let constants = self.constants.iter().map(|(n, i)| (n.clone(), perm[*i])).collect();
        FiniteStructure { n: self.n, table, names, unary_ops, constants }
    }
}

fn default_name(i: usize) -> String {
    const LETTERS: &[u8] = b"abcdefghijklmnop";
    (LETTERS[i] as char).to_string()
}

impl Trivials for FiniteStructure {
    fn size(&self) -> usize {
        self.n
    }

    #[inline]
    fn is_trivial(&self, m: Mask) -> bool {
        self.table[m as usize] == full_mask(self.n)
    }
}

impl ConsequenceStructure for FiniteStructure {
    fn carrier(&self) -> Carrier {
        Carrier::Finite(self.n)
    }

    fn consequence(&self, gamma: &SentenceSet) -> Result<SentenceSet> {
        Ok(self.set_of(self.apply(self.mask_of(gamma)?)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    Reflexive,
    Monotonic,
    Transitive,
    MonotonicForTrivialSets,
}

/// A failing instance: for reflexivity `[Γ]`, otherwise `[Γ, Σ]` with `Γ ⊆ Σ` or `Σ ⊆ C(Γ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub condition: Condition,
    pub sets: Vec<Mask>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TarskianReport {
    pub reflexive: bool,
    pub monotonic: bool,
    pub transitive: bool,
    pub monotonic_for_trivial_sets: bool,
    pub counterexamples: Vec<Counterexample>,
}

impl TarskianReport {
    pub fn is_tarskian(&self) -> bool {
        self.reflexive && self.monotonic && self.transitive
    }

    pub fn holds(&self, c: Condition) -> bool {
        match c {
            Condition::Reflexive => self.reflexive,
            Condition::Monotonic => self.monotonic,
            Condition::Transitive => self.transitive,
            Condition::MonotonicForTrivialSets => self.monotonic_for_trivial_sets,
        }
    }
}

impl fmt::Display for TarskianReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yn = |b: bool| if b { "yes" } else { "no" };
        write!(
            f,
            "reflexive: {}, monotonic: {}, transitive: {}, monotonic for trivial sets: {}",
            yn(self.reflexive),
            yn(self.monotonic),
            yn(self.transitive),
            yn(self.monotonic_for_trivial_sets)
        )
    }
}

/// Decides the Tarskian conditions for an operator on `n` elements.
///
/// Monotonicity is checked on covering pairs `Γ ⊂ Γ ∪ {x}`, which implies it for all
/// pairs by chaining. Transitivity checks `C(Σ) ⊆ C(Γ)` for every `Σ ⊆ C(Γ)`.
pub fn tarskian_report(n: usize, c: impl Fn(Mask) -> Mask) -> TarskianReport {
    let full = full_mask(n);
    let mut first: [Option<Vec<Mask>>; 4] = Default::default();
    for g in 0..=full {
        let cg = c(g);
        if first[0].is_none() && g & !cg != 0 {
            first[0] = Some(vec![g]);
        }
        for x in elements(full & !g) {
            let s = g | bit(x);
            let cs = c(s);
            if first[1].is_none() && cg & !cs != 0 {
                first[1] = Some(vec![g, s]);
            }
            if first[3].is_none() && cg == full && cs != full {
                first[3] = Some(vec![g, s]);
            }
        }
        if first[2].is_none() {
            let mut sub = cg;
            loop {
                if c(sub) & !cg != 0 {
                    first[2] = Some(vec![g, sub]);
                    break;
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & cg;
            }
        }
        if first.iter().all(Option::is_some) {
            break;
        }
    }
    let conditions = [Condition::Reflexive, Condition::Monotonic, Condition::Transitive, Condition::MonotonicForTrivialSets];
    let counterexamples: Vec<Counterexample> = conditions
        .iter()
        .zip(first.iter())
        .filter_map(|(&condition, sets)| sets.clone().map(|sets| Counterexample { condition, sets }))
        .collect();
    let ok = |i: usize| first[i].is_none();
    TarskianReport {
        reflexive: ok(0),
        monotonic: ok(1),
        transitive: ok(2),
        monotonic_for_trivial_sets: ok(3),
        counterexamples,
    }
}

/// Fast boolean form of [`tarskian_report`] for table sweeps: `[reflexive, monotonic,
/// transitive, monotonic_for_trivial_sets]`.
pub fn tarskian_flags(n: usize, c: impl Fn(Mask) -> Mask) -> [bool; 4] {
    let full = full_mask(n);
    let mut flags = [true; 4];
    for g in 0..=full {
        let cg = c(g);
        if g & !cg != 0 {
            flags[0] = false;
        }
        for x in elements(full & !g) {
            let cs = c(g | bit(x));
            if cg & !cs != 0 {
                flags[1] = false;
            }
            if cg == full && cs != full {
                flags[3] = false;
            }
        }
        if flags[2] {
            let mut sub = cg;
            loop {
                if c(sub) & !cg != 0 {
                    flags[2] = false;
                    break;
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & cg;
            }
        }
    }
    flags
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_monotonic(n: usize, c: &dyn Fn(Mask) -> Mask) -> bool {
        let full = full_mask(n);
        (0..=full).all(|g| (0..=full).filter(|s| g & !s == 0).all(|s| c(g) & !c(s) == 0))
    }

    #[test]
    fn identity_is_tarskian() {
        let s = FiniteStructure::from_fn(3, |m| m).unwrap();
        let r = s.tarskian_report();
        assert!(r.is_tarskian());
        assert!(r.counterexamples.is_empty());
    }

    #[test]
    fn covering_pairs_agree_with_all_pairs() {
        // A handful of deterministic pseudo-random tables on three elements.
        let mut x: u32 = 0x9e37_79b9;
        for _ in 0..500 {
            let table: Vec<Mask> = (0..8)
                .map(|m| {
                    x ^= x << 13;
                    x ^= x >> 17;
                    x ^= x << 5;
                    (x & 7) | m
                })
                .collect();
            let c = |m: Mask| table[m as usize];
            assert_eq!(tarskian_report(3, c).monotonic, brute_monotonic(3, &c));
            let r = tarskian_report(3, c);
            assert_eq!([r.reflexive, r.monotonic, r.transitive, r.monotonic_for_trivial_sets], tarskian_flags(3, c));
        }
    }

    #[test]
    fn non_reflexive_counterexample() {
        let s = FiniteStructure::from_fn(2, |_| 0).unwrap();
        let r = s.tarskian_report();
        assert!(!r.reflexive);
        assert_eq!(r.counterexamples[0].sets, vec![1]);
    }

    #[test]
    fn relabel_permutes_table() {
        let s = FiniteStructure::from_fn(2, |m| if m == 1 { 3 } else { m }).unwrap();
        let t = s.relabel(&[1, 0]);
        assert!(Trivials::is_trivial(&t, 2));
        assert!(!Trivials::is_trivial(&t, 1));
        assert_eq!(t.names(), &["b".to_string(), "a".to_string()]);
    }
}
