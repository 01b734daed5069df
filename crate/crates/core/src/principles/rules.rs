//! Checks on rule structures.
//!
//! Inner existentials go to the triviality oracle, which answers them exactly; every
//! witness it returns is re-checked against the consequence operator. Outer universals
//! range over the hinted sets and then over finite and cofinite sets built from a window
//! of elements around the origin. A refutation that rests on the oracle finding nothing is
//! only as good as the oracle, so it becomes unknown when the oracle is not marked
//! complete.

use std::collections::HashSet;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::verdict::{InstanceLog, Members, Scope, Status, Verdict, Witness};
use super::{Budget, PrincipleId};
use crate::error::{Error, Result};
use crate::rule::RuleStructure;
use crate::set::{Carrier, SentenceId, SentenceSet};
use crate::structure::ConsequenceStructure;

const FRAGMENT: &str = "finite and cofinite sets only";

pub fn members(s: &SentenceSet) -> Members {
    if s.is_finite() {
        Members::finite(s.listed())
    } else {
        Members::cofinite(s.listed())
    }
}

/// The elements the outer quantifiers start from.
pub fn window(c: Carrier, w: usize) -> Vec<SentenceId> {
    let w = w as SentenceId;
    match c {
        Carrier::NaturalsFrom1 => (1..=w).collect(),
        Carrier::Naturals => (0..w).collect(),
        Carrier::Integers => {
            let mut v = vec![0];
            for k in 1..=w {
                v.extend([k, -k]);
            }
            v
        }
        Carrier::Finite(n) => (0..n.min(w as usize) as SentenceId).collect(),
    }
}

struct RuleChecker<'a> {
    r: &'a RuleStructure,
    budget: &'a Budget,
    window: Vec<SentenceId>,
}

impl<'a> RuleChecker<'a> {
    fn carrier(&self) -> Carrier {
        self.r.carrier()
    }

    fn exact(&self) -> Scope {
        Scope::exact().with(FRAGMENT)
    }

    fn bounded(&self, what: &str) -> Scope {
        Scope::bounded(vec![what.to_string(), FRAGMENT.to_string()])
    }

    fn window_limit(&self) -> String {
        format!("α ranges over hinted elements and {} elements of the window", self.window.len())
    }

    /// Refutation from the oracle finding no witness.
    fn oracle_refutes(&self, w: Witness) -> Verdict {
        if self.r.oracle_complete() {
            Verdict::refuted(self.exact(), w)
        } else {
            Verdict::new(Status::Unknown, self.exact().with("the oracle is not known to be complete"), Some(w))
        }
    }

    fn set(&self, xs: impl IntoIterator<Item = SentenceId>) -> SentenceSet {
        SentenceSet::finite(self.carrier(), xs).expect("window elements lie in the carrier")
    }

    /// Confirms an oracle witness through the consequence operator.
    fn confirm(&self, s: &SentenceSet) -> Result<()> {
        if !s.is_full() && self.r.consequence(s)?.is_full() {
            return Ok(());
        }
        if s.is_full() {
            return Err(Error::invalid("oracle witness", format!("{}: witness {s} is the whole carrier", self.r.name())));
        }
        Err(Error::invalid("oracle witness", format!("{}: C({s}) is not the carrier", self.r.name())))
    }

    fn unreached(&self, s: &SentenceSet) -> Result<String> {
        let c = self.r.consequence(s)?;
        let x = self.window.iter().copied().chain(window(self.carrier(), 1000)).find(|x| !c.contains(*x));
        Ok(x.map(|x| x.to_string()).unwrap_or_default())
    }

    fn alphas(&self) -> Vec<SentenceId> {
        let mut seen = HashSet::new();
        self.r.hints().elements.iter().chain(&self.window).copied().filter(|x| seen.insert(*x)).collect()
    }

    /// Hinted sets, `∅`, window singletons and pairs, random window subsets of up to four
    /// elements, and cofinite sets missing up to three window elements.
    fn outer(&self) -> Vec<SentenceSet> {
        let w = &self.window;
        let c = self.carrier();
        let mut out: Vec<SentenceSet> = self.r.hints().sets.clone();
        out.push(SentenceSet::empty(c));
        out.extend(w.iter().map(|&x| self.set([x])));
        for (i, &x) in w.iter().enumerate() {
            for &y in &w[i + 1..] {
                out.push(self.set([x, y]));
            }
        }
        for &x in w {
            out.push(SentenceSet::cofinite(c, [x]).expect("in carrier"));
        }
        for (i, &x) in w.iter().enumerate() {
            for &y in &w[i + 1..] {
                out.push(SentenceSet::cofinite(c, [x, y]).expect("in carrier"));
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.budget.seed);
        if w.len() >= 4 {
            for k in 0..self.budget.samples {
                let size = 3 + k % 2;
                let pick: Vec<SentenceId> = sample(&mut rng, w.len(), size).into_iter().map(|i| w[i]).collect();
                if k % 4 == 3 {
                    out.push(SentenceSet::cofinite(c, pick[..3].iter().copied()).expect("in carrier"));
                } else {
                    out.push(self.set(pick));
                }
            }
        }
        let mut seen = HashSet::new();
        out.retain(|s| !s.is_full() && seen.insert(s.clone()));
        out
    }

    fn outer_limit(&self, n: usize) -> String {
        format!(
            "Γ ranges over {n} sets: hints, ∅, subsets of a {}-element window and their complements (seed {})",
            self.window.len(),
            self.budget.seed
        )
    }

    fn check(&self, p: &PrincipleId) -> Result<Verdict> {
        match p {
            PrincipleId::Ecq { op } => self.ecq(op),
            PrincipleId::BotEcq => Ok(Verdict::new(Status::Refuted, self.exact().with("rule structures have no constants"), None)),
            PrincipleId::Gecq => self.gecq(),
            PrincipleId::NfPara => Ok(super::finite::flip(self.gecq()?)),
            PrincipleId::Secq => self.secq(false),
            PrincipleId::SecqPrime => self.secq(true),
            PrincipleId::Specq | PrincipleId::Pfecq3 => self.one_extension(*p == PrincipleId::Pfecq3),
            PrincipleId::Pfecq | PrincipleId::Pfecq2 => self.superset(*p == PrincipleId::Pfecq2),
            PrincipleId::Parecq | PrincipleId::Parecq2 => self.parecq(),
            PrincipleId::KPara { k } => self.k_para(k),
            PrincipleId::FinTriv { bound } => self.fin_triv(bound.unwrap_or(self.budget.max_size)),
            PrincipleId::GentleExplosion { .. } | PrincipleId::Lfi { .. } => {
                Err(Error::Domain(format!("{} needs a formula language; {} has none", p.name(), self.r.name())))
            }
        }
    }

    fn ecq(&self, op: &str) -> Result<Verdict> {
        let f = self.r.unary_op(op)?;
        let mut log = InstanceLog::default();
        for a in self.alphas() {
            let s = SentenceSet::finite(self.carrier(), [a, f(a)])?;
            if !self.r.oracle_trivial(&s)? {
                let unreached = self.unreached(&s)?;
                return Ok(Verdict::refuted(self.exact(), Witness::Survives { set: members(&s), unreached }));
            }
            self.confirm(&s)?;
            log.record(a.to_string(), s.to_string());
        }
        Ok(Verdict::proven(self.bounded(&self.window_limit()), log.finish()))
    }

    fn gecq(&self) -> Result<Verdict> {
        let mut log = InstanceLog::default();
        for a in self.alphas() {
            match self.r.oracle().trivial_pair(a) {
                Some(b) => {
                    self.confirm(&self.set([a, b]))?;
                    log.record(a.to_string(), b.to_string());
                }
                None => return Ok(self.oracle_refutes(Witness::Element { alpha: a.to_string() })),
            }
        }
        Ok(Verdict::proven(self.bounded(&self.window_limit()), log.finish()))
    }

    fn secq(&self, primed: bool) -> Result<Verdict> {
        let mut log = InstanceLog::default();
        for a in self.alphas() {
            let single = self.set([a]);
            match self.r.oracle().trivial_superset(&single, true) {
                Some(d) => {
                    self.confirm(&d)?;
                    if !d.contains(a) {
                        return Err(Error::invalid("oracle witness", format!("{} does not contain {a}", d)));
                    }
                    let shown = if primed { d.difference(&single)? } else { d };
                    log.record(a.to_string(), shown.to_string());
                }
                None => return Ok(self.oracle_refutes(Witness::Element { alpha: a.to_string() })),
            }
        }
        Ok(Verdict::proven(self.bounded(&self.window_limit()), log.finish()))
    }

    /// spECQ, and pfECQ3, whose `Δ` may always be taken to be a singleton.
    fn one_extension(&self, third: bool) -> Result<Verdict> {
        let outer = self.outer();
        let mut log = InstanceLog::default();
        for g in &outer {
            match self.r.oracle().trivial_one_extension(g) {
                Some(a) => {
                    let ext = g.with(a)?;
                    self.confirm(&ext)?;
                    let w = if third { self.set([a]).to_string() } else { a.to_string() };
                    log.record(g.to_string(), w);
                }
                None => return Ok(self.oracle_refutes(Witness::Set { gamma: members(g) })),
            }
        }
        Ok(Verdict::proven(self.bounded(&self.outer_limit(outer.len())), log.finish()))
    }

    /// pfECQ1 and pfECQ2 share the witness: a proper trivial `Δ ⊇ Γ` also satisfies
    /// `Γ ∪ Δ = Δ`.
    fn superset(&self, second: bool) -> Result<Verdict> {
        let outer = self.outer();
        let mut log = InstanceLog::default();
        for g in &outer {
            match self.r.oracle().trivial_superset(g, true) {
                Some(d) => {
                    if !g.is_subset(&d)? {
                        return Err(Error::invalid("oracle witness", format!("{d} does not contain {g}")));
                    }
                    let u = if second { g.union(&d)? } else { d.clone() };
                    self.confirm(&u)?;
                    log.record(g.to_string(), d.to_string());
                }
                None => return Ok(self.oracle_refutes(Witness::Set { gamma: members(g) })),
            }
        }
        Ok(Verdict::proven(self.bounded(&self.outer_limit(outer.len())), log.finish()))
    }

    fn parecq(&self) -> Result<Verdict> {
        for a in self.alphas() {
            if let Some(b) = self.r.oracle().trivial_pair(a) {
                self.confirm(&self.set([a, b]))?;
                return Ok(Verdict::proven(
                    self.exact(),
                    Witness::Pair { gamma: members(&self.set([a])), delta: members(&self.set([b])) },
                ));
            }
        }
        Ok(Verdict::new(Status::Refuted, self.bounded(&self.window_limit()), None))
    }

    fn k_para(&self, k: &[String]) -> Result<Verdict> {
        let ks = k
            .iter()
            .map(|t| t.trim().parse::<SentenceId>().map_err(|_| Error::invalid("element", format!("`{t}` is not an integer"))))
            .collect::<Result<Vec<_>>>()?;
        for &x in &ks {
            if !self.carrier().contains(x) {
                return Err(Error::OutOfCarrier { element: x.to_string(), carrier: self.carrier().to_string() });
            }
        }
        let mut log = InstanceLog::default();
        for a in self.alphas() {
            let hit = ks.iter().copied().find(|&b| self.r.oracle().is_trivial(&self.set([a, b])));
            match hit {
                None => return Ok(Verdict::proven(self.exact(), Witness::Element { alpha: a.to_string() })),
                Some(b) => {
                    self.confirm(&self.set([a, b]))?;
                    log.record(a.to_string(), b.to_string());
                }
            }
        }
        Ok(Verdict::refuted(self.bounded(&self.window_limit()), log.finish()))
    }

    fn fin_triv(&self, bound: usize) -> Result<Verdict> {
        match self.r.oracle().finite_trivial(bound) {
            Some(s) => {
                if s.len().map_or(true, |n| n > bound) {
                    return Err(Error::invalid("oracle witness", format!("{s} has more than {bound} elements")));
                }
                self.confirm(&s)?;
                Ok(Verdict::proven(self.exact(), Witness::Explodes { set: members(&s) }))
            }
            None => {
                let scope = self.exact().with(format!("sets of at most {bound} elements"));
                Ok(if self.r.oracle_complete() {
                    Verdict::new(Status::Refuted, scope, None)
                } else {
                    Verdict::unknown(scope.with("the oracle is not known to be complete"))
                })
            }
        }
    }
}

pub fn check(r: &RuleStructure, p: &PrincipleId, budget: &Budget) -> Result<Verdict> {
    RuleChecker { r, budget, window: window(r.carrier(), budget.window) }.check(p)
}
