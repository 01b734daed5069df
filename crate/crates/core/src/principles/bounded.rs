//! Bounded checks over matrix and companion logics.
//!
//! Outer universal quantifiers range over the pool (for `α`) or over a generated family of
//! finite premise sets (for `Γ`). Inner existentials search constants and stock witnesses
//! first, then the pool. A witness found this way is an exact fact about the logic; only
//! the universal claims are bounded.

use std::cell::OnceCell;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::lfi;
use super::universe::{Backend, Item, Reach, RowSet, Universe};
use super::verdict::{InstanceLog, Members, Scope, Status, Verdict, Witness};
use super::{Budget, PrincipleId};
use crate::error::{Error, Result};
use crate::formula::{Formula, Op};

const REACH_CAP: usize = 200_000;

pub struct FormulaEngine<'a> {
    pub u: Universe<'a>,
    budget: Budget,
    reach: OnceCell<Reach>,
    outer: OnceCell<Vec<Vec<usize>>>,
}

impl<'a> FormulaEngine<'a> {
    pub fn new(backend: Backend<'a>, budget: &Budget) -> Result<Self> {
        let vars = (0..budget.pool_vars as u32).collect();
        let u = Universe::build(backend, vars, budget.pool_depth, budget.pool_cap)?;
        Ok(FormulaEngine { u, budget: budget.clone(), reach: OnceCell::new(), outer: OnceCell::new() })
    }

    fn dom(&self, i: usize) -> &Item {
        let c = self.u.candidates.len();
        if i < c {
            &self.u.candidates[i]
        } else {
            &self.u.pool[i - c]
        }
    }

    fn domain_len(&self) -> usize {
        self.u.candidates.len() + self.u.pool.len()
    }

    fn members(&self, idx: &[usize]) -> Members {
        Members::finite(idx.iter().map(|&i| self.u.show(&self.dom(i).formula)))
    }

    fn items_text(&self, items: &[&Item]) -> Members {
        Members::finite(items.iter().map(|i| self.u.show(&i.formula)))
    }

    fn exact(&self) -> Scope {
        Scope::exact().with("finite premise sets")
    }

    fn bounded(&self, extra: &[String]) -> Scope {
        let mut limits = vec![self.u.describe()];
        limits.extend(extra.iter().cloned());
        limits.push("finite premise sets".into());
        Scope::bounded(limits)
    }

    fn witness_limit(&self, k: usize) -> String {
        format!("witness sets of at most {k} formulas from the pool and stock witnesses")
    }

    fn reach(&self) -> Result<&Reach> {
        if let Some(r) = self.reach.get() {
            return Ok(r);
        }
        let r = Reach::build(&self.u, self.budget.max_size, REACH_CAP)?;
        Ok(self.reach.get_or_init(|| r))
    }

    /// Premise sets for universal quantifiers over `Γ`: the empty set, every singleton, then
    /// all pairs when few enough, then seeded random sets of up to `max_size` formulas.
    fn outer(&self) -> &[Vec<usize>] {
        self.outer.get_or_init(|| {
            let c = self.u.candidates.len();
            let n = self.u.pool.len();
            let mut sets: Vec<Vec<usize>> = vec![vec![]];
            sets.extend((0..n).map(|i| vec![c + i]));
            let budget = self.budget.samples;
            if self.budget.max_size >= 2 && n * n.saturating_sub(1) / 2 <= budget {
                for i in 0..n {
                    for j in i + 1..n {
                        sets.push(vec![c + i, c + j]);
                    }
                }
            }
            if self.budget.max_size >= 2 && n >= 2 {
                let mut rng = ChaCha8Rng::seed_from_u64(self.budget.seed);
                let extra = budget.saturating_sub(sets.len() - 1 - n);
                for s in 0..extra {
                    let size = 2 + s % (self.budget.max_size - 1);
                    let size = size.min(n);
                    let mut pick: Vec<usize> = sample(&mut rng, n, size).into_iter().map(|i| c + i).collect();
                    pick.sort_unstable();
                    sets.push(pick);
                }
            }
            sets
        })
    }

    fn outer_limit(&self) -> String {
        format!(
            "Γ ranges over {} premise sets (∅, singletons, then pairs and seeded samples of at most {} formulas, seed {})",
            self.outer().len(),
            self.budget.max_size,
            self.budget.seed
        )
    }

    fn unary(&self, name: &str) -> Result<Op> {
        let sig = self.u.signature();
        let op = sig.lookup(name).ok_or_else(|| Error::Domain(format!("no connective `{name}` in {}", self.u.backend.matrix.name())))?;
        if sig.get(op).arity != 1 {
            return Err(Error::Domain(format!("`{name}` is not unary")));
        }
        Ok(op)
    }

    fn parse_in_universe(&self, text: &str) -> Result<Item> {
        let f = self.u.signature().parse(text)?;
        self.u.item(&f)
    }

    fn show_set(&self, g: &[usize]) -> String {
        self.members(g).to_string()
    }

    pub fn check(&self, p: &PrincipleId) -> Result<Verdict> {
        match p {
            PrincipleId::Ecq { op } => self.ecq(op),
            PrincipleId::BotEcq => Ok(self.bot_ecq()),
            PrincipleId::Gecq => Ok(self.gecq()),
            PrincipleId::NfPara => Ok(self.nf_para()),
            PrincipleId::Secq => self.secq(false),
            PrincipleId::SecqPrime => self.secq(true),
            PrincipleId::Specq => Ok(self.specq()),
            PrincipleId::Pfecq => self.pfecq12(false),
            PrincipleId::Pfecq2 => self.pfecq12(true),
            PrincipleId::Pfecq3 => Ok(self.pfecq3()),
            PrincipleId::Parecq => Ok(self.parecq(false)),
            PrincipleId::Parecq2 => Ok(self.parecq(true)),
            PrincipleId::KPara { k } => self.k_para(k),
            PrincipleId::FinTriv { bound } => self.fin_triv(bound.unwrap_or(self.budget.max_size)),
            PrincipleId::GentleExplosion { circle } => {
                let circle = lfi::parse_circle(self.u.signature(), circle)?;
                let neg = self.unary("¬")?;
                let (holds, items) = lfi::gentle_explosion(&self.u, neg, &circle)?;
                let items: Vec<&Item> = items.iter().collect();
                let set = self.items_text(&items);
                Ok(if holds {
                    Verdict::proven(self.exact(), Witness::Explodes { set })
                } else {
                    Verdict::refuted(self.exact(), Witness::Survives { set, unreached: self.u.fresh_name(&items) })
                })
            }
            PrincipleId::Lfi { circle } => {
                let circle = lfi::parse_circle(self.u.signature(), circle)?;
                let neg = self.unary("¬")?;
                let clauses = lfi::verify(&self.u, neg, &circle)?;
                let status = lfi::overall(&clauses);
                // Clauses (i) and (ii) are existential; a found witness settles them exactly.
                let scope = if status == Status::Proven || clauses[2].status == Status::Refuted {
                    self.exact()
                } else {
                    self.bounded(&[])
                };
                Ok(Verdict::new(status, scope, Some(Witness::Clauses { clauses })))
            }
        }
    }

    fn ecq(&self, op: &str) -> Result<Verdict> {
        let neg = self.unary(op)?;
        let mut log = InstanceLog::default();
        for a in &self.u.pool {
            let na = self.u.item(&Formula::unary(neg, a.formula.clone()))?;
            let set = [a, &na];
            if !self.u.trivial(set) {
                return Ok(Verdict::refuted(
                    self.exact(),
                    Witness::Survives { set: self.items_text(&set), unreached: self.u.fresh_name(&set) },
                ));
            }
            log.record(self.u.show(&a.formula), self.items_text(&set).to_string());
        }
        Ok(Verdict::proven(self.bounded(&[]), log.finish()))
    }

    fn bot_ecq(&self) -> Verdict {
        let sig = self.u.signature();
        let constants: Vec<Op> = sig.constants().collect();
        for &c in &constants {
            let it = self.u.item(&Formula::constant(c)).expect("constants evaluate");
            if self.u.trivial([&it]) {
                return Verdict::proven(self.exact(), Witness::Explodes { set: self.items_text(&[&it]) });
            }
        }
        match constants.first() {
            Some(&c) => {
                let it = self.u.item(&Formula::constant(c)).expect("constants evaluate");
                Verdict::refuted(self.exact(), Witness::Survives { set: self.items_text(&[&it]), unreached: self.u.fresh_name(&[&it]) })
            }
            None => Verdict::new(Status::Refuted, self.exact().with("the signature has no constants"), None),
        }
    }

    fn partner(&self, a: &Item) -> Option<usize> {
        (0..self.domain_len()).find(|&j| a.eff.and(self.dom(j).eff).is_empty())
    }

    fn gecq(&self) -> Verdict {
        let mut log = InstanceLog::default();
        for a in &self.u.pool {
            match self.partner(a) {
                Some(j) => log.record(self.u.show(&a.formula), self.u.show(&self.dom(j).formula)),
                None => {
                    return Verdict::refuted(
                        self.bounded(&[self.witness_limit(1)]),
                        Witness::Element { alpha: self.u.show(&a.formula) },
                    )
                }
            }
        }
        Verdict::proven(self.bounded(&[]), log.finish())
    }

    fn nf_para(&self) -> Verdict {
        let mut log = InstanceLog::default();
        for a in &self.u.pool {
            match self.partner(a) {
                Some(j) => log.record(self.u.show(&a.formula), self.u.show(&self.dom(j).formula)),
                None => {
                    return Verdict::proven(
                        self.bounded(&[self.witness_limit(1)]),
                        Witness::Element { alpha: self.u.show(&a.formula) },
                    )
                }
            }
        }
        Verdict::refuted(self.bounded(&[]), log.finish())
    }

    /// sECQ searches `Γ = {α} ∪ S`; the primed reading searches `Γ` with `Γ ∪ {α}` trivial,
    /// where `Γ` need not contain `α`.
    fn secq(&self, primed: bool) -> Result<Verdict> {
        let k = self.budget.max_size;
        let reach = self.reach()?;
        let mut log = InstanceLog::default();
        for a in &self.u.pool {
            let found: Option<Vec<usize>> = if primed {
                reach.completing(a.eff).map(|s| s.to_vec())
            } else if a.eff.is_empty() {
                Some(vec![])
            } else {
                reach.entries.iter().filter(|(_, s)| s.len() < k).find(|(r, _)| r.and(a.eff).is_empty()).map(|(_, s)| s.clone())
            };
            match found {
                Some(s) => {
                    let mut g: Vec<String> = Vec::new();
                    if !primed {
                        g.push(self.u.show(&a.formula));
                    }
                    g.extend(s.iter().map(|&i| self.u.show(&self.dom(i).formula)));
                    log.record(self.u.show(&a.formula), Members::finite(g).to_string());
                }
                None => {
                    return Ok(Verdict::refuted(
                        self.bounded(&[self.witness_limit(k)]),
                        Witness::Element { alpha: self.u.show(&a.formula) },
                    ))
                }
            }
        }
        Ok(Verdict::proven(self.bounded(&[]), log.finish()))
    }

    fn meet_of(&self, g: &[usize]) -> RowSet {
        self.u.meet(g.iter().map(|&i| self.dom(i)))
    }

    fn specq(&self) -> Verdict {
        let mut log = InstanceLog::default();
        for g in self.outer() {
            let m = self.meet_of(g);
            match (0..self.domain_len()).find(|&j| m.and(self.dom(j).eff).is_empty()) {
                Some(j) => log.record(self.show_set(g), self.u.show(&self.dom(j).formula)),
                None => {
                    return Verdict::refuted(
                        self.bounded(&[self.witness_limit(1)]),
                        Witness::Set { gamma: self.members(g) },
                    )
                }
            }
        }
        Verdict::proven(self.bounded(&[self.outer_limit()]), log.finish())
    }

    /// pfECQ1 extends `Γ` to a trivial superset; pfECQ2 looks for any `Δ` with `Γ ∪ Δ`
    /// trivial. Over finite premise sets of an infinite language both properness side
    /// conditions hold automatically.
    fn pfecq12(&self, second: bool) -> Result<Verdict> {
        let reach = self.reach()?;
        let mut log = InstanceLog::default();
        for g in self.outer() {
            let m = self.meet_of(g);
            let found: Option<Vec<usize>> = if !second && m.is_empty() {
                Some(g.clone())
            } else if !second {
                reach.completing(m).map(|s| g.iter().chain(s).copied().collect())
            } else {
                reach.completing(m).map(|s| s.to_vec()).or_else(|| m.is_empty().then(Vec::new))
            };
            match found {
                Some(d) => log.record(self.show_set(g), self.show_set(&d)),
                None => {
                    return Ok(Verdict::refuted(
                        self.bounded(&[self.witness_limit(self.budget.max_size)]),
                        Witness::Set { gamma: self.members(g) },
                    ))
                }
            }
        }
        Ok(Verdict::proven(self.bounded(&[self.outer_limit()]), log.finish()))
    }

    fn pfecq3(&self) -> Verdict {
        let k = self.budget.max_size;
        let mut log = InstanceLog::default();
        for g in self.outer() {
            let m = self.meet_of(g);
            // Every member δ of a suitable Δ must satisfy the condition for Δ′ = {δ}.
            let usable: Vec<usize> = (0..self.domain_len()).filter(|&j| m.and(self.dom(j).eff).is_empty()).collect();
            let found = (1..=k.min(usable.len())).find_map(|size| {
                combinations(usable.len(), size).map(|c| c.iter().map(|&i| usable[i]).collect::<Vec<_>>()).find(|d| {
                    (1u32..1 << d.len()).all(|mask| {
                        let sub = d.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &j)| self.dom(j));
                        m.and(self.u.meet(sub)).is_empty()
                    })
                })
            });
            match found {
                Some(d) => log.record(self.show_set(g), self.show_set(&d)),
                None => {
                    return Verdict::refuted(self.bounded(&[self.witness_limit(k)]), Witness::Set { gamma: self.members(g) })
                }
            }
        }
        Verdict::proven(self.bounded(&[self.outer_limit()]), log.finish())
    }

    /// The first reading takes `Γ = {α}` and all of the search domain as `Δ`; the second
    /// looks for a single exploding cross pair.
    fn parecq(&self, second: bool) -> Verdict {
        let n = self.domain_len();
        let found = if second {
            (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).find(|&(i, j)| self.dom(i).eff.and(self.dom(j).eff).is_empty())
        } else {
            (0..n).find_map(|i| self.partner(self.dom(i)).map(|j| (i, j)))
        };
        match found {
            Some((i, j)) => Verdict::proven(
                self.exact(),
                Witness::Pair { gamma: self.members(&[i]), delta: self.members(&[j]) },
            ),
            None => Verdict::new(Status::Refuted, self.bounded(&[self.witness_limit(1)]), None),
        }
    }

    fn k_para(&self, k: &[String]) -> Result<Verdict> {
        let ks = k.iter().map(|t| self.parse_in_universe(t)).collect::<Result<Vec<_>>>()?;
        let mut log = InstanceLog::default();
        for a in self.u.domain() {
            match ks.iter().find(|b| a.eff.and(b.eff).is_empty()) {
                None => return Ok(Verdict::proven(self.exact(), Witness::Element { alpha: self.u.show(&a.formula) })),
                Some(b) => log.record(self.u.show(&a.formula), self.u.show(&b.formula)),
            }
        }
        Ok(Verdict::refuted(self.bounded(&[]), log.finish()))
    }

    fn fin_triv(&self, bound: usize) -> Result<Verdict> {
        let reach = if bound == self.budget.max_size {
            self.reach()?
        } else {
            &Reach::build(&self.u, bound, REACH_CAP)?
        };
        match reach.entries.iter().find(|(r, _)| r.is_empty()) {
            Some((_, s)) => Ok(Verdict::proven(self.exact(), Witness::Explodes { set: self.members(s) })),
            None => Ok(Verdict::new(Status::Refuted, self.bounded(&[self.witness_limit(bound)]), None)),
        }
    }
}

/// `size`-element index combinations of `0..n` in lexicographic order.
fn combinations(n: usize, size: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur: Option<Vec<usize>> = if size <= n { Some((0..size).collect()) } else { None };
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let mut c = out.clone();
        let mut i = size;
        loop {
            if i == 0 {
                cur = None;
                break;
            }
            i -= 1;
            if c[i] < n - size + i {
                c[i] += 1;
                for j in i + 1..size {
                    c[j] = c[j - 1] + 1;
                }
                cur = Some(c);
                break;
            }
        }
        Some(out)
    })
}

#[cfg(test)]
mod tests {
    use super::combinations;

    #[test]
    fn combinations_count() {
        assert_eq!(combinations(5, 2).count(), 10);
        assert_eq!(combinations(3, 3).collect::<Vec<_>>(), vec![vec![0, 1, 2]]);
        assert_eq!(combinations(2, 3).count(), 0);
        assert_eq!(combinations(4, 0).count(), 1);
    }
}
