//! The theorem battery: implications between principles, checked on every consequence
//! table over a small carrier or on random samples over larger ones.
//!
//! Apart from the Tarskian conditions, the `QN` inclusion law and ECQ, every quantity is a
//! function of the family of trivial sets. On three elements there are only 256 such
//! families, so their facts are computed once and looked up while the 8^8 tables are
//! visited.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::exact;
use super::qn::qn_laws;
use crate::family::{bit, elements, full_mask, Mask, SmallFamily, Trivials};
use crate::par::{fold_range, Exec};
use crate::partial;
use crate::structure::tarskian_flags;

/// A law with the least carrier size from which it is asserted.
#[derive(Clone, Copy, Debug)]
pub struct Law {
    pub name: &'static str,
    pub min_carrier: usize,
}

const fn law(name: &'static str, min_carrier: usize) -> Law {
    Law { name, min_carrier }
}

pub const LAWS: [Law; 20] = [
    law("gECQ ⇒ sECQ", 3),
    law("spECQ ⇒ gECQ", 2),
    law("spECQ ⇒ sECQ", 3),
    law("spECQ ⇒ pfECQ", 0),
    law("pfECQ1 ⇔ pfECQ2", 0),
    law("pfECQ3 ⇔ spECQ", 2),
    law("pfECQ ⇒ sECQ", 2),
    law("sECQ ⇔ sECQ′", 0),
    law("parECQ1 ⇔ parECQ2", 0),
    law("gECQ ⇒ parECQ", 0),
    law("spECQ ⇒ some C({α}) = L", 0),
    law("monotone ∧ NF-para ⇒ no point trivializer", 0),
    law("no point trivializer ⇔ complementary pairs are disjoint", 0),
    law("no point trivializer ∧ parECQ ∧ gECQ ⇒ a maximal pair covers L", 0),
    law("K-para: ∅ always, L iff NF-para, antitone in K", 1),
    law("QN contraposition", 0),
    law("QN double negation", 0),
    law("Tarskian ∧ β ∈ C({α}) ⇒ QN(β) ⊆ QN(α)", 0),
    law("monotone ∧ finitely trivializable ⇒ every α lies in a trivial set", 0),
    law("reflexive ∧ transitive ⇒ monotone", 0),
];

pub const ECQ_LAWS: [Law; 4] = [
    law("¬-ECQ ⇒ gECQ", 0),
    law("¬-ECQ ⇒ parECQ", 1),
    law("NF-para ⇒ ¬-ECQ fails", 1),
    law("¬-ECQ ∧ every {α, ¬α} ⊊ L ⇒ sECQ", 0),
];

/// Facts about one family of trivial sets.
#[derive(Clone, Copy, Debug, Default)]
struct Facts {
    gecq: bool,
    secq: bool,
    secq_prime: bool,
    specq: bool,
    pfecq1: bool,
    pfecq2: bool,
    pfecq3: bool,
    parecq1: bool,
    parecq2: bool,
    point: bool,
    lemma: (bool, bool),
    covering_maximal: bool,
    k_para: bool,
    qn_contraposition: bool,
    qn_double: bool,
    fin_triv: bool,
    every_alpha_in_trivial: bool,
}

fn facts<T: Trivials>(t: &T) -> Facts {
    let n = t.size();
    let full = t.full();
    let k = |m: Mask| exact::k_para(t, m).is_some();
    let nf_para = exact::gecq(t).is_err();
    let k_para = k(0) == (n > 0)
        && k(full) == nf_para
        && (0..=full).all(|km| !k(km) || crate::family::submasks(km).all(k));
    let [qn_contraposition, qn_double, _] = qn_laws(t, |m| m, false);
    Facts {
        gecq: !nf_para,
        secq: exact::secq(t).is_ok(),
        secq_prime: exact::secq_prime(t).is_ok(),
        specq: exact::specq(t).is_ok(),
        pfecq1: exact::pfecq1(t).is_ok(),
        pfecq2: exact::pfecq2(t).is_ok(),
        pfecq3: exact::pfecq3(t).is_ok(),
        parecq1: exact::parecq1(t).is_some(),
        parecq2: exact::parecq2(t).is_some(),
        point: exact::point_trivializer(t).is_some(),
        lemma: partial::point_trivializer_lemma(t),
        covering_maximal: partial::maximal_complementary_pairs(t).is_ok_and(|ps| ps.iter().any(|p| p.covers(full))),
        k_para,
        qn_contraposition,
        qn_double,
        fin_triv: exact::fin_triv(t, n).is_some(),
        every_alpha_in_trivial: (0..n).all(|a| (0..=full).any(|m| m & bit(a) != 0 && t.is_trivial(m))),
    }
}

/// `None` when the hypothesis fails or the carrier is too small; otherwise whether the
/// conclusion holds.
fn outcomes<T: Trivials>(t: &T, f: &Facts, c: impl Fn(Mask) -> Mask + Copy) -> [Option<bool>; 20] {
    let n = t.size();
    let [reflexive, monotone, transitive, _] = tarskian_flags(n, c);
    let imp = |h: bool, c: bool| h.then_some(c);
    let tarskian = reflexive && monotone && transitive;
    let inclusion = tarskian.then(|| qn_laws(t, c, true)[2]);
    let mut out = [
        imp(f.gecq, f.secq),
        imp(f.specq, f.gecq),
        imp(f.specq, f.secq),
        imp(f.specq, f.pfecq1),
        Some(f.pfecq1 == f.pfecq2),
        Some(f.pfecq3 == f.specq),
        imp(f.pfecq1, f.secq),
        Some(f.secq == f.secq_prime),
        Some(f.parecq1 == f.parecq2),
        imp(f.gecq, f.parecq1),
        imp(f.specq, f.point),
        imp(monotone && !f.gecq, !f.point),
        Some(f.lemma.0 == f.lemma.1),
        imp(!f.point && f.parecq1 && f.gecq, f.covering_maximal),
        Some(f.k_para),
        Some(f.qn_contraposition),
        Some(f.qn_double),
        inclusion,
        imp(monotone && f.fin_triv, f.every_alpha_in_trivial),
        imp(reflexive && transitive, monotone),
    ];
    for (o, l) in out.iter_mut().zip(LAWS.iter()) {
        if n < l.min_carrier {
            *o = None;
        }
    }
    out
}

fn ecq_outcomes<T: Trivials>(t: &T, f: &Facts, neg: &[usize]) -> [Option<bool>; 4] {
    let n = t.size();
    let ecq = exact::ecq(t, neg).is_ok();
    let proper_pairs = (0..n).all(|a| bit(a) | bit(neg[a]) != t.full());
    let mut out = [
        ecq.then_some(f.gecq),
        ecq.then_some(f.parecq1),
        (!f.gecq).then_some(!ecq),
        (ecq && proper_pairs).then_some(f.secq),
    ];
    for (o, l) in out.iter_mut().zip(ECQ_LAWS.iter()) {
        if n < l.min_carrier {
            *o = None;
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawTally {
    pub law: &'static str,
    /// Structures on which the hypothesis held.
    pub applicable: u64,
    pub violations: u64,
    /// Index of the first violating structure in visiting order.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_violation: Option<u64>,
}

#[derive(Clone, Debug)]
struct Acc<const K: usize> {
    visited: u64,
    applicable: [u64; K],
    violations: [u64; K],
    first: [Option<u64>; K],
}

impl<const K: usize> Acc<K> {
    fn new() -> Self {
        Acc { visited: 0, applicable: [0; K], violations: [0; K], first: [None; K] }
    }

    fn add(mut self, index: u64, outcomes: [Option<bool>; K]) -> Self {
        self.visited += 1;
        for (i, o) in outcomes.into_iter().enumerate() {
            match o {
                Some(true) => self.applicable[i] += 1,
                Some(false) => {
                    self.applicable[i] += 1;
                    self.violations[i] += 1;
                    self.first[i] = Some(self.first[i].map_or(index, |f| f.min(index)));
                }
                None => {}
            }
        }
        self
    }

    fn merge(mut self, o: Self) -> Self {
        self.visited += o.visited;
        for i in 0..K {
            self.applicable[i] += o.applicable[i];
            self.violations[i] += o.violations[i];
            self.first[i] = match (self.first[i], o.first[i]) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            };
        }
        self
    }

    fn report(self, carrier: usize, scope: &'static str, laws: &[Law; K]) -> BatteryReport {
        BatteryReport {
            carrier,
            scope,
            structures: self.visited,
            laws: (0..K)
                .map(|i| LawTally {
                    law: laws[i].name,
                    applicable: self.applicable[i],
                    violations: self.violations[i],
                    first_violation: self.first[i],
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BatteryReport {
    pub carrier: usize,
    /// `exhaustive` or `sampled`.
    pub scope: &'static str,
    pub structures: u64,
    pub laws: Vec<LawTally>,
}

impl BatteryReport {
    pub fn passed(&self) -> bool {
        self.laws.iter().all(|l| l.violations == 0)
    }
}

/// Number of consequence tables on `n` elements, `(2^n)^(2^n)`.
pub fn table_count(n: usize) -> u64 {
    1u64 << (n << n)
}

/// The table with the given index: `C(m)` is digit `m` of the index in base `2^n`.
pub fn decode(n: usize, index: u64) -> [Mask; 8] {
    let mut t = [0; 8];
    for (m, c) in t.iter_mut().enumerate().take(1 << n) {
        *c = (index >> (m * n)) as Mask & full_mask(n);
    }
    t
}

fn family_of(n: usize, table: &[Mask]) -> SmallFamily {
    let full = full_mask(n);
    let bits = table.iter().take(1 << n).enumerate().fold(0u64, |b, (m, &c)| if c == full { b | 1 << m } else { b });
    SmallFamily::new(n, bits)
}

/// Every table on `n ≤ 3` elements.
pub fn exhaustive(n: usize, exec: Exec) -> BatteryReport {
    assert!((1..=3).contains(&n), "exhaustive battery is for carriers of 1 to 3 elements");
    let facts_by_family: Vec<Facts> = (0..1u64 << (1 << n)).map(|bits| facts(&SmallFamily::new(n, bits))).collect();
    let acc = fold_range(
        exec,
        0..table_count(n),
        1 << 14,
        Acc::<20>::new,
        |acc, index| {
            let table = decode(n, index);
            let fam = family_of(n, &table);
            let o = outcomes(&fam, &facts_by_family[fam.bits() as usize], |m| table[m as usize]);
            acc.add(index, o)
        },
        Acc::merge,
    );
    acc.report(n, "exhaustive", &LAWS)
}

/// A random table on `n ≤ 6` elements. Half of the draws are Tarskian: an up-closed
/// family of trivial sets with `C` the identity elsewhere. The rest make each set trivial
/// with a per-draw density and give the others a random consequence.
pub fn random_table(n: usize, rng: &mut impl Rng) -> Vec<Mask> {
    let full = full_mask(n);
    let size = 1usize << n;
    if rng.random_bool(0.5) {
        let gens: Vec<Mask> = (0..rng.random_range(0..=3)).map(|_| rng.random_range(0..=full)).collect();
        (0..size as Mask).map(|m| if gens.iter().any(|&g| g & !m == 0) { full } else { m }).collect()
    } else {
        let density = rng.random_range(0.05..0.7);
        let reflexive = rng.random_bool(0.5);
        (0..size as Mask)
            .map(|m| {
                if rng.random_bool(density) {
                    full
                } else {
                    let c = rng.random_range(0..=full);
                    if reflexive {
                        c | m
                    } else {
                        c
                    }
                }
            })
            .collect()
    }
}

/// A generator for draw `i`, independent of how draws are scheduled.
pub fn draw_rng(seed: u64, i: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i);
    rng
}

/// `count` random tables on `n ≤ 6` elements.
pub fn sampled(n: usize, count: u64, seed: u64, exec: Exec) -> BatteryReport {
    assert!((1..=SmallFamily::MAX).contains(&n));
    let acc = fold_range(
        exec,
        0..count,
        256,
        Acc::<20>::new,
        |acc, i| {
            let table = random_table(n, &mut draw_rng(seed, i));
            let fam = family_of(n, &table);
            let f = facts(&fam);
            acc.add(i, outcomes(&fam, &f, |m| table[m as usize]))
        },
        Acc::merge,
    );
    acc.report(n, "sampled", &LAWS)
}

/// `count` random pairs of a table on `n ≤ 3` elements and one of the `n^n` unary maps.
pub fn ecq_sampled(n: usize, count: u64, seed: u64, exec: Exec) -> BatteryReport {
    assert!((1..=3).contains(&n));
    let facts_by_family: Vec<Facts> = (0..1u64 << (1 << n)).map(|bits| facts(&SmallFamily::new(n, bits))).collect();
    let maps = (n as u64).pow(n as u32);
    let acc = fold_range(
        exec,
        0..count,
        1 << 12,
        Acc::<4>::new,
        |acc, i| {
            let mut rng = draw_rng(seed, i);
            let table = decode(n, rng.random_range(0..table_count(n)));
            let mut code = rng.random_range(0..maps) as usize;
            let neg: Vec<usize> = (0..n)
                .map(|_| {
                    let x = code % n;
                    code /= n;
                    x
                })
                .collect();
            let fam = family_of(n, &table);
            acc.add(i, ecq_outcomes(&fam, &facts_by_family[fam.bits() as usize], &neg))
        },
        Acc::merge,
    );
    acc.report(n, "sampled", &ECQ_LAWS)
}

/// A table as `Γ→C(Γ)` entries.
pub fn describe_table(n: usize, table: &[Mask]) -> String {
    let show = |m: Mask| format!("{{{}}}", elements(m).map(|i| ((b'a' + i as u8) as char).to_string()).collect::<Vec<_>>().join(","));
    (0..1 << n).map(|m| format!("{}→{}", show(m as Mask), show(table[m]))).collect::<Vec<_>>().join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_carriers_exhaustive() {
        for n in 1..=2 {
            let r = exhaustive(n, Exec::Sequential);
            assert_eq!(r.structures, table_count(n));
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn decode_round_trip() {
        let t = decode(3, 0o76543210);
        assert_eq!(&t, &[0, 1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(table_count(3), 16_777_216);
    }

    #[test]
    fn samples_are_deterministic_and_pass() {
        let a = sampled(4, 300, 7, Exec::Sequential);
        let b = sampled(4, 300, 7, Exec::Parallel);
        assert_eq!(a, b);
        assert!(a.passed(), "{a:?}");
        assert!(ecq_sampled(3, 2000, 1, Exec::Parallel).passed());
    }
}
