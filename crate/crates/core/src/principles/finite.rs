//! Exact checks on finite structures.

use super::exact;
use super::verdict::{InstanceLog, Members, Scope, Status, Verdict, Witness};
use super::{Budget, PrincipleId};
use crate::error::{Error, Result};
use crate::family::{bit, elements, Mask, Trivials};
use crate::structure::FiniteStructure;

fn members(s: &FiniteStructure, m: Mask) -> Members {
    Members::finite(elements(m).map(|i| s.names()[i].clone()))
}

fn triv(s: &FiniteStructure, m: Mask) -> bool {
    Trivials::is_trivial(s, m)
}

fn name(s: &FiniteStructure, i: usize) -> String {
    s.names()[i].clone()
}

fn survives(s: &FiniteStructure, m: Mask) -> Witness {
    let out = s.full() & !s.apply(m);
    let unreached = elements(out).next().map(|i| name(s, i)).unwrap_or_default();
    Witness::Survives { set: members(s, m), unreached }
}

fn too_large(s: &FiniteStructure, budget: &Budget, p: &PrincipleId) -> Verdict {
    Verdict::unknown(Scope::bounded(vec![format!(
        "{p} quantifies over pairs of subsets; carrier of {} exceeds the cap of {}",
        s.size(),
        budget.carrier_cap
    )]))
}

fn universal<E>(
    result: std::result::Result<(), E>,
    instances: impl Iterator<Item = (String, String)>,
    fail: impl FnOnce(E) -> Witness,
) -> Verdict {
    match result {
        Ok(()) => {
            let mut log = InstanceLog::default();
            for (at, w) in instances {
                log.record(at, w);
            }
            Verdict::proven(Scope::exact(), log.finish())
        }
        Err(e) => Verdict::refuted(Scope::exact(), fail(e)),
    }
}

pub fn check(s: &FiniteStructure, p: &PrincipleId, budget: &Budget) -> Result<Verdict> {
    let n = s.size();
    let big = n > budget.carrier_cap;
    let all_proper = move || 0..s.full();
    Ok(match p {
        PrincipleId::Ecq { op } => {
            let neg = &s.unary_op(op)?.map;
            universal(
                exact::ecq(s, neg),
                (0..n).map(|a| (name(s, a), s.show(bit(a) | bit(neg[a])))),
                |a| survives(s, bit(a) | bit(neg[a])),
            )
        }
        PrincipleId::BotEcq => match s.constants().iter().find(|(_, c)| triv(s, bit(*c))) {
            Some((_, c)) => Verdict::proven(Scope::exact(), Witness::Explodes { set: members(s, bit(*c)) }),
            None => match s.constants().first() {
                Some((_, c)) => Verdict::refuted(Scope::exact(), survives(s, bit(*c))),
                None => Verdict::new(Status::Refuted, Scope::exact().with("the structure has no constants"), None),
            },
        },
        PrincipleId::Gecq | PrincipleId::NfPara => {
            let v = universal(
                exact::gecq(s),
                (0..n).map(|a| (name(s, a), name(s, exact::gecq_partner(s, a).expect("gECQ holds")))),
                |a| Witness::Element { alpha: name(s, a) },
            );
            if *p == PrincipleId::NfPara {
                flip(v)
            } else {
                v
            }
        }
        PrincipleId::Secq => universal(
            exact::secq(s),
            (0..n).map(|a| (name(s, a), s.show(exact::secq_set(s, a).expect("sECQ holds")))),
            |a| Witness::Element { alpha: name(s, a) },
        ),
        PrincipleId::SecqPrime => universal(
            exact::secq_prime(s),
            (0..n).map(|a| (name(s, a), s.show(exact::secq_prime_set(s, a).expect("sECQ′ holds")))),
            |a| Witness::Element { alpha: name(s, a) },
        ),
        PrincipleId::Specq => universal(
            exact::specq(s),
            all_proper().map(|g| (s.show(g), name(s, exact::specq_point(s, g).expect("spECQ holds")))),
            |g| Witness::Set { gamma: members(s, g) },
        ),
        PrincipleId::Pfecq => universal(
            exact::pfecq1(s),
            all_proper().map(|g| (s.show(g), s.show(exact::pfecq1_superset(s, g).expect("pfECQ holds")))),
            |g| Witness::Set { gamma: members(s, g) },
        ),
        PrincipleId::Pfecq2 if big => too_large(s, budget, p),
        PrincipleId::Pfecq2 => universal(
            exact::pfecq2(s),
            all_proper().map(|g| (s.show(g), s.show(exact::pfecq2_set(s, g).expect("pfECQ2 holds")))),
            |g| Witness::Set { gamma: members(s, g) },
        ),
        PrincipleId::Pfecq3 if big => too_large(s, budget, p),
        PrincipleId::Pfecq3 => universal(
            exact::pfecq3(s),
            all_proper().map(|g| (s.show(g), s.show(exact::pfecq3_set(s, g).expect("pfECQ3 holds")))),
            |g| Witness::Set { gamma: members(s, g) },
        ),
        PrincipleId::Parecq | PrincipleId::Parecq2 => {
            // Beyond the cap, both readings reduce to finding one exploding pair.
            let found = if big {
                exact::trivial_pair(s).map(|(a, b)| (bit(a), bit(b)))
            } else if *p == PrincipleId::Parecq {
                exact::parecq1(s)
            } else {
                exact::parecq2(s)
            };
            match found {
                Some((g, d)) => Verdict::proven(Scope::exact(), Witness::Pair { gamma: members(s, g), delta: members(s, d) }),
                None => Verdict::new(Status::Refuted, Scope::exact(), None),
            }
        }
        PrincipleId::KPara { k } => {
            let km = k.iter().map(|t| s.element(t).map(bit)).collect::<Result<Vec<_>>>()?.into_iter().fold(0, |m, b| m | b);
            match exact::k_para(s, km) {
                Some(a) => Verdict::proven(Scope::exact(), Witness::Element { alpha: name(s, a) }),
                None => {
                    let mut log = InstanceLog::default();
                    for a in 0..n {
                        let b = elements(km).find(|&b| triv(s, bit(a) | bit(b))).expect("k_para fails");
                        log.record(name(s, a), name(s, b));
                    }
                    Verdict::refuted(Scope::exact(), log.finish())
                }
            }
        }
        PrincipleId::FinTriv { bound } => {
            let bound = bound.unwrap_or(n);
            match exact::fin_triv(s, bound) {
                Some(m) => Verdict::proven(Scope::exact(), Witness::Explodes { set: members(s, m) }),
                None => Verdict::new(Status::Refuted, Scope::exact().with(format!("sets of at most {bound} elements")), None),
            }
        }
        PrincipleId::GentleExplosion { .. } | PrincipleId::Lfi { .. } => {
            return Err(Error::Domain(format!("{} needs a formula language; finite structures have none", p.name())))
        }
    })
}

pub(crate) fn flip(v: Verdict) -> Verdict {
    let status = match v.status {
        Status::Proven => Status::Refuted,
        Status::Refuted => Status::Proven,
        Status::Unknown => Status::Unknown,
    };
    Verdict { status, ..v }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery::finite::pure_reflexive;

    #[test]
    fn pure_reflexive_three() {
        let s = pure_reflexive(3).unwrap();
        let b = Budget::default();
        let v = check(&s, &PrincipleId::Gecq, &b).unwrap();
        assert_eq!(v.status, Status::Refuted);
        assert_eq!(v.witness, Some(Witness::Element { alpha: "a".into() }));
        assert!(check(&s, &PrincipleId::NfPara, &b).unwrap().is(Status::Proven));
        assert!(check(&s, &PrincipleId::Parecq, &b).unwrap().is(Status::Refuted));
        assert!(check(&s, &PrincipleId::KPara { k: vec![] }, &b).unwrap().is(Status::Proven));
        assert!(check(&s, &PrincipleId::FinTriv { bound: None }, &b).unwrap().is(Status::Proven));
        assert!(check(&s, &PrincipleId::FinTriv { bound: Some(2) }, &b).unwrap().is(Status::Refuted));
    }

    #[test]
    fn caps_and_domains() {
        let s = pure_reflexive(8).unwrap();
        let b = Budget::default();
        assert!(check(&s, &PrincipleId::Pfecq3, &b).unwrap().is(Status::Unknown));
        assert!(check(&s, &PrincipleId::Parecq2, &b).unwrap().is(Status::Refuted));
        assert!(check(&s, &"lfi:p".parse().unwrap(), &b).is_err());
        assert!(check(&s, &"ecq:neg".parse().unwrap(), &b).is_err());
    }

    #[test]
    fn ecq_with_operation() {
        let s = FiniteStructure::from_fn(2, |m| if m == 0 { 0 } else { 0b11 }).unwrap().with_unary_op("neg", vec![1, 0]).unwrap();
        let v = check(&s, &"ecq:neg".parse().unwrap(), &Budget::default()).unwrap();
        assert!(v.is(Status::Proven));
    }
}
