//! Complementary pairs of sets and the poset `(𝔠, ⪯)`.
//!
//! `𝔠` holds the weakly complementary pairs `(Γ, Δ)` with `Γ ≠ ∅` and `Γ ∩ Δ = ∅`, ordered
//! componentwise by inclusion. Adding a fresh element to `Δ` never leaves `𝔠`, so a pair is
//! maximal exactly when `Γ ∪ Δ = L`. [`maximal_complementary_pairs`] still decides
//! maximality by a one-step extension test, and [`brute_force_maximal`] by comparison
//! against all of `𝔠`; the two are cross-checked in tests.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{bit, elements, Mask, Trivials};
use crate::principles::exact;
use crate::structure::FiniteStructure;

/// Largest carrier for which the pair lattice is enumerated.
pub const MAX_PAIR_CARRIER: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PairCandidate {
    pub gamma: Mask,
    pub delta: Mask,
}

impl PairCandidate {
    pub fn new(gamma: Mask, delta: Mask) -> Self {
        PairCandidate { gamma, delta }
    }

    pub fn covers(&self, full: Mask) -> bool {
        self.gamma | self.delta == full
    }

    /// `self ⪯ other`.
    pub fn below(&self, other: &PairCandidate) -> bool {
        self.gamma & !other.gamma == 0 && self.delta & !other.delta == 0
    }
}

pub fn is_complementary<T: Trivials>(t: &T, p: PairCandidate, weak: bool) -> bool {
    exact::is_complementary(t, p.gamma, p.delta, weak)
}

/// Membership in `𝔠`.
pub fn in_c<T: Trivials>(t: &T, p: PairCandidate) -> bool {
    p.gamma != 0 && p.gamma & p.delta == 0 && is_complementary(t, p, true)
}

fn check_size<T: Trivials>(t: &T) -> Result<()> {
    if t.size() > MAX_PAIR_CARRIER {
        return Err(Error::Budget(format!("pair lattice on {} elements exceeds the cap of {MAX_PAIR_CARRIER}", t.size())));
    }
    Ok(())
}

/// All disjoint pairs, visited through their base-3 codes: digit 1 puts the element in
/// `Γ`, digit 2 in `Δ`.
fn disjoint_pairs(n: usize) -> impl Iterator<Item = PairCandidate> {
    let count = 3usize.pow(n as u32);
    (0..count).map(move |mut code| {
        let (mut g, mut d) = (0, 0);
        for i in 0..n {
            match code % 3 {
                1 => g |= bit(i),
                2 => d |= bit(i),
                _ => {}
            }
            code /= 3;
        }
        PairCandidate::new(g, d)
    })
}

/// The members of `𝔠`, in base-3 code order.
pub fn pairs_in_c<T: Trivials>(t: &T) -> Result<Vec<PairCandidate>> {
    check_size(t)?;
    Ok(disjoint_pairs(t.size()).filter(|&p| in_c(t, p)).collect())
}

/// The `⪯`-maximal elements of `𝔠`, sorted.
pub fn maximal_complementary_pairs<T: Trivials>(t: &T) -> Result<Vec<PairCandidate>> {
    check_size(t)?;
    let full = t.full();
    let mut out: Vec<PairCandidate> = disjoint_pairs(t.size())
        .filter(|&p| in_c(t, p))
        .filter(|p| {
            elements(full & !(p.gamma | p.delta)).all(|x| {
                !in_c(t, PairCandidate::new(p.gamma | bit(x), p.delta)) && !in_c(t, PairCandidate::new(p.gamma, p.delta | bit(x)))
            })
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Maximal elements by comparison with every other member of `𝔠`.
pub fn brute_force_maximal<T: Trivials>(t: &T) -> Result<Vec<PairCandidate>> {
    let c = pairs_in_c(t)?;
    let mut out: Vec<PairCandidate> = c.iter().copied().filter(|p| !c.iter().any(|q| q != p && p.below(q))).collect();
    out.sort();
    Ok(out)
}

/// Extends a member of `𝔠` one element at a time, into `Γ` when that stays in `𝔠` and into
/// `Δ` otherwise.
pub fn saturate<T: Trivials>(t: &T, seed: PairCandidate) -> Option<PairCandidate> {
    if !in_c(t, seed) {
        return None;
    }
    let mut p = seed;
    for x in elements(t.full() & !(seed.gamma | seed.delta)) {
        let grown = PairCandidate::new(p.gamma | bit(x), p.delta);
        p = if in_c(t, grown) { grown } else { PairCandidate::new(p.gamma, p.delta | bit(x)) };
    }
    Some(p)
}

/// Both sides of the point-trivializer lemma: no `φ` with `C({φ}) = L`, and every
/// complementary pair with `Γ × Δ ≠ ∅` is disjoint. The second is checked by enumeration.
pub fn point_trivializer_lemma<T: Trivials>(t: &T) -> (bool, bool) {
    let full = t.full();
    let no_point = exact::point_trivializer(t).is_none();
    let disjoint = (1..=full).all(|g| {
        (1..=full).filter(|d| g & d != 0).all(|d| !exact::is_complementary(t, g, d, false))
    });
    (no_point, disjoint)
}

/// Poset axioms of `⪯` on the enumerated `𝔠`.
pub fn is_partial_order(c: &[PairCandidate]) -> bool {
    let reflexive = c.iter().all(|p| p.below(p));
    let antisymmetric = c.iter().all(|p| c.iter().all(|q| !(p.below(q) && q.below(p)) || p == q));
    let transitive =
        c.iter().all(|p| c.iter().filter(|q| p.below(q)).all(|q| c.iter().filter(|r| q.below(r)).all(|r| p.below(r))));
    reflexive && antisymmetric && transitive
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaximalPairReport {
    pub pairs: Vec<(Vec<String>, Vec<String>)>,
    pub maximal: usize,
    pub covering: usize,
}

pub fn report(s: &FiniteStructure) -> Result<MaximalPairReport> {
    let full = s.full();
    let max = maximal_complementary_pairs(s)?;
    let names = |m: Mask| elements(m).map(|i| s.names()[i].clone()).collect::<Vec<_>>();
    Ok(MaximalPairReport {
        pairs: max.iter().map(|p| (names(p.gamma), names(p.delta))).collect(),
        maximal: max.len(),
        covering: max.iter().filter(|p| p.covers(full)).count(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{Family, SmallFamily};

    fn example() -> Family {
        // Trivial two-element sets exactly {a, b} and {a, c}.
        Family::from_fn(3, |m| m == 0b011 || m == 0b101 || m == 0b111)
    }

    #[test]
    fn spec_examples() {
        let t = example();
        assert!(is_complementary(&t, PairCandidate::new(0b110, 0b001), true));
        assert!(is_complementary(&t, PairCandidate::new(0b110, 0b001), false));
        assert!(is_complementary(&t, PairCandidate::new(0, 0b111), false));
        assert!(is_complementary(&t, PairCandidate::new(0, 0b111), true));
        let max = maximal_complementary_pairs(&t).unwrap();
        assert!(max.contains(&PairCandidate::new(0b110, 0b001)));
        assert!(max.iter().all(|p| p.covers(0b111)));

        let none = Family::from_fn(3, |m| m == 0b111);
        assert!(maximal_complementary_pairs(&none).unwrap().is_empty());

        let point = Family::from_fn(2, |m| m & 1 == 1);
        assert_eq!(point_trivializer_lemma(&point), (false, false));
    }

    #[test]
    fn extension_test_matches_brute_force() {
        let mut x: u64 = 0x2545_f491_4f6c_dd1d;
        for n in 1..=4usize {
            for _ in 0..300 {
                x ^= x << 13;
                x ^= x >> 7;
                x ^= x << 17;
                let bits = if n == 4 { x & 0xffff } else { x };
                let t = SmallFamily::new(n, bits);
                let max = maximal_complementary_pairs(&t).unwrap();
                assert_eq!(max, brute_force_maximal(&t).unwrap());
                assert!(max.iter().all(|p| p.covers(t.full())));
                let c = pairs_in_c(&t).unwrap();
                assert!(is_partial_order(&c));
                for &p in &c {
                    let s = saturate(&t, p).unwrap();
                    assert!(p.below(&s) && max.contains(&s));
                }
                let (a, b) = point_trivializer_lemma(&t);
                assert_eq!(a, b);
            }
        }
    }
}
