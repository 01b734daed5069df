//! Exact decisions over a family of trivial sets on a finite carrier.
//!
//! Each function transcribes one definition by direct enumeration. Universal principles
//! return the first failing instance; existential ones return a witness.

use crate::family::{bit, elements, submasks, Mask, Trivials};

#[inline]
fn pair<T: Trivials>(t: &T, a: usize, b: usize) -> bool {
    t.is_trivial(bit(a) | bit(b))
}

/// `β` with `C({α, β}) = L`, least first.
pub fn gecq_partner<T: Trivials>(t: &T, alpha: usize) -> Option<usize> {
    (0..t.size()).find(|&b| pair(t, alpha, b))
}

/// gECQ; `Err(α)` for the first `α` without a partner.
pub fn gecq<T: Trivials>(t: &T) -> Result<(), usize> {
    match (0..t.size()).find(|&a| gecq_partner(t, a).is_none()) {
        Some(a) => Err(a),
        None => Ok(()),
    }
}

/// Least exploding `Γ ⊊ L` containing `α`.
pub fn secq_set<T: Trivials>(t: &T, alpha: usize) -> Option<Mask> {
    let full = t.full();
    let mut found = None;
    for rest in submasks(full & !bit(alpha)) {
        let g = rest | bit(alpha);
        if g != full && t.is_trivial(g) {
            found = Some(g);
        }
    }
    found
}

pub fn secq<T: Trivials>(t: &T) -> Result<(), usize> {
    match (0..t.size()).find(|&a| secq_set(t, a).is_none()) {
        Some(a) => Err(a),
        None => Ok(()),
    }
}

/// `Γ ⊊ L` with `Γ ∪ {α} ⊊ L` exploding, least `Γ` first.
pub fn secq_prime_set<T: Trivials>(t: &T, alpha: usize) -> Option<Mask> {
    let full = t.full();
    (0..full).find(|&g| {
        let u = g | bit(alpha);
        u != full && t.is_trivial(u)
    })
}

pub fn secq_prime<T: Trivials>(t: &T) -> Result<(), usize> {
    match (0..t.size()).find(|&a| secq_prime_set(t, a).is_none()) {
        Some(a) => Err(a),
        None => Ok(()),
    }
}

/// `α` with `Γ ∪ {α} ⊊ L` exploding.
pub fn specq_point<T: Trivials>(t: &T, gamma: Mask) -> Option<usize> {
    let full = t.full();
    (0..t.size()).find(|&a| {
        let u = gamma | bit(a);
        u != full && t.is_trivial(u)
    })
}

/// spECQ; `Err(Γ)` for the first proper `Γ` without a one-point extension.
pub fn specq<T: Trivials>(t: &T) -> Result<(), Mask> {
    match (0..t.full()).find(|&g| specq_point(t, g).is_none()) {
        Some(g) => Err(g),
        None => Ok(()),
    }
}

/// Exploding `Δ ⊊ L` with `Γ ⊆ Δ`.
pub fn pfecq1_superset<T: Trivials>(t: &T, gamma: Mask) -> Option<Mask> {
    let full = t.full();
    let mut found = None;
    for extra in submasks(full & !gamma) {
        let d = gamma | extra;
        if d != full && t.is_trivial(d) {
            found = Some(d);
        }
    }
    found
}

pub fn pfecq1<T: Trivials>(t: &T) -> Result<(), Mask> {
    match (0..t.full()).find(|&g| pfecq1_superset(t, g).is_none()) {
        Some(g) => Err(g),
        None => Ok(()),
    }
}

/// `Δ ⊊ L` with `Γ ∪ Δ ⊊ L` exploding.
pub fn pfecq2_set<T: Trivials>(t: &T, gamma: Mask) -> Option<Mask> {
    let full = t.full();
    (0..full).find(|&d| {
        let u = gamma | d;
        u != full && t.is_trivial(u)
    })
}

pub fn pfecq2<T: Trivials>(t: &T) -> Result<(), Mask> {
    match (0..t.full()).find(|&g| pfecq2_set(t, g).is_none()) {
        Some(g) => Err(g),
        None => Ok(()),
    }
}

/// `∅ ≠ Δ ⊊ L` with `Γ ∪ Δ ⊊ L` and `Γ ∪ Δ′` exploding for all non-empty `Δ′ ⊆ Δ`.
pub fn pfecq3_set<T: Trivials>(t: &T, gamma: Mask) -> Option<Mask> {
    let full = t.full();
    (1..full).find(|&d| {
        (gamma | d) != full && submasks(d).filter(|&s| s != 0).all(|s| t.is_trivial(gamma | s))
    })
}

pub fn pfecq3<T: Trivials>(t: &T) -> Result<(), Mask> {
    match (0..t.full()).find(|&g| pfecq3_set(t, g).is_none()) {
        Some(g) => Err(g),
        None => Ok(()),
    }
}

/// First reading of partial explosion: non-empty `Γ` and `Δ` with every `α ∈ Γ` exploding
/// together with some `β ∈ Δ`.
pub fn parecq1<T: Trivials>(t: &T) -> Option<(Mask, Mask)> {
    let full = t.full();
    for g in 1..=full {
        for d in 0..=full {
            if elements(g).all(|a| elements(d).any(|b| pair(t, a, b))) {
                return Some((g, d));
            }
        }
    }
    None
}

/// Second reading: `Γ × Δ ≠ ∅` and every cross pair explodes.
pub fn parecq2<T: Trivials>(t: &T) -> Option<(Mask, Mask)> {
    let full = t.full();
    for g in 1..=full {
        for d in 1..=full {
            if elements(g).all(|a| elements(d).all(|b| pair(t, a, b))) {
                return Some((g, d));
            }
        }
    }
    None
}

/// Some `{α, β}` explodes (possibly `α = β`).
pub fn trivial_pair<T: Trivials>(t: &T) -> Option<(usize, usize)> {
    let n = t.size();
    (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).find(|&(a, b)| pair(t, a, b))
}

/// Some `φ` with `C({φ}) = L`.
pub fn point_trivializer<T: Trivials>(t: &T) -> Option<usize> {
    (0..t.size()).find(|&a| t.is_trivial(bit(a)))
}

/// ECQ for the unary map `neg`; `Err(α)` when `{α, neg(α)}` does not explode.
pub fn ecq<T: Trivials>(t: &T, neg: &[usize]) -> Result<(), usize> {
    match (0..t.size()).find(|&a| !pair(t, a, neg[a])) {
        Some(a) => Err(a),
        None => Ok(()),
    }
}

/// `α` exploding with no member of `K`.
pub fn k_para<T: Trivials>(t: &T, k: Mask) -> Option<usize> {
    (0..t.size()).find(|&a| elements(k).all(|b| !pair(t, a, b)))
}

/// A smallest exploding set with at most `bound` elements.
pub fn fin_triv<T: Trivials>(t: &T, bound: usize) -> Option<Mask> {
    (0..=t.full())
        .filter(|m| (m.count_ones() as usize) <= bound && t.is_trivial(*m))
        .min_by_key(|m| (m.count_ones(), *m))
}

/// `QN(α) = {β : C({α, β}) = L}`.
pub fn quasi_negations<T: Trivials>(t: &T, alpha: usize) -> Mask {
    (0..t.size()).filter(|&b| pair(t, alpha, b)).fold(0, |m, b| m | bit(b))
}

/// Every `(α, β) ∈ Γ × Δ` explodes (strong) or every `α ∈ Γ` explodes with some `β ∈ Δ`
/// (weak).
pub fn is_complementary<T: Trivials>(t: &T, gamma: Mask, delta: Mask, weak: bool) -> bool {
    if weak {
        elements(gamma).all(|a| elements(delta).any(|b| pair(t, a, b)))
    } else {
        elements(gamma).all(|a| elements(delta).all(|b| pair(t, a, b)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{Family, SmallFamily};

    fn fam(n: usize, trivial: &[Mask]) -> Family {
        Family::from_fn(n, |m| trivial.contains(&m))
    }

    #[test]
    fn pure_reflexive_three() {
        let t = fam(3, &[0b111]);
        assert_eq!(gecq(&t), Err(0));
        assert_eq!(secq(&t), Err(0));
        assert_eq!(specq(&t), Err(0));
        assert_eq!(pfecq1(&t), Err(0));
        assert_eq!(parecq1(&t), None);
        assert_eq!(k_para(&t, 0b111), Some(0));
        assert_eq!(quasi_negations(&t, 0), 0);
    }

    #[test]
    fn trivial_three_subsets_of_four() {
        // Every 3-element subset explodes: pfECQ holds, spECQ fails at Γ = ∅.
        let t = Family::from_fn(4, |m| m.count_ones() == 3);
        assert_eq!(pfecq1(&t), Ok(()));
        assert_eq!(pfecq2(&t), Ok(()));
        assert_eq!(specq(&t), Err(0));
        assert_eq!(pfecq3(&t), Err(0));
        assert_eq!(secq(&t), Ok(()));
        assert_eq!(gecq(&t), Err(0));
    }

    #[test]
    fn secq_without_gecq_on_four() {
        let (a, b, c, d) = (1, 2, 4, 8);
        let t = fam(4, &[a | b | c, b | c | d]);
        assert_eq!(secq(&t), Ok(()));
        assert_eq!(secq_prime(&t), Ok(()));
        assert_eq!(gecq(&t), Err(0));
    }

    #[test]
    fn ecq_with_swap() {
        // neg swaps a and b and fixes c; {c} and {a, b} explode.
        let t = fam(3, &[0b100, 0b011, 0b111]);
        assert_eq!(ecq(&t, &[1, 0, 2]), Ok(()));
        assert!(pfecq1(&t).is_err());
        let s = SmallFamily::of(&t);
        assert_eq!(ecq(&s, &[0, 1, 2]), Err(0));
        assert_eq!(point_trivializer(&s), Some(2));
        assert_eq!(fin_triv(&s, 3), Some(0b100));
    }

    #[test]
    fn complementary_pairs() {
        let t = fam(3, &[0b011, 0b101]);
        assert!(is_complementary(&t, 0b110, 0b001, true));
        assert!(is_complementary(&t, 0b110, 0b001, false));
        assert!(is_complementary(&t, 0, 0b111, false));
        assert!(!is_complementary(&t, 0b011, 0b100, true));
        assert_eq!(parecq2(&t), Some((0b001, 0b010)));
    }
}
