//! Structures on ℕ, ℕ⁺ and ℤ whose consequence operator is `C(Γ) = L` when `Γ` has some
//! shape and `C(Γ) = Γ` otherwise. Since `C(L) = L` in every case, the carrier itself is
//! always trivial; the oracles account for that.

use crate::rule::{Hints, RuleStructure, TrivialityOracle};
use crate::set::{Carrier, SentenceId, SentenceSet};

fn explode_if(carrier: Carrier, shape: fn(&SentenceSet) -> bool) -> impl Fn(&SentenceSet) -> SentenceSet {
    move |g| if shape(g) { SentenceSet::full(carrier) } else { g.clone() }
}

fn fin(c: Carrier, xs: impl IntoIterator<Item = SentenceId>) -> SentenceSet {
    SentenceSet::finite(c, xs).expect("elements in carrier")
}

fn elems(s: &SentenceSet) -> Vec<SentenceId> {
    s.listed().collect()
}

/// `Γ = {n, n+1, …, 2n}` for some `n ≥ 1`.
fn is_doubling_interval(g: &SentenceSet) -> bool {
    let xs = elems(g);
    g.is_finite()
        && !xs.is_empty()
        && xs[xs.len() - 1] == 2 * xs[0]
        && xs.windows(2).all(|w| w[1] == w[0] + 1)
}

struct DoublingOracle;

impl TrivialityOracle for DoublingOracle {
    fn is_trivial(&self, s: &SentenceSet) -> bool {
        s.is_full() || is_doubling_interval(s)
    }

    fn trivial_superset(&self, g: &SentenceSet, proper: bool) -> Option<SentenceSet> {
        let c = g.carrier();
        if !proper {
            return Some(SentenceSet::full(c));
        }
        if !g.is_finite() {
            return None;
        }
        let xs = elems(g);
        // Some {n, …, 2n} with n ≤ m and 2n ≥ top; n = m reaches furthest.
        match (xs.first(), xs.last()) {
            (None, _) => Some(fin(c, [1, 2])),
            (Some(&m), Some(&top)) if top <= 2 * m => Some(fin(c, m..=2 * m)),
            _ => None,
        }
    }

    fn trivial_one_extension(&self, g: &SentenceSet) -> Option<SentenceId> {
        if !g.is_finite() {
            return None;
        }
        let xs = elems(g);
        let top = *xs.last()?;
        // The target {n, …, 2n} must contain Γ and miss at most one point of it.
        (1..=top).find_map(|n| {
            let target: Vec<SentenceId> = (n..=2 * n).collect();
            if !xs.iter().all(|x| target.contains(x)) {
                return None;
            }
            let missing: Vec<SentenceId> = target.iter().copied().filter(|t| !xs.contains(t)).collect();
            match missing.as_slice() {
                [] => Some(xs[0]),
                [a] => Some(*a),
                _ => None,
            }
        })
    }

    fn trivial_pair(&self, alpha: SentenceId) -> Option<SentenceId> {
        match alpha {
            1 => Some(2),
            2 => Some(1),
            _ => None,
        }
    }

    fn finite_trivial(&self, bound: usize) -> Option<SentenceSet> {
        (bound >= 2).then(|| fin(Carrier::NaturalsFrom1, [1, 2]))
    }
}

/// Trivial sets `{n, …, 2n}` on `ℕ⁺`: sECQ holds, spECQ fails at `{1, 4}` and gECQ at 3.
pub fn doubling_intervals() -> RuleStructure {
    let c = Carrier::NaturalsFrom1;
    RuleStructure::new("ex-3-5", c, explode_if(c, is_doubling_interval), DoublingOracle)
        .expect("countable carrier")
        .complete(
            "every non-full trivial set is an interval {n..2n}; a set containing 1 explodes only \
             as {1, 2}, so {1, 4} has no one-point trivial extension",
        )
        .with_hints(Hints { sets: vec![fin(c, [1, 4])], elements: vec![3] })
}

/// `C(Γ) = L` exactly for infinite `Γ`, which in the fin/cofin fragment means cofinite.
struct InfiniteOracle;

impl TrivialityOracle for InfiniteOracle {
    fn is_trivial(&self, s: &SentenceSet) -> bool {
        !s.is_finite()
    }

    fn trivial_superset(&self, g: &SentenceSet, proper: bool) -> Option<SentenceSet> {
        let c = g.carrier();
        if !proper {
            return Some(SentenceSet::full(c));
        }
        if !g.is_finite() {
            return (!g.is_full()).then(|| g.clone());
        }
        let outside = (0..).find(|x| !g.contains(*x))?;
        Some(SentenceSet::cofinite(c, [outside]).expect("in carrier"))
    }

    fn trivial_one_extension(&self, g: &SentenceSet) -> Option<SentenceId> {
        if g.is_finite() || g.is_full() {
            return None;
        }
        (0..).find(|x| g.contains(*x))
    }

    fn trivial_pair(&self, _alpha: SentenceId) -> Option<SentenceId> {
        None
    }

    fn finite_trivial(&self, _bound: usize) -> Option<SentenceSet> {
        None
    }
}

fn infinite_explodes(name: &str) -> RuleStructure {
    let c = Carrier::Naturals;
    RuleStructure::new(name, c, explode_if(c, |g| !g.is_finite()), InfiniteOracle)
        .expect("countable carrier")
        .complete("within the fin/cofin fragment the infinite sets are exactly the cofinite ones")
}

/// Infinite sets explode on ℕ: pfECQ holds while spECQ and gECQ fail.
pub fn infinite_sets() -> RuleStructure {
    infinite_explodes("ex-3-9")
}

/// The same operator, read as a logic that is not finitely trivializable yet satisfies
/// pfECQ and sECQ.
pub fn finite_sets_survive() -> RuleStructure {
    infinite_explodes("ex-3-17")
}

/// `Γ = {n, n+1}`.
fn is_adjacent_pair(g: &SentenceSet) -> bool {
    let xs = elems(g);
    g.is_finite() && xs.len() == 2 && xs[1] == xs[0] + 1
}

struct AdjacentOracle;

impl TrivialityOracle for AdjacentOracle {
    fn is_trivial(&self, s: &SentenceSet) -> bool {
        s.is_full() || is_adjacent_pair(s)
    }

    fn trivial_superset(&self, g: &SentenceSet, proper: bool) -> Option<SentenceSet> {
        let c = g.carrier();
        if !proper {
            return Some(SentenceSet::full(c));
        }
        if !g.is_finite() {
            return None;
        }
        match elems(g).as_slice() {
            [] => Some(fin(c, [0, 1])),
            [a] => Some(fin(c, [*a, a + 1])),
            [a, b] if *b == a + 1 => Some(g.clone()),
            _ => None,
        }
    }

    fn trivial_one_extension(&self, g: &SentenceSet) -> Option<SentenceId> {
        if !g.is_finite() {
            return None;
        }
        match elems(g).as_slice() {
            [a] => Some(a + 1),
            [a, b] if *b == a + 1 => Some(*a),
            _ => None,
        }
    }

    fn trivial_pair(&self, alpha: SentenceId) -> Option<SentenceId> {
        Some(alpha + 1)
    }

    fn finite_trivial(&self, bound: usize) -> Option<SentenceSet> {
        (bound >= 2).then(|| fin(Carrier::Naturals, [0, 1]))
    }
}

/// Trivial sets `{n, n+1}` on ℕ: gECQ holds, pfECQ and spECQ fail at any set of three.
pub fn adjacent_pairs() -> RuleStructure {
    let c = Carrier::Naturals;
    RuleStructure::new("ex-3-10", c, explode_if(c, is_adjacent_pair), AdjacentOracle)
        .expect("countable carrier")
        .complete("a proper trivial set has exactly two adjacent elements, so no set of three is contained in one")
        .with_hints(Hints { sets: vec![fin(c, [0, 1, 2])], elements: vec![] })
}

/// `Γ ≠ ∅` and `−n ∈ Γ` for every `n ∈ Γ`.
fn is_symmetric(g: &SentenceSet) -> bool {
    !g.is_empty() && g.listed().all(|x| g.listed().any(|y| y == -x))
}

struct SymmetricOracle;

impl SymmetricOracle {
    /// Elements of `Γ` whose negation is missing, negated: what `Γ` lacks to be symmetric.
    fn lacking(g: &SentenceSet) -> Vec<SentenceId> {
        if g.is_finite() {
            g.listed().filter(|x| !g.contains(-x)).map(|x| -x).collect()
        } else {
            // Γ = ℤ ∖ E lacks −x for x ∉ E with −x ∈ E, i.e. exactly E ∖ −E.
            g.listed().filter(|x| g.contains(-x)).collect()
        }
    }
}

impl TrivialityOracle for SymmetricOracle {
    fn is_trivial(&self, s: &SentenceSet) -> bool {
        // On cofinite sets the excluded part must itself be symmetric.
        !s.is_empty() && s.listed().all(|x| s.contains(x) == s.contains(-x))
    }

    fn trivial_superset(&self, g: &SentenceSet, proper: bool) -> Option<SentenceSet> {
        let c = g.carrier();
        let lacking = Self::lacking(g);
        let mut d = g.clone();
        for x in lacking {
            d = d.with(x).expect("in carrier");
        }
        if d.is_empty() {
            d = fin(c, [0]);
        }
        // The least symmetric superset; any other one contains it.
        if proper && d.is_full() {
            None
        } else {
            Some(d)
        }
    }

    fn trivial_one_extension(&self, g: &SentenceSet) -> Option<SentenceId> {
        if g.is_empty() {
            return Some(0);
        }
        let alpha = match Self::lacking(g).as_slice() {
            [] if g.is_finite() => g.listed().next()?,
            [] => (0..).find(|x| g.contains(*x))?,
            [a] => *a,
            _ => return None,
        };
        let ext = g.with(alpha).expect("in carrier");
        (!ext.is_full()).then_some(alpha)
    }

    fn trivial_pair(&self, alpha: SentenceId) -> Option<SentenceId> {
        Some(-alpha)
    }

    fn finite_trivial(&self, bound: usize) -> Option<SentenceSet> {
        (bound >= 1).then(|| fin(Carrier::Integers, [0]))
    }
}

/// Non-empty negation-closed sets explode on ℤ: ECQ holds for `f(n) = −n` while spECQ and
/// pfECQ fail.
///
/// The failing set used in the literature, the non-negative integers, is neither finite
/// nor cofinite. `ℤ ∖ {1}` fails both principles in the same way: its only trivial superset
/// is `ℤ`, and it lacks exactly `1` to be symmetric, which makes it all of `ℤ`.
pub fn negation_closed() -> RuleStructure {
    let c = Carrier::Integers;
    RuleStructure::new("ex-3-13", c, explode_if(c, is_symmetric), SymmetricOracle)
        .expect("countable carrier")
        .complete("the least trivial superset of Γ is Γ ∪ −Γ (or {0} for Γ = ∅)")
        .with_unary_op("f", |n| -n)
        .with_unary_op("neg", |n| -n)
        .with_hints(Hints { sets: vec![SentenceSet::cofinite(c, [1]).expect("in carrier")], elements: vec![] })
}

struct ZeroOracle;

impl TrivialityOracle for ZeroOracle {
    fn is_trivial(&self, s: &SentenceSet) -> bool {
        s.is_full() || (s.is_finite() && elems(s) == [0])
    }

    fn trivial_superset(&self, g: &SentenceSet, proper: bool) -> Option<SentenceSet> {
        let c = g.carrier();
        if g.is_finite() && elems(g).iter().all(|&x| x == 0) {
            Some(fin(c, [0]))
        } else if proper {
            None
        } else {
            Some(SentenceSet::full(c))
        }
    }

    fn trivial_one_extension(&self, g: &SentenceSet) -> Option<SentenceId> {
        (g.is_finite() && elems(g).iter().all(|&x| x == 0)).then_some(0)
    }

    fn trivial_pair(&self, alpha: SentenceId) -> Option<SentenceId> {
        (alpha == 0).then_some(0)
    }

    fn finite_trivial(&self, bound: usize) -> Option<SentenceSet> {
        (bound >= 1).then(|| fin(Carrier::Naturals, [0]))
    }
}

/// Only `{0}` (besides ℕ) explodes: partial explosion holds and gECQ fails.
pub fn zero_explodes() -> RuleStructure {
    let c = Carrier::Naturals;
    RuleStructure::new("ex-4-6", c, explode_if(c, |g| g.is_finite() && elems(g) == [0]), ZeroOracle)
        .expect("countable carrier")
        .complete("{0} is the only proper trivial set")
        .with_hints(Hints { sets: vec![], elements: vec![1] })
}

pub fn all() -> Vec<RuleStructure> {
    vec![doubling_intervals(), infinite_sets(), adjacent_pairs(), negation_closed(), finite_sets_survive(), zero_explodes()]
}
