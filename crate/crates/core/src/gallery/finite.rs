//! Explicit finite structures: purely reflexive logics, poset logics, logics induced by a
//! set of poset-valued valuations, and q-consequence operators.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{bit, elements, full_mask, Mask};
use crate::structure::FiniteStructure;

/// `C(Γ) = Γ`.
pub fn pure_reflexive(n: usize) -> Result<FiniteStructure> {
    FiniteStructure::from_fn(n, |m| m)
}

/// A finite partial order, given by its elements and the pairs `x ≤ y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetSpec {
    pub elements: Vec<String>,
    /// Pairs `[x, y]` meaning `x ≤ y`; the reflexive pairs may be omitted.
    pub order: Vec<(String, String)>,
}

/// A validated poset: `up[x]` is the mask of elements above `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    up: Vec<Mask>,
}

impl PosetSpec {
    /// Elements `u0, u1, …` with no two comparable.
    pub fn antichain(k: usize) -> Self {
        PosetSpec { elements: (0..k).map(|i| format!("u{i}")).collect(), order: Vec::new() }
    }

    /// `u0 < u1 < …`.
    pub fn chain(k: usize) -> Self {
        let elements: Vec<String> = (0..k).map(|i| format!("u{i}")).collect();
        let order = elements.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect();
        PosetSpec { elements, order }
    }

    /// Takes the reflexive and transitive closure and rejects cycles.
    pub fn build(&self) -> Result<Poset> {
        let k = self.elements.len();
        if k == 0 || k > 16 {
            return Err(Error::invalid("poset", "between 1 and 16 elements required"));
        }
        for (i, a) in self.elements.iter().enumerate() {
            if self.elements[..i].contains(a) {
                return Err(Error::invalid("poset", format!("duplicate element `{a}`")));
            }
        }
        let idx = |s: &str| {
            self.elements
                .iter()
                .position(|e| e == s)
                .ok_or_else(|| Error::invalid("poset", format!("unknown element `{s}` in order")))
        };
        let mut up: Vec<Mask> = (0..k).map(bit).collect();
        for (x, y) in &self.order {
            up[idx(x)?] |= bit(idx(y)?);
        }
        for z in 0..k {
            for x in 0..k {
                if up[x] & bit(z) != 0 {
                    up[x] |= up[z];
                }
            }
        }
        for x in 0..k {
            for y in elements(up[x]) {
                if y != x && up[y] & bit(x) != 0 {
                    return Err(Error::invalid("poset", "order is not antisymmetric"));
                }
            }
        }
        Ok(Poset { names: self.elements.clone(), up })
    }
}

impl Poset {
    pub fn size(&self) -> usize {
        self.up.len()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x] & bit(y) != 0
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    fn dual(&self) -> Poset {
        let k = self.size();
        let up = (0..k).map(|x| (0..k).filter(|&y| self.leq(y, x)).fold(0, |m, y| m | bit(y))).collect();
        Poset { names: self.names.clone(), up }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    /// `Γ ⊢ φ` iff `γ ≤ φ` for all `γ ∈ Γ`.
    Forward,
    /// `Γ ⊢ φ` iff `φ ≤ γ` for all `γ ∈ Γ`.
    Backward,
}

/// The poset logic on the poset's own elements. `C(∅)` is everything, and on an antichain
/// `C({a, b}) = ∅`, so these logics are in general neither reflexive nor monotone.
pub fn poset_logic(p: &PosetSpec, direction: Direction) -> Result<FiniteStructure> {
    let poset = p.build()?;
    let poset = match direction {
        Direction::Forward => poset,
        Direction::Backward => poset.dual(),
    };
    let n = poset.size();
    FiniteStructure::from_fn(n, |g| elements(g).fold(full_mask(n), |acc, x| acc & poset.up[x]))?
        .with_names(poset.names.clone())
}

/// `Γ ⊨_V α` iff `v(β) ≤ v(α)` for every `v ∈ V` and `β ∈ Γ`, on a carrier of `n`
/// sentences. Each valuation lists the poset element of every sentence.
pub fn poset_valuation_logic(n: usize, p: &PosetSpec, valuations: &[Vec<String>]) -> Result<FiniteStructure> {
    let poset = p.build()?;
    if valuations.is_empty() {
        return Err(Error::invalid("valuation set", "at least one valuation is required"));
    }
    let mut vs: Vec<Vec<usize>> = Vec::new();
    for v in valuations {
        if v.len() != n {
            return Err(Error::invalid("valuation", format!("must assign all {n} sentences")));
        }
        let row = v
            .iter()
            .map(|e| {
                poset
                    .names
                    .iter()
                    .position(|x| x == e)
                    .ok_or_else(|| Error::invalid("valuation", format!("`{e}` is not a poset element")))
            })
            .collect::<Result<Vec<_>>>()?;
        vs.push(row);
    }
    // above[b] = sentences a with v(b) ≤ v(a) for every valuation v.
    let above: Vec<Mask> = (0..n)
        .map(|b| (0..n).filter(|&a| vs.iter().all(|v| poset.leq(v[b], v[a]))).fold(0, |m, a| m | bit(a)))
        .collect();
    FiniteStructure::from_fn(n, |g| elements(g).fold(full_mask(n), |acc, b| acc & above[b]))
}

/// A q-consequence operator `W` together with the structure it induces (`C = W`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QCons {
    pub structure: FiniteStructure,
    /// `Γ ⊆ Σ ⇒ W(Γ) ⊆ W(Σ)`.
    pub monotone: bool,
    /// `W(Γ ∪ W(Γ)) = W(Γ)`.
    pub fixpoint: bool,
}

impl QCons {
    pub fn is_valid(&self) -> bool {
        self.monotone && self.fixpoint
    }
}

pub fn qcons_structure(n: usize, w: Vec<Mask>) -> Result<QCons> {
    let structure = FiniteStructure::new(n, w)?;
    let full = full_mask(n);
    let w = |m: Mask| structure.apply(m);
    let monotone = (0..=full).all(|g| elements(full & !g).all(|x| w(g) & !w(g | bit(x)) == 0));
    let fixpoint = (0..=full).all(|g| w(g | w(g)) == w(g));
    Ok(QCons { structure, monotone, fixpoint })
}
