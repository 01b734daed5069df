//! Logics of formal inconsistency over matrices.
//!
//! A consistency set `○(p)` is a finite set of formulas in the single variable `p`;
//! `○(α)` substitutes `α` for `p`. The three clauses: (i) some `{φ, ¬φ}` does not explode;
//! (ii) some `α, β` have `β` outside both `C(○(α) ∪ {α})` and `C(○(α) ∪ {¬α})`; (iii)
//! `○(φ) ∪ {φ, ¬φ}` explodes for every `φ`. In a matrix, (iii) at `φ = p` implies it for all
//! `φ`, since composing a valuation with a substitution gives another valuation.

use super::universe::{semantic_pool, Backend, Item, Universe};
use super::verdict::{Clause, Status};
use crate::error::{Error, Result};
use crate::formula::{Formula, Op, Signature, Substitution, Var};
use crate::matrix::Matrix;

const P: Var = 0;

pub fn parse_circle(sig: &Signature, texts: &[String]) -> Result<Vec<Formula>> {
    if texts.is_empty() {
        return Err(Error::invalid("consistency set", "must not be empty"));
    }
    texts
        .iter()
        .map(|t| {
            let f = sig.parse(t)?;
            if f.vars().iter().any(|&v| v != P) {
                return Err(Error::Domain(format!("consistency formula `{t}` may only use the variable p")));
            }
            Ok(f)
        })
        .collect()
}

fn at(circle: &[Formula], alpha: &Formula) -> Vec<Formula> {
    circle.iter().map(|f| f.instantiate(P, alpha)).collect()
}

fn items(u: &Universe<'_>, fs: &[Formula]) -> Result<Vec<Item>> {
    fs.iter().map(|f| u.item(f)).collect()
}

/// `○(p) ∪ {p, ¬p}`, and whether it explodes.
pub fn gentle_explosion(u: &Universe<'_>, neg: Op, circle: &[Formula]) -> Result<(bool, Vec<Item>)> {
    let p = Formula::Var(P);
    let mut set = circle.to_vec();
    set.push(p.clone());
    set.push(Formula::unary(neg, p));
    let set = items(u, &set)?;
    Ok((u.trivial(&set), set))
}

pub fn verify(u: &Universe<'_>, neg: Op, circle: &[Formula]) -> Result<Vec<Clause>> {
    let show = |f: &Formula| u.show(f);
    let clause = |name: &str, status, detail: String| Clause { clause: name.into(), status, detail };
    let mut out = Vec::new();

    let mut first = None;
    for a in &u.pool {
        let na = u.item(&Formula::unary(neg, a.formula.clone()))?;
        if !u.trivial([a, &na]) {
            first = Some(a.formula.clone());
            break;
        }
    }
    out.push(match first {
        Some(f) => clause("(i)", Status::Proven, format!("{{{0}, ¬{0}}} does not explode", show(&f))),
        None => clause("(i)", Status::Refuted, format!("every {{φ, ¬φ}} explodes for φ in the pool ({})", u.describe())),
    });

    let mut second = None;
    'search: for a in &u.pool {
        let circ = items(u, &at(circle, &a.formula))?;
        let na = u.item(&Formula::unary(neg, a.formula.clone()))?;
        let pos = u.meet_designated(circ.iter().chain([a]));
        let negd = u.meet_designated(circ.iter().chain([&na]));
        for b in u.domain() {
            if !pos.is_subset(b.designated) && !negd.is_subset(b.designated) {
                second = Some((a.formula.clone(), b.formula.clone()));
                break 'search;
            }
        }
    }
    out.push(match second {
        Some((a, b)) => clause(
            "(ii)",
            Status::Proven,
            format!("α = {}, β = {}: β follows from neither ○(α) ∪ {{α}} nor ○(α) ∪ {{¬α}}", show(&a), show(&b)),
        ),
        None => clause("(ii)", Status::Refuted, format!("no α, β in the pool ({})", u.describe())),
    });

    let (explodes, _) = gentle_explosion(u, neg, circle)?;
    out.push(if explodes {
        clause("(iii)", Status::Proven, "○(p) ∪ {p, ¬p} explodes, hence so does every instance".into())
    } else {
        clause("(iii)", Status::Refuted, "some valuation designates ○(p) ∪ {p, ¬p}".into())
    });
    Ok(out)
}

pub fn overall(clauses: &[Clause]) -> Status {
    if clauses.iter().all(|c| c.status == Status::Proven) {
        Status::Proven
    } else if clauses.iter().any(|c| c.status == Status::Refuted) {
        Status::Refuted
    } else {
        Status::Unknown
    }
}

/// The first one-variable formula `ψ(p)` of depth at most `depth` for which `{ψ}` passes all
/// three clauses, with (ii) searched over the two-variable pool of the same depth.
pub fn find_consistency_set(m: &Matrix, neg: Op, depth: usize) -> Result<Option<Formula>> {
    let u = Universe::build(Backend { matrix: m, mode: None }, vec![0, 1], depth, 200_000)?;
    for e in semantic_pool(&[m], &[P], depth, 200_000)? {
        if e.varmask != 1 {
            continue;
        }
        let circle = [e.formula];
        if overall(&verify(&u, neg, &circle)?) == Status::Proven {
            let [f] = circle;
            return Ok(Some(f));
        }
    }
    Ok(None)
}

/// A binary formula `c(p, q)` from which both `p` and `q` follow: `p ∧ q` when `∧` exists
/// and satisfies elimination, otherwise the first such formula of depth at most 3.
pub fn conjunction(m: &Matrix) -> Result<Option<Formula>> {
    let (p, q) = (Formula::Var(0), Formula::Var(1));
    if let Some(and) = m.signature().lookup("∧").filter(|&op| m.signature().get(op).arity == 2) {
        let c = Formula::binary(and, p.clone(), q.clone());
        if m.entails(std::slice::from_ref(&c), &p)? && m.entails(std::slice::from_ref(&c), &q)? {
            return Ok(Some(c));
        }
    }
    for e in semantic_pool(&[m], &[0, 1], 3, 200_000)? {
        if e.varmask == 0b11 && m.entails(std::slice::from_ref(&e.formula), &p)? && m.entails(std::slice::from_ref(&e.formula), &q)? {
            return Ok(Some(e.formula));
        }
    }
    Ok(None)
}

/// Folds a finite trivial set into one formula with [`conjunction`]; returns it when it
/// trivializes on its own.
pub fn conjunctive_collapse(m: &Matrix, set: &[Formula]) -> Result<Option<Formula>> {
    let Some(c) = conjunction(m)? else { return Ok(None) };
    let Some((first, rest)) = set.split_first() else { return Ok(None) };
    let folded = rest.iter().fold(first.clone(), |acc, f| {
        let mut s = Substitution::new();
        s.insert(0, acc);
        s.insert(1, f.clone());
        c.substitute(&s)
    });
    Ok(m.trivializes(std::slice::from_ref(&folded))?.then_some(folded))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery::matrices;

    fn universe(m: &Matrix) -> Universe<'_> {
        Universe::build(Backend { matrix: m, mode: None }, vec![0, 1], 2, 100_000).unwrap()
    }

    #[test]
    fn p1_consistency() {
        let m = matrices::p1();
        let neg = m.signature().require("¬").unwrap();
        let psi = find_consistency_set(&m, neg, 3).unwrap().expect("P1 has a consistency formula");
        let u = universe(&m);
        assert_eq!(overall(&verify(&u, neg, std::slice::from_ref(&psi)).unwrap()), Status::Proven);
        let p = Formula::Var(0);
        let f = conjunctive_collapse(&m, &[psi, p.clone(), Formula::unary(neg, p)]).unwrap();
        assert!(f.is_some());
    }

    #[test]
    fn cpc_and_pwk() {
        let cpc = matrices::cpc();
        let neg = cpc.signature().require("¬").unwrap();
        let circle = parse_circle(cpc.signature(), &["p".into()]).unwrap();
        let c = verify(&universe(&cpc), neg, &circle).unwrap();
        assert_eq!(c[0].status, Status::Refuted);
        assert_eq!(find_consistency_set(&cpc, neg, 2).unwrap(), None);

        let pwk = matrices::pwk();
        let circle = parse_circle(pwk.signature(), &["⊥".into()]).unwrap();
        let c = verify(&universe(&pwk), neg, &circle).unwrap();
        assert_eq!(c[1].status, Status::Refuted);
        assert!(parse_circle(pwk.signature(), &["p ∧ q".into()]).is_err());
        assert!(parse_circle(pwk.signature(), &[]).is_err());
    }
}
