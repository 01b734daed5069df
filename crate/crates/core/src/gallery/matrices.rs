//! Standard finite matrices.

use crate::formula::{Connective, Signature};
use crate::matrix::{Matrix, Value};

fn sig(cs: Vec<Connective>) -> Signature {
    Signature::new(cs).expect("stock signature")
}

fn full_sig() -> Signature {
    Signature::classical()
}

/// Two-valued classical logic over `{¬, ∧, ∨, →, ⊥}`; values `0, 1`, designated `1`.
pub fn cpc() -> Matrix {
    Matrix::from_fns("cpc", full_sig(), &["0", "1"], &[1], |c, a| match c.name.as_str() {
        "¬" => 1 - a[0],
        "∧" => a[0] & a[1],
        "∨" => a[0] | a[1],
        "→" => (1 - a[0]) | a[1],
        _ => 0,
    })
    .expect("cpc")
}

/// Weak Kleene tables: the middle value `e` is infectious; otherwise classical.
fn weak_kleene(name: &str, designated: &[usize]) -> Matrix {
    const E: Value = 1;
    let classical = |v: Value| if v == 2 { 1 } else { 0 };
    let back = |b: Value| if b == 1 { 2 } else { 0 };
    Matrix::from_fns(name, full_sig(), &["0", "e", "1"], designated, |c, a| {
        if a.contains(&E) {
            return E;
        }
        let x: Vec<Value> = a.iter().map(|&v| classical(v)).collect();
        back(match c.name.as_str() {
            "¬" => 1 - x[0],
            "∧" => x[0] & x[1],
            "∨" => x[0] | x[1],
            "→" => (1 - x[0]) | x[1],
            _ => 0,
        })
    })
    .expect("weak Kleene matrix")
}

/// Paraconsistent weak Kleene: designated `{e, 1}`.
pub fn pwk() -> Matrix {
    weak_kleene("pwk", &[1, 2])
}

/// Bochvar's logic: the weak Kleene tables with designated `{1}`.
pub fn b3() -> Matrix {
    weak_kleene("b3", &[2])
}

fn lp_table(c: &Connective, a: &[Value]) -> Value {
    match c.name.as_str() {
        "¬" => 2 - a[0],
        "∧" => a[0].min(a[1]),
        "∨" => a[0].max(a[1]),
        // Pac's detachable implication.
        "→" => {
            if a[0] >= 1 {
                a[1]
            } else {
                2
            }
        }
        _ => unreachable!(),
    }
}

/// Logic of paradox over `{¬, ∧, ∨}`: values `0, ½, 1`, designated `{½, 1}`.
pub fn lp() -> Matrix {
    let s = sig(vec![Connective::neg(), Connective::and(), Connective::or()]);
    Matrix::from_fns("lp", s, &["0", "½", "1"], &[1, 2], lp_table).expect("lp")
}

/// LP with `x → y = y` for designated `x` and `1` otherwise.
pub fn pac() -> Matrix {
    let s = sig(vec![Connective::neg(), Connective::and(), Connective::or(), Connective::imp()]);
    Matrix::from_fns("pac", s, &["0", "½", "1"], &[1, 2], lp_table).expect("pac")
}

/// Sette's P1 over `{¬, →}`: values `F, T*, T`, designated `{T*, T}`.
///
/// `¬T = F`, `¬T* = T`, `¬F = T`; `x → y` is `F` when `x` is designated and `y = F`, and
/// `T` otherwise. Both connectives only ever output classical values, so every compound
/// formula behaves classically.
pub fn p1() -> Matrix {
    let s = sig(vec![Connective::neg(), Connective::imp()]);
    Matrix::from_fns("p1", s, &["F", "T*", "T"], &[1, 2], |c, a| match c.name.as_str() {
        "¬" => {
            if a[0] == 2 {
                0
            } else {
                2
            }
        }
        "→" => {
            if a[0] >= 1 && a[1] == 0 {
                0
            } else {
                2
            }
        }
        _ => unreachable!(),
    })
    .expect("p1")
}

/// All stock matrices by name.
pub fn all() -> Vec<Matrix> {
    vec![cpc(), lp(), pac(), p1(), pwk(), b3()]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::Formula;

    fn f(m: &Matrix, t: &str) -> Formula {
        m.signature().parse(t).unwrap()
    }

    #[test]
    fn p1_desk_checks() {
        let m = p1();
        assert!(m.entails(&[], &f(&m, "p → p")).unwrap());
        assert!(m.trivializes(&[f(&m, "¬(p → p)")]).unwrap());
        // ECQ fails at a variable and holds at compound formulas.
        assert!(!m.trivializes(&[f(&m, "p"), f(&m, "¬p")]).unwrap());
        for t in ["¬p", "p → q", "¬¬p", "¬(p → q)"] {
            let a = f(&m, t);
            let na = Formula::unary(m.signature().lookup("¬").unwrap(), a.clone());
            assert!(m.trivializes(&[a, na]).unwrap(), "{t}");
        }
    }

    #[test]
    fn pwk_and_b3() {
        let m = pwk();
        assert!(!m.entails(&[f(&m, "p"), f(&m, "¬p")], &f(&m, "q")).unwrap());
        assert!(m.trivializes(&[f(&m, "⊥")]).unwrap());
        let v = [(0, 1), (1, 0)].into_iter().collect();
        assert_eq!(m.evaluate(&v, &f(&m, "p ∨ q")).unwrap(), 1);
        let b = b3();
        assert!(b.trivializes(&[f(&b, "p"), f(&b, "¬p")]).unwrap());
    }

    #[test]
    fn lp_has_no_small_trivial_set() {
        let m = lp();
        assert!(!m.trivializes(&[f(&m, "p ∧ ¬p"), f(&m, "q"), f(&m, "¬q")]).unwrap());
        assert!(!m.entails(&[f(&m, "p"), f(&m, "¬p")], &f(&m, "q")).unwrap());
        let pac = pac();
        assert!(pac.entails(&[f(&pac, "p"), f(&pac, "p → q")], &f(&pac, "q")).unwrap());
    }

    #[test]
    fn cpc_examples() {
        let m = cpc();
        assert!(m.entails(&[f(&m, "p"), f(&m, "p → ¬p")], &f(&m, "q")).unwrap());
        assert!(m.trivializes(&[f(&m, "p ∧ ¬p")]).unwrap());
        assert!(!m.is_antitheorem(&[f(&m, "p")]).unwrap());
    }
}
