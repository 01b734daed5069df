mod common;

use common::{formula, substitution};
use paracon::formula::{Formula, Substitution};
use paracon::gallery::matrices;
use paracon::matrix::Matrix;
use paracon::principles::universe::semantic_pool;
use proptest::prelude::*;

fn matrix() -> impl Strategy<Value = Matrix> {
    proptest::sample::select(matrices::all())
}

fn instance() -> impl Strategy<Value = (Matrix, Vec<Formula>, Vec<Formula>, Formula, Substitution)> {
    matrix().prop_flat_map(|m| {
        let sig = m.signature().clone();
        let f = formula(&sig, 3, 3);
        (Just(m), proptest::collection::vec(f.clone(), 0..3), proptest::collection::vec(f.clone(), 0..2), f, substitution(&sig, 3, 2))
    })
}

fn pool(m: &Matrix) -> Vec<Formula> {
    semantic_pool(&[m], &[0, 1], 3, 100_000).unwrap().into_iter().map(|e| e.formula).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1_000))]

    #[test]
    fn entailment_is_reflexive_and_monotone((m, gamma, delta, alpha, _) in instance()) {
        for g in &gamma {
            prop_assert!(m.entails(&gamma, g).unwrap());
        }
        if m.entails(&gamma, &alpha).unwrap() {
            let wider: Vec<Formula> = gamma.iter().chain(&delta).cloned().collect();
            prop_assert!(m.entails(&wider, &alpha).unwrap());
        }
    }

    #[test]
    fn entailment_is_structural((m, gamma, _, alpha, s) in instance()) {
        if m.entails(&gamma, &alpha).unwrap() {
            let moved: Vec<Formula> = gamma.iter().map(|g| g.substitute(&s)).collect();
            prop_assert!(m.entails(&moved, &alpha.substitute(&s)).unwrap());
        }
    }

    #[test]
    fn trivializing_agrees_with_fresh_variable((m, gamma, _, _, _) in instance()) {
        prop_assert_eq!(m.trivializes(&gamma).unwrap(), m.trivializes_via_fresh_variable(&gamma).unwrap());
    }
}

/// Antitheorems of at most two pool classes, each moved by 100 random substitutions.
#[test]
fn antitheorems_are_stable_under_substitution() {
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    for m in matrices::all() {
        let pool = pool(&m);
        let mut found = Vec::new();
        for (i, a) in pool.iter().enumerate() {
            for b in &pool[i..] {
                let sigma = vec![a.clone(), b.clone()];
                if m.is_antitheorem(&sigma).unwrap() {
                    found.push(sigma);
                }
            }
            if found.len() >= 20 {
                break;
            }
        }
        let subs = proptest::collection::vec(substitution(m.signature(), 2, 3), 100);
        let subs = proptest::strategy::ValueTree::current(&subs.new_tree(&mut runner).unwrap());
        for sigma in &found {
            for s in &subs {
                let moved: Vec<Formula> = sigma.iter().map(|f| f.substitute(s)).collect();
                assert!(m.is_antitheorem(&moved).unwrap(), "{}", m.name());
            }
        }
    }
}

/// Pool sets of at most two classes that trivialize entail every pool class.
#[test]
fn trivial_sets_entail_the_pool() {
    for m in matrices::all() {
        let pool = pool(&m);
        let mut trivial = 0;
        for (i, a) in pool.iter().enumerate() {
            for b in &pool[i..] {
                let gamma = [a.clone(), b.clone()];
                if m.trivializes(&gamma).unwrap() {
                    trivial += 1;
                    assert!(pool.iter().all(|beta| m.entails(&gamma, beta).unwrap()), "{}", m.name());
                }
            }
        }
        if ["cpc", "p1", "pwk", "b3"].contains(&m.name()) {
            assert!(trivial > 0, "{}", m.name());
        }
    }
}
