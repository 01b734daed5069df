use paracon::family::{full_mask, SmallFamily, Trivials};
use paracon::miner::{canonicalize, count_tables, find_separation, permutations, random_family, reflexive_count, MineResult, SeparationQuery};
use paracon::par::Exec;
use paracon::partial::{brute_force_maximal, is_partial_order, maximal_complementary_pairs, pairs_in_c, point_trivializer_lemma};
use paracon::principles::{check, exact, Budget, Logic, PrincipleId, ScopeKind, Status};
use paracon::structure::{Condition, FiniteStructure};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn families(n: usize) -> impl Iterator<Item = SmallFamily> {
    (0..1u64 << (1 << n)).map(move |bits| SmallFamily::new(n, bits))
}

fn family() -> impl Strategy<Value = SmallFamily> {
    (1usize..=5).prop_flat_map(|n| any::<u64>().prop_map(move |b| SmallFamily::new(n, b)))
}

fn covers_with_maximal_pair(f: &SmallFamily) -> bool {
    let full = full_mask(f.size());
    maximal_complementary_pairs(f).unwrap().iter().any(|p| p.covers(full))
}

#[test]
fn exhaustive_small_families() {
    for n in 1..=3 {
        for f in families(n) {
            let (no_point, disjoint) = point_trivializer_lemma(&f);
            assert_eq!(no_point, disjoint, "{f:?}");
            assert!(is_partial_order(&pairs_in_c(&f).unwrap()), "{f:?}");
            assert_eq!(maximal_complementary_pairs(&f).unwrap(), brute_force_maximal(&f).unwrap(), "{f:?}");
            if no_point && exact::parecq1(&f).is_some() && exact::gecq(&f).is_ok() {
                assert!(covers_with_maximal_pair(&f), "{f:?}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn sampled_families(f in family()) {
        let (no_point, disjoint) = point_trivializer_lemma(&f);
        prop_assert_eq!(no_point, disjoint);
        prop_assert_eq!(maximal_complementary_pairs(&f).unwrap(), brute_force_maximal(&f).unwrap());
        if no_point && exact::parecq1(&f).is_some() && exact::gecq(&f).is_ok() {
            prop_assert!(covers_with_maximal_pair(&f));
        }
    }

    #[test]
    fn pair_order_on_four_elements(bits in any::<u64>()) {
        prop_assert!(is_partial_order(&pairs_in_c(&SmallFamily::new(4, bits)).unwrap()));
    }

    #[test]
    fn canonical_form_ignores_labels(n in 1usize..=4, bits in any::<u64>(), k in 0usize..24) {
        let s = FiniteStructure::from_trivials(&SmallFamily::new(n, bits)).unwrap();
        let perms = permutations(n);
        let moved = s.relabel(&perms[k % perms.len()]);
        let c = canonicalize(&s);
        prop_assert_eq!(canonicalize(&moved), c.clone());
        prop_assert_eq!(canonicalize(&c), c);
    }
}

#[test]
fn swap_negation_separates_ecq_from_pfecq_on_three() {
    let (a, b, c) = (1u32, 2, 4);
    let trivial = [c, a | b, a | b | c];
    let bits = trivial.iter().fold(0u64, |acc, &m| acc | 1 << m);
    let s = FiniteStructure::from_trivials(&SmallFamily::new(3, bits)).unwrap().with_unary_op("neg", vec![1, 0, 2]).unwrap();
    let logic = Logic::Finite(s);
    for (p, status) in [("ecq:neg", Status::Proven), ("pfecq", Status::Refuted)] {
        let v = check(&logic, &p.parse::<PrincipleId>().unwrap(), &Budget::default()).unwrap();
        assert_eq!(v.status, status, "{p}: {v}");
        assert_eq!(v.scope.kind, ScopeKind::Exact);
    }
}

#[test]
fn reflexive_count_matches_enumeration() {
    for n in 1..=3 {
        assert_eq!(count_tables(n, &[Condition::Reflexive], Exec::Sequential) as u128, reflexive_count(n));
    }
    assert_eq!(reflexive_count(3), 4096);
}

#[test]
fn sampling_is_deterministic() {
    let draw = |seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..50).map(|_| random_family(4, &mut rng)).collect::<Vec<_>>()
    };
    assert_eq!(draw(3), draw(3));
    assert_ne!(draw(3), draw(4));
}

#[test]
fn mined_structures_recheck_and_agree_across_executors() {
    let req = SeparationQuery::parse_requirements("parecq=proven,gecq=refuted").unwrap();
    let q = SeparationQuery::new(req, 3);
    let seq = find_separation(&q, Exec::Sequential).unwrap();
    assert_eq!(seq, find_separation(&q, Exec::Parallel).unwrap());
    let MineResult::Found(sep) = seq else { panic!("{seq:?}") };
    let logic = Logic::Finite(FiniteStructure::try_from(&sep.structure).unwrap());
    for r in &q.require {
        let v = check(&logic, &r.principle, &Budget::default()).unwrap();
        assert_eq!(v.status, r.status);
        assert_eq!(v.scope.kind, ScopeKind::Exact);
    }
}
