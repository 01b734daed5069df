use paracon::family::{full_mask, Mask, Trivials};
use paracon::gallery::{self, load_builtin, BuiltinKind};
use paracon::io::FiniteSpec;
use paracon::principles::Logic;
use paracon::set::{SentenceId, SentenceSet};
use paracon::structure::{tarskian_report, ConsequenceStructure, FiniteStructure};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn table(n: usize) -> impl Strategy<Value = Vec<Mask>> {
    proptest::collection::vec(0..=full_mask(n), 1 << n)
}

fn structure() -> impl Strategy<Value = FiniteStructure> {
    (1usize..=4).prop_flat_map(|n| table(n).prop_map(move |t| FiniteStructure::new(n, t).unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn trivial_iff_consequence_is_full(s in structure()) {
        for g in 0..=s.full() {
            let set = s.set_of(g);
            let by_consequence = s.consequence(&set).unwrap().is_full();
            prop_assert_eq!(ConsequenceStructure::is_trivial(&s, &set).unwrap(), by_consequence);
            prop_assert_eq!(Trivials::is_trivial(&s, g), by_consequence);
        }
    }

    #[test]
    fn json_round_trip_is_exact(s in structure()) {
        let text = serde_json::to_string(&FiniteSpec::from(&s)).unwrap();
        let back: FiniteSpec = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(FiniteStructure::try_from(&back).unwrap(), s);
    }
}

/// Every reflexive table on three elements: `C(Γ) = Γ ∪ extra(Γ)`.
#[test]
fn reflexive_and_transitive_tables_are_monotonic() {
    let n = 3;
    let full = full_mask(n);
    let rows = 1usize << n;
    let choices: Vec<u32> = (0..rows).map(|g| 1 << (n - (g as u32).count_ones() as usize)).collect();
    let total: u32 = choices.iter().product();
    let mut transitive = 0;
    for mut code in 0..total {
        let mut t = vec![0; rows];
        for g in 0..rows {
            let free: Vec<usize> = (0..n).filter(|&i| g >> i & 1 == 0).collect();
            let pick = code % choices[g];
            code /= choices[g];
            t[g] = g as Mask | free.iter().enumerate().filter(|(k, _)| pick >> k & 1 == 1).fold(0, |m, (_, &i)| m | 1 << i);
            assert_eq!(t[g] & !full, 0);
        }
        let r = tarskian_report(n, |g| t[g as usize]);
        assert!(r.reflexive);
        if r.transitive {
            transitive += 1;
            assert!(r.monotonic, "{t:?}");
        }
    }
    assert_eq!(total, 4096);
    assert!(transitive > 0);
}

fn random_set(s: &impl ConsequenceStructure, rng: &mut ChaCha8Rng) -> SentenceSet {
    let c = s.carrier();
    let size = rng.random_range(0..5);
    let elems: Vec<SentenceId> = (0..size).map(|_| rng.random_range(-12..24)).filter(|&x| c.contains(x)).collect();
    if rng.random_bool(0.3) {
        SentenceSet::cofinite(c, elems).unwrap()
    } else {
        SentenceSet::finite(c, elems).unwrap()
    }
}

#[test]
fn rule_oracles_match_their_consequence() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for r in gallery::rules::all() {
        for _ in 0..500 {
            let g = random_set(&r, &mut rng);
            let by_consequence = r.consequence(&g).unwrap().is_full();
            assert_eq!(r.oracle_trivial(&g).unwrap(), by_consequence, "{} at {g}", r.name());
            assert_eq!(r.oracle().is_trivial(&g), by_consequence, "{} at {g}", r.name());
        }
    }
}

#[test]
fn gallery_structures_round_trip() {
    for info in gallery::list().iter().filter(|b| b.kind == BuiltinKind::Finite) {
        let Logic::Finite(s) = load_builtin(&info.name.parse().unwrap()).unwrap() else { panic!("{}", info.name) };
        let text = serde_json::to_string(&FiniteSpec::from(&s)).unwrap();
        let back = FiniteStructure::try_from(&serde_json::from_str::<FiniteSpec>(&text).unwrap()).unwrap();
        assert_eq!(back, s, "{}", info.name);
        assert_eq!(serde_json::to_string(&FiniteSpec::from(&back)).unwrap(), text);
    }
}
