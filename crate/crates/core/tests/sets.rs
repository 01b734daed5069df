use paracon::set::{Carrier, SentenceId, SentenceSet};
use proptest::prelude::*;

const CARRIERS: [Carrier; 5] = [Carrier::Finite(0), Carrier::Finite(6), Carrier::NaturalsFrom1, Carrier::Naturals, Carrier::Integers];

/// Listed elements stay within -5..12, so the window below decides equality.
const WINDOW: std::ops::Range<SentenceId> = -8..20;

fn set_in(c: Carrier) -> impl Strategy<Value = SentenceSet> {
    (any::<bool>(), proptest::collection::btree_set(-5i64..12, 0..6)).prop_map(move |(cofinite, xs)| {
        let xs = xs.into_iter().filter(|&x| c.contains(x));
        if cofinite {
            SentenceSet::cofinite(c, xs).unwrap()
        } else {
            SentenceSet::finite(c, xs).unwrap()
        }
    })
}

fn three_sets() -> impl Strategy<Value = (Carrier, SentenceSet, SentenceSet, SentenceSet)> {
    proptest::sample::select(CARRIERS.to_vec()).prop_flat_map(|c| (Just(c), set_in(c), set_in(c), set_in(c)))
}

fn members(s: &SentenceSet) -> Vec<bool> {
    WINDOW.map(|x| s.contains(x)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1_000))]

    #[test]
    fn operations_agree_with_membership((c, a, b, _) in three_sets()) {
        let u = a.union(&b).unwrap();
        let i = a.intersection(&b).unwrap();
        let d = a.difference(&b).unwrap();
        let n = a.complement();
        for x in WINDOW {
            let inside = c.contains(x);
            prop_assert_eq!(u.contains(x), a.contains(x) || b.contains(x));
            prop_assert_eq!(i.contains(x), a.contains(x) && b.contains(x));
            prop_assert_eq!(d.contains(x), a.contains(x) && !b.contains(x));
            prop_assert_eq!(n.contains(x), inside && !a.contains(x));
        }
        prop_assert_eq!(a.is_subset(&b).unwrap(), a.difference(&b).unwrap().is_empty());
    }

    #[test]
    fn representation_is_canonical((_, a, b, _) in three_sets()) {
        prop_assert_eq!(a == b, members(&a) == members(&b));
        prop_assert_eq!(a.complement().complement(), a.clone());
        prop_assert_eq!(a.union(&a).unwrap(), a.clone());
        prop_assert_eq!(a.intersection(&a).unwrap(), a);
    }

    #[test]
    fn de_morgan((_, a, b, _) in three_sets()) {
        prop_assert_eq!(a.union(&b).unwrap().complement(), a.complement().intersection(&b.complement()).unwrap());
        prop_assert_eq!(a.intersection(&b).unwrap().complement(), a.complement().union(&b.complement()).unwrap());
    }

    #[test]
    fn lattice_laws((_, a, b, c) in three_sets()) {
        let ab_c = a.union(&b).unwrap().intersection(&c).unwrap();
        let ac_bc = a.intersection(&c).unwrap().union(&b.intersection(&c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, ac_bc);
        prop_assert_eq!(a.union(&a.intersection(&b).unwrap()).unwrap(), a.clone());
        prop_assert!(a.is_subset(&a.union(&b).unwrap()).unwrap());
    }
}

#[test]
fn finite_carriers_have_one_form() {
    let c = Carrier::Finite(4);
    assert_eq!(SentenceSet::cofinite(c, [1, 3]).unwrap(), SentenceSet::finite(c, [0, 2]).unwrap());
    assert!(SentenceSet::finite(c, 0..4).unwrap().is_full());
    assert!(SentenceSet::finite(c, [4]).is_err());
    assert!(SentenceSet::finite(Carrier::NaturalsFrom1, [0]).is_err());
    assert!(SentenceSet::empty(c).union(&SentenceSet::empty(Carrier::Naturals)).is_err());
}
