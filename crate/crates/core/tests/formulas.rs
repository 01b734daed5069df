mod common;

use std::collections::BTreeSet;

use common::{formula, substitution};
use paracon::formula::{Formula, Signature};
use paracon::gallery::matrices;
use proptest::prelude::*;

fn signatures() -> Vec<Signature> {
    let mut out = vec![Signature::classical()];
    out.extend(matrices::all().iter().map(|m| m.signature().clone()));
    out
}

fn signed_formula() -> impl Strategy<Value = (Signature, Formula)> {
    let sigs = signatures();
    (0..sigs.len()).prop_flat_map(move |i| (Just(sigs[i].clone()), formula(&sigs[i], 3, 5)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn print_then_parse_is_identity((sig, f) in signed_formula()) {
        let text = f.display(&sig).to_string();
        prop_assert_eq!(sig.parse(&text).unwrap(), f, "{}", text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn substitution_depth_bound(
        (f, s) in (formula(&Signature::classical(), 3, 4), substitution(&Signature::classical(), 3, 3))
    ) {
        let image_depth = f.vars().iter().filter_map(|&v| s.get(v)).map(Formula::depth).max().unwrap_or(0);
        prop_assert!(f.substitute(&s).depth() <= f.depth() + image_depth);
    }

    #[test]
    fn substitution_vars_are_union_of_images(
        (f, s) in (formula(&Signature::classical(), 3, 4), substitution(&Signature::classical(), 3, 3))
    ) {
        let expect: BTreeSet<_> = f
            .vars()
            .into_iter()
            .flat_map(|v| s.get(v).map_or_else(|| BTreeSet::from([v]), Formula::vars))
            .collect();
        prop_assert_eq!(f.substitute(&s).vars(), expect);
    }

    #[test]
    fn composition_applies_right_to_left(
        (f, s, t) in (
            formula(&Signature::classical(), 3, 3),
            substitution(&Signature::classical(), 3, 2),
            substitution(&Signature::classical(), 3, 2),
        )
    ) {
        prop_assert_eq!(f.substitute(&t).substitute(&s), f.substitute(&s.compose(&t)));
    }
}
