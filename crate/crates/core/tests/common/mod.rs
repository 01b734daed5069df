#![allow(dead_code)]

use paracon::formula::{Formula, Op, Signature, Substitution, Var};
use proptest::prelude::*;

/// Formulas over `vars` variables and every connective of `sig`, at most `depth` deep.
pub fn formula(sig: &Signature, vars: Var, depth: u32) -> BoxedStrategy<Formula> {
    let ops: Vec<(Op, usize)> = sig.ops().map(|(op, c)| (op, c.arity)).collect();
    let constants: Vec<Op> = ops.iter().filter(|o| o.1 == 0).map(|o| o.0).collect();
    let compound: Vec<(Op, usize)> = ops.into_iter().filter(|o| o.1 > 0).collect();
    let var = (0..vars).prop_map(Formula::Var);
    let leaf = if constants.is_empty() {
        var.boxed()
    } else {
        prop_oneof![3 => var, 1 => proptest::sample::select(constants).prop_map(Formula::constant)].boxed()
    };
    if compound.is_empty() {
        return leaf;
    }
    leaf.prop_recursive(depth, 64, 3, move |inner| {
        proptest::sample::select(compound.clone())
            .prop_flat_map(move |(op, arity)| proptest::collection::vec(inner.clone(), arity).prop_map(move |args| Formula::app(op, args)))
    })
    .boxed()
}

/// Substitutions for the variables below `vars`.
pub fn substitution(sig: &Signature, vars: Var, depth: u32) -> BoxedStrategy<Substitution> {
    proptest::collection::vec(proptest::option::of(formula(sig, vars, depth)), vars as usize)
        .prop_map(|images| {
            let mut s = Substitution::new();
            for (v, f) in images.into_iter().enumerate() {
                if let Some(f) = f {
                    s.insert(v as Var, f);
                }
            }
            s
        })
        .boxed()
}
