//! Syntactic formula pools: every formula over given variables up to a depth.

use crate::error::{Error, Result};

use super::{Formula, Signature, Var};

/// Number of formulas of depth at most `d`, for each `d` in `0..=depth`.
///
/// `N(0)` counts variables and constants; `N(d) = N(0) + Σ_k c_k · N(d-1)^k` where `c_k`
/// is the number of connectives of arity `k ≥ 1`.
pub fn pool_size_by_depth(sig: &Signature, vars: usize, depth: usize) -> Vec<u128> {
    let n0 = (vars + sig.constants().count()) as u128;
    let mut out = vec![n0];
    for _ in 0..depth {
        let prev = *out.last().expect("non-empty");
        let mut next = n0;
        for c in sig.connectives().iter().filter(|c| c.arity > 0) {
            next = next.saturating_add(prev.saturating_pow(c.arity as u32));
        }
        out.push(next);
    }
    out
}

pub fn pool_size(sig: &Signature, vars: usize, depth: usize) -> u128 {
    *pool_size_by_depth(sig, vars, depth).last().expect("non-empty")
}

/// All formulas over `vars` of depth at most `depth`, in canonical order: by depth, then
/// connective order, then argument tuples in pool order. Refuses pools larger than `cap`.
pub fn enumerate_pool(sig: &Signature, vars: &[Var], depth: usize, cap: usize) -> Result<Vec<Formula>> {
    let size = pool_size(sig, vars.len(), depth);
    if size > cap as u128 {
        return Err(Error::Budget(format!(
            "syntactic pool over {} variables at depth {depth} has {size} formulas (cap {cap})",
            vars.len()
        )));
    }
    let mut pool: Vec<Formula> = vars.iter().map(|&v| Formula::Var(v)).collect();
    pool.extend(sig.constants().map(Formula::constant));
    let mut prev_end = 0;
    for _ in 0..depth {
        let end = pool.len();
        let mut level = Vec::new();
        for (op, c) in sig.ops().filter(|(_, c)| c.arity > 0) {
            // Tuples over pool[..end] with at least one argument from the newest level.
            let mut idx = vec![0usize; c.arity];
            'tuples: loop {
                if idx.iter().any(|&i| i >= prev_end) {
                    level.push(Formula::app(op, idx.iter().map(|&i| pool[i].clone()).collect()));
                }
                let mut k = c.arity;
                loop {
                    if k == 0 {
                        break 'tuples;
                    }
                    k -= 1;
                    idx[k] += 1;
                    if idx[k] < end {
                        break;
                    }
                    idx[k] = 0;
                }
            }
        }
        prev_end = end;
        pool.extend(level);
    }
    Ok(pool)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::Signature;
    use std::collections::HashSet;

    #[test]
    fn neg_imp_two_vars_depth_three() {
        // By hand: N0 = 2, N1 = 2 + 2 + 4 = 8, N2 = 2 + 8 + 64 = 74, N3 = 2 + 74 + 74² = 5552.
        let sig = Signature::classical().restrict(&["¬", "→"]).unwrap();
        assert_eq!(pool_size_by_depth(&sig, 2, 3), vec![2, 8, 74, 5552]);
        let pool = enumerate_pool(&sig, &[0, 1], 3, 10_000).unwrap();
        assert_eq!(pool.len(), 5552);
        assert_eq!(pool.iter().collect::<HashSet<_>>().len(), 5552);
        assert!(pool.windows(2).all(|w| w[0].depth() <= w[1].depth()));
        assert!(pool.iter().all(|f| f.depth() <= 3));
    }

    #[test]
    fn classical_depth_three_is_refused() {
        let sig = Signature::classical();
        // N0 = 3, N1 = 3 + 3 + 3·9 = 33, N2 = 3 + 33 + 3·33² = 3303.
        assert_eq!(pool_size_by_depth(&sig, 2, 2), vec![3, 33, 3303]);
        assert_eq!(pool_size(&sig, 2, 3), 3 + 3303 + 3 * 3303 * 3303);
        assert!(matches!(enumerate_pool(&sig, &[0, 1], 3, 1_000_000), Err(Error::Budget(_))));
        assert_eq!(enumerate_pool(&sig, &[0, 1], 2, 1_000_000).unwrap().len(), 3303);
    }
}
