//! Searching small finite structures for separations between principles.
//!
//! Apart from ECQ every principle is a property of the family of trivial sets, so the
//! miner enumerates families rather than tables: all `2^(2^n)` of them for `n ≤ 4`, random
//! ones for `n = 5, 6`. A family is realized by [`FiniteStructure::from_trivials`], and
//! structural filters are evaluated on that realization. Carriers are scanned in increasing
//! size, so an exhaustive hit is minimal.

use std::collections::BTreeMap;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{full_mask, Mask, SmallFamily, Trivials};
use crate::par::{fold_range, Exec};
use crate::principles::battery::{decode, draw_rng, table_count};
use crate::principles::{check, exact, Budget, Logic, PrincipleId, Status};
use crate::structure::{tarskian_flags, Condition, FiniteStructure};

/// Largest carrier searched exhaustively.
pub const EXHAUSTIVE_MAX: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Requirement {
    pub principle: PrincipleId,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeparationQuery {
    pub require: Vec<Requirement>,
    #[serde(default)]
    pub filters: Vec<Condition>,
    pub max_carrier: usize,
    #[serde(default = "one")]
    pub min_carrier: usize,
    #[serde(default)]
    pub seed: u64,
    /// Random families drawn per carrier size above [`EXHAUSTIVE_MAX`].
    #[serde(default = "default_samples")]
    pub samples: u64,
}

fn one() -> usize {
    1
}

fn default_samples() -> u64 {
    200_000
}

impl SeparationQuery {
    pub fn new(require: Vec<Requirement>, max_carrier: usize) -> Self {
        SeparationQuery { require, filters: Vec::new(), max_carrier, min_carrier: 1, seed: 0, samples: default_samples() }
    }

    /// Parses `secq=proven,gecq=refuted`.
    pub fn parse_requirements(s: &str) -> Result<Vec<Requirement>> {
        s.split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| {
                let (p, st) = t.rsplit_once('=').ok_or_else(|| Error::invalid("requirement", format!("`{t}` is not ID=STATUS")))?;
                let status: Status = st.trim().parse()?;
                if status == Status::Unknown {
                    return Err(Error::invalid("requirement", "status must be proven or refuted"));
                }
                Ok(Requirement { principle: p.trim().parse()?, status })
            })
            .collect()
    }

    fn validate(&self) -> Result<Option<String>> {
        if self.require.is_empty() {
            return Err(Error::invalid("query", "at least one requirement is needed"));
        }
        if self.max_carrier > SmallFamily::MAX || self.min_carrier == 0 || self.min_carrier > self.max_carrier {
            return Err(Error::invalid("query", format!("carrier range must lie within 1..={}", SmallFamily::MAX)));
        }
        let mut op = None;
        for r in &self.require {
            match &r.principle {
                PrincipleId::Ecq { op: o } => match &op {
                    Some(prev) if prev != o => return Err(Error::invalid("query", "at most one negation operation")),
                    _ => op = Some(o.clone()),
                },
                PrincipleId::KPara { .. } | PrincipleId::BotEcq | PrincipleId::Lfi { .. } | PrincipleId::GentleExplosion { .. } => {
                    return Err(Error::Domain(format!("{} is not mined", r.principle.name())))
                }
                _ => {}
            }
        }
        Ok(op)
    }
}

/// Whether a family-level principle holds; `None` for ECQ.
fn family_holds<T: Trivials>(t: &T, p: &PrincipleId) -> Option<bool> {
    Some(match p {
        PrincipleId::Gecq => exact::gecq(t).is_ok(),
        PrincipleId::NfPara => exact::gecq(t).is_err(),
        PrincipleId::Secq => exact::secq(t).is_ok(),
        PrincipleId::SecqPrime => exact::secq_prime(t).is_ok(),
        PrincipleId::Specq => exact::specq(t).is_ok(),
        PrincipleId::Pfecq => exact::pfecq1(t).is_ok(),
        PrincipleId::Pfecq2 => exact::pfecq2(t).is_ok(),
        PrincipleId::Pfecq3 => exact::pfecq3(t).is_ok(),
        PrincipleId::Parecq => exact::parecq1(t).is_some(),
        PrincipleId::Parecq2 => exact::parecq2(t).is_some(),
        PrincipleId::FinTriv { bound } => exact::fin_triv(t, bound.unwrap_or(t.size())).is_some(),
        _ => return None,
    })
}

fn realize(fam: &SmallFamily) -> FiniteStructure {
    FiniteStructure::from_trivials(fam).expect("families are within the carrier cap")
}

fn passes_filters(s: &FiniteStructure, filters: &[Condition]) -> bool {
    if filters.is_empty() {
        return true;
    }
    let flags = tarskian_flags(s.size(), |m| s.apply(m));
    filters.iter().all(|c| match c {
        Condition::Reflexive => flags[0],
        Condition::Monotonic => flags[1],
        Condition::Transitive => flags[2],
        Condition::MonotonicForTrivialSets => flags[3],
    })
}

/// The first unary map, in base-`n` code order, meeting the ECQ requirements.
fn find_op(fam: &SmallFamily, q: &SeparationQuery) -> Option<Vec<usize>> {
    let n = fam.size();
    let wants: Vec<bool> =
        q.require.iter().filter(|r| matches!(r.principle, PrincipleId::Ecq { .. })).map(|r| r.status == Status::Proven).collect();
    (0..n.pow(n as u32)).map(|code| unary_map(n, code)).find(|neg| {
        let holds = exact::ecq(fam, neg).is_ok();
        wants.iter().all(|&w| w == holds)
    })
}

fn unary_map(n: usize, mut code: usize) -> Vec<usize> {
    (0..n)
        .map(|_| {
            let x = code % n;
            code /= n;
            x
        })
        .collect()
}

fn matches(fam: &SmallFamily, q: &SeparationQuery) -> bool {
    let family_ok = q.require.iter().all(|r| family_holds(fam, &r.principle).map_or(true, |h| h == (r.status == Status::Proven)));
    family_ok && passes_filters(&realize(fam), &q.filters)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Separation {
    pub carrier: usize,
    /// `exhaustive` when every smaller carrier and every family of this size was scanned.
    pub scope: &'static str,
    pub structure: crate::io::FiniteSpec,
    /// Trivial sets of the structure, by element names.
    pub trivial_sets: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum MineResult {
    Found(Separation),
    /// Every family on carriers up to `max_carrier` was scanned.
    None { max_carrier: usize },
    /// Exhaustive up to `exhaustive_up_to`, sampled beyond it.
    Unknown { exhaustive_up_to: usize, samples: u64 },
}

pub fn find_separation(q: &SeparationQuery, exec: Exec) -> Result<MineResult> {
    let op = q.validate()?;
    let mut exhaustive_up_to = q.min_carrier - 1;
    for n in q.min_carrier..=q.max_carrier {
        let hit = if n <= EXHAUSTIVE_MAX {
            let count = 1u64 << (1 << n);
            let first = fold_range(
                exec,
                0..count,
                1 << 10,
                || None,
                |acc: Option<u64>, bits| {
                    if acc.is_some() {
                        return acc;
                    }
                    let fam = SmallFamily::new(n, bits);
                    (matches(&fam, q) && (op.is_none() || find_op(&fam, q).is_some())).then_some(bits)
                },
                min_some,
            );
            exhaustive_up_to = n;
            first.map(|bits| SmallFamily::new(n, bits))
        } else {
            let first = fold_range(
                exec,
                0..q.samples,
                256,
                || None,
                |acc: Option<u64>, i| {
                    if acc.is_some() {
                        return acc;
                    }
                    let fam = random_family(n, &mut draw_rng(q.seed, i));
                    (matches(&fam, q) && (op.is_none() || find_op(&fam, q).is_some())).then_some(i)
                },
                min_some,
            );
            first.map(|i| random_family(n, &mut draw_rng(q.seed, i)))
        };
        if let Some(fam) = hit {
            let mut s = realize(&fam);
            if let Some(name) = &op {
                s = s.with_unary_op(name.clone(), find_op(&fam, q).expect("map found during search"))?;
            }
            let s = canonicalize(&s);
            verify(&s, q)?;
            let scope = match (n <= EXHAUSTIVE_MAX, q.min_carrier == 1) {
                (true, true) => "exhaustive",
                (true, false) => "exhaustive_from_min_carrier",
                (false, _) => "sampled",
            };
            let trivial_sets = (0..=s.full())
                .filter(|&m| Trivials::is_trivial(&s, m))
                .map(|m| crate::family::elements(m).map(|i| s.names()[i].clone()).collect())
                .collect();
            return Ok(MineResult::Found(Separation { carrier: n, scope, structure: (&s).into(), trivial_sets }));
        }
    }
    Ok(if exhaustive_up_to == q.max_carrier {
        MineResult::None { max_carrier: q.max_carrier }
    } else {
        MineResult::Unknown { exhaustive_up_to, samples: q.samples }
    })
}

fn min_some(a: Option<u64>, b: Option<u64>) -> Option<u64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    }
}

/// Re-checks every requirement through [`check`], which must answer exactly.
fn verify(s: &FiniteStructure, q: &SeparationQuery) -> Result<()> {
    let logic = Logic::Finite(s.clone());
    let budget = Budget { carrier_cap: SmallFamily::MAX, ..Budget::default() };
    for r in &q.require {
        let v = check(&logic, &r.principle, &budget)?;
        if !v.scope.is_exact() || v.status != r.status {
            return Err(Error::invalid("mined structure", format!("{} re-checked as {} ({:?})", r.principle, v.status, v.scope.kind)));
        }
    }
    if !passes_filters(s, &q.filters) {
        return Err(Error::invalid("mined structure", "fails a structural filter after canonicalization"));
    }
    Ok(())
}

/// A random family: every set trivial with a per-draw density, or the up-closure of a few
/// random generators.
pub fn random_family(n: usize, rng: &mut impl Rng) -> SmallFamily {
    let full = full_mask(n);
    let mut bits = 0u64;
    if rng.random_bool(0.5) {
        let gens: Vec<Mask> = (0..rng.random_range(1..=4)).map(|_| rng.random_range(0..=full)).collect();
        for m in 0..=full {
            if gens.iter().any(|&g| g & !m == 0) {
                bits |= 1 << m;
            }
        }
    } else {
        let density = rng.random_range(0.02..0.6);
        for m in 0..=full {
            if rng.random_bool(density) {
                bits |= 1 << m;
            }
        }
    }
    SmallFamily::new(n, bits)
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else { break };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).expect("a larger element exists");
        p.swap(i - 1, j);
        p[i..].reverse();
    }
    out
}

/// The relabeling with the lexicographically least table (then least unary maps), with
/// default element names.
pub fn canonicalize(s: &FiniteStructure) -> FiniteStructure {
    let key = |t: &FiniteStructure| (t.table().to_vec(), t.unary_ops().iter().map(|o| o.map.clone()).collect::<Vec<_>>());
    let best = permutations(s.size()).into_iter().map(|p| s.relabel(&p)).min_by_key(key).expect("at least one permutation");
    let names = (0..s.size()).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
    best.with_names(names).expect("one name per element")
}

/// Number of tables on `n ≤ 3` elements passing the filters, by full enumeration.
pub fn count_tables(n: usize, filters: &[Condition], exec: Exec) -> u64 {
    assert!((1..=3).contains(&n));
    fold_range(
        exec,
        0..table_count(n),
        1 << 14,
        || 0u64,
        |acc, i| {
            let t = decode(n, i);
            let flags = tarskian_flags(n, |m| t[m as usize]);
            let ok = filters.iter().all(|c| match c {
                Condition::Reflexive => flags[0],
                Condition::Monotonic => flags[1],
                Condition::Transitive => flags[2],
                Condition::MonotonicForTrivialSets => flags[3],
            });
            acc + ok as u64
        },
        |a, b| a + b,
    )
}

/// Reflexive tables on `n` elements: `Γ` may map to any superset, so the count is the
/// product over `k` of `(2^(n-k))^C(n,k)`.
pub fn reflexive_count(n: usize) -> u128 {
    (0..=n).map(|k| (1u128 << (n - k)).pow(binomial(n, k) as u32)).product()
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// Counts of families per carrier size satisfying each requirement pattern, for reports.
pub fn census(n: usize, principles: &[PrincipleId]) -> Result<BTreeMap<String, u64>> {
    if n > EXHAUSTIVE_MAX {
        return Err(Error::Budget(format!("census is exhaustive and limited to {EXHAUSTIVE_MAX} elements")));
    }
    let mut out = BTreeMap::new();
    for bits in 0..1u64 << (1 << n) {
        let fam = SmallFamily::new(n, bits);
        let key: Vec<String> = principles
            .iter()
            .map(|p| match family_holds(&fam, p) {
                Some(true) => format!("{p}"),
                Some(false) => format!("¬{p}"),
                None => format!("{p}?"),
            })
            .collect();
        *out.entry(key.join(" ∧ ")).or_insert(0) += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn query(s: &str, max: usize) -> SeparationQuery {
        SeparationQuery::new(SeparationQuery::parse_requirements(s).unwrap(), max)
    }

    #[test]
    fn parecq_without_gecq_on_two() {
        let MineResult::Found(sep) = find_separation(&query("parecq=proven,gecq=refuted", 4), Exec::Sequential).unwrap() else {
            panic!("expected a separation")
        };
        assert_eq!(sep.carrier, 2);
        assert_eq!(sep.scope, "exhaustive");
    }

    #[test]
    fn permutations_and_canonical_form() {
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(1), vec![vec![0]]);
        let s = FiniteStructure::from_fn(2, |m| if m == 2 { 3 } else { m }).unwrap();
        let c = canonicalize(&s);
        assert_eq!(c, canonicalize(&s.relabel(&[1, 0])));
        assert!(Trivials::is_trivial(&c, 2));
    }

    #[test]
    fn reflexive_closed_form() {
        assert_eq!(reflexive_count(3), 4096);
        assert_eq!(count_tables(2, &[Condition::Reflexive], Exec::Sequential) as u128, reflexive_count(2));
        assert_eq!(count_tables(2, &[], Exec::Sequential), 256);
    }

    #[test]
    fn rejects_bad_queries() {
        assert!(find_separation(&query("", 3), Exec::Sequential).is_err());
        assert!(find_separation(&query("k_para:a=proven", 3), Exec::Sequential).is_err());
        assert!(find_separation(&query("gecq=proven", 7), Exec::Sequential).is_err());
    }
}
