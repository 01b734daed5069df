//! Formula universes for the bounded checks.
//!
//! Checks over matrices and companions range over a pool of formulas. Two formulas with
//! the same truth-table column in every relevant matrix and the same variables behave
//! identically in every triviality and entailment question, and both column and variable
//! set are computed compositionally. The pool therefore keeps one representative per class,
//! built level by level: a class occurs at depth `d + 1` exactly when some connective
//! applied to representatives of depth `≤ d` lands in it. This is the full syntactic pool
//! up to that equivalence, at a fraction of the size.

use std::collections::HashSet;

use crate::companions::CompanionMode;
use crate::error::{Error, Result};
use crate::formula::{var_name, Formula, Op, Signature, Var};
use crate::matrix::{Matrix, Value};

/// A set of valuation rows, at most 256 of them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RowSet([u64; 4]);

impl RowSet {
    pub const MAX_ROWS: usize = 256;

    pub const EMPTY: RowSet = RowSet([0; 4]);

    pub fn all(rows: usize) -> Self {
        let mut w = [0u64; 4];
        for (i, word) in w.iter_mut().enumerate() {
            let lo = i * 64;
            if rows >= lo + 64 {
                *word = u64::MAX;
            } else if rows > lo {
                *word = (1u64 << (rows - lo)) - 1;
            }
        }
        RowSet(w)
    }

    pub fn from_fn(rows: usize, f: impl Fn(usize) -> bool) -> Self {
        let mut w = [0u64; 4];
        for r in 0..rows {
            if f(r) {
                w[r / 64] |= 1 << (r % 64);
            }
        }
        RowSet(w)
    }

    #[inline]
    pub fn and(self, o: RowSet) -> RowSet {
        RowSet([self.0[0] & o.0[0], self.0[1] & o.0[1], self.0[2] & o.0[2], self.0[3] & o.0[3]])
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == [0; 4]
    }

    #[inline]
    pub fn is_subset(self, o: RowSet) -> bool {
        self.and(o) == self
    }

    pub fn contains(self, r: usize) -> bool {
        self.0[r / 64] >> (r % 64) & 1 == 1
    }
}

/// One pool class: a representative formula and its columns in each matrix of the key.
#[derive(Clone, Debug)]
pub struct PoolEntry {
    pub formula: Formula,
    pub varmask: u64,
    pub columns: Vec<Vec<Value>>,
}

fn var_column(m: &Matrix, vars: &[Var], i: usize) -> Vec<Value> {
    let nv = m.value_count();
    let rows = nv.pow(vars.len() as u32);
    let stride = nv.pow(i as u32);
    (0..rows).map(|r| ((r / stride) % nv) as Value).collect()
}

/// Pool classes over `vars` up to `depth`, keyed by the columns in every matrix of
/// `matrices` (which must share a signature) together with the variable set. Classes appear
/// in order of least depth, then connective order, then argument order. Refuses more than
/// `cap` classes.
pub fn semantic_pool(matrices: &[&Matrix], vars: &[Var], depth: usize, cap: usize) -> Result<Vec<PoolEntry>> {
    let first = matrices.first().ok_or_else(|| Error::invalid("pool", "no matrix given"))?;
    let sig = first.signature();
    if matrices.iter().any(|m| m.signature() != sig) {
        return Err(Error::invalid("pool", "matrices in a joint pool must share a signature"));
    }
    if vars.len() > 64 {
        return Err(Error::Budget("more than 64 pool variables".into()));
    }
    for m in matrices {
        m.row_count(vars.len())?;
    }
    let mut seen: HashSet<(u64, Vec<Vec<Value>>)> = HashSet::new();
    let mut reps: Vec<PoolEntry> = Vec::new();
    let mut push = |e: PoolEntry, reps: &mut Vec<PoolEntry>| -> Result<()> {
        if seen.insert((e.varmask, e.columns.clone())) {
            if reps.len() >= cap {
                return Err(Error::Budget(format!("formula pool exceeds {cap} classes")));
            }
            reps.push(e);
        }
        Ok(())
    };
    for (i, &v) in vars.iter().enumerate() {
        let columns = matrices.iter().map(|m| var_column(m, vars, i)).collect();
        push(PoolEntry { formula: Formula::Var(v), varmask: 1 << i, columns }, &mut reps)?;
    }
    for op in sig.constants() {
        let columns = matrices.iter().map(|m| vec![m.apply(op, &[]); m.row_count(vars.len()).unwrap_or(1)]).collect();
        push(PoolEntry { formula: Formula::constant(op), varmask: 0, columns }, &mut reps)?;
    }
    let mut prev_end = 0;
    for _ in 0..depth {
        let end = reps.len();
        for (op, c) in sig.ops().filter(|(_, c)| c.arity > 0) {
            let mut idx = vec![0usize; c.arity];
            'tuples: loop {
                if idx.iter().any(|&i| i >= prev_end) {
                    let e = apply_entry(matrices, op, &idx.iter().map(|&i| &reps[i]).collect::<Vec<_>>());
                    push(e, &mut reps)?;
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
    }
    Ok(reps)
}

fn apply_entry(matrices: &[&Matrix], op: Op, args: &[&PoolEntry]) -> PoolEntry {
    let columns = matrices
        .iter()
        .enumerate()
        .map(|(mi, m)| {
            let rows = args[0].columns[mi].len();
            let mut buf = vec![0; args.len()];
            (0..rows)
                .map(|r| {
                    for (b, a) in buf.iter_mut().zip(args) {
                        *b = a.columns[mi][r];
                    }
                    m.apply(op, &buf)
                })
                .collect()
        })
        .collect();
    PoolEntry {
        formula: Formula::app(op, args.iter().map(|a| a.formula.clone()).collect()),
        varmask: args.iter().fold(0, |m, a| m | a.varmask),
        columns,
    }
}

/// A formula with its designated rows and the rows on which it counts towards triviality.
#[derive(Clone, Debug)]
pub struct Item {
    pub formula: Formula,
    pub varmask: u64,
    pub designated: RowSet,
    /// `Γ` is trivial exactly when the intersection of `eff` over `Γ` is empty.
    pub eff: RowSet,
}

/// The logic whose triviality the universe decides.
#[derive(Clone, Copy, Debug)]
pub struct Backend<'a> {
    pub matrix: &'a Matrix,
    pub mode: Option<CompanionMode>,
}

impl Backend<'_> {
    /// Matrix: `Γ` is trivial iff no row designates all of it. Left companions: iff that
    /// holds for its variable-free members. Right companion: iff it contains an
    /// unsatisfiable subset, which for matrices is the same as being unsatisfiable. Pure
    /// right companion: never.
    fn eff(&self, designated: RowSet, varmask: u64, rows: usize) -> RowSet {
        match self.mode {
            None | Some(CompanionMode::Right) => designated,
            Some(CompanionMode::Left) | Some(CompanionMode::PureLeft) => {
                if varmask == 0 {
                    designated
                } else {
                    RowSet::all(rows)
                }
            }
            Some(CompanionMode::PureRight) => RowSet::all(rows),
        }
    }
}

pub struct Universe<'a> {
    pub backend: Backend<'a>,
    pub vars: Vec<Var>,
    pub rows: usize,
    pub pool: Vec<Item>,
    /// Witnesses tried before the pool: constants, `¬(p → p)`, `p ∧ ¬p`.
    pub candidates: Vec<Item>,
    pub depth: usize,
    /// Size of the syntactic pool the classes stand for.
    pub syntactic_size: u128,
}

impl<'a> Universe<'a> {
    pub fn build(backend: Backend<'a>, vars: Vec<Var>, depth: usize, cap: usize) -> Result<Self> {
        let m = backend.matrix;
        let rows = m.row_count(vars.len())?;
        if rows > RowSet::MAX_ROWS {
            return Err(Error::Budget(format!(
                "{rows} valuation rows exceed the limit of {}; lower the pool variable count",
                RowSet::MAX_ROWS
            )));
        }
        let entries = semantic_pool(&[m], &vars, depth, cap)?;
        let syntactic_size = crate::formula::pool_size(m.signature(), vars.len(), depth);
        let mut u = Universe { backend, vars, rows, pool: Vec::new(), candidates: Vec::new(), depth, syntactic_size };
        u.pool = entries.into_iter().map(|e| u.item_from_column(e.formula, e.varmask, &e.columns[0])).collect();
        u.candidates = witness_candidates(m.signature()).iter().map(|f| u.item(f)).collect::<Result<_>>()?;
        Ok(u)
    }

    fn item_from_column(&self, formula: Formula, varmask: u64, col: &[Value]) -> Item {
        let m = self.backend.matrix;
        let designated = RowSet::from_fn(self.rows, |r| m.is_designated(col[r]));
        let eff = self.backend.eff(designated, varmask, self.rows);
        Item { formula, varmask, designated, eff }
    }

    /// The item for any formula over the universe's variables.
    pub fn item(&self, f: &Formula) -> Result<Item> {
        let mut varmask = 0u64;
        for v in f.vars() {
            let i = self.vars.iter().position(|&x| x == v).ok_or_else(|| {
                Error::Domain(format!("variable {} is outside the pool variables", var_name(v)))
            })?;
            varmask |= 1 << i;
        }
        let col = self.backend.matrix.column(&self.vars, f)?;
        Ok(self.item_from_column(f.clone(), varmask, &col))
    }

    pub fn all_rows(&self) -> RowSet {
        RowSet::all(self.rows)
    }

    pub fn meet<'i>(&self, items: impl IntoIterator<Item = &'i Item>) -> RowSet {
        items.into_iter().fold(self.all_rows(), |acc, i| acc.and(i.eff))
    }

    pub fn trivial<'i>(&self, items: impl IntoIterator<Item = &'i Item>) -> bool {
        self.meet(items).is_empty()
    }

    /// Rows designating every item.
    pub fn meet_designated<'i>(&self, items: impl IntoIterator<Item = &'i Item>) -> RowSet {
        items.into_iter().fold(self.all_rows(), |acc, i| acc.and(i.designated))
    }

    /// Matrix entailment `Γ ⊨ α` over the universe's rows.
    pub fn entails<'i>(&self, gamma: impl IntoIterator<Item = &'i Item>, alpha: &Item) -> bool {
        let d = gamma.into_iter().fold(self.all_rows(), |acc, i| acc.and(i.designated));
        d.is_subset(alpha.designated)
    }

    /// Inner search domain: candidates first, then the pool.
    pub fn domain(&self) -> impl Iterator<Item = &Item> + Clone {
        self.candidates.iter().chain(self.pool.iter())
    }

    pub fn signature(&self) -> &Signature {
        self.backend.matrix.signature()
    }

    pub fn show(&self, f: &Formula) -> String {
        f.display(self.signature()).to_string()
    }

    pub fn describe(&self) -> String {
        let vars: Vec<String> = self.vars.iter().map(|&v| var_name(v)).collect();
        format!(
            "pool: {} formula classes standing for all {} formulas over {{{}}} up to depth {}",
            self.pool.len(),
            self.syntactic_size,
            vars.join(", "),
            self.depth
        )
    }

    /// The least variable outside `items`. It is not a consequence of a non-trivial set of
    /// them, in a matrix or in any of its companions.
    pub fn fresh_name(&self, items: &[&Item]) -> String {
        let used: std::collections::BTreeSet<Var> = items.iter().flat_map(|i| i.formula.vars()).collect();
        var_name(crate::formula::fresh_var(&used))
    }
}

/// Constants, then `¬(p → p)` and `p ∧ ¬p` when the signature has the connectives.
pub fn witness_candidates(sig: &Signature) -> Vec<Formula> {
    let mut out: Vec<Formula> = sig.constants().map(Formula::constant).collect();
    let p = Formula::Var(0);
    if let (Some(neg), Some(imp)) = (sig.lookup("¬"), sig.lookup("→")) {
        out.push(Formula::unary(neg, Formula::binary(imp, p.clone(), p.clone())));
    }
    if let (Some(neg), Some(and)) = (sig.lookup("¬"), sig.lookup("∧")) {
        out.push(Formula::binary(and, p.clone(), Formula::unary(neg, p)));
    }
    out
}

/// Sets of at most `k` domain items, one per distinct intersection of `eff`, in order of
/// first discovery (fewest items first, candidates before pool).
pub struct Reach {
    pub entries: Vec<(RowSet, Vec<usize>)>,
}

impl Reach {
    pub fn build(u: &Universe<'_>, k: usize, cap: usize) -> Result<Self> {
        let domain: Vec<&Item> = u.domain().collect();
        let mut seen: HashSet<RowSet> = HashSet::new();
        let mut base: Vec<(RowSet, usize)> = Vec::new();
        for (i, it) in domain.iter().enumerate() {
            if seen.insert(it.eff) {
                base.push((it.eff, i));
            }
        }
        let mut entries: Vec<(RowSet, Vec<usize>)> = base.iter().map(|&(r, i)| (r, vec![i])).collect();
        if k == 0 {
            entries.clear();
        }
        let mut level_start = 0;
        for _ in 1..k {
            let level_end = entries.len();
            for e in level_start..level_end {
                for &(r, i) in &base {
                    let meet = entries[e].0.and(r);
                    if seen.insert(meet) {
                        if entries.len() >= cap {
                            return Err(Error::Budget(format!("more than {cap} distinct witness sets")));
                        }
                        let mut items = entries[e].1.clone();
                        items.push(i);
                        entries.push((meet, items));
                    }
                }
            }
            level_start = level_end;
        }
        Ok(Reach { entries })
    }

    /// First set `S` with `meet ∩ eff(S) = ∅`.
    pub fn completing(&self, meet: RowSet) -> Option<&[usize]> {
        self.entries.iter().find(|(r, _)| r.and(meet).is_empty()).map(|(_, items)| items.as_slice())
    }
}
