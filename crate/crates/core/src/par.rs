//! Chunked folds over index ranges, data-parallel with the `parallel` feature.
//!
//! Results are combined per chunk, so the combining function must be associative and
//! commutative for the outcome to be independent of scheduling.

use std::ops::Range;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    /// `jobs = None` uses the global thread pool.
    #[default]
    Parallel,
    Jobs(usize),
}

impl Exec {
    pub fn from_jobs(jobs: Option<usize>) -> Self {
        match jobs {
            Some(1) => Exec::Sequential,
            Some(n) => Exec::Jobs(n),
            None => Exec::Parallel,
        }
    }

    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self != Exec::Sequential
    }
}

pub fn fold_range<A, F, C>(exec: Exec, range: Range<u64>, chunk: u64, identity: impl Fn() -> A + Sync, fold: F, combine: C) -> A
where
    A: Send,
    F: Fn(A, u64) -> A + Sync,
    C: Fn(A, A) -> A + Sync,
{
    let chunk = chunk.max(1);
    let end = range.end;
    let run = |lo: u64| {
        let hi = (lo + chunk).min(end);
        (lo..hi).fold(identity(), &fold)
    };
    if !exec.is_parallel() {
        let starts = (range.start..range.end).step_by(chunk as usize);
        return starts.map(run).fold(identity(), &combine);
    }
    parallel(exec, range, chunk, &run, &identity, &combine)
}

#[cfg(feature = "parallel")]
fn parallel<A: Send>(
    exec: Exec,
    range: Range<u64>,
    chunk: u64,
    run: &(dyn Fn(u64) -> A + Sync),
    identity: &(dyn Fn() -> A + Sync),
    combine: &(dyn Fn(A, A) -> A + Sync),
) -> A {
    use rayon::prelude::*;
    let count = (range.end.saturating_sub(range.start)).div_ceil(chunk);
    let go = || (0..count).into_par_iter().map(|i| run(range.start + i * chunk)).reduce(identity, combine);
    match exec {
        Exec::Jobs(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(go),
            Err(_) => go(),
        },
        _ => go(),
    }
}

#[cfg(not(feature = "parallel"))]
fn parallel<A: Send>(
    _exec: Exec,
    range: Range<u64>,
    chunk: u64,
    run: &(dyn Fn(u64) -> A + Sync),
    identity: &(dyn Fn() -> A + Sync),
    combine: &(dyn Fn(A, A) -> A + Sync),
) -> A {
    (range.start..range.end).step_by(chunk as usize).map(run).fold(identity(), combine)
}
