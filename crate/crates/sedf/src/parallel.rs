//! Multi-threaded drivers for search and sieve.
//!
//! Both produce output independent of the number of worker threads: search
//! branches are merged by canonical order, sieve blocks are emitted in order.

use rayon::prelude::*;
use sedf_core::search::{branches, merge, run_branch, DifferenceTable, NodeCounter};
use sedf_core::sieve::{verdicts_for_order, EnumerateOptions, SIEVE_MAX_ORDER};
use sedf_core::{SearchResult, SearchTask, Verdict};

/// Orders handled per parallel sieve block.
const SIEVE_BLOCK: u64 = 512;

pub fn thread_pool(
    threads: Option<usize>,
) -> Result<rayon::ThreadPool, rayon::ThreadPoolBuildError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads.filter(|&n| n > 0) {
        builder = builder.num_threads(n);
    }
    builder.build()
}

/// Runs every first-level branch of `task` on the current rayon pool.
pub fn search(task: &SearchTask) -> SearchResult {
    let table = DifferenceTable::new(task.group());
    let counter = NodeCounter::new();
    let results: Vec<_> = branches(task)
        .into_par_iter()
        .map(|b| run_branch(task, &table, b, &counter))
        .collect();
    merge(task, results, counter.nodes())
}

/// Feeds verdicts for `2 ≤ v ≤ v_max` to `sink` in `(v, m, k)` order. Blocks
/// of orders are classified on `pool`; `sink` runs on the calling thread.
pub fn sieve<E>(
    pool: &rayon::ThreadPool,
    v_max: u64,
    options: EnumerateOptions,
    mut sink: impl FnMut(&Verdict) -> Result<(), E>,
) -> Result<Result<(), E>, sedf_core::Error> {
    if v_max > SIEVE_MAX_ORDER {
        return Err(sedf_core::Error::BoundExceeded {
            value: v_max,
            bound: SIEVE_MAX_ORDER,
        });
    }
    let mut start = 2;
    while start <= v_max {
        let end = (start + SIEVE_BLOCK - 1).min(v_max);
        let block: Vec<Vec<Verdict>> = pool.install(|| {
            (start..=end)
                .into_par_iter()
                .map(|v| verdicts_for_order(v, &options))
                .collect()
        });
        for v in block.iter().flatten() {
            if let Err(e) = sink(v) {
                return Ok(Err(e));
            }
        }
        start = end + 1;
    }
    Ok(Ok(()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use sedf_core::search::exhaustive_search;
    use sedf_core::sieve::enumerate;
    use sedf_core::Group;

    #[test]
    fn parallel_search_matches_serial() {
        let pool = thread_pool(Some(4)).unwrap();
        for (g, m, k, l) in [
            (Group::cyclic(17).unwrap(), 2, 4, 1),
            (Group::new(&[3, 3]).unwrap(), 3, 2, 1),
            (Group::cyclic(13).unwrap(), 4, 2, 1),
        ] {
            let task = SearchTask::new(&g, m, k, l).unwrap();
            let par = pool.install(|| search(&task));
            let ser = exhaustive_search(&task);
            assert_eq!(par, ser);
        }
    }

    #[test]
    fn parallel_sieve_matches_serial() {
        let pool = thread_pool(Some(3)).unwrap();
        let mut got = Vec::new();
        sieve(&pool, 1200, EnumerateOptions::default(), |v| {
            got.push(v.clone());
            Ok::<_, ()>(())
        })
        .unwrap()
        .unwrap();
        let want: Vec<Verdict> = enumerate(1200, EnumerateOptions::default())
            .unwrap()
            .collect();
        assert_eq!(got, want);
    }
}
