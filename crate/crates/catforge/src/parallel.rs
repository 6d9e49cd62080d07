//! Rayon drivers with the same results as the sequential core functions.
//!
//! Branches and bimodule pairs are evaluated in any order, then merged in
//! index order, so output never depends on the worker count.

use catforge_core::bimodule::{BimoduleSearch, Normalization};
use catforge_core::engine::{
    assemble, count_pair, goal_pair, sort_categories, CompletionSearch, CountOptions, CountReport, EngineError, GoalReport,
};
use catforge_core::enumerate::{dedup_monoids, EnumerateError, MonoidSearch};
use catforge_core::search::{merge_outcomes, run_one, Branching};
use catforge_core::{build_grouplike, Bimodule, BudgetExceeded, Monoid, TwoObjectCategory};
use rayon::prelude::*;

use crate::error::CliError;

/// Runs `f` on a pool of `workers` threads.
pub fn with_workers<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> Result<T, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| CliError::Resource(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(f))
}

/// Parallel counterpart of `run_sequential`.
pub fn run_parallel<S>(search: &S, limit: u64) -> Result<Vec<S::Item>, S::Error>
where
    S: Branching + Sync,
    S::Item: Send,
    S::Error: Send,
{
    let outcomes: Vec<_> = (0..search.branch_count()).into_par_iter().map(|b| run_one(search, b, limit)).collect();
    merge_outcomes(outcomes, limit)
}

pub fn enumerate_monoids(n: usize, budget: u64) -> Result<Vec<Monoid>, EnumerateError> {
    let search = MonoidSearch::new(n)?;
    Ok(dedup_monoids(run_parallel(&search, budget)?))
}

pub fn enumerate_bimodules(
    a: &Monoid,
    b: &Monoid,
    l: usize,
    normalization: Normalization,
    budget: u64,
) -> Result<Vec<Bimodule>, EngineError> {
    let search = BimoduleSearch::new(a, b, l, normalization)?;
    let leaves = run_parallel(&search, budget)?;
    Ok(search.normalize(leaves))
}

pub fn search_completions(l: &Bimodule, r: &Bimodule, budget: u64) -> Result<Vec<TwoObjectCategory>, EngineError> {
    let search = CompletionSearch::new(l, r)?;
    let mut out = run_parallel(&search, budget)?;
    sort_categories(&mut out);
    Ok(out)
}

fn lists(a: &Monoid, b: &Monoid, cl: usize, cr: usize, normalization: Normalization, budget: u64) -> Result<(Vec<Bimodule>, Vec<Bimodule>), EngineError> {
    Ok((enumerate_bimodules(a, b, cl, normalization, budget)?, enumerate_bimodules(b, a, cr, normalization, budget)?))
}

fn index_pairs(nl: usize, nr: usize) -> Vec<(usize, usize)> {
    (0..nl).flat_map(|p| (0..nr).map(move |q| (p, q))).collect()
}

/// Parallel `count_between`.
pub fn count_between(a: &Monoid, b: &Monoid, cl: usize, cr: usize, opts: &CountOptions) -> Result<CountReport, EngineError> {
    let (ls, rs) = lists(a, b, cl, cr, opts.normalization, opts.budget)?;
    let pairs = index_pairs(ls.len(), rs.len())
        .into_par_iter()
        .map(|(p, q)| count_pair(p, &ls[p], q, &rs[q], opts))
        .collect::<Vec<_>>()
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    assemble(ls.len(), rs.len(), a == b && cl == cr, pairs, opts)
}

/// Parallel `count_categories`.
pub fn count_categories(g: &Monoid, k1: usize, k2: usize, cl: usize, cr: usize, opts: &CountOptions) -> Result<CountReport, EngineError> {
    let (a, _) = build_grouplike(g, k1).map_err(|_| EngineError::NotAGroup)?;
    let (b, _) = build_grouplike(g, k2).map_err(|_| EngineError::NotAGroup)?;
    count_between(&a, &b, cl, cr, opts)
}

/// Parallel `verify_goal_theorem_between`.
pub fn verify_goal_between(
    a: &Monoid,
    b: &Monoid,
    cl: usize,
    cr: usize,
    normalization: Normalization,
    budget: u64,
) -> Result<GoalReport, EngineError> {
    let (ls, rs) = lists(a, b, cl, cr, normalization, budget)?;
    let results: Vec<_> = index_pairs(ls.len(), rs.len()).into_par_iter().map(|(p, q)| goal_pair(p, &ls[p], q, &rs[q], budget)).collect();
    let mut report = GoalReport::default();
    let mut used = 0u64;
    for r in results {
        let (rep, nodes) = r?;
        used = used.saturating_add(nodes);
        report.merge(rep);
    }
    if used > budget {
        return Err(BudgetExceeded { limit: budget }.into());
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use catforge_core::catalog::order_three;
    use catforge_core::DEFAULT_BUDGET;

    #[test]
    fn parallel_matches_sequential_for_any_worker_count() {
        let c6 = order_three(6);
        let seq = catforge_core::enumerate_bimodules(&c6, &c6, 3, Normalization::UpToRelabeling, DEFAULT_BUDGET).unwrap();
        let l = &seq[3];
        let seq_search = catforge_core::search_completions(l, l, DEFAULT_BUDGET).unwrap();
        for w in [1, 2, 4] {
            let par = with_workers(w, || enumerate_bimodules(&c6, &c6, 3, Normalization::UpToRelabeling, DEFAULT_BUDGET)).unwrap().unwrap();
            assert_eq!(par, seq);
            let found = with_workers(w, || search_completions(l, l, DEFAULT_BUDGET)).unwrap().unwrap();
            assert_eq!(found, seq_search);
        }
        let seq_monoids = catforge_core::enumerate_monoids(4).unwrap();
        assert_eq!(with_workers(3, || enumerate_monoids(4, DEFAULT_BUDGET)).unwrap().unwrap(), seq_monoids);
    }

    #[test]
    fn parallel_count_matches_sequential() {
        let opts = CountOptions { cross_validate: true, ..Default::default() };
        let g = Monoid::trivial();
        let seq = catforge_core::count_categories(&g, 2, 2, 3, 3, &opts).unwrap();
        let par = with_workers(4, || count_categories(&g, 2, 2, 3, 3, &opts)).unwrap().unwrap();
        assert_eq!(par, seq);
    }

    #[test]
    fn budget_verdict_is_order_independent() {
        let c6 = order_three(6);
        for limit in [1, 10, 100, 1000] {
            let seq = catforge_core::enumerate_bimodules(&c6, &c6, 3, Normalization::Labeled, limit).map_err(EngineError::from);
            let par = with_workers(4, || enumerate_bimodules(&c6, &c6, 3, Normalization::Labeled, limit)).unwrap();
            assert_eq!(seq.is_ok(), par.is_ok(), "limit {limit}");
        }
    }
}
