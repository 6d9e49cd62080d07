//! Node budgets and the branch-splitting contract shared by every exhaustive
//! search in the crate.
//!
//! A search is split at its first decision into independent branches. Each
//! branch runs against the full budget; the job fails iff some branch fails or
//! the summed node count exceeds the budget. That rule depends only on the
//! per-branch counts, so a parallel driver that runs branches in any order
//! reaches the same verdict as [`run_sequential`].

use alloc::vec::Vec;
use core::fmt;

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BudgetExceeded {
    pub limit: u64,
}

impl fmt::Display for BudgetExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "search budget of {} node expansions exceeded", self.limit)
    }
}

impl core::error::Error for BudgetExceeded {}

/// Counts node expansions against a fixed limit.
#[derive(Clone, Debug)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    #[inline]
    pub fn tick(&mut self) -> Result<(), BudgetExceeded> {
        self.used += 1;
        if self.used > self.limit {
            Err(BudgetExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_BUDGET)
    }
}

/// A search whose tree can be cut into independent first-level branches.
pub trait Branching {
    type Item;
    type Error: From<BudgetExceeded>;

    fn branch_count(&self) -> usize;

    /// All leaves under branch `branch`, in search order.
    fn run_branch(&self, branch: usize, budget: &mut Budget) -> Result<Vec<Self::Item>, Self::Error>;
}

/// Outcome of one branch: its leaves and the nodes it spent.
pub type BranchOutcome<T, E> = Result<(Vec<T>, u64), E>;

pub fn run_one<S: Branching>(search: &S, branch: usize, limit: u64) -> BranchOutcome<S::Item, S::Error> {
    let mut budget = Budget::new(limit);
    let items = search.run_branch(branch, &mut budget)?;
    Ok((items, budget.used()))
}

/// Concatenates branch outcomes in branch order, enforcing the shared limit.
pub fn merge_outcomes<T, E: From<BudgetExceeded>>(
    outcomes: impl IntoIterator<Item = BranchOutcome<T, E>>,
    limit: u64,
) -> Result<Vec<T>, E> {
    let mut all = Vec::new();
    let mut used = 0u64;
    for outcome in outcomes {
        let (items, spent) = outcome?;
        used = used.saturating_add(spent);
        all.extend(items);
    }
    if used > limit {
        return Err(BudgetExceeded { limit }.into());
    }
    Ok(all)
}

pub fn run_sequential<S: Branching>(search: &S, limit: u64) -> Result<Vec<S::Item>, S::Error> {
    merge_outcomes((0..search.branch_count()).map(|b| run_one(search, b, limit)), limit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    struct Counting(Vec<u64>);

    impl Branching for Counting {
        type Item = usize;
        type Error = BudgetExceeded;

        fn branch_count(&self) -> usize {
            self.0.len()
        }

        fn run_branch(&self, branch: usize, budget: &mut Budget) -> Result<Vec<usize>, BudgetExceeded> {
            for _ in 0..self.0[branch] {
                budget.tick()?;
            }
            Ok(vec![branch])
        }
    }

    #[test]
    fn budget_applies_to_the_sum_of_branches() {
        let s = Counting(vec![3, 3, 3]);
        assert_eq!(run_sequential(&s, 9).unwrap(), vec![0, 1, 2]);
        assert_eq!(run_sequential(&s, 8), Err(BudgetExceeded { limit: 8 }));
        assert_eq!(run_sequential(&Counting(vec![10]), 5), Err(BudgetExceeded { limit: 5 }));
    }
}
