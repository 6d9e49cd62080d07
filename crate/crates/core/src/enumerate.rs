//! Exhaustive enumeration of monoids of small order up to isomorphism.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::canon::{canonical_form, IsoClassKey};
use crate::monoid::Monoid;
use crate::search::{run_sequential, Branching, Budget, BudgetExceeded, DEFAULT_BUDGET};
use crate::table::MulTable;

/// Largest order accepted by [`enumerate_monoids`].
pub const MAX_ORDER: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EnumerateError {
    OrderTooLarge { n: usize, max: usize },
    OrderZero,
    Budget(BudgetExceeded),
}

impl fmt::Display for EnumerateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumerateError::OrderTooLarge { n, max } => {
                write!(f, "order {n} is too large for exhaustive enumeration (max {max})")
            }
            EnumerateError::OrderZero => write!(f, "monoids have at least one element"),
            EnumerateError::Budget(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for EnumerateError {}

impl From<BudgetExceeded> for EnumerateError {
    fn from(e: BudgetExceeded) -> Self {
        EnumerateError::Budget(e)
    }
}

const UNSET: usize = usize::MAX;

/// Backtracking over the non-identity cells of an `n`-element table with
/// identity fixed at 0. Leaves are labelled monoids.
#[derive(Clone, Debug)]
pub struct MonoidSearch {
    n: usize,
}

impl MonoidSearch {
    pub fn new(n: usize) -> Result<Self, EnumerateError> {
        if n == 0 {
            return Err(EnumerateError::OrderZero);
        }
        if n > MAX_ORDER {
            return Err(EnumerateError::OrderTooLarge { n, max: MAX_ORDER });
        }
        Ok(MonoidSearch { n })
    }
}

struct PartialTable {
    n: usize,
    cells: Vec<usize>,
}

impl PartialTable {
    #[inline]
    fn get(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.n + y]
    }

    #[inline]
    fn triple_ok(&self, x: usize, y: usize, z: usize) -> bool {
        let xy = self.get(x, y);
        if xy == UNSET {
            return true;
        }
        let left = self.get(xy, z);
        if left == UNSET {
            return true;
        }
        let yz = self.get(y, z);
        if yz == UNSET {
            return true;
        }
        let right = self.get(x, yz);
        right == UNSET || left == right
    }

    /// Every triple whose evaluation reads cell `(a, b)`.
    fn consistent_at(&self, a: usize, b: usize) -> bool {
        let n = self.n;
        for t in 0..n {
            if !self.triple_ok(a, b, t) || !self.triple_ok(t, a, b) {
                return false;
            }
        }
        for x in 0..n {
            for y in 0..n {
                if self.get(x, y) == a && !self.triple_ok(x, y, b) {
                    return false;
                }
                if self.get(x, y) == b && !self.triple_ok(a, x, y) {
                    return false;
                }
            }
        }
        true
    }
}

impl MonoidSearch {
    fn free_cells(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        (1..n).flat_map(|x| (1..n).map(move |y| (x, y))).collect()
    }

    fn recurse(
        &self,
        table: &mut PartialTable,
        cells: &[(usize, usize)],
        pos: usize,
        out: &mut Vec<MulTable>,
        budget: &mut Budget,
    ) -> Result<(), BudgetExceeded> {
        if pos == cells.len() {
            out.push(MulTable::new(self.n, table.cells.clone()).expect("complete table"));
            return Ok(());
        }
        let (a, b) = cells[pos];
        for v in 0..self.n {
            budget.tick()?;
            table.cells[a * self.n + b] = v;
            if table.consistent_at(a, b) {
                self.recurse(table, cells, pos + 1, out, budget)?;
            }
        }
        table.cells[a * self.n + b] = UNSET;
        Ok(())
    }
}

impl Branching for MonoidSearch {
    type Item = MulTable;
    type Error = EnumerateError;

    fn branch_count(&self) -> usize {
        if self.n == 1 {
            1
        } else {
            self.n
        }
    }

    fn run_branch(&self, branch: usize, budget: &mut Budget) -> Result<Vec<MulTable>, EnumerateError> {
        let n = self.n;
        let mut table = PartialTable { n, cells: alloc::vec![UNSET; n * n] };
        for x in 0..n {
            table.cells[x] = x;
            table.cells[x * n] = x;
        }
        let cells = self.free_cells();
        let mut out = Vec::new();
        if cells.is_empty() {
            out.push(MulTable::new(n, table.cells).expect("complete table"));
            return Ok(out);
        }
        let (a, b) = cells[0];
        budget.tick()?;
        table.cells[a * n + b] = branch;
        if table.consistent_at(a, b) {
            self.recurse(&mut table, &cells, 1, &mut out, budget)?;
        }
        Ok(out)
    }
}

/// Collapses labelled tables (identity at 0) to one canonical representative per
/// isomorphism class, sorted by key.
pub fn dedup_monoids(tables: impl IntoIterator<Item = MulTable>) -> Vec<Monoid> {
    let mut classes: BTreeMap<IsoClassKey, ()> = BTreeMap::new();
    for t in tables {
        let m = Monoid::from_rows(&t.to_rows(), 0).expect("search only emits monoids");
        classes.insert(canonical_form(&m), ());
    }
    classes.into_keys().map(|k| k.to_monoid()).collect()
}

/// One monoid per isomorphism class of order `n`, sorted by [`IsoClassKey`].
/// Each representative is its own canonical form, so its identity is 0.
pub fn enumerate_monoids(n: usize) -> Result<Vec<Monoid>, EnumerateError> {
    let search = MonoidSearch::new(n)?;
    let tables = run_sequential(&search, DEFAULT_BUDGET)?;
    Ok(dedup_monoids(tables))
}
