//! Brute-force completion of the cross composition tables.
//!
//! Variables are the cells of `comp_LR` (row-major) followed by `comp_RL`.
//! Assigning a cell propagates the cross associativity laws that determine
//! another cell outright; the rest are checked as soon as both of their cells
//! are known. Values are tried in ascending order, so leaves come out in
//! lexicographic order of the concatenated tables.

use alloc::vec::Vec;

use super::EngineError;
use crate::bimodule::{validate_bimodule, Bimodule};
use crate::category::TwoObjectCategory;
use crate::search::{run_sequential, Branching, Budget, BudgetExceeded};

const UNSET: usize = usize::MAX;

#[derive(Clone, Copy, Debug)]
enum Constraint {
    /// `cell[dst] = table[cell[src]]`, where `table` is a fixed row/column of a
    /// monoid multiplication.
    Forward { src: usize, dst: usize, op: usize },
    /// `cell[p] = cell[q]`.
    Equal { p: usize, q: usize },
    /// `left[cell[p]] = right[cell[q]]` through two lookup tables.
    Check { p: usize, q: usize, lhs: usize, rhs: usize },
}

/// Exhaustive search for every `(comp_LR, comp_RL)` making `(L, R)` a category.
#[derive(Clone, Debug)]
pub struct CompletionSearch {
    l: Bimodule,
    r: Bimodule,
    /// Number of `comp_LR` cells; `comp_RL` cells follow.
    split: usize,
    /// Value range of each cell.
    range: Vec<usize>,
    constraints: Vec<Constraint>,
    /// Constraint indices touching each cell.
    watch: Vec<Vec<usize>>,
    /// Lookup tables referenced by `Forward::op` and `Check::{lhs, rhs}`.
    tables: Vec<Vec<usize>>,
}

struct State<'s> {
    s: &'s CompletionSearch,
    cells: Vec<usize>,
    trail: Vec<usize>,
    queue: Vec<usize>,
}

impl State<'_> {
    /// Assigns and propagates. On conflict the caller undoes to its mark.
    fn assign(&mut self, cell: usize, v: usize) -> bool {
        if !self.set(cell, v) {
            return false;
        }
        let s = self.s;
        while let Some(c) = self.queue.pop() {
            for &k in &s.watch[c] {
                if !self.fire(s.constraints[k]) {
                    self.queue.clear();
                    return false;
                }
            }
        }
        true
    }

    fn set(&mut self, cell: usize, v: usize) -> bool {
        let cur = self.cells[cell];
        if cur != UNSET {
            return cur == v;
        }
        self.cells[cell] = v;
        self.trail.push(cell);
        self.queue.push(cell);
        true
    }

    fn fire(&mut self, k: Constraint) -> bool {
        match k {
            Constraint::Forward { src, dst, op } => {
                let v = self.cells[src];
                if v == UNSET {
                    return true;
                }
                let w = self.s.tables[op][v];
                self.set(dst, w)
            }
            Constraint::Equal { p, q } => match (self.cells[p], self.cells[q]) {
                (UNSET, UNSET) => true,
                (v, UNSET) => self.set(q, v),
                (UNSET, v) => self.set(p, v),
                (v, w) => v == w,
            },
            Constraint::Check { p, q, lhs, rhs } => {
                let (v, w) = (self.cells[p], self.cells[q]);
                v == UNSET || w == UNSET || self.s.tables[lhs][v] == self.s.tables[rhs][w]
            }
        }
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let c = self.trail.pop().expect("trail above mark");
            self.cells[c] = UNSET;
        }
    }
}

impl CompletionSearch {
    /// Fails unless both bimodules are valid and opposite to each other.
    #[allow(clippy::needless_range_loop)]
    pub fn new(l: &Bimodule, r: &Bimodule) -> Result<Self, EngineError> {
        if l.left() != r.right() || l.right() != r.left() {
            return Err(EngineError::InvalidInput("R is not opposite to L"));
        }
        validate_bimodule(l).map_err(|_| EngineError::InvalidInput("L is not a valid bimodule"))?;
        validate_bimodule(r).map_err(|_| EngineError::InvalidInput("R is not a valid bimodule"))?;
        let (a, b) = (l.left(), l.right());
        let (na, nb, nl, nr) = (a.order(), b.order(), l.carrier(), r.carrier());
        let split = nl * nr;
        let lr = |x: usize, y: usize| x * nr + y;
        let rl = |y: usize, x: usize| split + y * nl + x;
        let mut range = alloc::vec![na; split];
        range.extend(core::iter::repeat(nb).take(split));

        let mut tables: Vec<Vec<usize>> = Vec::new();
        let mut table = |t: Vec<usize>| {
            tables.push(t);
            tables.len() - 1
        };
        // a·_ and _·a in A, b·_ and _·b in B
        let a_left: Vec<usize> = (0..na).map(|g| table((0..na).map(|v| a.mul(g, v)).collect())).collect();
        let a_right: Vec<usize> = (0..na).map(|g| table((0..na).map(|v| a.mul(v, g)).collect())).collect();
        let b_left: Vec<usize> = (0..nb).map(|h| table((0..nb).map(|v| b.mul(h, v)).collect())).collect();
        let b_right: Vec<usize> = (0..nb).map(|h| table((0..nb).map(|v| b.mul(v, h)).collect())).collect();
        // v ↦ v·x' on L (v ∈ A), x·v on L (v ∈ B), v·y' on R (v ∈ B), y·v on R (v ∈ A)
        let act_on_l: Vec<usize> = (0..nl).map(|x2| table((0..na).map(|v| l.act_left(v, x2)).collect())).collect();
        let l_act: Vec<usize> = (0..nl).map(|x| table((0..nb).map(|v| l.act_right(x, v)).collect())).collect();
        let act_on_r: Vec<usize> = (0..nr).map(|y2| table((0..nb).map(|v| r.act_left(v, y2)).collect())).collect();
        let r_act: Vec<usize> = (0..nr).map(|y| table((0..na).map(|v| r.act_right(y, v)).collect())).collect();

        let mut constraints = Vec::new();
        for x in 0..nl {
            for y in 0..nr {
                // (a·x)·y = a·(x·y)
                for g in 0..na {
                    constraints.push(Constraint::Forward { src: lr(x, y), dst: lr(l.act_left(g, x), y), op: a_left[g] });
                }
                // x·(y·a) = (x·y)·a
                for g in 0..na {
                    constraints.push(Constraint::Forward { src: lr(x, y), dst: lr(x, r.act_right(y, g)), op: a_right[g] });
                }
                // (x·b)·y = x·(b·y)
                for h in 0..nb {
                    constraints.push(Constraint::Equal { p: lr(l.act_right(x, h), y), q: lr(x, r.act_left(h, y)) });
                }
                // (x·y)·x' = x·(y·x')
                for x2 in 0..nl {
                    constraints.push(Constraint::Check { p: lr(x, y), q: rl(y, x2), lhs: act_on_l[x2], rhs: l_act[x] });
                }
            }
        }
        for y in 0..nr {
            for x in 0..nl {
                // (y·a)·x = y·(a·x)
                for g in 0..na {
                    constraints.push(Constraint::Equal { p: rl(r.act_right(y, g), x), q: rl(y, l.act_left(g, x)) });
                }
                // y·(x·b) = (y·x)·b
                for h in 0..nb {
                    constraints.push(Constraint::Forward { src: rl(y, x), dst: rl(y, l.act_right(x, h)), op: b_right[h] });
                }
                // (b·y)·x = b·(y·x)
                for h in 0..nb {
                    constraints.push(Constraint::Forward { src: rl(y, x), dst: rl(r.act_left(h, y), x), op: b_left[h] });
                }
                // (y·x)·y' = y·(x·y')
                for y2 in 0..nr {
                    constraints.push(Constraint::Check { p: rl(y, x), q: lr(x, y2), lhs: act_on_r[y2], rhs: r_act[y] });
                }
            }
        }
        let mut watch = alloc::vec![Vec::new(); 2 * split];
        for (k, c) in constraints.iter().enumerate() {
            match *c {
                Constraint::Forward { src, .. } => watch[src].push(k),
                Constraint::Equal { p, q } | Constraint::Check { p, q, .. } => {
                    watch[p].push(k);
                    if q != p {
                        watch[q].push(k);
                    }
                }
            }
        }
        // A forward constraint must also be re-checked when its target is set first.
        for (k, c) in constraints.iter().enumerate() {
            if let Constraint::Forward { src, dst, .. } = *c {
                if dst != src {
                    watch[dst].push(k);
                }
            }
        }
        Ok(CompletionSearch { l: l.clone(), r: r.clone(), split, range, constraints, watch, tables })
    }

    fn fresh(&self) -> State<'_> {
        State { s: self, cells: alloc::vec![UNSET; self.range.len()], trail: Vec::new(), queue: Vec::new() }
    }

    fn leaf(&self, st: &State<'_>) -> TwoObjectCategory {
        let (lr, rl) = st.cells.split_at(self.split);
        TwoObjectCategory::from_flat(self.l.clone(), self.r.clone(), lr.to_vec(), rl.to_vec())
    }

    fn recurse(&self, st: &mut State<'_>, from: usize, out: &mut Vec<TwoObjectCategory>, budget: &mut Budget) -> Result<(), BudgetExceeded> {
        let Some(cell) = (from..self.range.len()).find(|&c| st.cells[c] == UNSET) else {
            out.push(self.leaf(st));
            return Ok(());
        };
        for v in 0..self.range[cell] {
            budget.tick()?;
            let mark = st.trail.len();
            if st.assign(cell, v) {
                self.recurse(st, cell + 1, out, budget)?;
            }
            st.undo_to(mark);
        }
        Ok(())
    }
}

impl Branching for CompletionSearch {
    type Item = TwoObjectCategory;
    type Error = EngineError;

    fn branch_count(&self) -> usize {
        self.range.first().copied().unwrap_or(1)
    }

    fn run_branch(&self, branch: usize, budget: &mut Budget) -> Result<Vec<TwoObjectCategory>, EngineError> {
        let mut st = self.fresh();
        let mut out = Vec::new();
        budget.tick()?;
        if self.range.is_empty() {
            out.push(self.leaf(&st));
        } else if st.assign(0, branch) {
            self.recurse(&mut st, 1, &mut out, budget)?;
        }
        Ok(out)
    }
}

/// Every completion of `(L, R)`, sorted by composition tables.
pub fn search_completions(l: &Bimodule, r: &Bimodule, budget: u64) -> Result<Vec<TwoObjectCategory>, EngineError> {
    let search = CompletionSearch::new(l, r)?;
    let mut out = run_sequential(&search, budget)?;
    sort_categories(&mut out);
    Ok(out)
}

/// Node count alongside the completions.
pub(crate) fn search_counted(l: &Bimodule, r: &Bimodule, budget: u64) -> Result<(Vec<TwoObjectCategory>, u64), EngineError> {
    let search = CompletionSearch::new(l, r)?;
    let mut used = 0;
    let mut out = Vec::new();
    for b in 0..search.branch_count() {
        let (items, spent) = crate::search::run_one(&search, b, budget)?;
        used += spent;
        out.extend(items);
    }
    if used > budget {
        return Err(BudgetExceeded { limit: budget }.into());
    }
    sort_categories(&mut out);
    Ok((out, used))
}

pub fn sort_categories(cats: &mut [TwoObjectCategory]) {
    cats.sort_by(|p, q| p.comp_tables().cmp(&q.comp_tables()));
}
