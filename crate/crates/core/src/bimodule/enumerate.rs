use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use super::orbit::orbit_condition_holds;
use super::Bimodule;
use crate::grouplike::detect_grouplike;
use crate::monoid::Monoid;
use crate::search::{run_sequential, Branching, Budget, BudgetExceeded};

/// How [`enumerate_bimodules`] reports its results.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Normalization {
    /// Every valid pair of action tables on the labelled carrier.
    Labeled,
    /// One representative per class under carrier relabelling.
    UpToRelabeling,
    /// Only bimodules where both group parts act freely with the single common
    /// orbit `{0, …, |G|-1}`, one per class under relabellings fixing that set.
    FixOrbitRepresentative,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EnumerateBimodulesError {
    /// Orbit normalization needs both monoids grouplike.
    NotGrouplike,
    Budget(BudgetExceeded),
}

impl fmt::Display for EnumerateBimodulesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumerateBimodulesError::NotGrouplike => {
                write!(f, "orbit normalization requires both monoids to be grouplike")
            }
            EnumerateBimodulesError::Budget(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for EnumerateBimodulesError {}

impl From<BudgetExceeded> for EnumerateBimodulesError {
    fn from(e: BudgetExceeded) -> Self {
        EnumerateBimodulesError::Budget(e)
    }
}

const UNSET: usize = usize::MAX;

#[derive(Clone, Debug)]
struct Pin {
    left_group: Vec<usize>,
    right_group: Vec<usize>,
    /// Group orders differ, so nothing can satisfy the orbit condition.
    impossible: bool,
}

/// Backtracking search over the action tables of `(A, B)`-bimodules on a
/// carrier of fixed size.
#[derive(Clone, Debug)]
pub struct BimoduleSearch {
    a: Monoid,
    b: Monoid,
    l: usize,
    normalization: Normalization,
    pin: Option<Pin>,
    /// `(true, a, x)` for `a·x`, `(false, x, b)` for `x·b`.
    cells: Vec<(bool, usize, usize)>,
}

struct Partial<'s> {
    s: &'s BimoduleSearch,
    left: Vec<usize>,
    right: Vec<usize>,
}

impl Partial<'_> {
    #[inline]
    fn al(&self, a: usize, x: usize) -> usize {
        if x == UNSET {
            UNSET
        } else {
            self.left[a * self.s.l + x]
        }
    }

    #[inline]
    fn ar(&self, x: usize, b: usize) -> usize {
        if x == UNSET {
            UNSET
        } else {
            self.right[x * self.s.b.order() + b]
        }
    }

    fn consistent(&self) -> bool {
        let (am, bm, l) = (&self.s.a, &self.s.b, self.s.l);
        for a in 0..am.order() {
            for a2 in 0..am.order() {
                for x in 0..l {
                    let lhs = self.al(am.mul(a, a2), x);
                    let rhs = self.al(a, self.al(a2, x));
                    if lhs != UNSET && rhs != UNSET && lhs != rhs {
                        return false;
                    }
                }
            }
        }
        for x in 0..l {
            for c in 0..bm.order() {
                for c2 in 0..bm.order() {
                    let lhs = self.ar(x, bm.mul(c, c2));
                    let rhs = self.ar(self.ar(x, c), c2);
                    if lhs != UNSET && rhs != UNSET && lhs != rhs {
                        return false;
                    }
                }
            }
        }
        for a in 0..am.order() {
            for x in 0..l {
                for c in 0..bm.order() {
                    let lhs = self.ar(self.al(a, x), c);
                    let rhs = self.al(a, self.ar(x, c));
                    if lhs != UNSET && rhs != UNSET && lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn allowed(&self, cell: (bool, usize, usize), v: usize) -> bool {
        match &self.s.pin {
            None => true,
            Some(p) => {
                let g = p.left_group.len();
                let (is_left, m, _) = cell;
                let in_group = if is_left { p.left_group.binary_search(&m).is_ok() } else { p.right_group.binary_search(&cell.2).is_ok() };
                !in_group || v < g
            }
        }
    }

    fn set(&mut self, cell: (bool, usize, usize), v: usize) {
        let (is_left, p, q) = cell;
        if is_left {
            self.left[p * self.s.l + q] = v;
        } else {
            self.right[p * self.s.b.order() + q] = v;
        }
    }
}

impl BimoduleSearch {
    pub fn new(a: &Monoid, b: &Monoid, l: usize, normalization: Normalization) -> Result<Self, EnumerateBimodulesError> {
        let pin = if normalization == Normalization::FixOrbitRepresentative {
            let sa = detect_grouplike(a).ok_or(EnumerateBimodulesError::NotGrouplike)?;
            let sb = detect_grouplike(b).ok_or(EnumerateBimodulesError::NotGrouplike)?;
            let impossible = sa.group_order() != sb.group_order() || l < sa.group_order();
            Some(Pin { left_group: sa.group().to_vec(), right_group: sb.group().to_vec(), impossible })
        } else {
            None
        };
        let mut cells = Vec::new();
        for x in 0..l {
            for m in (0..a.order()).filter(|&m| m != a.identity()) {
                cells.push((true, m, x));
            }
        }
        for x in 0..l {
            for m in (0..b.order()).filter(|&m| m != b.identity()) {
                cells.push((false, x, m));
            }
        }
        Ok(BimoduleSearch { a: a.clone(), b: b.clone(), l, normalization, pin, cells })
    }

    fn fresh(&self) -> Partial<'_> {
        let (na, nb, l) = (self.a.order(), self.b.order(), self.l);
        let mut left = alloc::vec![UNSET; na * l];
        let mut right = alloc::vec![UNSET; l * nb];
        for x in 0..l {
            left[self.a.identity() * l + x] = x;
            right[x * nb + self.b.identity()] = x;
        }
        Partial { s: self, left, right }
    }

    fn leaf(&self, p: &Partial<'_>, out: &mut Vec<Bimodule>) {
        let bm = Bimodule::from_flat(self.a.clone(), self.b.clone(), self.l, p.left.clone(), p.right.clone());
        if let Some(pin) = &self.pin {
            if !orbit_condition_holds(&bm, &pin.left_group, &pin.right_group) {
                return;
            }
        }
        out.push(bm);
    }

    fn recurse(&self, p: &mut Partial<'_>, pos: usize, out: &mut Vec<Bimodule>, budget: &mut Budget) -> Result<(), BudgetExceeded> {
        if pos == self.cells.len() {
            self.leaf(p, out);
            return Ok(());
        }
        let cell = self.cells[pos];
        for v in 0..self.l {
            budget.tick()?;
            if !p.allowed(cell, v) {
                continue;
            }
            p.set(cell, v);
            if p.consistent() {
                self.recurse(p, pos + 1, out, budget)?;
            }
        }
        p.set(cell, UNSET);
        Ok(())
    }

    /// Applies the configured normalization to raw leaves, sorting the result.
    pub fn normalize(&self, leaves: Vec<Bimodule>) -> Vec<Bimodule> {
        let set: BTreeSet<Bimodule> = match self.normalization {
            Normalization::Labeled => leaves.into_iter().collect(),
            Normalization::UpToRelabeling => leaves.iter().map(Bimodule::canonical).collect(),
            Normalization::FixOrbitRepresentative => {
                let g = self.pin.as_ref().map_or(0, |p| p.left_group.len());
                leaves.iter().map(|b| b.canonical_under(|s| s[..g].iter().all(|&v| v < g))).collect()
            }
        };
        set.into_iter().collect()
    }
}

impl Branching for BimoduleSearch {
    type Item = Bimodule;
    type Error = EnumerateBimodulesError;

    fn branch_count(&self) -> usize {
        if self.cells.is_empty() {
            1
        } else {
            self.l
        }
    }

    fn run_branch(&self, branch: usize, budget: &mut Budget) -> Result<Vec<Bimodule>, EnumerateBimodulesError> {
        let mut out = Vec::new();
        if self.pin.as_ref().is_some_and(|p| p.impossible) {
            return Ok(out);
        }
        let mut p = self.fresh();
        budget.tick()?;
        match self.cells.first() {
            None => self.leaf(&p, &mut out),
            Some(&cell) => {
                if p.allowed(cell, branch) {
                    p.set(cell, branch);
                    if p.consistent() {
                        self.recurse(&mut p, 1, &mut out, budget)?;
                    }
                }
            }
        }
        Ok(out)
    }
}

/// All `(A, B)`-bimodules on `l` points, normalized and sorted.
pub fn enumerate_bimodules(
    a: &Monoid,
    b: &Monoid,
    l: usize,
    normalization: Normalization,
    budget: u64,
) -> Result<Vec<Bimodule>, EnumerateBimodulesError> {
    let search = BimoduleSearch::new(a, b, l, normalization)?;
    let leaves = run_sequential(&search, budget)?;
    Ok(search.normalize(leaves))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bimodule::validate_bimodule;
    use crate::catalog::order_three;
    use crate::search::DEFAULT_BUDGET;

    /// Oracle: every pair of tables, filtered by the axioms.
    fn brute_force_labeled(a: &Monoid, b: &Monoid, l: usize) -> Vec<Bimodule> {
        let (na, nb) = (a.order(), b.order());
        let cells = na * l + l * nb;
        let mut out = Vec::new();
        for code in 0..l.pow(cells as u32) {
            let mut c = code;
            let digits: Vec<usize> = (0..cells)
                .map(|_| {
                    let d = c % l;
                    c /= l;
                    d
                })
                .collect();
            let bm = Bimodule::from_flat(a.clone(), b.clone(), l, digits[..na * l].to_vec(), digits[na * l..].to_vec());
            if validate_bimodule(&bm).is_ok() {
                out.push(bm);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn labeled_matches_brute_force() {
        let z2 = Monoid::cyclic(2);
        for (a, b, l) in [(&z2, &z2, 2), (&Monoid::trivial(), &z2, 3)] {
            let oracle = brute_force_labeled(a, b, l);
            assert_eq!(enumerate_bimodules(a, b, l, Normalization::Labeled, DEFAULT_BUDGET).unwrap(), oracle);
        }
        let c2 = order_three(2);
        let oracle = brute_force_labeled(&c2, &z2, 2);
        assert_eq!(enumerate_bimodules(&c2, &z2, 2, Normalization::Labeled, DEFAULT_BUDGET).unwrap(), oracle);
    }

    #[test]
    fn relabeling_classes_match_brute_force() {
        let c5 = order_three(5);
        let z2 = Monoid::cyclic(2);
        let oracle: BTreeSet<Bimodule> = brute_force_labeled(&c5, &z2, 2).iter().map(Bimodule::canonical).collect();
        let found = enumerate_bimodules(&c5, &z2, 2, Normalization::UpToRelabeling, DEFAULT_BUDGET).unwrap();
        assert_eq!(found, oracle.into_iter().collect::<Vec<_>>());
    }

    #[test]
    fn c6_counts_under_each_normalization() {
        let c6 = order_three(6);
        let count = |n| enumerate_bimodules(&c6, &c6, 3, n, DEFAULT_BUDGET).unwrap().len();
        assert_eq!(count(Normalization::Labeled), 355);
        assert_eq!(count(Normalization::UpToRelabeling), 64);
        assert_eq!(count(Normalization::FixOrbitRepresentative), 15);
    }

    #[test]
    fn c5_has_a_single_orbit_representative() {
        let c5 = order_three(5);
        let found = enumerate_bimodules(&c5, &c5, 3, Normalization::FixOrbitRepresentative, DEFAULT_BUDGET).unwrap();
        assert_eq!(found.len(), 1);
        assert!(found.iter().all(|b| validate_bimodule(b).is_ok()));
    }

    #[test]
    fn orbit_normalization_needs_grouplike_monoids() {
        let c1 = order_three(1);
        assert_eq!(
            enumerate_bimodules(&c1, &c1, 3, Normalization::FixOrbitRepresentative, DEFAULT_BUDGET),
            Err(EnumerateBimodulesError::NotGrouplike)
        );
    }

    #[test]
    fn tiny_budget_is_reported() {
        let c6 = order_three(6);
        assert!(matches!(
            enumerate_bimodules(&c6, &c6, 3, Normalization::Labeled, 10),
            Err(EnumerateBimodulesError::Budget(_))
        ));
    }
}
