use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use super::construct::construct_all;
use super::iso::{category_key, CategoryKey};
use super::search::search_counted;
use super::EngineError;
use crate::bimodule::{enumerate_bimodules, Bimodule, Normalization};
use crate::category::{compute_imax, TwoObjectCategory};
use crate::grouplike::build_grouplike;
use crate::monoid::Monoid;
use crate::search::{BudgetExceeded, DEFAULT_BUDGET};

/// Counts keyed by `i_max`.
pub type ByI = BTreeMap<usize, usize>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountOptions {
    pub normalization: Normalization,
    /// Also run the completion search on every pair.
    pub cross_validate: bool,
    /// Also count isomorphism classes of the constructed categories.
    pub up_to_iso: bool,
    pub budget: u64,
}

impl Default for CountOptions {
    fn default() -> Self {
        CountOptions {
            normalization: Normalization::FixOrbitRepresentative,
            cross_validate: false,
            up_to_iso: false,
            budget: DEFAULT_BUDGET,
        }
    }
}

/// Categories on one ordered bimodule pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCount {
    pub l_index: usize,
    pub r_index: usize,
    pub constructed: ByI,
    /// Present when cross-validation ran.
    pub searched: Option<ByI>,
    /// Constructed categories in which `X ≅ Y`.
    pub non_reduced: usize,
    /// Search nodes spent on this pair.
    pub nodes: u64,
    pub iso_keys: Vec<CategoryKey>,
}

impl PairCount {
    pub fn total(&self) -> usize {
        self.constructed.values().sum()
    }

    /// Search agrees with construction, or search did not run.
    pub fn consistent(&self) -> bool {
        self.searched.as_ref().map_or(true, |s| *s == self.constructed)
    }
}

/// Totals over unordered pairs `{L, R}`, available when both lists coincide.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UnorderedCounts {
    /// Pairs `(L, L)`.
    pub diagonal_by_i: ByI,
    /// Pairs `{L, R}` with `L != R`, each counted once.
    pub off_diagonal_by_i: ByI,
    pub by_i: ByI,
    pub total: usize,
    pub non_reduced: usize,
    /// Index pairs where `(L, R)` and `(R, L)` give different counts.
    pub asymmetric: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountReport {
    pub left_bimodules: usize,
    pub right_bimodules: usize,
    pub pairs: Vec<PairCount>,
    /// Over ordered pairs.
    pub by_i: ByI,
    pub total: usize,
    pub non_reduced: usize,
    pub unordered: Option<UnorderedCounts>,
    /// Pairs where search and construction disagree.
    pub discrepancies: Vec<(usize, usize)>,
    pub iso_classes: Option<usize>,
}

impl CountReport {
    /// Categories with non-isomorphic objects, over unordered pairs when
    /// available.
    pub fn reduced_total(&self) -> usize {
        match &self.unordered {
            Some(u) => u.total - u.non_reduced,
            None => self.total - self.non_reduced,
        }
    }

    pub fn searched_total(&self) -> Option<usize> {
        self.pairs.iter().map(|p| p.searched.as_ref().map(|s| s.values().sum::<usize>())).sum()
    }
}

fn bucket(cats: &[TwoObjectCategory]) -> Result<ByI, EngineError> {
    let mut by_i = ByI::new();
    for c in cats {
        let i = compute_imax(c).map_err(EngineError::Category)?.i_max;
        *by_i.entry(i).or_default() += 1;
    }
    Ok(by_i)
}

pub fn count_pair(l_index: usize, l: &Bimodule, r_index: usize, r: &Bimodule, opts: &CountOptions) -> Result<PairCount, EngineError> {
    let built = construct_all(l, r)?;
    let mut constructed = ByI::new();
    let mut non_reduced = 0;
    for (i, c) in &built {
        *constructed.entry(*i).or_default() += 1;
        non_reduced += usize::from(!c.is_reduced());
    }
    let (searched, nodes) = if opts.cross_validate {
        let (found, nodes) = search_counted(l, r, opts.budget)?;
        (Some(bucket(&found)?), nodes)
    } else {
        (None, 0)
    };
    let iso_keys = if opts.up_to_iso { built.iter().map(|(_, c)| category_key(c)).collect() } else { Vec::new() };
    Ok(PairCount { l_index, r_index, constructed, searched, non_reduced, nodes, iso_keys })
}

fn add_into(acc: &mut ByI, other: &ByI) {
    for (&i, &n) in other {
        *acc.entry(i).or_default() += n;
    }
}

/// Combines per-pair counts (in any order) into a report. `symmetric` says
/// the left and right lists are the same list.
pub fn assemble(left: usize, right: usize, symmetric: bool, mut pairs: Vec<PairCount>, opts: &CountOptions) -> Result<CountReport, EngineError> {
    pairs.sort_by_key(|p| (p.l_index, p.r_index));
    let used: u64 = pairs.iter().map(|p| p.nodes).fold(0, u64::saturating_add);
    if used > opts.budget {
        return Err(BudgetExceeded { limit: opts.budget }.into());
    }
    let mut by_i = ByI::new();
    for p in &pairs {
        add_into(&mut by_i, &p.constructed);
    }
    let total = by_i.values().sum();
    let non_reduced = pairs.iter().map(|p| p.non_reduced).sum();
    let discrepancies = pairs.iter().filter(|p| !p.consistent()).map(|p| (p.l_index, p.r_index)).collect();
    let iso_classes = opts.up_to_iso.then(|| pairs.iter().flat_map(|p| p.iso_keys.iter()).collect::<BTreeSet<_>>().len());

    let unordered = symmetric.then(|| {
        let index: BTreeMap<(usize, usize), &PairCount> = pairs.iter().map(|p| ((p.l_index, p.r_index), p)).collect();
        let mut u = UnorderedCounts::default();
        for p in pairs.iter().filter(|p| p.l_index <= p.r_index) {
            if p.l_index == p.r_index {
                add_into(&mut u.diagonal_by_i, &p.constructed);
            } else {
                add_into(&mut u.off_diagonal_by_i, &p.constructed);
                if index.get(&(p.r_index, p.l_index)).map(|q| &q.constructed) != Some(&p.constructed) {
                    u.asymmetric.push((p.l_index, p.r_index));
                }
            }
            u.non_reduced += p.non_reduced;
        }
        u.by_i = u.diagonal_by_i.clone();
        let off = u.off_diagonal_by_i.clone();
        add_into(&mut u.by_i, &off);
        u.total = u.by_i.values().sum();
        u
    });

    Ok(CountReport { left_bimodules: left, right_bimodules: right, pairs, by_i, total, non_reduced, unordered, discrepancies, iso_classes })
}

/// The left `(A, B)` and right `(B, A)` bimodule lists used for counting.
pub fn bimodule_lists(a: &Monoid, b: &Monoid, cl: usize, cr: usize, normalization: Normalization, budget: u64) -> Result<(Vec<Bimodule>, Vec<Bimodule>), EngineError> {
    let ls = enumerate_bimodules(a, b, cl, normalization, budget)?;
    let rs = enumerate_bimodules(b, a, cr, normalization, budget)?;
    Ok((ls, rs))
}

/// Counts over every pair from [`bimodule_lists`], sequentially.
pub fn count_between(a: &Monoid, b: &Monoid, cl: usize, cr: usize, opts: &CountOptions) -> Result<CountReport, EngineError> {
    let (ls, rs) = bimodule_lists(a, b, cl, cr, opts.normalization, opts.budget)?;
    let mut pairs = Vec::with_capacity(ls.len() * rs.len());
    for (p, l) in ls.iter().enumerate() {
        for (q, r) in rs.iter().enumerate() {
            pairs.push(count_pair(p, l, q, r, opts)?);
        }
    }
    assemble(ls.len(), rs.len(), a == b && cl == cr, pairs, opts)
}

/// Counts between `G^{*k1}` and `G^{*k2}`.
pub fn count_categories(g: &Monoid, k1: usize, k2: usize, cl: usize, cr: usize, opts: &CountOptions) -> Result<CountReport, EngineError> {
    let (a, _) = build_grouplike(g, k1).map_err(|_| EngineError::NotAGroup)?;
    let (b, _) = build_grouplike(g, k2).map_err(|_| EngineError::NotAGroup)?;
    count_between(&a, &b, cl, cr, opts)
}

/// Which path failed to produce a category the other one found.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MissingFrom {
    Search,
    Construction,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub l_index: usize,
    pub r_index: usize,
    pub missing_from: MissingFrom,
    pub category: TwoObjectCategory,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GoalReport {
    pub pairs: usize,
    pub constructed: usize,
    pub searched: usize,
    pub discrepancies: Vec<Discrepancy>,
}

impl GoalReport {
    pub fn holds(&self) -> bool {
        self.discrepancies.is_empty() && self.constructed == self.searched
    }

    pub fn merge(&mut self, other: GoalReport) {
        self.pairs += other.pairs;
        self.constructed += other.constructed;
        self.searched += other.searched;
        self.discrepancies.extend(other.discrepancies);
    }
}

/// Compares the constructed and searched category sets on one pair.
pub fn goal_pair(l_index: usize, l: &Bimodule, r_index: usize, r: &Bimodule, budget: u64) -> Result<(GoalReport, u64), EngineError> {
    let built: Vec<TwoObjectCategory> = construct_all(l, r)?.into_iter().map(|(_, c)| c).collect();
    let (found, nodes) = search_counted(l, r, budget)?;
    let built_set: BTreeSet<&TwoObjectCategory> = built.iter().collect();
    let found_set: BTreeSet<&TwoObjectCategory> = found.iter().collect();
    let mut discrepancies = Vec::new();
    for c in built_set.difference(&found_set) {
        discrepancies.push(Discrepancy { l_index, r_index, missing_from: MissingFrom::Search, category: (*c).clone() });
    }
    for c in found_set.difference(&built_set) {
        discrepancies.push(Discrepancy { l_index, r_index, missing_from: MissingFrom::Construction, category: (*c).clone() });
    }
    let report = GoalReport { pairs: 1, constructed: built.len(), searched: found.len(), discrepancies };
    Ok((report, nodes))
}

/// Both paths over every pair of bimodules between `A` and `B`.
pub fn verify_goal_theorem_between(
    a: &Monoid,
    b: &Monoid,
    cl: usize,
    cr: usize,
    normalization: Normalization,
    budget: u64,
) -> Result<GoalReport, EngineError> {
    let (ls, rs) = bimodule_lists(a, b, cl, cr, normalization, budget)?;
    let mut report = GoalReport::default();
    let mut used = 0u64;
    for (p, l) in ls.iter().enumerate() {
        for (q, r) in rs.iter().enumerate() {
            let (rep, nodes) = goal_pair(p, l, q, r, budget)?;
            used = used.saturating_add(nodes);
            report.merge(rep);
        }
    }
    if used > budget {
        return Err(BudgetExceeded { limit: budget }.into());
    }
    Ok(report)
}

/// [`verify_goal_theorem_between`] for `G^{*k1}` and `G^{*k2}` over bimodules
/// up to carrier relabelling.
pub fn verify_goal_theorem(g: &Monoid, k1: usize, k2: usize, cl: usize, cr: usize, budget: u64) -> Result<GoalReport, EngineError> {
    let (a, _) = build_grouplike(g, k1).map_err(|_| EngineError::NotAGroup)?;
    let (b, _) = build_grouplike(g, k2).map_err(|_| EngineError::NotAGroup)?;
    verify_goal_theorem_between(&a, &b, cl, cr, Normalization::UpToRelabeling, budget)
}
