//! The two counting paths and the harness comparing them.
//!
//! [`construct`] builds categories in closed form from strongly unigen
//! bimodule pairs; [`search_completions`] finds every associative completion
//! by backtracking and serves as the oracle.

use core::fmt;

use crate::bimodule::{EnumerateBimodulesError, UnigenError};
use crate::category::CategoryError;
use crate::search::BudgetExceeded;

mod construct;
mod count;
mod iso;
mod search;

pub use construct::{construct, construct_all, construction_specs, ConstructionSpec};
pub use count::{
    assemble, bimodule_lists, count_between, count_categories, count_pair, goal_pair, verify_goal_theorem,
    verify_goal_theorem_between, ByI, CountOptions, CountReport, Discrepancy, GoalReport, MissingFrom, PairCount,
    UnorderedCounts,
};
pub use iso::{category_key, CategoryKey};
pub use search::{search_completions, sort_categories, CompletionSearch};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EngineError {
    Budget(BudgetExceeded),
    InvalidInput(&'static str),
    NotAGroup,
    NotGrouplike,
    SpecViolation(&'static str),
    Unigen(UnigenError),
    Category(CategoryError),
    Bimodules(EnumerateBimodulesError),
}

impl fmt::Display for EngineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EngineError::Budget(e) => e.fmt(f),
            EngineError::InvalidInput(what) => write!(f, "invalid input: {what}"),
            EngineError::NotAGroup => write!(f, "group argument is not a group"),
            EngineError::NotGrouplike => write!(f, "endomorphism monoids must be grouplike"),
            EngineError::SpecViolation(what) => write!(f, "construction spec rejected: {what}"),
            EngineError::Unigen(e) => e.fmt(f),
            EngineError::Category(e) => e.fmt(f),
            EngineError::Bimodules(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for EngineError {}

impl From<BudgetExceeded> for EngineError {
    fn from(e: BudgetExceeded) -> Self {
        EngineError::Budget(e)
    }
}

impl From<EnumerateBimodulesError> for EngineError {
    fn from(e: EnumerateBimodulesError) -> Self {
        match e {
            EnumerateBimodulesError::Budget(b) => EngineError::Budget(b),
            other => EngineError::Bimodules(other),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bimodule::{enumerate_bimodules, Bimodule, Normalization};
    use crate::catalog::{order_three, z3_involution_bimodule, z3_shift_bimodule};
    use crate::category::{check_idempotent_lemmas, compute_imax, validate_category, Lemma};
    use crate::grouplike::build_grouplike;
    use crate::monoid::{center, Monoid};
    use crate::search::DEFAULT_BUDGET;
    use alloc::collections::BTreeMap;
    use alloc::vec;
    use alloc::vec::Vec;

    fn c5_pair() -> (Bimodule, Bimodule) {
        let c5 = order_three(5);
        let ls = enumerate_bimodules(&c5, &c5, 3, Normalization::FixOrbitRepresentative, DEFAULT_BUDGET).unwrap();
        assert_eq!(ls.len(), 1);
        (ls[0].clone(), ls[0].clone())
    }

    #[test]
    fn c5_has_two_level_zero_categories() {
        let (l, r) = c5_pair();
        let specs = construction_specs(&l, &r).unwrap();
        let zero: Vec<_> = specs.iter().filter(|s| s.i == 0).collect();
        assert_eq!(zero.len(), 2);
        let cats: Vec<_> = zero.iter().map(|s| construct(s).unwrap()).collect();
        assert_ne!(cats[0], cats[1]);
        for c in &cats {
            assert_eq!(validate_category(c), Ok(()));
            assert_eq!(compute_imax(c).unwrap().i_max, 0);
            assert!(c.is_reduced());
        }
    }

    #[test]
    fn c5_search_finds_the_two_reduced_categories_and_the_regular_one() {
        let (l, r) = c5_pair();
        let found = search_completions(&l, &r, DEFAULT_BUDGET).unwrap();
        assert_eq!(found.len(), 3);
        assert_eq!(found.iter().filter(|c| c.is_reduced()).count(), 2);
        let mut built: Vec<_> = construct_all(&l, &r).unwrap().into_iter().map(|(_, c)| c).collect();
        sort_categories(&mut built);
        assert_eq!(built, found);
    }

    #[test]
    fn z3_involution_admits_nothing() {
        let (s, t) = (z3_shift_bimodule(), z3_involution_bimodule());
        assert!(search_completions(&s, &t, DEFAULT_BUDGET).unwrap().is_empty());
        assert!(construct_all(&s, &t).unwrap().is_empty());
    }

    #[test]
    fn trivial_everything_has_one_completion() {
        let one = Monoid::trivial();
        let b = Bimodule::regular(&one);
        assert_eq!(search_completions(&b, &b, DEFAULT_BUDGET).unwrap().len(), 1);
    }

    #[test]
    fn z3_groupoid_count_is_the_center_per_compatible_pair() {
        let z3 = Monoid::cyclic(3);
        let rep = count_categories(&z3, 0, 0, 3, 3, &CountOptions { cross_validate: true, ..Default::default() }).unwrap();
        assert_eq!(rep.left_bimodules, 2);
        let per_pair: Vec<usize> = rep.pairs.iter().map(PairCount::total).collect();
        assert_eq!(per_pair, vec![3, 0, 0, 3]);
        assert!(rep.discrepancies.is_empty());
    }

    #[test]
    fn center_law_at_level_zero() {
        for g in [Monoid::trivial(), Monoid::cyclic(2), Monoid::cyclic(3), Monoid::cyclic(4), Monoid::symmetric_group(3)] {
            let reg = Bimodule::regular(&g);
            let specs = construction_specs(&reg, &reg).unwrap();
            assert_eq!(specs.len(), center(&g).unwrap().len());
        }
    }

    #[test]
    fn c6_counts() {
        let opts = CountOptions { cross_validate: true, ..Default::default() };
        let rep = count_categories(&Monoid::trivial(), 2, 2, 3, 3, &opts).unwrap();
        assert_eq!(rep.left_bimodules, 15);
        let u = rep.unordered.as_ref().unwrap();
        assert_eq!(u.diagonal_by_i, BTreeMap::from([(0, 15), (1, 2), (2, 1)]));
        assert_eq!(u.off_diagonal_by_i, BTreeMap::from([(0, 105), (1, 1)]));
        assert_eq!(u.total, 124);
        assert!(u.asymmetric.is_empty());
        assert_eq!(rep.reduced_total(), 123);
        assert!(rep.discrepancies.is_empty());
        assert_eq!(rep.searched_total(), Some(rep.total));
    }

    #[test]
    fn c5_count() {
        let opts = CountOptions { cross_validate: true, ..Default::default() };
        let rep = count_categories(&Monoid::cyclic(2), 1, 1, 3, 3, &opts).unwrap();
        assert_eq!(rep.by_i.get(&0), Some(&2));
        assert_eq!(rep.reduced_total(), 2);
        assert!(rep.discrepancies.is_empty());
    }

    #[test]
    fn mismatched_group_orders_admit_nothing() {
        let (z2_1, _) = build_grouplike(&Monoid::cyclic(2), 1).unwrap();
        let (t_2, _) = build_grouplike(&Monoid::trivial(), 2).unwrap();
        let rep = verify_goal_theorem_between(&z2_1, &t_2, 3, 3, Normalization::UpToRelabeling, DEFAULT_BUDGET).unwrap();
        assert!(rep.holds());
        assert_eq!((rep.constructed, rep.searched), (0, 0));
        let z2 = Monoid::cyclic(2);
        let (t_1, _) = build_grouplike(&Monoid::trivial(), 1).unwrap();
        let rep = verify_goal_theorem_between(&z2, &t_1, 2, 2, Normalization::UpToRelabeling, DEFAULT_BUDGET).unwrap();
        assert!(rep.holds());
        assert_eq!(rep.searched, 0);
    }

    #[test]
    fn unique_above_level_zero_and_factors_through_core() {
        let c6 = order_three(6);
        let ls = enumerate_bimodules(&c6, &c6, 3, Normalization::FixOrbitRepresentative, DEFAULT_BUDGET).unwrap();
        for l in &ls {
            for r in &ls {
                let specs = construction_specs(l, r).unwrap();
                let found = search_completions(l, r, DEFAULT_BUDGET).unwrap();
                for i in 1..=2 {
                    let at_i: Vec<_> = specs.iter().filter(|s| s.i == i).collect();
                    assert!(at_i.len() <= 1);
                    let searched: Vec<_> = found.iter().filter(|c| compute_imax(c).unwrap().i_max == i).collect();
                    assert_eq!(searched.len(), at_i.len());
                    if let Some(s) = at_i.first() {
                        assert_eq!(&construct(s).unwrap(), searched[0]);
                    }
                }
                for s in &specs {
                    let c = construct(s).unwrap();
                    let rep = check_idempotent_lemmas(&c).unwrap();
                    let core = rep.checks.iter().find(|k| k.lemma == Lemma::FactorsThroughCore).unwrap();
                    assert_eq!(core.witness, None);
                }
            }
        }
    }

    #[test]
    fn spec_with_wrong_generators_is_rejected() {
        let (s, t) = (z3_shift_bimodule(), z3_involution_bimodule());
        let spec = ConstructionSpec { l: s, r: t, i: 0, x: 0, y: 0 };
        assert!(construct(&spec).is_err());
    }

    #[test]
    fn budget_is_enforced() {
        let (l, r) = c5_pair();
        assert!(matches!(search_completions(&l, &r, 3), Err(EngineError::Budget(_))));
    }
}
