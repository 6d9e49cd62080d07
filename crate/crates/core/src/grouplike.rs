//! Grouplike monoids `G^{*k}`: a group `G` followed by a chain of fresh
//! identities `e_1, …, e_k`, each a two-sided identity for everything added
//! before it.
//!
//! Chain positions are 0-based with the group identity at position 0, so
//! `idempotent(0)` is `e_0 = 1_G` and `idempotent(k)` is the monoid identity
//! (when `k ≥ 1`).

use alloc::vec::Vec;
use core::fmt;

use crate::monoid::{is_group, Monoid, NotAGroup};
use crate::table::MulTable;

/// The idempotents `e_0, e_1, …, e_k` of a grouplike monoid, in chain order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentChain {
    pub elements: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrouplikeStructure {
    monoid: Monoid,
    group: Vec<usize>,
    group_identity: usize,
    chain: Vec<usize>,
    levels: Vec<usize>,
}

impl GrouplikeStructure {
    fn new(monoid: Monoid, mut group: Vec<usize>, group_identity: usize, chain: Vec<usize>) -> Self {
        group.sort_unstable();
        let mut levels = alloc::vec![0; monoid.order()];
        for (i, &e) in chain.iter().enumerate() {
            levels[e] = i + 1;
        }
        GrouplikeStructure { monoid, group, group_identity, chain, levels }
    }

    pub fn monoid(&self) -> &Monoid {
        &self.monoid
    }

    /// Group elements, ascending.
    pub fn group(&self) -> &[usize] {
        &self.group
    }

    pub fn group_order(&self) -> usize {
        self.group.len()
    }

    pub fn group_identity(&self) -> usize {
        self.group_identity
    }

    /// `[e_1, …, e_k]`.
    pub fn chain(&self) -> &[usize] {
        &self.chain
    }

    pub fn k(&self) -> usize {
        self.chain.len()
    }

    /// `e_i`, with `e_0` the group identity.
    pub fn idempotent(&self, i: usize) -> usize {
        if i == 0 {
            self.group_identity
        } else {
            self.chain[i - 1]
        }
    }

    pub fn idempotent_chain(&self) -> IdempotentChain {
        let mut elements = Vec::with_capacity(self.k() + 1);
        elements.push(self.group_identity);
        elements.extend_from_slice(&self.chain);
        IdempotentChain { elements }
    }

    /// 0 for group elements, `i` for `e_i` with `i ≥ 1`.
    pub fn level(&self, x: usize) -> usize {
        self.levels[x]
    }

    /// Chain position of `x` when `x` is one of `e_0, …, e_k`.
    pub fn chain_index(&self, x: usize) -> Option<usize> {
        if x == self.group_identity {
            Some(0)
        } else if self.levels[x] > 0 {
            Some(self.levels[x])
        } else {
            None
        }
    }

    pub fn is_group_element(&self, x: usize) -> bool {
        self.levels[x] == 0
    }

    /// The elements of `G^{*i} = G ∪ {e_1, …, e_i}`, ascending.
    pub fn stage(&self, i: usize) -> Vec<usize> {
        let mut s: Vec<usize> = (0..self.monoid.order()).filter(|&x| self.levels[x] <= i).collect();
        s.sort_unstable();
        s
    }

    /// The underlying group, relabelled in ascending element order.
    pub fn group_monoid(&self) -> Monoid {
        self.monoid.restrict(&self.group).expect("group part is closed")
    }
}

/// `G^{*k}` from a group. Element order: the monoid identity `e_k` first, then
/// the group in its own order, then `e_1, …, e_{k-1}`. For `k = 0` the group is
/// returned unchanged.
pub fn build_grouplike(g: &Monoid, k: usize) -> Result<(Monoid, GrouplikeStructure), NotAGroup> {
    is_group(g).ok_or(NotAGroup)?;
    let gn = g.order();
    if k == 0 {
        let s = GrouplikeStructure::new(g.clone(), (0..gn).collect(), g.identity(), Vec::new());
        return Ok((g.clone(), s));
    }
    let n = gn + k;
    // level of each new index and the group element it carries
    let level = |x: usize| -> usize {
        if x == 0 {
            k
        } else {
            x.saturating_sub(gn)
        }
    };
    let mut cells = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let (lx, ly) = (level(x), level(y));
            let v = if lx == 0 && ly == 0 {
                g.mul(x - 1, y - 1) + 1
            } else if lx >= ly {
                // x is an identity for everything at or below its level
                if lx == ly {
                    x
                } else {
                    y
                }
            } else {
                x
            };
            cells.push(v);
        }
    }
    let table = MulTable::new(n, cells).expect("indices in range");
    let monoid = crate::monoid::validate_monoid(table, 0).expect("G^{*k} is a monoid");
    let group = (1..=gn).collect();
    let mut chain: Vec<usize> = (gn + 1..n).collect();
    chain.push(0);
    let s = GrouplikeStructure::new(monoid.clone(), group, g.identity() + 1, chain);
    Ok((monoid, s))
}

/// The maximal subgroup at idempotent `e`: elements fixed by `e` on both sides
/// that have an inverse relative to `e`.
fn group_at(m: &Monoid, e: usize) -> Vec<usize> {
    let n = m.order();
    let local: Vec<usize> = (0..n).filter(|&x| m.mul(e, x) == x && m.mul(x, e) == x).collect();
    local
        .iter()
        .copied()
        .filter(|&x| local.iter().any(|&y| m.mul(x, y) == e && m.mul(y, x) == e))
        .collect()
}

fn try_decompose(m: &Monoid, e0: usize) -> Option<GrouplikeStructure> {
    let n = m.order();
    let group = group_at(m, e0);
    let mut rest: Vec<usize> = (0..n).filter(|x| !group.contains(x)).collect();
    if !rest.iter().all(|&x| m.is_idempotent(x)) {
        return None;
    }
    let fixes = |e: usize| (0..n).filter(|&x| m.mul(e, x) == x && m.mul(x, e) == x).count();
    rest.sort_by_key(|&e| fixes(e));
    let s = GrouplikeStructure::new(m.clone(), group, e0, rest);
    // every product must follow the G^{*k} rule
    for x in 0..n {
        for y in 0..n {
            let (lx, ly) = (s.level(x), s.level(y));
            let expected = match lx.cmp(&ly) {
                core::cmp::Ordering::Greater => y,
                core::cmp::Ordering::Less => x,
                core::cmp::Ordering::Equal if lx > 0 => x,
                core::cmp::Ordering::Equal => {
                    let p = m.mul(x, y);
                    if s.level(p) != 0 {
                        return None;
                    }
                    p
                }
            };
            if m.mul(x, y) != expected {
                return None;
            }
        }
    }
    Some(s)
}

/// Decomposes `m` as `G^{*k}` when possible, preferring the largest group.
pub fn detect_grouplike(m: &Monoid) -> Option<GrouplikeStructure> {
    m.idempotents()
        .into_iter()
        .filter_map(|e| try_decompose(m, e))
        .fold(None, |best: Option<GrouplikeStructure>, s| match best {
            Some(b) if b.group_order() >= s.group_order() => Some(b),
            _ => Some(s),
        })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrdViolation {
    /// Chain position whose element is not idempotent.
    NotIdempotent(usize),
    /// Positions `(i, j)` where absorption disagrees with `i ≤ j`.
    Order(usize, usize),
}

impl fmt::Display for OrdViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrdViolation::NotIdempotent(i) => write!(f, "chain element at position {i} is not idempotent"),
            OrdViolation::Order(i, j) => write!(f, "order condition fails for positions ({i}, {j})"),
        }
    }
}

/// `e_i·e_j = e_i = e_j·e_i` must hold exactly when `i ≤ j`, for all positions.
/// Returns the lexicographically first failing pair.
pub fn verify_ord(chain: &IdempotentChain, table: &MulTable) -> Result<(), OrdViolation> {
    let es = &chain.elements;
    if let Some(i) = es.iter().position(|&e| table.get(e, e) != e) {
        return Err(OrdViolation::NotIdempotent(i));
    }
    for (i, &ei) in es.iter().enumerate() {
        for (j, &ej) in es.iter().enumerate() {
            let absorbs = table.get(ei, ej) == ei && table.get(ej, ei) == ei;
            if absorbs != (i <= j) {
                return Err(OrdViolation::Order(i, j));
            }
        }
    }
    Ok(())
}

/// Semilattice check on the chain: commutative and idempotent.
pub fn is_semilattice(chain: &IdempotentChain, table: &MulTable) -> bool {
    let es = &chain.elements;
    es.iter().all(|&e| table.get(e, e) == e)
        && es.iter().all(|&a| es.iter().all(|&b| table.get(a, b) == table.get(b, a)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::catalog::order_three;
    use alloc::vec;

    #[test]
    fn trivial_star_two_is_c6() {
        let (m, s) = build_grouplike(&Monoid::trivial(), 2).unwrap();
        assert_eq!(m, order_three(6));
        assert_eq!(s.group(), &[1]);
        assert_eq!(s.idempotent_chain().elements, vec![1, 2, 0]);
    }

    #[test]
    fn z2_star_one_is_c5() {
        let (m, s) = build_grouplike(&Monoid::cyclic(2), 1).unwrap();
        assert_eq!(m, order_three(5));
        assert_eq!(s.group_identity(), 1);
        assert_eq!(s.chain(), &[0]);
    }

    #[test]
    fn star_zero_is_the_group() {
        let (m, s) = build_grouplike(&Monoid::cyclic(2), 0).unwrap();
        assert_eq!(m, Monoid::cyclic(2));
        assert_eq!(s.k(), 0);
        assert_eq!(build_grouplike(&order_three(5), 1).unwrap_err(), NotAGroup);
    }

    #[test]
    fn detects_c5_c6_and_c7() {
        let s5 = detect_grouplike(&order_three(5)).unwrap();
        assert_eq!(s5.group(), &[1, 2]);
        assert_eq!(s5.group_identity(), 1);
        assert_eq!(s5.chain(), &[0]);
        assert!(is_isomorphic(&s5.group_monoid(), &Monoid::cyclic(2)));

        let s6 = detect_grouplike(&order_three(6)).unwrap();
        assert_eq!(s6.group(), &[1]);
        assert_eq!(s6.k(), 2);
        assert_eq!(s6.idempotent_chain().elements, vec![1, 2, 0]);

        let s7 = detect_grouplike(&order_three(7)).unwrap();
        assert_eq!(s7.k(), 0);
        assert_eq!(s7.group_order(), 3);
    }

    #[test]
    fn the_other_order_three_monoids_are_not_grouplike() {
        for i in [1, 2, 3, 4] {
            assert!(detect_grouplike(&order_three(i)).is_none(), "C{i}");
        }
    }

    #[test]
    fn ord_on_c6_chain() {
        let c6 = order_three(6);
        assert_eq!(verify_ord(&IdempotentChain { elements: vec![1, 2, 0] }, c6.table()), Ok(()));
        assert_eq!(verify_ord(&IdempotentChain { elements: vec![0] }, c6.table()), Ok(()));
    }

    #[test]
    fn ord_reports_wrong_direction() {
        // e0 = 0 absorbing; e1 = 1, e2 = 2 with e1·e2 = e2·e1 = e2 (reversed).
        let t = MulTable::from_rows(&[vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 2]]).unwrap();
        assert_eq!(verify_ord(&IdempotentChain { elements: vec![0, 1, 2] }, &t), Err(OrdViolation::Order(1, 2)));
        assert_eq!(
            verify_ord(&IdempotentChain { elements: vec![0, 1] }, &Monoid::cyclic(2).table().clone()),
            Err(OrdViolation::NotIdempotent(1))
        );
    }

    #[test]
    fn stages_of_c6() {
        let s6 = detect_grouplike(&order_three(6)).unwrap();
        assert_eq!(s6.stage(0), vec![1]);
        assert_eq!(s6.stage(1), vec![1, 2]);
        assert_eq!(s6.stage(2), vec![0, 1, 2]);
    }
}
