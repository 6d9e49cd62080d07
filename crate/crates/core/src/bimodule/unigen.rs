use alloc::vec::Vec;
use core::fmt;

use super::orbit::Side;
use super::{sorted_set, Bimodule};
use crate::grouplike::{detect_grouplike, GrouplikeStructure};

/// Witness that `L_i = e_i·L = L·f_i` is generated by `generator` on both
/// sides, with `a·x = x·φ(a)` for `a ∈ A_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnigenCertificate {
    pub i: usize,
    /// `L_i`, ascending.
    pub subset: Vec<usize>,
    pub generator: usize,
    /// `(a, φ(a))` for every `a ∈ A_i`, ascending in `a`.
    pub phi: Vec<(usize, usize)>,
}

impl UnigenCertificate {
    pub fn phi(&self, a: usize) -> Option<usize> {
        self.phi.binary_search_by_key(&a, |&(k, _)| k).ok().map(|p| self.phi[p].1)
    }
}

/// The condition that failed at some level.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnigenClause {
    /// `e_i·L != L·f_i`
    SetEquality,
    /// No element generates `L_i` bijectively from both sides.
    Bijectivity,
    /// A bijective generator exists but its induced map is not a homomorphism.
    Homomorphism,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UnigenError {
    NotGrouplike(Side),
    LevelOutOfRange { i: usize, max: usize },
    Fails { i: usize, clause: UnigenClause },
    /// Above the group level the generator must be unique.
    GeneratorNotUnique { i: usize, count: usize },
    /// The two bimodules do not go in opposite directions.
    Mismatch,
}

impl fmt::Display for UnigenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnigenError::NotGrouplike(Side::Left) => write!(f, "left monoid is not grouplike"),
            UnigenError::NotGrouplike(Side::Right) => write!(f, "right monoid is not grouplike"),
            UnigenError::LevelOutOfRange { i, max } => write!(f, "level {i} exceeds the common chain length {max}"),
            UnigenError::Fails { i, clause } => write!(f, "level {i}: {clause:?} fails"),
            UnigenError::GeneratorNotUnique { i, count } => write!(f, "level {i}: {count} generators, expected one"),
            UnigenError::Mismatch => write!(f, "bimodules are not opposite to each other"),
        }
    }
}

impl core::error::Error for UnigenError {}

fn structures(b: &Bimodule) -> Result<(GrouplikeStructure, GrouplikeStructure), UnigenError> {
    let sa = detect_grouplike(b.left()).ok_or(UnigenError::NotGrouplike(Side::Left))?;
    let sb = detect_grouplike(b.right()).ok_or(UnigenError::NotGrouplike(Side::Right))?;
    Ok((sa, sb))
}

/// Analyses level `i`. Returns one certificate per generator; at `i = 0` there
/// may be several, above it exactly one.
pub fn unigen_analyze(b: &Bimodule, i: usize) -> Result<Vec<UnigenCertificate>, UnigenError> {
    let (sa, sb) = structures(b)?;
    let max = sa.k().min(sb.k());
    if i > max {
        return Err(UnigenError::LevelOutOfRange { i, max });
    }
    let (ei, fi) = (sa.idempotent(i), sb.idempotent(i));
    let subset = b.left_image(ei);
    if subset != b.right_image(fi) {
        return Err(UnigenError::Fails { i, clause: UnigenClause::SetEquality });
    }
    let (ai, bi) = (sa.stage(i), sb.stage(i));
    let mut bijective = false;
    let mut certs = Vec::new();
    if ai.len() == subset.len() && bi.len() == subset.len() {
        for &x in &subset {
            let from_left: Vec<usize> = ai.iter().map(|&a| b.act_left(a, x)).collect();
            let from_right: Vec<usize> = bi.iter().map(|&c| b.act_right(x, c)).collect();
            if sorted_set(from_left.iter().copied()) != subset || sorted_set(from_right.iter().copied()) != subset {
                continue;
            }
            bijective = true;
            let phi: Vec<(usize, usize)> = ai
                .iter()
                .zip(&from_left)
                .map(|(&a, ax)| (a, bi[from_right.iter().position(|v| v == ax).expect("bijective")]))
                .collect();
            let map = |a: usize| phi[ai.binary_search(&a).expect("stage is closed")].1;
            let hom = ai.iter().all(|&a| ai.iter().all(|&a2| map(sa.monoid().mul(a, a2)) == sb.monoid().mul(map(a), map(a2))));
            if hom {
                certs.push(UnigenCertificate { i, subset: subset.clone(), generator: x, phi });
            }
        }
    }
    if certs.is_empty() {
        let clause = if bijective { UnigenClause::Homomorphism } else { UnigenClause::Bijectivity };
        return Err(UnigenError::Fails { i, clause });
    }
    if i > 0 && certs.len() > 1 {
        return Err(UnigenError::GeneratorNotUnique { i, count: certs.len() });
    }
    Ok(certs)
}

/// Certificate pairs `(for L, for R)` at level `i` whose isomorphisms are
/// mutually inverse.
pub fn compatible_pairs(
    l: &Bimodule,
    r: &Bimodule,
    i: usize,
) -> Result<Vec<(UnigenCertificate, UnigenCertificate)>, UnigenError> {
    if l.left() != r.right() || l.right() != r.left() {
        return Err(UnigenError::Mismatch);
    }
    let cl = unigen_analyze(l, i)?;
    let cr = unigen_analyze(r, i)?;
    let mut out = Vec::new();
    for x in &cl {
        for y in &cr {
            if x.phi.iter().all(|&(a, b)| y.phi(b) == Some(a)) {
                out.push((x.clone(), y.clone()));
            }
        }
    }
    Ok(out)
}

/// Both bimodules are unigen at level `i` and admit generators with mutually
/// inverse isomorphisms.
pub fn strongly_unigen_check(l: &Bimodule, r: &Bimodule, i: usize) -> Result<bool, UnigenError> {
    compatible_pairs(l, r, i).map(|p| !p.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{order_three, z3_involution_bimodule, z3_shift_bimodule};
    use crate::monoid::Monoid;
    use alloc::vec;

    #[test]
    fn shift_has_three_generators_with_identity_phi() {
        let c = unigen_analyze(&z3_shift_bimodule(), 0).unwrap();
        assert_eq!(c.len(), 3);
        assert!(c.iter().all(|c| c.phi == vec![(0, 0), (1, 1), (2, 2)]));
    }

    #[test]
    fn involution_pairs_with_shift_are_incompatible() {
        let (s, t) = (z3_shift_bimodule(), z3_involution_bimodule());
        assert_eq!(unigen_analyze(&t, 0).unwrap()[0].phi, vec![(0, 0), (1, 2), (2, 1)]);
        assert_eq!(strongly_unigen_check(&s, &t, 0), Ok(false));
        assert_eq!(strongly_unigen_check(&s, &s.inverse_dual().unwrap(), 0), Ok(true));
        assert_eq!(strongly_unigen_check(&t, &t, 0), Ok(true));
    }

    #[test]
    fn regular_grouplike_bimodules_are_unigen_at_every_level() {
        for m in [order_three(5), order_three(6)] {
            let reg = Bimodule::regular(&m);
            let k = detect_grouplike(&m).unwrap().k();
            for i in 0..=k {
                assert!(strongly_unigen_check(&reg, &reg, i).unwrap(), "level {i}");
            }
            assert_eq!(unigen_analyze(&reg, k + 1), Err(UnigenError::LevelOutOfRange { i: k + 1, max: k }));
        }
    }

    #[test]
    fn set_equality_failure() {
        // Left regular C6 with a trivial right action: e_0·L = {1}, L·f_0 = L.
        let c6 = order_three(6);
        let reg = Bimodule::regular(&c6);
        let right: Vec<Vec<usize>> = (0..3).map(|x| vec![x, x, x]).collect();
        let b = Bimodule::from_parts(c6.clone(), c6, 3, &reg.left_rows(), &right).unwrap();
        assert_eq!(unigen_analyze(&b, 0), Err(UnigenError::Fails { i: 0, clause: UnigenClause::SetEquality }));
    }

    #[test]
    fn not_grouplike() {
        let c1 = order_three(1);
        let b = Bimodule::regular(&c1);
        assert_eq!(unigen_analyze(&b, 0), Err(UnigenError::NotGrouplike(Side::Left)));
        let z2 = Monoid::cyclic(2);
        let r = Bimodule::regular(&z2);
        assert_eq!(strongly_unigen_check(&r, &b, 0), Err(UnigenError::Mismatch));
    }
}
