use alloc::vec::Vec;

use super::{HomSet, TwoObjectCategory};
use crate::bimodule::sorted_set;
use crate::canon::is_isomorphic;
use crate::catalog::order_three;
use crate::monoid::Monoid;

/// The map `f ↦ x·f·y` from one endomorphism monoid into the other, built
/// from a pair with `y·x` the identity of the source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingDirection {
    pub x: usize,
    pub y: usize,
    /// Images in ascending order.
    pub image: Vec<usize>,
    pub homomorphism: bool,
    pub injective: bool,
    /// The identity of the target is not in the image.
    pub avoids_identity: bool,
}

impl EmbeddingDirection {
    pub fn holds(&self) -> bool {
        self.homomorphism && self.injective
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingReport {
    /// `B -> A` via `x ∈ L`, `y ∈ R` with `y·x = 1_B`.
    pub b_into_a: Option<EmbeddingDirection>,
    /// `A -> B` via `y ∈ R`, `x ∈ L` with `x·y = 1_A`.
    pub a_into_b: Option<EmbeddingDirection>,
    /// For 3×3 matrices with one diagonal entry `C5`: whether the other is `C5`.
    pub c5_propagation: Option<bool>,
}

impl EmbeddingReport {
    pub fn passed(&self) -> bool {
        self.b_into_a.as_ref().map_or(true, EmbeddingDirection::holds)
            && self.a_into_b.as_ref().map_or(true, EmbeddingDirection::holds)
            && self.c5_propagation != Some(false)
    }
}

fn direction(
    source: &Monoid,
    target: &Monoid,
    pairs: impl Iterator<Item = (usize, usize)>,
    returns_identity: impl Fn(usize, usize) -> bool,
    map: impl Fn(usize, usize, usize) -> usize,
) -> Option<EmbeddingDirection> {
    let (x, y) = pairs.into_iter().find(|&(x, y)| returns_identity(x, y))?;
    let phi: Vec<usize> = (0..source.order()).map(|f| map(x, y, f)).collect();
    let n = source.order();
    let homomorphism = (0..n).all(|f| (0..n).all(|g| phi[source.mul(f, g)] == target.mul(phi[f], phi[g])));
    let image = sorted_set(phi.iter().copied());
    let injective = image.len() == n;
    let avoids_identity = image.binary_search(&target.identity()).is_err();
    Some(EmbeddingDirection { x, y, image, homomorphism, injective, avoids_identity })
}

pub fn is_c5(m: &Monoid) -> bool {
    is_isomorphic(m, &order_three(5))
}

/// Checks both embeddings that exist and, for 3×3 matrices with non-empty
/// cross hom-sets, whether `C5` on one side forces `C5` on the other.
pub fn submonoid_embedding_check(c: &TwoObjectCategory) -> EmbeddingReport {
    let (nl, nr) = (c.size(HomSet::L), c.size(HomSet::R));
    let pairs = || (0..nl).flat_map(move |x| (0..nr).map(move |y| (x, y)));
    let b_into_a = direction(
        c.b(),
        c.a(),
        pairs(),
        |x, y| c.rl(y, x) == c.b().identity(),
        |x, y, f| c.lr(c.l().act_right(x, f), y),
    );
    let a_into_b = direction(
        c.a(),
        c.b(),
        pairs(),
        |x, y| c.lr(x, y) == c.a().identity(),
        |x, y, f| c.rl(c.r().act_right(y, f), x),
    );
    let three = [HomSet::A, HomSet::L, HomSet::R, HomSet::B].iter().all(|&h| c.size(h) == 3);
    let c5_propagation = match (three, is_c5(c.a()), is_c5(c.b())) {
        (true, true, b) => Some(b),
        (true, false, true) => Some(false),
        _ => None,
    };
    EmbeddingReport { b_into_a, a_into_b, c5_propagation }
}

/// Result of propagating `C5` through the 2×2 blocks of an `n`-object matrix.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PropagationReport {
    /// Objects whose endomorphism monoid is `C5`, ascending.
    pub c5_objects: Vec<usize>,
    /// Objects forced to `C5` by a chain of blocks starting at a `C5` object.
    pub forced: Vec<usize>,
    /// Blocks `(i, j)` whose two-object check fails.
    pub violations: Vec<(usize, usize)>,
}

impl PropagationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.forced == self.c5_objects
    }
}

/// `blocks` lists the full two-object subcategories `(i, j, C)` of an
/// `n`-object category, `C(X, X)` belonging to object `i`. Each block with
/// 3-element hom-sets transmits `C5` across; the report lists which objects
/// are reached and which blocks break the rule.
pub fn c5_propagation(n: usize, blocks: &[(usize, usize, TwoObjectCategory)]) -> PropagationReport {
    let mut is_c5_obj = alloc::vec![false; n];
    let mut report = PropagationReport::default();
    for (i, j, c) in blocks {
        is_c5_obj[*i] |= is_c5(c.a());
        is_c5_obj[*j] |= is_c5(c.b());
        if submonoid_embedding_check(c).c5_propagation == Some(false) {
            report.violations.push((*i, *j));
        }
    }
    report.c5_objects = (0..n).filter(|&o| is_c5_obj[o]).collect();
    let mut forced = is_c5_obj.clone();
    let mut changed = true;
    while changed {
        changed = false;
        for (i, j, c) in blocks {
            let transmits = [HomSet::A, HomSet::L, HomSet::R, HomSet::B].iter().all(|&h| c.size(h) == 3);
            if transmits && forced[*i] != forced[*j] {
                forced[*i] = true;
                forced[*j] = true;
                changed = true;
            }
        }
    }
    report.forced = (0..n).filter(|&o| forced[o]).collect();
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bimodule::{enumerate_bimodules, Bimodule, Normalization};
    use crate::engine::construct_all;
    use crate::search::DEFAULT_BUDGET;

    fn c5_categories() -> Vec<(usize, TwoObjectCategory)> {
        let m = order_three(5);
        let l = enumerate_bimodules(&m, &m, 3, Normalization::FixOrbitRepresentative, DEFAULT_BUDGET).unwrap().remove(0);
        construct_all(&l, &l).unwrap()
    }

    #[test]
    fn c5_categories_propagate_c5() {
        for (_, c) in c5_categories() {
            let rep = submonoid_embedding_check(&c);
            assert_eq!(rep.c5_propagation, Some(true));
            assert!(rep.passed());
        }
    }

    #[test]
    fn regular_c5_embeds_onto_itself() {
        let (_, c) = c5_categories().into_iter().find(|(i, _)| *i == 1).unwrap();
        let rep = submonoid_embedding_check(&c);
        let d = rep.b_into_a.unwrap();
        assert!(d.holds());
        assert_eq!(d.image, alloc::vec![0, 1, 2]);
        assert!(!d.avoids_identity);
    }

    #[test]
    fn c5_cannot_face_c6() {
        let c5 = order_three(5);
        let c6 = order_three(6);
        for (a, b) in [(&c5, &c6), (&c6, &c5)] {
            let ls = enumerate_bimodules(a, b, 3, Normalization::UpToRelabeling, DEFAULT_BUDGET).unwrap();
            let rs = enumerate_bimodules(b, a, 3, Normalization::UpToRelabeling, DEFAULT_BUDGET).unwrap();
            for l in &ls {
                for r in &rs {
                    assert!(crate::engine::search_completions(l, r, DEFAULT_BUDGET).unwrap().is_empty());
                }
            }
        }
    }

    #[test]
    fn propagation_across_blocks() {
        let z2 = Monoid::cyclic(2);
        let g = Bimodule::regular(&z2);
        let rows = z2.table().to_rows();
        let small = TwoObjectCategory::new(g.clone(), g, &rows, &rows).unwrap();
        let (_, c) = c5_categories().remove(0);
        let rep = c5_propagation(3, &[(0, 1, c), (1, 2, small)]);
        assert_eq!(rep.c5_objects, alloc::vec![0, 1]);
        assert!(rep.passed());
    }
}
