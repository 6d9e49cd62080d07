use alloc::vec::Vec;
use core::fmt;

use super::{compute_imax_with, CategoryError, HomSet, TwoObjectCategory};
use crate::bimodule::sorted_set;
use crate::grouplike::GrouplikeStructure;
use crate::monoid::Monoid;

/// Structural laws of grouplike categories. Witness layouts are given per
/// variant; `x, x2 ∈ L`, `y, y2 ∈ R`, `g ∈ G`, chain indices `i, j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Lemma {
    /// Part 1: `e_i·x = x = x·f_j` for `x ∈ L_0` (and dually on `R_0`).
    /// Witness `[side, element, i, j]`, side 0 for `L`, 1 for `R`.
    FixedByIdempotents,
    /// Part 2: `e_j·(e_i·x) = e_i·x` and `(x·f_i)·f_j = x·f_i` for `i ≤ j`
    /// (and dually). Witness `[side, element, i, j]`.
    ChainAbsorption,
    /// Part 3: `x·y ∈ G` and `y·x ∈ G'` when `x ∈ L_0` or `y ∈ R_0`.
    /// Witness `[x, y]`.
    CoreLandsInGroup,
    /// Part 4: `x·y` a chain idempotent above `e_0` iff `y·x` one above `f_0`.
    /// Witness `[x, y]`.
    IdempotentPairing,
    /// Part 5: `x·y = e_0` iff `y·x = f_0`. Witness `[x, y]`.
    GroupIdentityPairing,
    /// Part 6: with `x·y = e_i`, `y·x = f_j`, the pair `(e_i·x, y·e_i)` composes
    /// to the same idempotents and is fixed by them. Witness `[x, y]`.
    NormalizedWitness,
    /// Part 7: `x·y = e_i`, `y·x = f_j` imply `x·f_j = e_i·x` and
    /// `y·e_i = f_j·y`. Witness `[x, y]`.
    IdempotentTransport,
    /// Every `x` has `y` with `x·y = e_0`, every `y` has `x` with `y·x = f_0`.
    /// Witness `[side, element]`.
    IdentityReachable,
    /// `x·y = (e_i·x)·(y·e_i)` and `y·x = (f_i·y)·(x·f_i)` at `i = i_max`.
    /// Witness `[x, y]`.
    FactorsThroughCore,
    /// Each group acts freely on the cross hom-sets. Witness
    /// `[side, element, g1, g2]` with side 0..4 for `G·L, L·G', G'·R, R·G`.
    FreeAction,
    /// Every orbit `G·x` has `|G|` elements. Witness `[side, element]`.
    OrbitSize,
    /// `G·x = x·G'` and `G'·y = y·G`. Witness `[side, element]`.
    TwoSidedOrbit,
    /// `G·x = G·x2` for all `x, x2` (and dually). Witness `[side, element, other]`.
    OrbitUniformity,
    /// `G·L·R·G = G` and `G'·R·L·G' = G'`. Witness `[side]`.
    OrbitComposition,
    /// `{x : e_i·x = x = x·f_j} = e_i·L ∩ L·f_j = e_i·L·f_j` (and dually).
    /// Witness `[side, i, j]`.
    Intersection,
}

impl Lemma {
    pub const IDEMPOTENT: [Lemma; 9] = [
        Lemma::FixedByIdempotents,
        Lemma::ChainAbsorption,
        Lemma::CoreLandsInGroup,
        Lemma::IdempotentPairing,
        Lemma::GroupIdentityPairing,
        Lemma::NormalizedWitness,
        Lemma::IdempotentTransport,
        Lemma::IdentityReachable,
        Lemma::FactorsThroughCore,
    ];

    pub const ORBIT: [Lemma; 6] = [
        Lemma::FreeAction,
        Lemma::OrbitSize,
        Lemma::TwoSidedOrbit,
        Lemma::OrbitUniformity,
        Lemma::OrbitComposition,
        Lemma::Intersection,
    ];

    /// Part number within the idempotent lemma, for the seven parts.
    pub fn part(self) -> Option<usize> {
        Lemma::IDEMPOTENT[..7].iter().position(|&l| l == self).map(|p| p + 1)
    }

    pub fn name(self) -> &'static str {
        match self {
            Lemma::FixedByIdempotents => "idempotents fix L_0",
            Lemma::ChainAbsorption => "chain absorption",
            Lemma::CoreLandsInGroup => "L_0 and R_0 compose into the group",
            Lemma::IdempotentPairing => "non-group idempotent pairing",
            Lemma::GroupIdentityPairing => "e_0 pairs with f_0",
            Lemma::NormalizedWitness => "normalised witnesses",
            Lemma::IdempotentTransport => "x·f_j = e_i·x",
            Lemma::IdentityReachable => "group identity reachable",
            Lemma::FactorsThroughCore => "x·y = (e_i·x)·(y·e_i)",
            Lemma::FreeAction => "free group actions",
            Lemma::OrbitSize => "orbit size equals group order",
            Lemma::TwoSidedOrbit => "G·x = x·G'",
            Lemma::OrbitUniformity => "single orbit",
            Lemma::OrbitComposition => "G·L·R·G = G",
            Lemma::Intersection => "L_ij = e_i·L ∩ L·f_j",
        }
    }
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.part() {
            Some(p) => write!(f, "part {p}: {}", self.name()),
            None => f.write_str(self.name()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaCheck {
    pub lemma: Lemma,
    /// First counterexample, `None` when the law holds.
    pub witness: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LemmaReport {
    pub checks: Vec<LemmaCheck>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.witness.is_none())
    }

    pub fn failures(&self) -> impl Iterator<Item = &LemmaCheck> {
        self.checks.iter().filter(|c| c.witness.is_some())
    }

    pub fn merge(&mut self, other: LemmaReport) {
        self.checks.extend(other.checks);
    }
}

/// Shared context: the category and both chain structures.
struct Ctx<'a> {
    c: &'a TwoObjectCategory,
    sa: GrouplikeStructure,
    sb: GrouplikeStructure,
}

impl Ctx<'_> {
    fn nl(&self) -> usize {
        self.c.size(HomSet::L)
    }

    fn nr(&self) -> usize {
        self.c.size(HomSet::R)
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.nl()).flat_map(move |x| (0..self.nr()).map(move |y| (x, y)))
    }

    fn e(&self, i: usize) -> usize {
        self.sa.idempotent(i)
    }

    fn f(&self, j: usize) -> usize {
        self.sb.idempotent(j)
    }

    fn k(&self) -> (usize, usize) {
        (self.sa.k(), self.sb.k())
    }

    // Left and right actions on L and R.
    fn al(&self, a: usize, x: usize) -> usize {
        self.c.l().act_left(a, x)
    }
    fn lb(&self, x: usize, b: usize) -> usize {
        self.c.l().act_right(x, b)
    }
    fn br(&self, b: usize, y: usize) -> usize {
        self.c.r().act_left(b, y)
    }
    fn ra(&self, y: usize, a: usize) -> usize {
        self.c.r().act_right(y, a)
    }

    fn in_l0(&self, x: usize) -> bool {
        self.al(self.e(0), x) == x && self.lb(x, self.f(0)) == x
    }

    fn in_r0(&self, y: usize) -> bool {
        self.br(self.f(0), y) == y && self.ra(y, self.e(0)) == y
    }
}

fn check(lemma: Lemma, witness: Option<Vec<usize>>) -> LemmaCheck {
    LemmaCheck { lemma, witness }
}

fn first<I: IntoIterator<Item = Vec<usize>>>(it: I) -> Option<Vec<usize>> {
    it.into_iter().next()
}

/// The seven idempotent properties, identity reachability and factorisation
/// through the `i_max` core, each checked exhaustively.
pub fn check_idempotent_lemmas(c: &TwoObjectCategory) -> Result<LemmaReport, CategoryError> {
    let (sa, sb) = c.structures()?;
    let imax = compute_imax_with(c, &sa, &sb)?.i_max;
    let cx = Ctx { c, sa, sb };
    let (ka, kb) = cx.k();
    let mut report = LemmaReport::default();

    // 1
    let w = first(
        (0..cx.nl())
            .filter(|&x| cx.in_l0(x))
            .flat_map(|x| (0..=ka).flat_map(move |i| (0..=kb).map(move |j| (x, i, j))))
            .filter(|&(x, i, j)| cx.al(cx.e(i), x) != x || cx.lb(x, cx.f(j)) != x)
            .map(|(x, i, j)| alloc::vec![0, x, i, j])
            .chain(
                (0..cx.nr())
                    .filter(|&y| cx.in_r0(y))
                    .flat_map(|y| (0..=kb).flat_map(move |j| (0..=ka).map(move |i| (y, j, i))))
                    .filter(|&(y, j, i)| cx.br(cx.f(j), y) != y || cx.ra(y, cx.e(i)) != y)
                    .map(|(y, j, i)| alloc::vec![1, y, j, i]),
            ),
    );
    report.checks.push(check(Lemma::FixedByIdempotents, w));

    // 2
    let mut w = None;
    'outer: for i in 0..=ka.max(kb) {
        for j in i..=ka.max(kb) {
            for x in 0..cx.nl() {
                let left_ok = i > ka || j > ka || cx.al(cx.e(j), cx.al(cx.e(i), x)) == cx.al(cx.e(i), x);
                let right_ok = i > kb || j > kb || cx.lb(cx.lb(x, cx.f(i)), cx.f(j)) == cx.lb(x, cx.f(i));
                if !(left_ok && right_ok) {
                    w = Some(alloc::vec![0, x, i, j]);
                    break 'outer;
                }
            }
            for y in 0..cx.nr() {
                let left_ok = i > kb || j > kb || cx.br(cx.f(j), cx.br(cx.f(i), y)) == cx.br(cx.f(i), y);
                let right_ok = i > ka || j > ka || cx.ra(cx.ra(y, cx.e(i)), cx.e(j)) == cx.ra(y, cx.e(i));
                if !(left_ok && right_ok) {
                    w = Some(alloc::vec![1, y, i, j]);
                    break 'outer;
                }
            }
        }
    }
    report.checks.push(check(Lemma::ChainAbsorption, w));

    // 3
    let w = first(
        cx.pairs()
            .filter(|&(x, y)| cx.in_l0(x) || cx.in_r0(y))
            .filter(|&(x, y)| !cx.sa.is_group_element(c.lr(x, y)) || !cx.sb.is_group_element(c.rl(y, x)))
            .map(|(x, y)| alloc::vec![x, y]),
    );
    report.checks.push(check(Lemma::CoreLandsInGroup, w));

    // 4
    let upper_a = |p: usize| cx.sa.chain_index(p).is_some_and(|i| i >= 1);
    let upper_b = |q: usize| cx.sb.chain_index(q).is_some_and(|j| j >= 1);
    let w = first(
        cx.pairs()
            .filter(|&(x, y)| upper_a(c.lr(x, y)) != upper_b(c.rl(y, x)))
            .map(|(x, y)| alloc::vec![x, y]),
    );
    report.checks.push(check(Lemma::IdempotentPairing, w));

    // 5
    let w = first(
        cx.pairs()
            .filter(|&(x, y)| (c.lr(x, y) == cx.e(0)) != (c.rl(y, x) == cx.f(0)))
            .map(|(x, y)| alloc::vec![x, y]),
    );
    report.checks.push(check(Lemma::GroupIdentityPairing, w));

    // Pairs composing to chain idempotents on both sides, as (x, y, i, j).
    let idem_pairs: Vec<(usize, usize, usize, usize)> = cx
        .pairs()
        .filter_map(|(x, y)| Some((x, y, cx.sa.chain_index(c.lr(x, y))?, cx.sb.chain_index(c.rl(y, x))?)))
        .collect();

    // 6
    let w = first(
        idem_pairs
            .iter()
            .filter(|&&(x, y, i, j)| {
                let (x2, y2) = (cx.al(cx.e(i), x), cx.ra(y, cx.e(i)));
                !(c.lr(x2, y2) == cx.e(i)
                    && c.rl(y2, x2) == cx.f(j)
                    && cx.lb(x2, cx.f(j)) == x2
                    && cx.al(cx.e(i), x2) == x2
                    && cx.ra(y2, cx.e(i)) == y2
                    && cx.br(cx.f(j), y2) == y2)
            })
            .map(|&(x, y, _, _)| alloc::vec![x, y]),
    );
    report.checks.push(check(Lemma::NormalizedWitness, w));

    // 7
    let w = first(
        idem_pairs
            .iter()
            .filter(|&&(x, y, i, j)| cx.lb(x, cx.f(j)) != cx.al(cx.e(i), x) || cx.ra(y, cx.e(i)) != cx.br(cx.f(j), y))
            .map(|&(x, y, _, _)| alloc::vec![x, y]),
    );
    report.checks.push(check(Lemma::IdempotentTransport, w));

    let w = first(
        (0..cx.nl())
            .filter(|&x| !(0..cx.nr()).any(|y| c.lr(x, y) == cx.e(0)))
            .map(|x| alloc::vec![0, x])
            .chain((0..cx.nr()).filter(|&y| !(0..cx.nl()).any(|x| c.rl(y, x) == cx.f(0))).map(|y| alloc::vec![1, y])),
    );
    report.checks.push(check(Lemma::IdentityReachable, w));

    let (ei, fi) = (cx.e(imax), cx.f(imax));
    let w = first(
        cx.pairs()
            .filter(|&(x, y)| {
                c.lr(x, y) != c.lr(cx.al(ei, x), cx.ra(y, ei)) || c.rl(y, x) != c.rl(cx.br(fi, y), cx.lb(x, fi))
            })
            .map(|(x, y)| alloc::vec![x, y]),
    );
    report.checks.push(check(Lemma::FactorsThroughCore, w));

    Ok(report)
}

/// Group-action laws: freeness, orbit sizes, two-sided and uniform orbits,
/// orbit composition and the intersection description of `L_ij`.
pub fn check_orbit_laws(c: &TwoObjectCategory) -> Result<LemmaReport, CategoryError> {
    let (sa, sb) = c.structures()?;
    let cx = Ctx { c, sa, sb };
    let (ga, gb) = (cx.sa.group().to_vec(), cx.sb.group().to_vec());
    let mut report = LemmaReport::default();

    // side 0: g·x, 1: x·h, 2: h·y, 3: y·g
    let act = |side: usize, g: usize, u: usize| match side {
        0 => cx.al(g, u),
        1 => cx.lb(u, g),
        2 => cx.br(g, u),
        _ => cx.ra(u, g),
    };
    let group_of = |side: usize| if side == 0 || side == 3 { &ga } else { &gb };
    let carrier = |side: usize| if side < 2 { cx.nl() } else { cx.nr() };
    let orbit = |side: usize, u: usize| sorted_set(group_of(side).iter().map(|&g| act(side, g, u)));

    let mut w = None;
    'free: for side in 0..4 {
        let grp = group_of(side);
        for u in 0..carrier(side) {
            for (p, &g1) in grp.iter().enumerate() {
                for &g2 in &grp[p + 1..] {
                    if act(side, g1, u) == act(side, g2, u) {
                        w = Some(alloc::vec![side, u, g1, g2]);
                        break 'free;
                    }
                }
            }
        }
    }
    report.checks.push(check(Lemma::FreeAction, w));

    let w = first((0..4).flat_map(|side| (0..carrier(side)).map(move |u| (side, u))).filter(|&(side, u)| orbit(side, u).len() != group_of(side).len()).map(|(s, u)| alloc::vec![s, u]));
    report.checks.push(check(Lemma::OrbitSize, w));

    let w = first(
        (0..cx.nl())
            .filter(|&x| orbit(0, x) != orbit(1, x))
            .map(|x| alloc::vec![0, x])
            .chain((0..cx.nr()).filter(|&y| orbit(2, y) != orbit(3, y)).map(|y| alloc::vec![1, y])),
    );
    report.checks.push(check(Lemma::TwoSidedOrbit, w));

    let w = first(
        (0..4)
            .flat_map(|side| (1..carrier(side)).map(move |u| (side, u)))
            .filter(|&(side, u)| orbit(side, u) != orbit(side, 0))
            .map(|(side, u)| alloc::vec![side, u, 0]),
    );
    report.checks.push(check(Lemma::OrbitUniformity, w));

    let sandwich = |m: &Monoid, grp: &[usize], core: Vec<usize>| {
        let mut out = Vec::new();
        for &p in &core {
            for &g in grp {
                for &g2 in grp {
                    out.push(m.mul(m.mul(g, p), g2));
                }
            }
        }
        sorted_set(out)
    };
    let lr_products = sandwich(c.a(), &ga, sorted_set(cx.pairs().map(|(x, y)| c.lr(x, y))));
    let rl_products = sandwich(c.b(), &gb, sorted_set(cx.pairs().map(|(x, y)| c.rl(y, x))));
    let nonempty = cx.nl() > 0 && cx.nr() > 0;
    let w = if nonempty && lr_products != ga {
        Some(alloc::vec![0])
    } else if nonempty && rl_products != gb {
        Some(alloc::vec![1])
    } else {
        None
    };
    report.checks.push(check(Lemma::OrbitComposition, w));

    let (ka, kb) = cx.k();
    let mut w = None;
    'inter: for i in 0..=ka {
        for j in 0..=kb {
            let (e, f) = (cx.e(i), cx.f(j));
            let fixed = sorted_set((0..cx.nl()).filter(|&x| cx.al(e, x) == x && cx.lb(x, f) == x));
            let left = sorted_set((0..cx.nl()).map(|x| cx.al(e, x)));
            let right = sorted_set((0..cx.nl()).map(|x| cx.lb(x, f)));
            let inter: Vec<usize> = left.iter().copied().filter(|v| right.binary_search(v).is_ok()).collect();
            let sandwich = sorted_set((0..cx.nl()).map(|x| cx.lb(cx.al(e, x), f)));
            if fixed != inter || fixed != sandwich {
                w = Some(alloc::vec![0, i, j]);
                break 'inter;
            }
            let fixed = sorted_set((0..cx.nr()).filter(|&y| cx.br(f, y) == y && cx.ra(y, e) == y));
            let left = sorted_set((0..cx.nr()).map(|y| cx.br(f, y)));
            let right = sorted_set((0..cx.nr()).map(|y| cx.ra(y, e)));
            let inter: Vec<usize> = left.iter().copied().filter(|v| right.binary_search(v).is_ok()).collect();
            let sandwich = sorted_set((0..cx.nr()).map(|y| cx.ra(cx.br(f, y), e)));
            if fixed != inter || fixed != sandwich {
                w = Some(alloc::vec![1, j, i]);
                break 'inter;
            }
        }
    }
    report.checks.push(check(Lemma::Intersection, w));

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bimodule::{enumerate_bimodules, Normalization};
    use crate::catalog::order_three;
    use crate::engine::construct_all;
    use crate::search::DEFAULT_BUDGET;

    fn c6_categories() -> Vec<TwoObjectCategory> {
        let c6 = order_three(6);
        let ls = enumerate_bimodules(&c6, &c6, 3, Normalization::FixOrbitRepresentative, DEFAULT_BUDGET).unwrap();
        let mut out = Vec::new();
        for l in &ls {
            for r in &ls {
                out.extend(construct_all(l, r).unwrap().into_iter().map(|(_, c)| c));
            }
        }
        out
    }

    #[test]
    fn every_c6_category_satisfies_all_laws() {
        let cats = c6_categories();
        assert!(cats.len() > 100);
        for c in &cats {
            let mut rep = check_idempotent_lemmas(c).unwrap();
            rep.merge(check_orbit_laws(c).unwrap());
            assert_eq!(rep.checks.len(), 15);
            assert!(rep.passed(), "{:?}", rep.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn broken_pairing_is_reported() {
        let z2 = Monoid::cyclic(2);
        let reg = crate::bimodule::Bimodule::regular(&z2);
        let c = TwoObjectCategory::new(reg.clone(), reg, &[[1, 1], [1, 0]], &[[0, 1], [1, 0]]).unwrap();
        let rep = check_idempotent_lemmas(&c).unwrap();
        let bad: Vec<Lemma> = rep.failures().map(|k| k.lemma).collect();
        assert!(bad.contains(&Lemma::GroupIdentityPairing));
        let k = rep.checks.iter().find(|k| k.lemma == Lemma::GroupIdentityPairing).unwrap();
        assert_eq!(k.witness, Some(alloc::vec![0, 0]));
    }

    #[test]
    fn parts_are_numbered() {
        assert_eq!(Lemma::FixedByIdempotents.part(), Some(1));
        assert_eq!(Lemma::IdempotentTransport.part(), Some(7));
        assert_eq!(Lemma::FreeAction.part(), None);
        assert_eq!(alloc::format!("{}", Lemma::GroupIdentityPairing), "part 5: e_0 pairs with f_0");
    }
}
