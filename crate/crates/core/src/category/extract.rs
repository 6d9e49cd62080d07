use alloc::vec::Vec;

use super::{compute_imax_with, CategoryError, HomSet, TwoObjectCategory};
use crate::bimodule::sorted_set;
use crate::monoid::Monoid;

/// Subsets of the four hom-sets closed under composition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiCategoryView {
    pub a: Vec<usize>,
    pub l: Vec<usize>,
    pub r: Vec<usize>,
    pub b: Vec<usize>,
    /// Identity of the restricted `A` (resp. `B`) when one exists in the subset.
    pub identity_x: Option<usize>,
    pub identity_y: Option<usize>,
}

impl SemiCategoryView {
    pub fn get(&self, h: HomSet) -> &[usize] {
        match h {
            HomSet::A => &self.a,
            HomSet::L => &self.l,
            HomSet::R => &self.r,
            HomSet::B => &self.b,
        }
    }

    pub fn sizes(&self) -> [usize; 4] {
        [self.a.len(), self.l.len(), self.r.len(), self.b.len()]
    }

    pub fn has_identities(&self) -> (bool, bool) {
        (self.identity_x.is_some(), self.identity_y.is_some())
    }

    /// Whether every composite of members stays inside the view.
    pub fn is_closed_in(&self, c: &TwoObjectCategory) -> bool {
        HomSet::ALL.into_iter().all(|p| {
            HomSet::ALL.into_iter().filter(|&q| p.composable(q)).all(|q| {
                self.get(p).iter().all(|&u| {
                    self.get(q).iter().all(|&v| {
                        let (h, w) = c.compose(p, u, q, v);
                        self.get(h).binary_search(&w).is_ok()
                    })
                })
            })
        })
    }

    /// The restricted endomorphism monoids, relabelled in ascending order.
    pub fn endomorphism_monoids(&self, c: &TwoObjectCategory) -> Option<(Monoid, Monoid)> {
        Some((c.a().restrict(&self.a)?, c.b().restrict(&self.b)?))
    }
}

fn identity_within(m: &Monoid, set: &[usize]) -> Option<usize> {
    set.iter().copied().find(|&e| set.iter().all(|&x| m.mul(e, x) == x && m.mul(x, e) == x))
}

/// The groupoid-like core at `i = i_max`: hom-sets `G^{*i}`, `e_i·L·f_i`,
/// `f_i·R·e_i`, `G'^{*i}`. Closure, the identities `e_i`, `f_i` and
/// maximality are all checked; failures surface as errors.
pub fn extract_groupoidlike(c: &TwoObjectCategory) -> Result<SemiCategoryView, CategoryError> {
    let (sa, sb) = c.structures()?;
    let rep = compute_imax_with(c, &sa, &sb)?;
    let i = rep.i_max;
    let (ei, fi) = (sa.idempotent(i), sb.idempotent(i));
    let l = sorted_set((0..c.size(HomSet::L)).map(|x| c.l().act_right(c.l().act_left(ei, x), fi)));
    let r = sorted_set((0..c.size(HomSet::R)).map(|y| c.r().act_right(c.r().act_left(fi, y), ei)));
    let view = SemiCategoryView {
        a: sa.stage(i),
        l,
        r,
        b: sb.stage(i),
        identity_x: Some(ei),
        identity_y: Some(fi),
    };
    if !view.is_closed_in(c) {
        return Err(CategoryError::Shape("groupoid-like core is not closed under composition"));
    }
    let fixes = |h: HomSet, u: usize| {
        let (s, t) = h.ends();
        let pre = if s == 0 { (HomSet::A, ei) } else { (HomSet::B, fi) };
        let post = if t == 0 { (HomSet::A, ei) } else { (HomSet::B, fi) };
        c.compose(pre.0, pre.1, h, u).1 == u && c.compose(h, u, post.0, post.1).1 == u
    };
    if !HomSet::ALL.into_iter().all(|h| view.get(h).iter().all(|&u| fixes(h, u))) {
        return Err(CategoryError::Shape("e_i and f_i are not identities of the core"));
    }
    // No pair anywhere reaches a chain idempotent beyond the core.
    for x in 0..c.size(HomSet::L) {
        for y in 0..c.size(HomSet::R) {
            if sa.chain_index(c.lr(x, y)).is_some_and(|m| m > i) || sb.chain_index(c.rl(y, x)).is_some_and(|m| m > i) {
                return Err(CategoryError::GrouplikeViolation { i_max: i, j_max: rep.j_max });
            }
        }
    }
    Ok(view)
}

/// The groupoid on the group parts together with the isomorphism `G -> G'`
/// it determines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupoidView {
    pub view: SemiCategoryView,
    /// `(g, y·g·x)` for `g ∈ G`, where `x·y = e_0` and `y·x = f_0`.
    pub iso: Vec<(usize, usize)>,
}

/// Hom-sets `G`, `G·L`, `G'·R`, `G'`. Checks `G·L = L·G'`, `G'·R = R·G`,
/// closure, invertibility of every morphism and `G·L·R·G = G`.
pub fn extract_groupoid(c: &TwoObjectCategory) -> Result<GroupoidView, CategoryError> {
    let (sa, sb) = c.structures()?;
    let (ga, gb) = (sa.group(), sb.group());
    let (nl, nr) = (c.size(HomSet::L), c.size(HomSet::R));
    let gl = sorted_set(ga.iter().flat_map(|&g| (0..nl).map(move |x| c.l().act_left(g, x))));
    let lg = sorted_set(gb.iter().flat_map(|&h| (0..nl).map(move |x| c.l().act_right(x, h))));
    let gr = sorted_set(gb.iter().flat_map(|&h| (0..nr).map(move |y| c.r().act_left(h, y))));
    let rg = sorted_set(ga.iter().flat_map(|&g| (0..nr).map(move |y| c.r().act_right(y, g))));
    if gl != lg || gr != rg {
        return Err(CategoryError::Shape("left and right group orbits differ"));
    }
    let view = SemiCategoryView {
        a: ga.to_vec(),
        l: gl,
        r: gr,
        b: gb.to_vec(),
        identity_x: identity_within(c.a(), ga),
        identity_y: identity_within(c.b(), gb),
    };
    if !view.is_closed_in(c) {
        return Err(CategoryError::Shape("groupoid part is not closed under composition"));
    }
    let (e0, f0) = (sa.group_identity(), sb.group_identity());
    let inverse = |x: usize| view.r.iter().copied().find(|&y| c.lr(x, y) == e0 && c.rl(y, x) == f0);
    if view.l.iter().any(|&x| inverse(x).is_none()) || view.r.iter().any(|&y| !view.l.iter().any(|&x| c.lr(x, y) == e0 && c.rl(y, x) == f0)) {
        return Err(CategoryError::Shape("groupoid part has a non-invertible morphism"));
    }
    let products = sorted_set(
        view.l.iter().flat_map(|&x| view.r.iter().map(move |&y| c.lr(x, y))).flat_map(|p| ga.iter().map(move |&g| (g, p))).map(|(g, p)| c.a().mul(g, p)),
    );
    if products != ga {
        return Err(CategoryError::Shape("orbit composites do not form the group"));
    }
    let iso = match view.l.first() {
        Some(&x) => {
            let y = inverse(x).expect("checked above");
            ga.iter().map(|&g| (g, c.rl(c.r().act_right(y, g), x))).collect()
        }
        None => Vec::new(),
    };
    Ok(GroupoidView { view, iso })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bimodule::{enumerate_bimodules, Normalization};
    use crate::catalog::order_three;
    use crate::engine::construct_all;
    use crate::search::DEFAULT_BUDGET;

    fn built(n: usize) -> Vec<(usize, TwoObjectCategory)> {
        let m = order_three(n);
        let ls = enumerate_bimodules(&m, &m, 3, Normalization::FixOrbitRepresentative, DEFAULT_BUDGET).unwrap();
        let mut out = Vec::new();
        for l in &ls {
            for r in &ls {
                out.extend(construct_all(l, r).unwrap());
            }
        }
        out
    }

    #[test]
    fn c6_core_at_level_one_has_two_elements_everywhere() {
        let cats = built(6);
        let at_one: Vec<_> = cats.iter().filter(|(i, _)| *i == 1).collect();
        assert!(!at_one.is_empty());
        for (_, c) in at_one {
            let v = extract_groupoidlike(c).unwrap();
            assert_eq!(v.sizes(), [2, 2, 2, 2]);
            assert_eq!(v.has_identities(), (true, true));
            let (a, b) = v.endomorphism_monoids(c).unwrap();
            assert!(crate::canon::is_isomorphic(&a, &b));
        }
    }

    #[test]
    fn c5_groupoid_is_on_z2() {
        for (i, c) in built(5) {
            let g = extract_groupoid(&c).unwrap();
            assert_eq!(g.view.sizes(), [2, 2, 2, 2]);
            assert_eq!(g.iso.len(), 2);
            let (a, _) = g.view.endomorphism_monoids(&c).unwrap();
            assert!(crate::canon::is_isomorphic(&a, &Monoid::cyclic(2)));
            let core = extract_groupoidlike(&c).unwrap();
            assert_eq!(core.sizes()[0], if i == 0 { 2 } else { 3 });
        }
    }

    #[test]
    fn group_groupoid_is_everything() {
        let z3 = Monoid::cyclic(3);
        let reg = crate::bimodule::Bimodule::regular(&z3);
        let rows = z3.table().to_rows();
        let c = TwoObjectCategory::new(reg.clone(), reg, &rows, &rows).unwrap();
        let g = extract_groupoid(&c).unwrap();
        assert_eq!(g.view.sizes(), [3, 3, 3, 3]);
        assert_eq!(g.iso, alloc::vec![(0, 0), (1, 1), (2, 2)]);
    }
}
