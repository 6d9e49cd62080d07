//! Two-object categories given by their algebraic matrix
//!
//! ```text
//!   ( A  L )
//!   ( R  B )
//! ```
//!
//! with `A = C(X,X)`, `L = C(X,Y)`, `R = C(Y,X)`, `B = C(Y,Y)`. Composition is
//! written left to right, so `x·y ∈ A` for `x ∈ L`, `y ∈ R`.

use alloc::vec::Vec;
use core::fmt;

use crate::bimodule::{validate_bimodule, Bimodule, BimoduleError, Side};
use crate::grouplike::{detect_grouplike, GrouplikeStructure};
use crate::monoid::Monoid;

mod embedding;
mod extract;
mod lemmas;

pub use embedding::{c5_propagation, submonoid_embedding_check, EmbeddingDirection, EmbeddingReport, PropagationReport};
pub use extract::{extract_groupoid, extract_groupoidlike, GroupoidView, SemiCategoryView};
pub use lemmas::{check_idempotent_lemmas, check_orbit_laws, Lemma, LemmaCheck, LemmaReport};

/// The four hom-sets, ordered `A < L < R < B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HomSet {
    A,
    L,
    R,
    B,
}

impl HomSet {
    pub const ALL: [HomSet; 4] = [HomSet::A, HomSet::L, HomSet::R, HomSet::B];

    /// `(source, target)` with `X = 0`, `Y = 1`.
    pub fn ends(self) -> (usize, usize) {
        match self {
            HomSet::A => (0, 0),
            HomSet::L => (0, 1),
            HomSet::R => (1, 0),
            HomSet::B => (1, 1),
        }
    }

    pub fn between(source: usize, target: usize) -> HomSet {
        match (source, target) {
            (0, 0) => HomSet::A,
            (0, 1) => HomSet::L,
            (1, 0) => HomSet::R,
            _ => HomSet::B,
        }
    }

    pub fn composable(self, next: HomSet) -> bool {
        self.ends().1 == next.ends().0
    }
}

impl fmt::Display for HomSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            HomSet::A => "A",
            HomSet::L => "L",
            HomSet::R => "R",
            HomSet::B => "B",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoObjectCategory {
    l: Bimodule,
    r: Bimodule,
    /// `x·y` at `x * |R| + y`
    comp_lr: Vec<usize>,
    /// `y·x` at `y * |L| + x`
    comp_rl: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CategoryError {
    Shape(&'static str),
    Bimodule { homset: HomSet, error: BimoduleError },
    /// `(u·v)·w != u·(v·w)` with `u, v, w` drawn from `homsets`.
    AssociativityViolation { triple: (usize, usize, usize), homsets: [HomSet; 3] },
    NotGrouplike(Side),
    /// No cross composite is a chain idempotent.
    NoIdempotentReached,
    /// The largest chain indices reached on the two sides differ.
    GrouplikeViolation { i_max: usize, j_max: usize },
    /// No single pair realises both maxima at once.
    MissingWitness { i_max: usize },
    /// Normalised witnesses `(x, y)` and `(x2, y2)` fail `x·y2 = e_i, y2·x = f_i`.
    MaxijViolation { x: usize, y: usize, x2: usize, y2: usize },
}

impl fmt::Display for CategoryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CategoryError::Shape(what) => write!(f, "malformed category: {what}"),
            CategoryError::Bimodule { homset, error } => write!(f, "hom-set {homset}: {error}"),
            CategoryError::AssociativityViolation { triple: (u, v, w), homsets: [p, q, r] } => {
                write!(f, "associativity fails on {p}{q}{r} at ({u}, {v}, {w})")
            }
            CategoryError::NotGrouplike(Side::Left) => write!(f, "C(X,X) is not grouplike"),
            CategoryError::NotGrouplike(Side::Right) => write!(f, "C(Y,Y) is not grouplike"),
            CategoryError::NoIdempotentReached => write!(f, "no cross composite is a chain idempotent"),
            CategoryError::GrouplikeViolation { i_max, j_max } => {
                write!(f, "largest idempotent indices differ: {i_max} on X, {j_max} on Y")
            }
            CategoryError::MissingWitness { i_max } => {
                write!(f, "no pair composes to e_{i_max} and f_{i_max} simultaneously")
            }
            CategoryError::MaxijViolation { x, y, x2, y2 } => {
                write!(f, "maximal witnesses ({x}, {y}) and ({x2}, {y2}) do not interchange")
            }
        }
    }
}

impl core::error::Error for CategoryError {}

fn flatten<R: AsRef<[usize]>>(rows: &[R], height: usize, width: usize, bound: usize) -> Result<Vec<usize>, CategoryError> {
    if rows.len() != height {
        return Err(CategoryError::Shape("composition table has the wrong number of rows"));
    }
    let mut out = Vec::with_capacity(height * width);
    for row in rows {
        let row = row.as_ref();
        if row.len() != width {
            return Err(CategoryError::Shape("composition table has a row of the wrong length"));
        }
        if row.iter().any(|&v| v >= bound) {
            return Err(CategoryError::Shape("composition value outside the endomorphism monoid"));
        }
        out.extend_from_slice(row);
    }
    Ok(out)
}

impl TwoObjectCategory {
    pub fn new<R1: AsRef<[usize]>, R2: AsRef<[usize]>>(
        l: Bimodule,
        r: Bimodule,
        comp_lr: &[R1],
        comp_rl: &[R2],
    ) -> Result<Self, CategoryError> {
        if l.left() != r.right() || l.right() != r.left() {
            return Err(CategoryError::Shape("R must be a (B, A)-bimodule for L an (A, B)-bimodule"));
        }
        let (nl, nr) = (l.carrier(), r.carrier());
        let comp_lr = flatten(comp_lr, nl, nr, l.left().order())?;
        let comp_rl = flatten(comp_rl, nr, nl, l.right().order())?;
        Ok(TwoObjectCategory { l, r, comp_lr, comp_rl })
    }

    pub(crate) fn from_flat(l: Bimodule, r: Bimodule, comp_lr: Vec<usize>, comp_rl: Vec<usize>) -> Self {
        debug_assert_eq!(comp_lr.len(), l.carrier() * r.carrier());
        debug_assert_eq!(comp_rl.len(), l.carrier() * r.carrier());
        TwoObjectCategory { l, r, comp_lr, comp_rl }
    }

    pub fn a(&self) -> &Monoid {
        self.l.left()
    }

    pub fn b(&self) -> &Monoid {
        self.l.right()
    }

    pub fn l(&self) -> &Bimodule {
        &self.l
    }

    pub fn r(&self) -> &Bimodule {
        &self.r
    }

    pub fn size(&self, h: HomSet) -> usize {
        match h {
            HomSet::A => self.a().order(),
            HomSet::L => self.l.carrier(),
            HomSet::R => self.r.carrier(),
            HomSet::B => self.b().order(),
        }
    }

    /// `x·y ∈ A`.
    #[inline]
    pub fn lr(&self, x: usize, y: usize) -> usize {
        self.comp_lr[x * self.r.carrier() + y]
    }

    /// `y·x ∈ B`.
    #[inline]
    pub fn rl(&self, y: usize, x: usize) -> usize {
        self.comp_rl[y * self.l.carrier() + x]
    }

    pub fn comp_lr_rows(&self) -> Vec<Vec<usize>> {
        (0..self.l.carrier()).map(|x| (0..self.r.carrier()).map(|y| self.lr(x, y)).collect()).collect()
    }

    pub fn comp_rl_rows(&self) -> Vec<Vec<usize>> {
        (0..self.r.carrier()).map(|y| (0..self.l.carrier()).map(|x| self.rl(y, x)).collect()).collect()
    }

    pub(crate) fn comp_tables(&self) -> (&[usize], &[usize]) {
        (&self.comp_lr, &self.comp_rl)
    }

    /// Composite `u·v` of `u ∈ p` and `v ∈ q`, and the hom-set it lands in.
    ///
    /// # Panics
    /// When `p` and `q` are not composable.
    pub fn compose(&self, p: HomSet, u: usize, q: HomSet, v: usize) -> (HomSet, usize) {
        use HomSet::*;
        match (p, q) {
            (A, A) => (A, self.a().mul(u, v)),
            (A, L) => (L, self.l.act_left(u, v)),
            (L, R) => (A, self.lr(u, v)),
            (L, B) => (L, self.l.act_right(u, v)),
            (R, A) => (R, self.r.act_right(u, v)),
            (R, L) => (B, self.rl(u, v)),
            (B, R) => (R, self.r.act_left(u, v)),
            (B, B) => (B, self.b().mul(u, v)),
            _ => panic!("{p} and {q} are not composable"),
        }
    }

    /// No `x, y` with `x·y = 1_A` and `y·x = 1_B`, i.e. `X` and `Y` are not
    /// isomorphic.
    pub fn is_reduced(&self) -> bool {
        self.isomorphism().is_none()
    }

    /// First `(x, y)` with `x·y = 1_A` and `y·x = 1_B`.
    pub fn isomorphism(&self) -> Option<(usize, usize)> {
        let (ia, ib) = (self.a().identity(), self.b().identity());
        (0..self.l.carrier())
            .flat_map(|x| (0..self.r.carrier()).map(move |y| (x, y)))
            .find(|&(x, y)| self.lr(x, y) == ia && self.rl(y, x) == ib)
    }

    /// Both endomorphism monoids as grouplike structures.
    pub fn structures(&self) -> Result<(GrouplikeStructure, GrouplikeStructure), CategoryError> {
        let sa = detect_grouplike(self.a()).ok_or(CategoryError::NotGrouplike(Side::Left))?;
        let sb = detect_grouplike(self.b()).ok_or(CategoryError::NotGrouplike(Side::Right))?;
        Ok((sa, sb))
    }
}

/// The sixteen composable hom-set triples in lexicographic order.
pub fn composable_triples() -> Vec<[HomSet; 3]> {
    let mut out = Vec::with_capacity(16);
    for p in HomSet::ALL {
        for q in HomSet::ALL.into_iter().filter(|&q| p.composable(q)) {
            for r in HomSet::ALL.into_iter().filter(|&r| q.composable(r)) {
                out.push([p, q, r]);
            }
        }
    }
    out
}

/// Validates both bimodules, then associativity over every composable
/// triple, reporting the first failure.
pub fn validate_category(c: &TwoObjectCategory) -> Result<(), CategoryError> {
    validate_bimodule(c.l()).map_err(|error| CategoryError::Bimodule { homset: HomSet::L, error })?;
    validate_bimodule(c.r()).map_err(|error| CategoryError::Bimodule { homset: HomSet::R, error })?;
    for hs in composable_triples() {
        let [p, q, r] = hs;
        for u in 0..c.size(p) {
            for v in 0..c.size(q) {
                let (pq, uv) = c.compose(p, u, q, v);
                for w in 0..c.size(r) {
                    let (qr, vw) = c.compose(q, v, r, w);
                    if c.compose(pq, uv, r, w).1 != c.compose(p, u, qr, vw).1 {
                        return Err(CategoryError::AssociativityViolation { triple: (u, v, w), homsets: hs });
                    }
                }
            }
        }
    }
    Ok(())
}

/// The largest chain index realised as a cross composite on each side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IMaxReport {
    pub i_max: usize,
    pub j_max: usize,
    /// First `(x, y)` with `x·y = e_{i_max}` and `y·x = f_{j_max}`.
    pub witness: (usize, usize),
}

pub fn compute_imax(c: &TwoObjectCategory) -> Result<IMaxReport, CategoryError> {
    let (sa, sb) = c.structures()?;
    compute_imax_with(c, &sa, &sb)
}

pub(crate) fn compute_imax_with(
    c: &TwoObjectCategory,
    sa: &GrouplikeStructure,
    sb: &GrouplikeStructure,
) -> Result<IMaxReport, CategoryError> {
    let (nl, nr) = (c.size(HomSet::L), c.size(HomSet::R));
    let pairs = || (0..nl).flat_map(move |x| (0..nr).map(move |y| (x, y)));
    let i_max = pairs().filter_map(|(x, y)| sa.chain_index(c.lr(x, y))).max();
    let j_max = pairs().filter_map(|(x, y)| sb.chain_index(c.rl(y, x))).max();
    let (i_max, j_max) = match (i_max, j_max) {
        (Some(i), Some(j)) => (i, j),
        _ => return Err(CategoryError::NoIdempotentReached),
    };
    if i_max != j_max {
        return Err(CategoryError::GrouplikeViolation { i_max, j_max });
    }
    let (ei, fi) = (sa.idempotent(i_max), sb.idempotent(i_max));
    let witness = pairs()
        .find(|&(x, y)| c.lr(x, y) == ei && c.rl(y, x) == fi)
        .ok_or(CategoryError::MissingWitness { i_max })?;
    if i_max >= 1 {
        // Normalised witnesses on the two sides must interchange.
        let fixed_x = |x: usize| c.l().act_left(ei, x) == x && c.l().act_right(x, fi) == x;
        let fixed_y = |y: usize| c.r().act_left(fi, y) == y && c.r().act_right(y, ei) == y;
        let left: Vec<(usize, usize)> = pairs().filter(|&(x, y)| c.lr(x, y) == ei && fixed_x(x) && fixed_y(y)).collect();
        let right: Vec<(usize, usize)> = pairs().filter(|&(x, y)| c.rl(y, x) == fi && fixed_x(x) && fixed_y(y)).collect();
        for &(x, y) in &left {
            for &(x2, y2) in &right {
                if c.lr(x, y2) != ei || c.rl(y2, x) != fi {
                    return Err(CategoryError::MaxijViolation { x, y, x2, y2 });
                }
            }
        }
    }
    Ok(IMaxReport { i_max, j_max, witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::order_three;
    use alloc::vec;

    /// The two-object groupoid on `g`: every hom-set is `g`, all composition is
    /// group multiplication.
    pub(crate) fn groupoid(g: &Monoid) -> TwoObjectCategory {
        let reg = Bimodule::regular(g);
        let rows = g.table().to_rows();
        TwoObjectCategory::new(reg.clone(), reg, &rows, &rows).unwrap()
    }

    #[test]
    fn sixteen_triples_in_order() {
        let t = composable_triples();
        assert_eq!(t.len(), 16);
        assert!(t.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(t[3], [HomSet::A, HomSet::L, HomSet::B]);
    }

    #[test]
    fn groupoid_is_valid_with_imax_zero() {
        for g in [Monoid::trivial(), Monoid::cyclic(2), Monoid::cyclic(3), Monoid::symmetric_group(3)] {
            let c = groupoid(&g);
            assert_eq!(validate_category(&c), Ok(()));
            let r = compute_imax(&c).unwrap();
            assert_eq!((r.i_max, r.j_max), (0, 0));
            assert!(!c.is_reduced());
        }
    }

    #[test]
    fn regular_grouplike_matrix_is_valid() {
        // All four entries the same grouplike monoid, composition its product.
        for m in [order_three(5), order_three(6)] {
            let c = groupoid(&m);
            assert_eq!(validate_category(&c), Ok(()));
            let k = detect_grouplike(&m).unwrap().k();
            assert_eq!(compute_imax(&c).unwrap().i_max, k);
        }
    }

    #[test]
    fn one_object_category_with_empty_cross_hom_sets() {
        let c6 = order_three(6);
        let empty = |a: &Monoid, b: &Monoid| {
            let rows: Vec<Vec<usize>> = vec![Vec::new(); a.order()];
            Bimodule::from_parts(a.clone(), b.clone(), 0, &rows, &Vec::<Vec<usize>>::new()).unwrap()
        };
        let c = TwoObjectCategory::new(empty(&c6, &c6), empty(&c6, &c6), &Vec::<Vec<usize>>::new(), &Vec::<Vec<usize>>::new()).unwrap();
        assert_eq!(validate_category(&c), Ok(()));
        assert_eq!(compute_imax(&c), Err(CategoryError::NoIdempotentReached));
    }

    #[test]
    fn corrupted_cell_is_caught() {
        let mut c = groupoid(&Monoid::cyclic(3));
        c.comp_lr[1] = 0;
        assert_eq!(
            validate_category(&c),
            Err(CategoryError::AssociativityViolation { triple: (1, 0, 1), homsets: [HomSet::A, HomSet::L, HomSet::R] })
        );
    }

    #[test]
    fn shape_errors() {
        let z2 = Monoid::cyclic(2);
        let reg = Bimodule::regular(&z2);
        let err = TwoObjectCategory::new(reg.clone(), reg.clone(), &[[0, 1]], &[[0, 1], [1, 0]]);
        assert!(matches!(err, Err(CategoryError::Shape(_))));
        let err = TwoObjectCategory::new(reg.clone(), reg, &[[0, 1], [1, 2]], &[[0, 1], [1, 0]]);
        assert!(matches!(err, Err(CategoryError::Shape(_))));
    }
}
