//! `(A, B)`-bimodules: a carrier `L = {0, …, l-1}` with a left action of `A`
//! and a right action of `B` that commute.

use alloc::vec::Vec;
use core::fmt;

use crate::canon::Permutations;
use crate::monoid::Monoid;

mod enumerate;
mod orbit;
mod unigen;

pub use enumerate::{enumerate_bimodules, BimoduleSearch, EnumerateBimodulesError, Normalization};
pub use orbit::{group_orbit, orbit_condition_holds, OrbitReport, Side};
pub use unigen::{
    compatible_pairs, strongly_unigen_check, unigen_analyze, UnigenCertificate, UnigenClause, UnigenError,
};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bimodule {
    left: Monoid,
    right: Monoid,
    carrier: usize,
    /// `a·x` at `a * carrier + x`
    left_action: Vec<usize>,
    /// `x·b` at `x * |B| + b`
    right_action: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BimoduleError {
    Shape(&'static str),
    /// `1_A·x != x`
    LeftIdentity { x: usize },
    /// `(a·a')·x != a·(a'·x)`
    LeftActionViolation { a: usize, a2: usize, x: usize },
    /// `x·1_B != x`
    RightIdentity { x: usize },
    /// `x·(b·b') != (x·b)·b'`
    RightActionViolation { x: usize, b: usize, b2: usize },
    /// `(a·x)·b != a·(x·b)`
    CommutationViolation { a: usize, x: usize, b: usize },
}

impl fmt::Display for BimoduleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BimoduleError::Shape(what) => write!(f, "malformed bimodule: {what}"),
            BimoduleError::LeftIdentity { x } => write!(f, "left identity does not fix {x}"),
            BimoduleError::LeftActionViolation { a, a2, x } => {
                write!(f, "left action: ({a}·{a2})·{x} != {a}·({a2}·{x})")
            }
            BimoduleError::RightIdentity { x } => write!(f, "right identity does not fix {x}"),
            BimoduleError::RightActionViolation { x, b, b2 } => {
                write!(f, "right action: {x}·({b}·{b2}) != ({x}·{b})·{b2}")
            }
            BimoduleError::CommutationViolation { a, x, b } => {
                write!(f, "actions do not commute: ({a}·{x})·{b} != {a}·({x}·{b})")
            }
        }
    }
}

impl core::error::Error for BimoduleError {}

fn flatten<R: AsRef<[usize]>>(rows: &[R], width: usize, bound: usize, what: &'static str) -> Result<Vec<usize>, BimoduleError> {
    let mut cells = Vec::with_capacity(rows.len() * width);
    for row in rows {
        let row = row.as_ref();
        if row.len() != width {
            return Err(BimoduleError::Shape(what));
        }
        if row.iter().any(|&v| v >= bound) {
            return Err(BimoduleError::Shape("action value outside the carrier"));
        }
        cells.extend_from_slice(row);
    }
    Ok(cells)
}

impl Bimodule {
    /// Shape-checked construction; the action axioms are checked separately by
    /// [`validate_bimodule`].
    pub fn from_parts<R: AsRef<[usize]>, S: AsRef<[usize]>>(
        left: Monoid,
        right: Monoid,
        carrier: usize,
        left_rows: &[R],
        right_rows: &[S],
    ) -> Result<Self, BimoduleError> {
        if left_rows.len() != left.order() {
            return Err(BimoduleError::Shape("left table needs one row per element of A"));
        }
        if right_rows.len() != carrier {
            return Err(BimoduleError::Shape("right table needs one row per carrier element"));
        }
        let left_action = flatten(left_rows, carrier, carrier, "left rows need one entry per carrier element")?;
        let right_action = flatten(right_rows, right.order(), carrier, "right rows need one entry per element of B")?;
        Ok(Bimodule { left, right, carrier, left_action, right_action })
    }

    pub(crate) fn from_flat(left: Monoid, right: Monoid, carrier: usize, left_action: Vec<usize>, right_action: Vec<usize>) -> Self {
        debug_assert_eq!(left_action.len(), left.order() * carrier);
        debug_assert_eq!(right_action.len(), carrier * right.order());
        Bimodule { left, right, carrier, left_action, right_action }
    }

    /// `M` acting on itself by multiplication on both sides.
    pub fn regular(m: &Monoid) -> Bimodule {
        let n = m.order();
        let cells: Vec<usize> = (0..n * n).map(|c| m.mul(c / n, c % n)).collect();
        Bimodule::from_flat(m.clone(), m.clone(), n, cells.clone(), cells)
    }

    /// For groups: the `(B, A)`-bimodule on the same carrier with
    /// `b·y = y·b⁻¹` and `y·a = a⁻¹·y`, whose induced isomorphism is the
    /// inverse of this one's. `None` unless both monoids are groups.
    pub fn inverse_dual(&self) -> Option<Bimodule> {
        let inv_a = crate::monoid::is_group(&self.left)?;
        let inv_b = crate::monoid::is_group(&self.right)?;
        let l = self.carrier;
        let (na, nb) = (self.left.order(), self.right.order());
        let left: Vec<usize> = (0..nb * l).map(|c| self.act_right(c % l, inv_b[c / l])).collect();
        let right: Vec<usize> = (0..l * na).map(|c| self.act_left(inv_a[c % na], c / na)).collect();
        Some(Bimodule::from_flat(self.right.clone(), self.left.clone(), l, left, right))
    }

    /// Acting monoid on the left (`A`).
    pub fn left(&self) -> &Monoid {
        &self.left
    }

    /// Acting monoid on the right (`B`).
    pub fn right(&self) -> &Monoid {
        &self.right
    }

    pub fn carrier(&self) -> usize {
        self.carrier
    }

    #[inline]
    pub fn act_left(&self, a: usize, x: usize) -> usize {
        self.left_action[a * self.carrier + x]
    }

    #[inline]
    pub fn act_right(&self, x: usize, b: usize) -> usize {
        self.right_action[x * self.right.order() + b]
    }

    pub fn left_rows(&self) -> Vec<Vec<usize>> {
        if self.carrier == 0 {
            return alloc::vec![Vec::new(); self.left.order()];
        }
        self.left_action.chunks(self.carrier).map(|r| r.to_vec()).collect()
    }

    pub fn right_rows(&self) -> Vec<Vec<usize>> {
        self.right_action.chunks(self.right.order()).map(|r| r.to_vec()).collect()
    }

    /// `a·L` as an ascending set.
    pub fn left_image(&self, a: usize) -> Vec<usize> {
        sorted_set((0..self.carrier).map(|x| self.act_left(a, x)))
    }

    /// `L·b` as an ascending set.
    pub fn right_image(&self, b: usize) -> Vec<usize> {
        sorted_set((0..self.carrier).map(|x| self.act_right(x, b)))
    }

    /// Relabel the carrier through `sigma` (old -> new).
    pub fn relabeled(&self, sigma: &[usize]) -> Bimodule {
        let l = self.carrier;
        let (na, nb) = (self.left.order(), self.right.order());
        let mut left = alloc::vec![0; na * l];
        let mut right = alloc::vec![0; l * nb];
        for x in 0..l {
            for a in 0..na {
                left[a * l + sigma[x]] = sigma[self.act_left(a, x)];
            }
            for b in 0..nb {
                right[sigma[x] * nb + b] = sigma[self.act_right(x, b)];
            }
        }
        Bimodule::from_flat(self.left.clone(), self.right.clone(), l, left, right)
    }

    fn action_key(&self) -> Vec<usize> {
        let mut k = self.left_action.clone();
        k.extend_from_slice(&self.right_action);
        k
    }

    /// Least relabelling over carrier permutations accepted by `keep`. Returns
    /// the relabelled bimodule, whose action tables are the canonical key.
    pub(crate) fn canonical_under(&self, keep: impl Fn(&[usize]) -> bool) -> Bimodule {
        let mut best: Option<(Vec<usize>, Bimodule)> = None;
        for sigma in Permutations::new(self.carrier) {
            if !keep(&sigma) {
                continue;
            }
            let candidate = self.relabeled(&sigma);
            let key = candidate.action_key();
            if best.as_ref().map_or(true, |(k, _)| key < *k) {
                best = Some((key, candidate));
            }
        }
        best.map(|(_, b)| b).unwrap_or_else(|| self.clone())
    }

    /// Representative of the class of `self` under carrier relabelling; the
    /// acting monoids keep their labels.
    pub fn canonical(&self) -> Bimodule {
        self.canonical_under(|_| true)
    }

    pub fn is_isomorphic_to(&self, other: &Bimodule) -> bool {
        self.left == other.left && self.right == other.right && self.carrier == other.carrier && self.canonical() == other.canonical()
    }
}

pub(crate) fn sorted_set(items: impl IntoIterator<Item = usize>) -> Vec<usize> {
    let mut v: Vec<usize> = items.into_iter().collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// Checks the left action, the right action, then commutation, each
/// exhaustively; the first violation in that order is reported.
pub fn validate_bimodule(b: &Bimodule) -> Result<(), BimoduleError> {
    let (a_m, b_m) = (b.left(), b.right());
    let l = b.carrier();
    for x in 0..l {
        if b.act_left(a_m.identity(), x) != x {
            return Err(BimoduleError::LeftIdentity { x });
        }
    }
    for a in 0..a_m.order() {
        for a2 in 0..a_m.order() {
            for x in 0..l {
                if b.act_left(a_m.mul(a, a2), x) != b.act_left(a, b.act_left(a2, x)) {
                    return Err(BimoduleError::LeftActionViolation { a, a2, x });
                }
            }
        }
    }
    for x in 0..l {
        if b.act_right(x, b_m.identity()) != x {
            return Err(BimoduleError::RightIdentity { x });
        }
        for c in 0..b_m.order() {
            for c2 in 0..b_m.order() {
                if b.act_right(x, b_m.mul(c, c2)) != b.act_right(b.act_right(x, c), c2) {
                    return Err(BimoduleError::RightActionViolation { x, b: c, b2: c2 });
                }
            }
        }
    }
    for a in 0..a_m.order() {
        for x in 0..l {
            for c in 0..b_m.order() {
                if b.act_right(b.act_left(a, x), c) != b.act_left(a, b.act_right(x, c)) {
                    return Err(BimoduleError::CommutationViolation { a, x, b: c });
                }
            }
        }
    }
    Ok(())
}
