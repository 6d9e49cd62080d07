//! Canonical forms by exhaustive relabelling.
//!
//! Orders here are tiny (n ≤ 6 in practice), so minimising over every
//! permutation is both exact and fast enough.

use alloc::vec::Vec;

use crate::monoid::Monoid;

/// All permutations of `0..n` in lexicographic order, as `old -> new` maps.
#[derive(Clone, Debug)]
pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Permutations {
    pub fn new(n: usize) -> Self {
        Permutations { next: Some((0..n).collect()) }
    }
}

impl Iterator for Permutations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let mut p = current.clone();
        // classic next_permutation
        if let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) {
            let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
            p.swap(i - 1, j);
            p[i..].reverse();
            self.next = Some(p);
        }
        Some(current)
    }
}

pub fn inverse_permutation(sigma: &[usize]) -> Vec<usize> {
    let mut inv = alloc::vec![0; sigma.len()];
    for (i, &s) in sigma.iter().enumerate() {
        inv[s] = i;
    }
    inv
}

/// Isomorphism-class key of a monoid: the lexicographically least row-major
/// table over all relabellings that send the identity to 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IsoClassKey {
    n: usize,
    cells: Vec<usize>,
}

impl IsoClassKey {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    /// The canonical representative itself, identity at index 0.
    pub fn to_monoid(&self) -> Monoid {
        let rows: Vec<&[usize]> = self.cells.chunks(self.n).collect();
        Monoid::from_rows(&rows, 0).expect("canonical keys are built from monoids")
    }
}

pub fn canonical_form(m: &Monoid) -> IsoClassKey {
    let n = m.order();
    let id = m.identity();
    // The remaining elements are permuted among 1..n.
    let others: Vec<usize> = (0..n).filter(|&x| x != id).collect();
    let mut best: Option<Vec<usize>> = None;
    let mut sigma = alloc::vec![0; n];
    let mut cells = alloc::vec![0; n * n];
    for p in Permutations::new(n - 1) {
        sigma[id] = 0;
        for (k, &x) in others.iter().enumerate() {
            sigma[x] = p[k] + 1;
        }
        for x in 0..n {
            for y in 0..n {
                cells[sigma[x] * n + sigma[y]] = sigma[m.mul(x, y)];
            }
        }
        if best.as_ref().map_or(true, |b| cells < *b) {
            best = Some(cells.clone());
        }
    }
    IsoClassKey { n, cells: best.unwrap() }
}

pub fn is_isomorphic(a: &Monoid, b: &Monoid) -> bool {
    a.order() == b.order() && canonical_form(a) == canonical_form(b)
}
