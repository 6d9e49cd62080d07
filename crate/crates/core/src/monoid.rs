use alloc::vec::Vec;
use core::fmt;

use crate::canon::Permutations;
use crate::table::{MulTable, TableError};

/// An associative table together with its two-sided identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monoid {
    table: MulTable,
    identity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonoidError {
    Table(TableError),
    IdentityOutOfRange(usize),
    /// `(x·y)·z != x·(y·z)` for this triple.
    NotAssociative(usize, usize, usize),
    /// The claimed identity fails `e·x = x = x·e` at this element.
    NotIdentity(usize),
}

impl fmt::Display for MonoidError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonoidError::Table(e) => write!(f, "malformed table: {e}"),
            MonoidError::IdentityOutOfRange(e) => write!(f, "identity {e} is not an element"),
            MonoidError::NotAssociative(x, y, z) => {
                write!(f, "not associative: ({x}·{y})·{z} != {x}·({y}·{z})")
            }
            MonoidError::NotIdentity(x) => write!(f, "identity fails on element {x}"),
        }
    }
}

impl core::error::Error for MonoidError {}

impl From<TableError> for MonoidError {
    fn from(e: TableError) -> Self {
        MonoidError::Table(e)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NotAGroup;

impl fmt::Display for NotAGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "monoid is not a group")
    }
}

impl core::error::Error for NotAGroup {}

/// Checks associativity (first) and the two-sided identity.
pub fn validate_monoid(table: MulTable, identity: usize) -> Result<Monoid, MonoidError> {
    let n = table.order();
    if identity >= n {
        return Err(MonoidError::IdentityOutOfRange(identity));
    }
    if let Some((x, y, z)) = table.associativity_witness() {
        return Err(MonoidError::NotAssociative(x, y, z));
    }
    if let Some(x) = (0..n).find(|&x| table.get(identity, x) != x || table.get(x, identity) != x) {
        return Err(MonoidError::NotIdentity(x));
    }
    Ok(Monoid { table, identity })
}

impl Monoid {
    pub fn from_rows<R: AsRef<[usize]>>(rows: &[R], identity: usize) -> Result<Self, MonoidError> {
        validate_monoid(MulTable::from_rows(rows)?, identity)
    }

    pub fn trivial() -> Monoid {
        Monoid { table: MulTable::new(1, alloc::vec![0]).unwrap(), identity: 0 }
    }

    /// `Z_n` as addition modulo `n`, identity 0.
    pub fn cyclic(n: usize) -> Monoid {
        assert!(n > 0, "cyclic group of order zero");
        let cells = (0..n * n).map(|c| (c / n + c % n) % n).collect();
        Monoid { table: MulTable::new(n, cells).unwrap(), identity: 0 }
    }

    /// The symmetric group on `degree` points; elements are the permutations in
    /// lexicographic order and `p·q` applies `p` first, then `q`.
    pub fn symmetric_group(degree: usize) -> Monoid {
        let perms: Vec<Vec<usize>> = Permutations::new(degree).collect();
        let index = |p: &[usize]| perms.iter().position(|q| q.as_slice() == p).unwrap();
        let n = perms.len();
        let mut cells = Vec::with_capacity(n * n);
        for p in &perms {
            for q in &perms {
                let pq: Vec<usize> = (0..degree).map(|i| q[p[i]]).collect();
                cells.push(index(&pq));
            }
        }
        Monoid { table: MulTable::new(n, cells).unwrap(), identity: 0 }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.table.order()
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table.get(x, y)
    }

    pub fn table(&self) -> &MulTable {
        &self.table
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.mul(x, x) == x
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.order()).filter(|&x| self.is_idempotent(x)).collect()
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order();
        (0..n).all(|x| (x + 1..n).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// Relabel through `sigma` (old index -> new index). Isomorphic to `self`.
    pub fn permuted(&self, sigma: &[usize]) -> Monoid {
        Monoid { table: self.table.permuted(sigma), identity: sigma[self.identity] }
    }

    /// The submonoid-like restriction to `elements`, relabelled `0..elements.len()`
    /// in the given order. Returns `None` unless the subset is closed and contains
    /// an element acting as its identity.
    pub fn restrict(&self, elements: &[usize]) -> Option<Monoid> {
        let pos = |v: usize| elements.iter().position(|&e| e == v);
        let k = elements.len();
        let mut cells = Vec::with_capacity(k * k);
        for &x in elements {
            for &y in elements {
                cells.push(pos(self.mul(x, y))?);
            }
        }
        let table = MulTable::new(k, cells).ok()?;
        let id = (0..k).find(|&e| (0..k).all(|x| table.get(e, x) == x && table.get(x, e) == x))?;
        Some(Monoid { table, identity: id })
    }

    /// Every automorphism as an index map, identity map first.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        Permutations::new(n)
            .filter(|s| {
                s[self.identity] == self.identity
                    && (0..n).all(|x| (0..n).all(|y| s[self.mul(x, y)] == self.mul(s[x], s[y])))
            })
            .collect()
    }
}

/// Two-sided inverses of every element, or `None` when some element has none.
pub fn is_group(m: &Monoid) -> Option<Vec<usize>> {
    let e = m.identity();
    (0..m.order())
        .map(|x| (0..m.order()).find(|&y| m.mul(x, y) == e && m.mul(y, x) == e))
        .collect()
}

pub fn center(g: &Monoid) -> Result<Vec<usize>, NotAGroup> {
    is_group(g).ok_or(NotAGroup)?;
    let n = g.order();
    Ok((0..n).filter(|&z| (0..n).all(|x| g.mul(z, x) == g.mul(x, z))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn trivial_table_is_a_monoid() {
        let m = Monoid::from_rows(&[vec![0]], 0).unwrap();
        assert_eq!(m, Monoid::trivial());
    }

    #[test]
    fn c1_is_a_monoid() {
        // 1 identity, 2² = 1, 3² = 3, 2·3 = 3·2 = 3  (labels shifted down by one)
        let m = Monoid::from_rows(&[vec![0, 1, 2], vec![1, 0, 2], vec![2, 2, 2]], 0);
        assert!(m.is_ok());
    }

    #[test]
    fn first_non_associative_magma_reports_its_triple() {
        // Brute force over all 16 binary operations on {0, 1}.
        let mut found = None;
        'tables: for code in 0..16usize {
            let cells: Vec<usize> = (0..4).map(|b| (code >> b) & 1).collect();
            let op = |x: usize, y: usize| cells[x * 2 + y];
            for x in 0..2 {
                for y in 0..2 {
                    for z in 0..2 {
                        if op(op(x, y), z) != op(x, op(y, z)) {
                            found = Some((cells.clone(), (x, y, z)));
                            break 'tables;
                        }
                    }
                }
            }
        }
        let (cells, triple) = found.expect("some magma on two points is not associative");
        assert_eq!(cells, vec![1, 0, 0, 0]);
        assert_eq!(triple, (0, 0, 1));
        let err = validate_monoid(MulTable::new(2, cells).unwrap(), 0).unwrap_err();
        assert_eq!(err, MonoidError::NotAssociative(0, 0, 1));
    }

    #[test]
    fn wrong_identity_is_rejected() {
        let err = Monoid::from_rows(&[vec![0, 1], vec![1, 0]], 1).unwrap_err();
        assert_eq!(err, MonoidError::NotIdentity(0));
        assert_eq!(
            Monoid::from_rows(&[vec![0, 1], vec![1, 0]], 2).unwrap_err(),
            MonoidError::IdentityOutOfRange(2)
        );
    }

    #[test]
    fn group_detection() {
        assert_eq!(is_group(&Monoid::cyclic(2)), Some(vec![0, 1]));
        assert_eq!(is_group(&Monoid::cyclic(3)), Some(vec![0, 2, 1]));
        let c5 = Monoid::from_rows(&[vec![0, 1, 2], vec![1, 1, 2], vec![2, 2, 1]], 0).unwrap();
        assert_eq!(is_group(&c5), None);
    }

    #[test]
    fn centers() {
        assert_eq!(center(&Monoid::cyclic(2)).unwrap(), vec![0, 1]);
        assert_eq!(center(&Monoid::cyclic(3)).unwrap(), vec![0, 1, 2]);
        let c6 = Monoid::from_rows(&[vec![0, 1, 2], vec![1, 1, 1], vec![2, 1, 2]], 0).unwrap();
        assert_eq!(center(&c6), Err(NotAGroup));
    }

    #[test]
    fn s3_center_is_trivial() {
        // Independent construction: compose the six permutations of {0,1,2} by hand.
        let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let compose = |p: [usize; 3], q: [usize; 3]| [q[p[0]], q[p[1]], q[p[2]]];
        let brute: Vec<usize> = (0..6)
            .filter(|&z| (0..6).all(|x| compose(perms[z], perms[x]) == compose(perms[x], perms[z])))
            .collect();
        assert_eq!(brute, vec![0]);
        let s3 = Monoid::symmetric_group(3);
        assert!(s3.table().is_latin_square());
        assert_eq!(center(&s3).unwrap(), brute);
    }

    #[test]
    fn restriction_to_the_group_part_of_c5() {
        let c5 = Monoid::from_rows(&[vec![0, 1, 2], vec![1, 1, 2], vec![2, 2, 1]], 0).unwrap();
        let g = c5.restrict(&[1, 2]).unwrap();
        assert_eq!(g, Monoid::cyclic(2));
        assert!(c5.restrict(&[0, 2]).is_none());
    }

    #[test]
    fn automorphisms_of_small_groups() {
        assert_eq!(Monoid::cyclic(3).automorphisms(), vec![vec![0, 1, 2], vec![0, 2, 1]]);
        assert_eq!(Monoid::symmetric_group(3).automorphisms().len(), 6);
    }
}
