use alloc::vec::Vec;
use core::fmt;

/// A square composition table over the element indices `0..n`.
///
/// Entries are stored row-major; `get(x, y)` is the product `x·y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MulTable {
    n: usize,
    cells: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableError {
    Empty,
    /// The row at this index does not have `n` entries.
    Ragged { row: usize },
    OutOfRange { row: usize, col: usize, value: usize },
}

impl fmt::Display for TableError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableError::Empty => write!(f, "table has no elements"),
            TableError::Ragged { row } => write!(f, "row {row} has the wrong length"),
            TableError::OutOfRange { row, col, value } => {
                write!(f, "entry ({row}, {col}) = {value} is not an element index")
            }
        }
    }
}

impl core::error::Error for TableError {}

impl MulTable {
    pub fn new(n: usize, cells: Vec<usize>) -> Result<Self, TableError> {
        if n == 0 {
            return Err(TableError::Empty);
        }
        if cells.len() != n * n {
            return Err(TableError::Ragged { row: cells.len() / n });
        }
        if let Some(pos) = cells.iter().position(|&v| v >= n) {
            return Err(TableError::OutOfRange { row: pos / n, col: pos % n, value: cells[pos] });
        }
        Ok(MulTable { n, cells })
    }

    pub fn from_rows<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self, TableError> {
        let n = rows.len();
        let mut cells = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(TableError::Ragged { row: i });
            }
            cells.extend_from_slice(row);
        }
        MulTable::new(n, cells)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.n + y]
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> + '_ {
        self.cells.chunks(self.n)
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        self.rows().map(|r| r.to_vec()).collect()
    }

    /// Relabel every element through `sigma` (old index -> new index).
    pub fn permuted(&self, sigma: &[usize]) -> MulTable {
        let n = self.n;
        debug_assert_eq!(sigma.len(), n);
        let mut cells = alloc::vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                cells[sigma[x] * n + sigma[y]] = sigma[self.get(x, y)];
            }
        }
        MulTable { n, cells }
    }

    /// First triple `(x, y, z)` in lexicographic order with `(x·y)·z != x·(y·z)`.
    pub fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                let xy = self.get(x, y);
                for z in 0..n {
                    if self.get(xy, z) != self.get(x, self.get(y, z)) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_witness().is_none()
    }

    /// Every row and every column is a permutation of `0..n`.
    pub fn is_latin_square(&self) -> bool {
        let n = self.n;
        let mut seen = alloc::vec![false; n];
        for x in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for y in 0..n {
                let v = self.get(x, y);
                if seen[v] {
                    return false;
                }
                seen[v] = true;
            }
        }
        for y in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for x in 0..n {
                let v = self.get(x, y);
                if seen[v] {
                    return false;
                }
                seen[v] = true;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn rejects_out_of_range_entries() {
        let err = MulTable::from_rows(&[vec![0, 2], vec![1, 0]]).unwrap_err();
        assert_eq!(err, TableError::OutOfRange { row: 0, col: 1, value: 2 });
    }

    #[test]
    fn rejects_ragged_and_empty() {
        assert_eq!(MulTable::from_rows(&[vec![0, 1], vec![1]]).unwrap_err(), TableError::Ragged { row: 1 });
        assert_eq!(MulTable::from_rows::<Vec<usize>>(&[]).unwrap_err(), TableError::Empty);
    }

    #[test]
    fn permuted_swaps_labels() {
        // x·y = x on two elements (left-zero band)
        let t = MulTable::from_rows(&[vec![0, 0], vec![1, 1]]).unwrap();
        let p = t.permuted(&[1, 0]);
        assert_eq!(p.to_rows(), vec![vec![0, 0], vec![1, 1]]);
        let z2 = MulTable::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(z2.permuted(&[1, 0]).to_rows(), vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn latin_square_detection() {
        assert!(MulTable::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap().is_latin_square());
        assert!(!MulTable::from_rows(&[vec![0, 1], vec![1, 1]]).unwrap().is_latin_square());
    }
}
