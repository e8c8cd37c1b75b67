use std::fmt;

use super::BinaryVector;
use crate::error::{Error, Result};

/// Dense matrix over GF(2) stored as packed rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    cols: usize,
    rows: Vec<BinaryVector>,
}

impl BinaryMatrix {
    pub fn new(cols: usize, rows: Vec<BinaryVector>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::LengthMismatch(bad.len(), cols));
        }
        Ok(BinaryMatrix { cols, rows })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        BinaryMatrix {
            cols,
            rows: vec![BinaryVector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        BinaryMatrix {
            cols: n,
            rows: (0..n).map(|i| BinaryVector::unit(n, i)).collect(),
        }
    }

    pub fn from_strs<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|s| s.as_ref().parse())
            .collect::<Result<Vec<BinaryVector>>>()?;
        let cols = parsed.first().map_or(0, |r| r.len());
        Self::new(cols, parsed)
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[BinaryVector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &BinaryVector {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, bit: bool) {
        self.rows[i].set(j, bit)
    }

    pub fn push_row(&mut self, row: BinaryVector) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::LengthMismatch(row.len(), self.cols));
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn transpose(&self) -> Self {
        let mut t = BinaryMatrix::zeros(self.cols, self.rows.len());
        for (i, r) in self.rows.iter().enumerate() {
            for j in r.ones_iter() {
                t.rows[j].set(i, true);
            }
        }
        t
    }

    /// `M x`: bit `i` of the result is `row_i · x`.
    pub fn mul_vec(&self, x: &BinaryVector) -> BinaryVector {
        BinaryVector::from_indices(
            self.rows.len(),
            self.rows
                .iter()
                .enumerate()
                .filter(|(_, r)| r.dot(x))
                .map(|(i, _)| i),
        )
    }

    /// `x M`: the sum of the rows selected by `x`.
    pub fn vec_mul(&self, x: &BinaryVector) -> BinaryVector {
        assert_eq!(x.len(), self.rows.len());
        let mut acc = BinaryVector::zeros(self.cols);
        for i in x.ones_iter() {
            acc ^= &self.rows[i];
        }
        acc
    }

    pub fn mul(&self, other: &BinaryMatrix) -> Result<BinaryMatrix> {
        if self.cols != other.rows.len() {
            return Err(Error::LengthMismatch(self.cols, other.rows.len()));
        }
        Ok(BinaryMatrix {
            cols: other.cols,
            rows: self.rows.iter().map(|r| other.vec_mul(r)).collect(),
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows.len() == self.cols && *self == self.transpose()
    }

    /// Reduced row echelon form; returns the nonzero rows and their pivot columns.
    pub fn rref(&self) -> (BinaryMatrix, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..rows.len()).find(|&i| rows[i].get(c)) else {
                continue;
            };
            rows.swap(r, p);
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row.get(c) {
                    *row ^= &pivot_row;
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        (BinaryMatrix { cols: self.cols, rows }, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : M x = 0}`.
    pub fn nullspace(&self) -> BinaryMatrix {
        let (red, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut x = BinaryVector::unit(self.cols, free);
            for (row, &p) in red.rows.iter().zip(&pivots) {
                if row.get(free) {
                    x.set(p, true);
                }
            }
            basis.push(x);
        }
        BinaryMatrix {
            cols: self.cols,
            rows: basis,
        }
    }

    pub fn row_space_contains(&self, x: &BinaryVector) -> bool {
        RowBasis::from_rows(self.cols, &self.rows).contains(x)
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryMatrix {}x{} [", self.rows.len(), self.cols)?;
        for r in &self.rows {
            writeln!(f, "  {r}")?;
        }
        write!(f, "]")
    }
}

/// Echelon basis supporting membership tests and reduction.
///
/// Each stored row has a distinct pivot (its lowest set bit), and no other
/// row has that pivot set.
#[derive(Clone, Debug)]
pub struct RowBasis {
    len: usize,
    rows: Vec<(usize, BinaryVector)>,
}

impl RowBasis {
    pub fn new(len: usize) -> Self {
        RowBasis { len, rows: Vec::new() }
    }

    pub fn from_rows<'a>(len: usize, rows: impl IntoIterator<Item = &'a BinaryVector>) -> Self {
        let mut b = RowBasis::new(len);
        for r in rows {
            b.insert(r.clone());
        }
        b
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, x: &BinaryVector) -> BinaryVector {
        let mut x = x.clone();
        for (p, row) in &self.rows {
            if x.get(*p) {
                x ^= row;
            }
        }
        x
    }

    pub fn contains(&self, x: &BinaryVector) -> bool {
        self.reduce(x).is_zero()
    }

    /// Adds `x` to the span; returns false if it was already there.
    pub fn insert(&mut self, x: BinaryVector) -> bool {
        assert_eq!(x.len(), self.len);
        let r = self.reduce(&x);
        let Some(p) = r.first_one() else {
            return false;
        };
        for (_, row) in self.rows.iter_mut() {
            if row.get(p) {
                *row ^= &r;
            }
        }
        self.rows.push((p, r));
        true
    }

    pub fn basis(&self) -> impl Iterator<Item = &BinaryVector> {
        self.rows.iter().map(|(_, r)| r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_nullspace() {
        let m = BinaryMatrix::from_strs(&["1100", "0110", "1010"]).unwrap();
        assert_eq!(m.rank(), 2);
        let k = m.nullspace();
        assert_eq!(k.num_rows(), 2);
        for x in k.rows() {
            assert!(m.mul_vec(x).is_zero());
        }
    }

    #[test]
    fn transpose_and_mul() {
        let m = BinaryMatrix::from_strs(&["110", "011"]).unwrap();
        let t = m.transpose();
        assert_eq!(t.num_rows(), 3);
        let p = m.mul(&t).unwrap();
        assert_eq!(p, BinaryMatrix::from_strs(&["01", "10"]).unwrap());
    }

    #[test]
    fn row_basis_membership() {
        let rows: Vec<BinaryVector> = ["1100", "0110"].iter().map(|s| s.parse().unwrap()).collect();
        let b = RowBasis::from_rows(4, &rows);
        assert!(b.contains(&"1010".parse().unwrap()));
        assert!(!b.contains(&"0001".parse().unwrap()));
        assert_eq!(b.rank(), 2);
    }
}
