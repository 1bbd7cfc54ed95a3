//! Dense exact-rational matrices: rank, determinant, solving, kernel.
//!
//! Rank and determinant run fraction-free (Bareiss one-step division) on an
//! integer rescaling of the matrix, which keeps intermediate entries as
//! minors of the input instead of letting numerators and denominators
//! compound. Solving and kernel extraction use plain rational Gauss-Jordan.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Dense row-major matrix over Q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        RationalMatrix { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix::new(rows, cols, vec![Rational::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RationalMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RationalMatrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> RationalMatrix {
        let mut out = RationalMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    /// Clear denominators row by row; returns the integer matrix and the
    /// product of the row scale factors.
    fn to_integer_rows(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let mut scale = BigInt::one();
        let mut out = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut l = BigInt::one();
            for c in 0..self.cols {
                l = l.lcm(self.get(r, c).denom());
            }
            scale *= &l;
            out.push(
                (0..self.cols)
                    .map(|c| {
                        let x = self.get(r, c);
                        x.numer() * (&l / x.denom())
                    })
                    .collect(),
            );
        }
        (out, scale)
    }

    /// Fraction-free elimination; returns (rank, sign of row swaps, last pivot).
    fn bareiss(mut a: Vec<Vec<BigInt>>) -> (usize, i32, BigInt) {
        let rows = a.len();
        let cols = a.first().map_or(0, Vec::len);
        let mut prev = BigInt::one();
        let mut sign = 1;
        let mut pivot_row = 0;
        let mut last_pivot = BigInt::one();
        for col in 0..cols {
            if pivot_row == rows {
                break;
            }
            let Some(p) = (pivot_row..rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            if p != pivot_row {
                a.swap(p, pivot_row);
                sign = -sign;
            }
            for r in pivot_row + 1..rows {
                for c in col + 1..cols {
                    let num = &a[r][c] * &a[pivot_row][col] - &a[r][col] * &a[pivot_row][c];
                    a[r][c] = num / &prev;
                }
                a[r][col] = BigInt::zero();
            }
            prev = a[pivot_row][col].clone();
            last_pivot = prev.clone();
            pivot_row += 1;
        }
        (pivot_row, sign, last_pivot)
    }

    /// Exact rank over Q.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let (a, _) = self.to_integer_rows();
        Self::bareiss(a).0
    }

    /// Exact determinant; errors on non-square input.
    pub fn det(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!(
                "determinant of {}x{} matrix",
                self.rows, self.cols
            )));
        }
        if self.rows == 0 {
            return Ok(Rational::one());
        }
        let (a, scale) = self.to_integer_rows();
        let (rank, sign, last_pivot) = Self::bareiss(a);
        if rank < self.rows {
            return Ok(Rational::zero());
        }
        let signed = if sign < 0 { -last_pivot } else { last_pivot };
        Ok(Rational::from_big(signed, scale))
    }

    /// Reduced row echelon form; returns (rref matrix, pivot column per row).
    fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    let tmp = m.get(p, c).clone();
                    m.set(p, c, m.get(row, c).clone());
                    m.set(row, c, tmp);
                }
            }
            let inv = m.get(row, col).recip();
            for c in col..m.cols {
                m.set(row, c, m.get(row, c) * &inv);
            }
            for r in 0..m.rows {
                if r != row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    for c in col..m.cols {
                        let v = m.get(r, c) - &(m.get(row, c) * &factor);
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    /// Solve `M x = b` exactly. Returns the particular solution with all
    /// free variables set to zero, or `None` when the system is
    /// inconsistent. Errors on a row-count mismatch.
    pub fn solve(&self, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
        if b.len() != self.rows {
            return Err(Error::Dimension(format!(
                "rhs length {} vs {} rows",
                b.len(),
                self.rows
            )));
        }
        let mut aug = RationalMatrix::zero(self.rows, self.cols + 1);
        for (r, rhs) in b.iter().enumerate() {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, rhs.clone());
        }
        let (rref, pivots) = aug.rref();
        // A pivot in the augmented column means inconsistency.
        if pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = rref.get(row, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Exact rational basis of the right kernel.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let (rref, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = -rref.get(row, free);
            }
            basis.push(v);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    fn m(rows: Vec<Vec<i64>>) -> RationalMatrix {
        RationalMatrix::from_rows(
            rows.into_iter().map(|row| row.into_iter().map(r).collect()).collect(),
        )
    }

    #[test]
    fn rank_examples() {
        assert_eq!(m(vec![vec![1, 2], vec![2, 4]]).rank(), 1);
        assert_eq!(RationalMatrix::identity(3).rank(), 3);
        assert_eq!(RationalMatrix::zero(2, 2).rank(), 0);
    }

    #[test]
    fn det_examples() {
        assert_eq!(m(vec![vec![0, 1], vec![1, 0]]).det().unwrap(), r(-1));
        assert_eq!(m(vec![vec![-180]]).det().unwrap(), r(-180));
        assert!(m(vec![vec![1, 2, 3]]).det().is_err());
        // Rational entries.
        let a = RationalMatrix::from_rows(vec![
            vec![Rational::new(1, 2), Rational::new(1, 3)],
            vec![Rational::new(1, 4), Rational::new(1, 5)],
        ]);
        assert_eq!(a.det().unwrap(), Rational::new(1, 60));
    }

    #[test]
    fn solve_examples() {
        let id = RationalMatrix::identity(2);
        assert_eq!(id.solve(&[r(1), r(2)]).unwrap(), Some(vec![r(1), r(2)]));
        // Inconsistent: x = 1 and x = 2.
        let sys = m(vec![vec![1], vec![1]]);
        assert_eq!(sys.solve(&[r(1), r(2)]).unwrap(), None);
        assert!(sys.solve(&[r(1)]).is_err());
        // Underdetermined: free variable pinned to zero.
        let sys = m(vec![vec![1, 1]]);
        assert_eq!(sys.solve(&[r(3)]).unwrap(), Some(vec![r(3), r(0)]));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(RationalMatrix::zero(2, 2).kernel().len(), 2);
        assert!(RationalMatrix::identity(3).kernel().is_empty());
        let a = m(vec![vec![1, 2], vec![2, 4]]);
        let basis = a.kernel();
        assert_eq!(basis.len(), 1);
        // Check the basis vector is actually in the kernel.
        for v in &basis {
            for row in 0..a.rows() {
                let dot: Rational =
                    (0..a.cols()).map(|c| a.get(row, c) * &v[c]).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn kernel_dim_plus_rank_is_cols() {
        let a = m(vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        assert_eq!(a.rank() + a.kernel().len(), a.cols());
    }

    proptest! {
        #[test]
        fn rank_equals_rank_of_transpose(vals in proptest::collection::vec(-6i64..=6, 12)) {
            let a = RationalMatrix::new(3, 4, vals.into_iter().map(r).collect());
            prop_assert_eq!(a.rank(), a.transpose().rank());
        }

        /// Fraction-free rank against the rational echelon kernel: two
        /// independent elimination routines must complement each other.
        #[test]
        fn rank_plus_kernel_dim_is_cols(vals in proptest::collection::vec(-6i64..=6, 12)) {
            let a = RationalMatrix::new(3, 4, vals.into_iter().map(r).collect());
            prop_assert_eq!(a.rank() + a.kernel().len(), a.cols());
        }

        #[test]
        fn det_times_det_of_inverse_is_one(vals in proptest::collection::vec(-5i64..=5, 9)) {
            let a = RationalMatrix::new(3, 3, vals.into_iter().map(r).collect());
            let d = a.det().unwrap();
            prop_assume!(!d.is_zero());
            // Build the inverse column by column through `solve`.
            let mut inv_cols = Vec::new();
            for j in 0..3 {
                let mut e = vec![r(0); 3];
                e[j] = r(1);
                inv_cols.push(a.solve(&e).unwrap().unwrap());
            }
            let mut inv = RationalMatrix::zero(3, 3);
            for (j, col) in inv_cols.iter().enumerate() {
                for (i, v) in col.iter().enumerate() {
                    inv.set(i, j, v.clone());
                }
            }
            let di = inv.det().unwrap();
            prop_assert_eq!(d * di, r(1));
        }
    }
}
