//! Dense matrices over the rationals.
//!
//! Row-major storage; every algorithm is exact. The central primitive is
//! [`Matrix::rref`], whose output (the unique reduced row-echelon form) makes
//! ranks, kernels, and canonical subspace bases deterministic.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use alloc::vec;
use alloc::vec::Vec;

use crate::rational::{int, Rational, Zero};
use crate::subspace::Subspace;

/// A dense `rows x cols` matrix of rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

/// Result of reduction to reduced row-echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowEchelon {
    /// The unique RREF of the input.
    pub matrix: Matrix,
    /// Pivot columns in strictly increasing order.
    pub pivots: Vec<usize>,
    /// Number of pivots.
    pub rank: usize,
}

impl Matrix {
    /// Build from a row-major entry list. Panics unless
    /// `entries.len() == rows * cols`.
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Self {
        assert_eq!(
            entries.len(),
            rows * cols,
            "entry list has the wrong length"
        );
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { int(1) } else { int(0) })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    /// Build from rows. All rows must share one length; `cols` disambiguates
    /// the empty case.
    pub fn from_rows(cols: usize, rows: &[Vec<Rational>]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "row has the wrong length");
            entries.extend(row.iter().cloned());
        }
        Matrix {
            rows: rows.len(),
            cols,
            entries,
        }
    }

    /// Build from integer rows (test and fixture convenience).
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_fn(rows.len(), cols, |i, j| int(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Skew-symmetry: `m[j][i] == -m[i][j]` everywhere (forces a zero diagonal).
    pub fn is_skew(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in i..self.cols {
                if *self.at(i, j) != -self.at(j, i).clone() {
                    return false;
                }
            }
        }
        true
    }

    pub fn transpose(&self) -> Matrix {
        Self::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Self::from_fn(self.rows, self.cols, |i, j| self.at(i, j) * c)
    }

    /// Matrix-vector product `m * v`. Panics unless `v.len() == cols`.
    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Stack matrices vertically. All must share `cols`.
    pub fn stack_rows(cols: usize, parts: &[&Matrix]) -> Matrix {
        let mut entries = Vec::new();
        let mut rows = 0;
        for part in parts {
            assert_eq!(part.cols, cols, "stacked part has the wrong width");
            entries.extend(part.entries.iter().cloned());
            rows += part.rows;
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    /// Concatenate horizontally. Both must share `rows`.
    pub fn augment(&self, right: &Matrix) -> Matrix {
        assert_eq!(self.rows, right.rows, "augmented part has the wrong height");
        Self::from_fn(self.rows, self.cols + right.cols, |i, j| {
            if j < self.cols {
                self.at(i, j).clone()
            } else {
                right.at(i, j - self.cols).clone()
            }
        })
    }

    /// Block-diagonal sum of `self` and `other`.
    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        Self::from_fn(self.rows + other.rows, self.cols + other.cols, |i, j| {
            if i < self.rows && j < self.cols {
                self.at(i, j).clone()
            } else if i >= self.rows && j >= self.cols {
                other.at(i - self.rows, j - self.cols).clone()
            } else {
                Rational::zero()
            }
        })
    }

    /// The unique reduced row-echelon form, with pivot columns and rank.
    pub fn rref(&self) -> RowEchelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            // find a nonzero entry in this column at or below pivot_row
            let Some(found) = (pivot_row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, found);
            let inv = int(1) / m.at(pivot_row, col).clone();
            m.scale_row(pivot_row, &inv);
            for r in 0..m.rows {
                if r != pivot_row && !m.at(r, col).is_zero() {
                    let factor = m.at(r, col).clone();
                    m.row_sub_scaled(r, pivot_row, &factor);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        let rank = pivots.len();
        RowEchelon {
            matrix: m,
            pivots,
            rank,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// The kernel `{v : m v = 0}` as a canonical subspace of dimension
    /// `cols - rank`.
    pub fn kernel(&self) -> Subspace {
        let RowEchelon { matrix, pivots, .. } = self.rref();
        let mut rows = Vec::new();
        let mut pivot_iter = pivots.iter().copied().peekable();
        let mut free_cols = Vec::new();
        for col in 0..self.cols {
            if pivot_iter.peek() == Some(&col) {
                pivot_iter.next();
            } else {
                free_cols.push(col);
            }
        }
        for &free in &free_cols {
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = int(1);
            for (row, &piv) in pivots.iter().enumerate() {
                v[piv] = -matrix.at(row, free).clone();
            }
            rows.push(v);
        }
        Subspace::from_generators(self.cols, &rows)
    }

    /// Determinant by fraction-free-enough Gaussian elimination (the sizes
    /// here are tiny, so plain rational elimination is fine).
    pub fn det(&self) -> Rational {
        assert!(self.is_square(), "determinant of a nonsquare matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = int(1);
        for col in 0..n {
            let Some(found) = (col..n).find(|&r| !m.at(r, col).is_zero()) else {
                return Rational::zero();
            };
            if found != col {
                m.swap_rows(col, found);
                det = -det;
            }
            let pivot = m.at(col, col).clone();
            det *= pivot.clone();
            for r in col + 1..n {
                if !m.at(r, col).is_zero() {
                    let factor = m.at(r, col) / &pivot;
                    m.row_sub_scaled(r, col, &factor);
                }
            }
        }
        det
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && !self.det().is_zero()
    }

    /// Exact inverse, or `None` when singular or nonsquare.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let RowEchelon { matrix, pivots, .. } = self.augment(&Matrix::identity(n)).rref();
        // invertible iff the left block reduces to the identity, i.e. the
        // first n pivots occupy the first n columns
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| matrix.at(i, j + n).clone()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, c: &Rational) {
        for j in 0..self.cols {
            let v = self.at(r, j) * c;
            self.set(r, j, v);
        }
    }

    /// row[r] -= factor * row[src]
    fn row_sub_scaled(&mut self, r: usize, src: usize, factor: &Rational) {
        for j in 0..self.cols {
            let v = self.at(r, j) - &(self.at(src, j) * factor);
            self.set(r, j, v);
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(Rational::zero(), |acc, t| {
                acc + self.at(i, t) * rhs.at(t, j)
            })
        })
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| self.at(i, j) + rhs.at(i, j))
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| self.at(i, j) - rhs.at(i, j))
    }
}

impl Neg for &Matrix {
    type Output = Matrix;

    fn neg(self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| -self.at(i, j).clone())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
