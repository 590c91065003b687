//! Linear subspaces with a canonical basis.
//!
//! A [`Subspace`] stores the reduced row-echelon basis of its row span, so
//! two values describe the same subspace exactly when they compare equal.
//! Sum, intersection, and membership are computed exactly; together with
//! dimensions this gives a decidable subspace lattice.

use core::fmt;

use alloc::vec::Vec;

use crate::error::Error;
use crate::matrix::Matrix;
use crate::rational::{Rational, Zero};

#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    /// RREF basis, full row rank, pivot columns strictly increasing.
    basis: Matrix,
}

impl Subspace {
    /// Span of the given generators inside an `ambient`-dimensional space.
    /// Panics if a generator has the wrong length; callers validating
    /// untrusted input should check lengths first.
    pub fn from_generators(ambient: usize, generators: &[Vec<Rational>]) -> Self {
        let m = Matrix::from_rows(ambient, generators);
        Self::from_matrix(&m)
    }

    /// Span of the rows of `m`; the ambient dimension is `m.cols()`.
    pub fn from_matrix(m: &Matrix) -> Self {
        let echelon = m.rref();
        let rows: Vec<Vec<Rational>> = (0..echelon.rank)
            .map(|i| echelon.matrix.row(i).to_vec())
            .collect();
        Subspace {
            ambient: m.cols(),
            basis: Matrix::from_rows(m.cols(), &rows),
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zero(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
        }
    }

    /// Span of the single vector `v`.
    pub fn line(v: &[Rational]) -> Self {
        Self::from_generators(v.len(), &[v.to_vec()])
    }

    /// Span of the standard basis vectors with the given 0-based indices.
    pub fn coordinate_span(ambient: usize, indices: &[usize]) -> Self {
        let rows: Vec<Vec<Rational>> = indices
            .iter()
            .map(|&i| {
                let mut row = alloc::vec![Rational::zero(); ambient];
                row[i] = crate::rational::int(1);
                row
            })
            .collect();
        Self::from_generators(ambient, &rows)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// The canonical RREF basis; rows are the basis vectors.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &[Rational]> {
        (0..self.basis.rows()).map(move |i| self.basis.row(i))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), Error> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                expected: self.ambient,
                got: other.ambient,
            });
        }
        Ok(())
    }

    /// Smallest subspace containing both.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace, Error> {
        self.check_ambient(other)?;
        let stacked = Matrix::stack_rows(self.ambient, &[&self.basis, &other.basis]);
        Ok(Self::from_matrix(&stacked))
    }

    /// Exact intersection, via the kernel of the stacked coefficient system:
    /// a vector lies in both row spans iff it is `u^T A = v^T B` for some
    /// coefficient pair `(u, v)` in the kernel of `[A^T | -B^T]`.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, Error> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        let coeffs = self.basis.transpose().augment(&-(&other.basis.transpose()));
        let pairs = coeffs.kernel();
        let a = self.dim();
        let rows: Vec<Vec<Rational>> = pairs
            .basis_rows()
            .map(|pair| {
                let mut x = alloc::vec![Rational::zero(); self.ambient];
                for (i, c) in pair[..a].iter().enumerate() {
                    if !c.is_zero() {
                        for (j, slot) in x.iter_mut().enumerate() {
                            *slot += c * self.basis.at(i, j);
                        }
                    }
                }
                x
            })
            .collect();
        Ok(Self::from_generators(self.ambient, &rows))
    }

    /// Does `self` contain every vector of `other`?
    pub fn contains(&self, other: &Subspace) -> Result<bool, Error> {
        self.check_ambient(other)?;
        Ok(other
            .basis_rows()
            .all(|row| self.contains_vector_unchecked(row)))
    }

    /// Membership test for a single vector.
    pub fn contains_vector(&self, v: &[Rational]) -> Result<bool, Error> {
        if v.len() != self.ambient {
            return Err(Error::AmbientMismatch {
                expected: self.ambient,
                got: v.len(),
            });
        }
        Ok(self.contains_vector_unchecked(v))
    }

    fn contains_vector_unchecked(&self, v: &[Rational]) -> bool {
        // reduce v against the RREF basis and check the residue vanishes
        let mut residue = v.to_vec();
        for row in self.basis_rows() {
            let pivot = row
                .iter()
                .position(|e| !e.is_zero())
                .expect("basis rows are nonzero");
            if !residue[pivot].is_zero() {
                let factor = residue[pivot].clone();
                for (r, b) in residue.iter_mut().zip(row) {
                    *r -= &factor * b;
                }
            }
        }
        residue.iter().all(Rational::is_zero)
    }

    /// Image under the linear map `m` (applied to each basis vector).
    /// The new ambient dimension is `m.rows()`.
    pub fn apply(&self, m: &Matrix) -> Result<Subspace, Error> {
        if m.cols() != self.ambient {
            return Err(Error::ShapeMismatch {
                expected_rows: m.rows(),
                expected_cols: self.ambient,
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        let rows: Vec<Vec<Rational>> = self.basis_rows().map(|b| m.mul_vec(b)).collect();
        Ok(Self::from_generators(m.rows(), &rows))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{:?} in dim {}", self.basis, self.ambient)
    }
}
