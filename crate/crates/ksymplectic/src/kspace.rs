//! k-symplectic vector spaces.
//!
//! A space of dimension `N = n(k+1)` carries `k` skew-symmetric forms whose
//! kernels meet only in zero. Forms are stored as matrices `A_r` with
//! `ω_r(u, v) = u^T A_r v`; the basic two-form `e^i ∧ e^j` uses the sign
//! convention `(e^i ∧ e^j)(u, v) = u_i v_j - u_j v_i`.

use alloc::vec::Vec;

use crate::error::Error;
use crate::matrix::Matrix;
use crate::rational::{int, Rational, Zero};
use crate::subspace::Subspace;

/// A validated k-symplectic vector space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KSymplecticSpace {
    dim: usize,
    k: usize,
    n: usize,
    forms: Vec<Matrix>,
}

/// The matrix of `e^i ∧ e^j` (0-based indices) on a `dim`-dimensional space.
pub fn basis_two_form(dim: usize, i: usize, j: usize) -> Matrix {
    assert!(i < dim && j < dim && i != j);
    let mut m = Matrix::zero(dim, dim);
    m.set(i, j, int(1));
    m.set(j, i, int(-1));
    m
}

/// Column index of the coordinate `y^r_i` in the canonical model
/// (1-based `r`, 0-based `i`): the x-block comes first, then the y-blocks
/// grouped by superscript.
pub fn canonical_y_index(n: usize, r: usize, i: usize) -> usize {
    n + (r - 1) * n + i
}

/// The canonical-model form matrix `C_r = Σ_i e^{x_i} ∧ e^{y^r_i}`.
pub fn canonical_form(n: usize, k: usize, r: usize) -> Matrix {
    assert!((1..=k).contains(&r));
    let dim = n * (k + 1);
    let mut m = Matrix::zero(dim, dim);
    for i in 0..n {
        let j = canonical_y_index(n, r, i);
        m.set(i, j, int(1));
        m.set(j, i, int(-1));
    }
    m
}

impl KSymplecticSpace {
    /// Validate and construct. `k` is the number of forms; checks, in order:
    /// at least one form, each form square of size `dim`, `(k+1) | dim` with
    /// a positive quotient, skew-symmetry of every form, and triviality of
    /// the common kernel.
    pub fn new(dim: usize, forms: Vec<Matrix>) -> Result<Self, Error> {
        let k = forms.len();
        if k == 0 {
            return Err(Error::BadDimension { dim, k });
        }
        for form in &forms {
            if form.rows() != dim || form.cols() != dim {
                return Err(Error::ShapeMismatch {
                    expected_rows: dim,
                    expected_cols: dim,
                    rows: form.rows(),
                    cols: form.cols(),
                });
            }
        }
        if !dim.is_multiple_of(k + 1) || dim == 0 {
            return Err(Error::BadDimension { dim, k });
        }
        let n = dim / (k + 1);
        for (idx, form) in forms.iter().enumerate() {
            if !form.is_skew() {
                return Err(Error::NotSkew { form: idx + 1 });
            }
        }
        let kernel = common_kernel(dim, &forms);
        if !kernel.is_zero() {
            return Err(Error::DegenerateCommonKernel { kernel });
        }
        Ok(KSymplecticSpace { dim, k, n, forms })
    }

    /// The canonical model on `V × V* × ⋯ × V*` with `dim V = n`:
    /// coordinates `(x^1..x^n, y^1_1..y^1_n, …, y^k_1..y^k_n)` and
    /// `ω_r = Σ_i e^{x_i} ∧ e^{y^r_i}`.
    pub fn canonical(n: usize, k: usize) -> Self {
        assert!(n >= 1 && k >= 1);
        let forms = (1..=k).map(|r| canonical_form(n, k, r)).collect();
        Self::new(n * (k + 1), forms).expect("canonical model is a valid k-symplectic space")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The matrix of `ω_r`, 1-based.
    pub fn form(&self, r: usize) -> Result<&Matrix, Error> {
        self.check_level(r)?;
        Ok(&self.forms[r - 1])
    }

    pub fn forms(&self) -> &[Matrix] {
        &self.forms
    }

    /// Validate `1 <= level <= k`.
    pub fn check_level(&self, level: usize) -> Result<(), Error> {
        if level == 0 || level > self.k {
            return Err(Error::LevelOutOfRange { level, k: self.k });
        }
        Ok(())
    }

    pub fn check_ambient(&self, w: &Subspace) -> Result<(), Error> {
        if w.ambient_dim() != self.dim {
            return Err(Error::AmbientMismatch {
                expected: self.dim,
                got: w.ambient_dim(),
            });
        }
        Ok(())
    }

    /// `ω_r(u, v) = u^T A_r v`; antisymmetric in `(u, v)`.
    pub fn eval_form(&self, r: usize, u: &[Rational], v: &[Rational]) -> Result<Rational, Error> {
        let form = self.form(r)?;
        if u.len() != self.dim || v.len() != self.dim {
            return Err(Error::AmbientMismatch {
                expected: self.dim,
                got: if u.len() != self.dim {
                    u.len()
                } else {
                    v.len()
                },
            });
        }
        let av = form.mul_vec(v);
        Ok(u.iter()
            .zip(&av)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b))
    }

    /// The ⊖-product: forms `diag(A^1_r, -A^2_r)` on the direct sum, i.e.
    /// the first structure minus the pullback of the second.
    pub fn product_ominus(&self, other: &KSymplecticSpace) -> Result<KSymplecticSpace, Error> {
        if self.k != other.k {
            return Err(Error::MismatchedK {
                k1: self.k,
                k2: other.k,
            });
        }
        let forms: Vec<Matrix> = self
            .forms
            .iter()
            .zip(&other.forms)
            .map(|(a, b)| a.block_diag(&-b))
            .collect();
        Self::new(self.dim + other.dim, forms)
    }
}

/// Intersection of the kernels of the given forms.
pub fn common_kernel(dim: usize, forms: &[Matrix]) -> Subspace {
    let mut acc = Subspace::full(dim);
    for form in forms {
        let ker = form.kernel();
        acc = acc
            .intersection(&ker)
            .expect("kernels share the ambient dimension");
    }
    acc
}

/// Built-in example spaces.
pub mod fixtures {
    use super::*;

    /// `R^3` with `ω_1 = e^1 ∧ e^3`, `ω_2 = e^2 ∧ e^3` (n = 1, k = 2).
    pub fn r3_2symp() -> KSymplecticSpace {
        KSymplecticSpace::new(
            3,
            alloc::vec![basis_two_form(3, 0, 2), basis_two_form(3, 1, 2)],
        )
        .expect("fixture is valid")
    }

    /// `R^6` with `ω_1 = e^1∧e^3 + e^4∧e^6`, `ω_2 = e^2∧e^3 + e^5∧e^6`
    /// (n = 2, k = 2).
    pub fn r6_2symp() -> KSymplecticSpace {
        let w1 = &basis_two_form(6, 0, 2) + &basis_two_form(6, 3, 5);
        let w2 = &basis_two_form(6, 1, 2) + &basis_two_form(6, 4, 5);
        KSymplecticSpace::new(6, alloc::vec![w1, w2]).expect("fixture is valid")
    }

    /// `R^6` with `ω_r = e^r ∧ e^6` for `r = 1..5` (n = 1, k = 5).
    pub fn r6_5symp() -> KSymplecticSpace {
        let forms = (0..5).map(|r| basis_two_form(6, r, 5)).collect();
        KSymplecticSpace::new(6, forms).expect("fixture is valid")
    }
}
