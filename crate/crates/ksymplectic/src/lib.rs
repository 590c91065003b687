//! Exact linear algebra for k-symplectic vector spaces.
//!
//! A k-symplectic vector space is a vector space of dimension `n(k+1)`
//! carrying `k` skew-symmetric bilinear forms whose kernels intersect
//! trivially. This crate implements the associated linear geometry over
//! arbitrary-precision rationals, so every identity is decidable by exact
//! equality:
//!
//! - [`matrix`] / [`subspace`]: dense rational matrices, reduced row-echelon
//!   form, kernels, and the subspace lattice (sum, intersection, membership)
//!   with a canonical basis making subspace equality a plain comparison;
//! - [`kspace`]: construction and validation of k-symplectic structures, the
//!   canonical model on `V × V* × ⋯ × V*`, the ⊖-product, and built-in
//!   example spaces;
//! - [`orthogonal`]: the level-l orthogonal complement `W^{⊥,l}` together
//!   with isotropic/coisotropic/lagrangian classification and the
//!   chain-extension algorithms that build lagrangian completions and
//!   isotropic complements;
//! - [`darboux`]: polarizations, Darboux frames (the change of basis turning
//!   every form into its canonical matrix), k-symplectomorphism tests, and
//!   the graph criterion on ⊖-products;
//! - [`forms`] / [`poly`]: polynomial differential forms on a single chart,
//!   exterior derivative, pullback of the canonical two-forms along a
//!   section, and the Hamilton-Jacobi constancy check;
//! - [`gen`]: seeded deterministic generators for randomized property tests.
//!
//! The crate is `no_std` (it requires `alloc`); IO, JSON formats, and the
//! command-line front end live in the companion crate `ksymplectic-cli`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod darboux;
pub mod error;
pub mod forms;
pub mod gen;
pub mod kspace;
pub mod matrix;
pub mod orthogonal;
pub mod poly;
pub mod rational;
pub mod subspace;

pub use error::Error;
pub use kspace::KSymplecticSpace;
pub use matrix::Matrix;
pub use rational::Rational;
pub use subspace::Subspace;
