//! Deterministic seeded generators for randomized testing.
//!
//! Everything here draws from a ChaCha stream seeded explicitly, so a
//! `(parameters, seed)` pair always reproduces the same instance. Matrix
//! and subspace entries are kept in `-3..=3` so rational growth stays tame
//! under elimination.

use alloc::string::String;
use alloc::vec::Vec;

pub use rand::Rng;
pub use rand_chacha::ChaCha8Rng;

use rand::SeedableRng;

use crate::kspace::{canonical_y_index, KSymplecticSpace};
use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::rational::{int, Rational};
use crate::subspace::Subspace;

/// Retry budget for rejection sampling of invertible matrices. Running out
/// indicates a defect, not bad luck: a uniform draw is singular with
/// probability well below 1/2.
const MAX_DRAWS: usize = 1000;

/// A fresh deterministic stream for `seed`.
pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Matrix with integer entries uniform in `-3..=3`.
pub fn random_matrix(rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| int(rng.gen_range(-3..=3)))
}

pub fn random_vector(len: usize, rng: &mut ChaCha8Rng) -> Vec<Rational> {
    (0..len).map(|_| int(rng.gen_range(-3..=3))).collect()
}

/// Invertible matrix with small integer entries; redraws singular samples.
pub fn random_invertible(dim: usize, rng: &mut ChaCha8Rng) -> Matrix {
    for _ in 0..MAX_DRAWS {
        let m = random_matrix(dim, dim, rng);
        if m.is_invertible() {
            return m;
        }
    }
    unreachable!("exhausted draws for an invertible {dim}x{dim} matrix");
}

/// A random k-symplectic space congruent to the canonical model, together
/// with the witness matrix `P`.
///
/// The forms are `P^T C_r P` for the canonical forms `C_r`, so `P` is a
/// k-symplectomorphism from the generated space to
/// `KSymplecticSpace::canonical(n, k)` (it pulls each canonical form back to
/// the corresponding generated one). The generated space is polarized by
/// construction: the preimage under `P` of the canonical y-subspace, i.e.
/// its image under `P^{-1}`, is a polarization.
pub fn random_kspace(n: usize, k: usize, seed: u64) -> (KSymplecticSpace, Matrix) {
    assert!(n >= 1 && k >= 1);
    let mut rng = seeded(seed);
    let canonical = KSymplecticSpace::canonical(n, k);
    let p = random_invertible(canonical.dim(), &mut rng);
    let pt = p.transpose();
    let forms: Vec<Matrix> = canonical.forms().iter().map(|c| &(&pt * c) * &p).collect();
    let space = KSymplecticSpace::new(canonical.dim(), forms)
        .expect("congruence preserves skewness and nondegeneracy");
    (space, p)
}

/// The witness polarization of a `random_kspace` output: the canonical
/// y-subspace carried through `P^{-1}`.
pub fn witness_polarization(n: usize, k: usize, p: &Matrix) -> Subspace {
    let y_axes: Vec<usize> = (1..=k)
        .flat_map(|r| (0..n).map(move |i| canonical_y_index(n, r, i)))
        .collect();
    let y = Subspace::coordinate_span(n * (k + 1), &y_axes);
    let p_inv = p.inverse().expect("witness is invertible");
    y.apply(&p_inv).expect("shapes agree")
}

/// Random subspace of a dimension drawn uniformly in `0..=ambient`
/// (the resulting dimension can be lower when rows collide).
pub fn random_subspace(ambient: usize, rng: &mut ChaCha8Rng) -> Subspace {
    let target = rng.gen_range(0..=ambient);
    let m = random_matrix(target, ambient, rng);
    Subspace::from_matrix(&m)
}

/// Random polynomial over the given variables with total degree at most
/// `max_degree` and at most `max_terms` monomials.
pub fn random_poly(
    vars: &[String],
    max_degree: u32,
    max_terms: usize,
    rng: &mut ChaCha8Rng,
) -> Poly {
    let mut p = Poly::zero(vars.to_vec());
    for _ in 0..max_terms {
        let mut budget = max_degree;
        let mut exp = alloc::vec![0u32; vars.len()];
        for slot in exp.iter_mut() {
            let e = rng.gen_range(0..=budget);
            *slot = e;
            budget -= e;
        }
        let num = rng.gen_range(-3..=3);
        if num != 0 {
            p = &p + &Poly::monomial(vars.to_vec(), exp, int(num));
        }
    }
    p
}

/// Random section: k one-forms over `q1..qn` with random polynomial
/// coefficients of total degree at most `max_degree`.
pub fn random_section(
    n: usize,
    k: usize,
    max_degree: u32,
    rng: &mut ChaCha8Rng,
) -> crate::forms::Section {
    let vars = crate::forms::q_chart(n);
    let forms = (0..k)
        .map(|_| {
            let coeffs = (0..n)
                .map(|_| random_poly(&vars, max_degree, 3, rng))
                .collect();
            crate::forms::OneForm::new(vars.clone(), coeffs)
        })
        .collect();
    crate::forms::Section::new(forms).expect("generated forms share the base chart")
}
