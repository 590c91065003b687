//! Polarizations, Darboux frames, and k-symplectomorphisms.
//!
//! A polarization is a k-lagrangian subspace `W` with `dim W = k·dim(V/W)`;
//! spaces carrying one are exactly those congruent to the canonical model.
//! [`darboux_map`] realizes the congruence: it returns a basis
//! `{e_i, f^r_i}` whose change-of-basis matrix `P` satisfies
//! `P^T A_r P = C_r` exactly for every form, where `C_r` is the
//! canonical-model matrix.
//!
//! The frame is found by inverting the dual pairing between `W` and a
//! k-lagrangian complement `V_0`: the map sending `w ∈ W` to the tuple of
//! restricted contractions `(-(ι_w ω_1)|_{V_0}, …, -(ι_w ω_k)|_{V_0})` is an
//! isomorphism onto `V_0^* × ⋯ × V_0^*`, and `f^r_i` is the preimage of the
//! r-th dual-slot basis vector `e_i^*`.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use rand::Rng;

use crate::error::Error;
use crate::gen::seeded;
use crate::kspace::{canonical_form, KSymplecticSpace};
use crate::matrix::Matrix;
use crate::orthogonal::{
    is_l_isotropic, is_l_lagrangian, isotropic_complement, l_orthogonal, Lagrangian,
};
use crate::rational::{Rational, Zero};
use crate::subspace::Subspace;

/// Attempt budget for the randomized polarization search.
const POLARIZATION_ATTEMPTS: usize = 64;

/// An ordered basis realizing the canonical form of every `ω_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DarbouxFrame {
    /// Basis of the chosen k-lagrangian complement (`n` vectors).
    pub e: Vec<Vec<Rational>>,
    /// `f[r-1][i]` is `f^r_i`, a basis vector of the polarization (`k × n`).
    pub f: Vec<Vec<Vec<Rational>>>,
    /// Columns `e_1..e_n, f^1_1..f^1_n, …, f^k_1..f^k_n`; satisfies
    /// `P^T A_r P = C_r` for every `r`.
    pub change_of_basis: Matrix,
}

/// Is `w` a polarization: `w = w^{⊥,k}` and `dim w = n·k`?
pub fn check_polarization(space: &KSymplecticSpace, w: &Subspace) -> Result<bool, Error> {
    space.check_ambient(w)?;
    if w.dim() != space.n() * space.k() {
        return Ok(false);
    }
    Ok(l_orthogonal(space, w, space.k())? == *w)
}

/// Search for a polarization.
///
/// For `k >= 2` the candidate `Σ_r ⋂_{s≠r} ker ω_s` is computed first: on
/// the canonical model this sum of residual kernels is exactly the
/// polarizing subspace (the dual factors), and the formula commutes with
/// k-symplectomorphisms, so it recovers a polarization of every polarized
/// space without searching. For `k = 1` a maximal isotropic chain from zero
/// is lagrangian of half the dimension automatically. When the direct
/// construction fails, seeded randomized chains are tried before giving
/// up. Returns the first verified result; `None` proves nothing by
/// contract, although for `k >= 2` the direct construction is complete.
pub fn find_polarization(space: &KSymplecticSpace, seed: u64) -> Option<Subspace> {
    let target = space.n() * space.k();
    if space.k() >= 2 {
        let candidate = residual_kernel_sum(space);
        if candidate.dim() == target
            && check_polarization(space, &candidate).expect("ambient dims agree")
        {
            return Some(candidate);
        }
    }
    let mut rng = seeded(seed);
    for attempt in 0..POLARIZATION_ATTEMPTS {
        let w = grow_lagrangian(space, attempt > 0, &mut rng);
        if w.dim() == target {
            return Some(w);
        }
    }
    None
}

/// `Σ_{r=1..k} ⋂_{s≠r} ker ω_s`: the span of the directions annihilated by
/// every form except possibly the r-th, summed over r.
fn residual_kernel_sum(space: &KSymplecticSpace) -> Subspace {
    let mut sum = Subspace::zero(space.dim());
    for r in 1..=space.k() {
        let mut meet = Subspace::full(space.dim());
        for s in 1..=space.k() {
            if s == r {
                continue;
            }
            let ker = space.form(s).expect("index in range").kernel();
            meet = meet.intersection(&ker).expect("ambient dims agree");
        }
        sum = sum.sum(&meet).expect("ambient dims agree");
    }
    sum
}

/// One maximal chain of k-isotropic extensions starting from zero. When
/// `shuffle` is false the first usable candidate is taken (deterministic);
/// otherwise the pick among usable candidates is randomized.
fn grow_lagrangian(
    space: &KSymplecticSpace,
    shuffle: bool,
    rng: &mut rand_chacha::ChaCha8Rng,
) -> Subspace {
    let k = space.k();
    let mut w = Subspace::zero(space.dim());
    loop {
        let orth = l_orthogonal(space, &w, k).expect("level and ambient are valid");
        if orth == w {
            return w;
        }
        let candidates: Vec<Vec<Rational>> = orth
            .basis_rows()
            .filter(|row| !w.contains_vector(row).expect("ambient dims agree"))
            .map(<[_]>::to_vec)
            .collect();
        if candidates.is_empty() {
            // w ⊊ orth would always leave a fresh basis vector; reaching
            // this would mean the isotropy invariant broke
            return w;
        }
        let pick = if shuffle {
            rng.gen_range(0..candidates.len())
        } else {
            0
        };
        w = w
            .sum(&Subspace::line(&candidates[pick]))
            .expect("ambient dims agree");
    }
}

/// Compute a Darboux frame for the polarized space `(space, w)`.
///
/// `v0`, when supplied, must be a k-lagrangian complement of `w`; otherwise
/// one is constructed with [`isotropic_complement`]. The returned matrix `P`
/// is verified against the canonical forms entry by entry before returning.
pub fn darboux_map(
    space: &KSymplecticSpace,
    w: &Subspace,
    v0: Option<&Subspace>,
) -> Result<DarbouxFrame, Error> {
    let (n, k) = (space.n(), space.k());
    if !check_polarization(space, w)? {
        return Err(Error::NotPolarized);
    }
    let complement = match v0 {
        Some(c) => {
            space.check_ambient(c)?;
            let direct = w.sum(c)?.is_full() && w.intersection(c)?.is_zero();
            if !direct || !is_l_isotropic(space, c, k)? {
                return Err(Error::ComplementFailed {
                    detail: "supplied complement is not a transversal k-isotropic subspace"
                        .to_string(),
                });
            }
            c.clone()
        }
        None => isotropic_complement(space, w, k).map_err(|e| Error::ComplementFailed {
            detail: format!("{e}"),
        })?,
    };

    let e_basis: Vec<Vec<Rational>> = complement.basis_rows().map(<[_]>::to_vec).collect();
    let w_basis: Vec<Vec<Rational>> = w.basis_rows().map(<[_]>::to_vec).collect();
    debug_assert_eq!(e_basis.len(), n);
    debug_assert_eq!(w_basis.len(), n * k);

    // pairing[(s-1)n + j][m] = -ω_s(b_m, e_j)
    let pairing = Matrix::from_fn(n * k, n * k, |row, m| {
        let (s, j) = (row / n + 1, row % n);
        -space
            .eval_form(s, &w_basis[m], &e_basis[j])
            .expect("indices are in range")
    });
    let inverse = pairing.inverse().ok_or(Error::SingularPhi)?;

    // f^r_i = Σ_m inverse[m][(r-1)n + i] · b_m
    let f: Vec<Vec<Vec<Rational>>> = (1..=k)
        .map(|r| {
            (0..n)
                .map(|i| {
                    let col = (r - 1) * n + i;
                    let mut v = alloc::vec![Rational::zero(); space.dim()];
                    for (m, b) in w_basis.iter().enumerate() {
                        let c = inverse.at(m, col);
                        for (slot, entry) in v.iter_mut().zip(b) {
                            *slot += c * entry;
                        }
                    }
                    v
                })
                .collect()
        })
        .collect();

    let change_of_basis = Matrix::from_fn(space.dim(), space.dim(), |row, col| {
        if col < n {
            e_basis[col][row].clone()
        } else {
            let (r, i) = ((col - n) / n, (col - n) % n);
            f[r][i][row].clone()
        }
    });

    let pt = change_of_basis.transpose();
    for r in 1..=k {
        let transported = &(&pt * space.form(r)?) * &change_of_basis;
        assert_eq!(
            transported,
            canonical_form(n, k, r),
            "frame verification failed for form {r}; the preconditions guarantee this"
        );
    }

    Ok(DarbouxFrame {
        e: e_basis,
        f,
        change_of_basis,
    })
}

/// Does the matrix `p`, read as a linear map from `s1` to `s2`, pull every
/// form of `s2` back to the matching form of `s1`? True iff `p` is
/// invertible and `p^T A^2_r p = A^1_r` for all `r`.
pub fn is_ksymplectomorphism(
    s1: &KSymplecticSpace,
    s2: &KSymplecticSpace,
    p: &Matrix,
) -> Result<bool, Error> {
    if s1.k() != s2.k() {
        return Err(Error::MismatchedK {
            k1: s1.k(),
            k2: s2.k(),
        });
    }
    if s1.dim() != s2.dim() || p.rows() != s2.dim() || p.cols() != s1.dim() {
        return Err(Error::ShapeMismatch {
            expected_rows: s2.dim(),
            expected_cols: s1.dim(),
            rows: p.rows(),
            cols: p.cols(),
        });
    }
    if !p.is_invertible() {
        return Ok(false);
    }
    let pt = p.transpose();
    for r in 1..=s1.k() {
        if &(&pt * s2.form(r)?) * p != *s1.form(r)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The graph `{(v, p v)}` as a subspace of the product of the two ambient
/// spaces. `p` may be any linear map here; only the criterion requires an
/// isomorphism.
pub fn graph_subspace(
    s1: &KSymplecticSpace,
    s2: &KSymplecticSpace,
    p: &Matrix,
) -> Result<Subspace, Error> {
    if p.rows() != s2.dim() || p.cols() != s1.dim() {
        return Err(Error::ShapeMismatch {
            expected_rows: s2.dim(),
            expected_cols: s1.dim(),
            rows: p.rows(),
            cols: p.cols(),
        });
    }
    let graph_rows = Matrix::identity(s1.dim()).augment(&p.transpose());
    Ok(Subspace::from_matrix(&graph_rows))
}

/// Both sides of the graph criterion, evaluated independently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphCriterion {
    /// Direct check `p^T A^2_r p = A^1_r`.
    pub symplectomorphism: bool,
    /// Classification of the graph inside the ⊖-product at level k.
    pub graph_lagrangian: Lagrangian,
}

impl GraphCriterion {
    /// The criterion asserts these two agree for isomorphisms.
    pub fn sides_agree(&self) -> bool {
        self.symplectomorphism == self.graph_lagrangian.is_yes()
    }
}

/// Evaluate the graph criterion for an isomorphism `p: s1 → s2`. A singular
/// or nonsquare `p` is rejected with [`Error::NotIsomorphism`].
pub fn graph_criterion(
    s1: &KSymplecticSpace,
    s2: &KSymplecticSpace,
    p: &Matrix,
) -> Result<GraphCriterion, Error> {
    if s1.k() != s2.k() {
        return Err(Error::MismatchedK {
            k1: s1.k(),
            k2: s2.k(),
        });
    }
    if !p.is_square() || p.rows() != s2.dim() || p.cols() != s1.dim() || !p.is_invertible() {
        return Err(Error::NotIsomorphism);
    }
    let product = s1.product_ominus(s2)?;
    let graph = graph_subspace(s1, s2, p)?;
    Ok(GraphCriterion {
        symplectomorphism: is_ksymplectomorphism(s1, s2, p)?,
        graph_lagrangian: is_l_lagrangian(&product, &graph, product.k())?,
    })
}
