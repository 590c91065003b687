//! Level-l orthogonal complements and special subspaces.
//!
//! For a subspace `W` of a k-symplectic space, the l-th orthogonal
//! complement is
//!
//! ```text
//! W^{⊥,l} = { v | ω_1(v,w) = … = ω_l(v,w) = 0 for all w in W }
//! ```
//!
//! `W` is l-isotropic when `W ⊆ W^{⊥,l}`, l-coisotropic when
//! `W^{⊥,l} ⊆ W`, and l-lagrangian when it is l-isotropic and admits an
//! l-isotropic direct-sum complement. At level k the lagrangian property
//! reduces to the fixed-point equation `W = W^{⊥,k}`; below level k the
//! complement question is settled by an exact linear solve (see
//! [`isotropic_complement`]): complements of `W` are graphs of linear maps
//! into `W`, and isotropy of a graph is a linear condition once `W` itself
//! is isotropic.
//!
//! [`lagrangian_completion`] grows a subspace one vector at a time, always
//! adjoining the first usable row of the canonical basis of the current
//! complement; this makes its output deterministic.

use alloc::format;
use alloc::vec::Vec;

use crate::error::Error;
use crate::kspace::KSymplecticSpace;
use crate::matrix::Matrix;
use crate::rational::{Rational, Zero};
use crate::subspace::Subspace;

/// Tri-state answer for "is `W` l-lagrangian?".
///
/// `Yes` carries an l-isotropic complement witnessing the definition. `No`
/// covers both failure of isotropy and a proof that no l-isotropic
/// complement exists (the correction system of [`is_l_lagrangian`] is
/// inconsistent). `Unknown` is reserved for inconclusive searches; the
/// current solver decides every instance, so it is never produced here,
/// but consumers must still handle it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lagrangian {
    Yes { complement: Subspace },
    No,
    Unknown,
}

impl Lagrangian {
    pub fn is_yes(&self) -> bool {
        matches!(self, Lagrangian::Yes { .. })
    }
}

/// Classification of a subspace at one level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub level: usize,
    pub isotropic: bool,
    pub coisotropic: bool,
    pub lagrangian: Lagrangian,
}

/// The l-th orthogonal complement `W^{⊥,l}`, computed as the kernel of the
/// stacked system whose rows are `(A_r b)^T` for every basis vector `b` of
/// `W` and every `r <= l`.
pub fn l_orthogonal(
    space: &KSymplecticSpace,
    w: &Subspace,
    level: usize,
) -> Result<Subspace, Error> {
    space.check_level(level)?;
    space.check_ambient(w)?;
    let dim = space.dim();
    let mut rows: Vec<Vec<_>> = Vec::with_capacity(level * w.dim());
    for r in 1..=level {
        let form = space.form(r)?;
        for b in w.basis_rows() {
            rows.push(form.mul_vec(b));
        }
    }
    let stacked = Matrix::from_rows(dim, &rows);
    Ok(stacked.kernel())
}

/// `W ⊆ W^{⊥,l}`, tested directly as the vanishing of every `ω_r(b_i, b_j)`
/// over basis pairs and `r <= l`.
pub fn is_l_isotropic(space: &KSymplecticSpace, w: &Subspace, level: usize) -> Result<bool, Error> {
    space.check_level(level)?;
    space.check_ambient(w)?;
    let basis: Vec<_> = w.basis_rows().collect();
    for r in 1..=level {
        let form = space.form(r)?;
        for (i, u) in basis.iter().enumerate() {
            let image = form.mul_vec(u);
            // ω_r(b_j, b_i) for j > i; skewness covers the rest
            for v in basis.iter().skip(i + 1) {
                let value = v
                    .iter()
                    .zip(&image)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b);
                if !value.is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `W^{⊥,l} ⊆ W`.
pub fn is_l_coisotropic(
    space: &KSymplecticSpace,
    w: &Subspace,
    level: usize,
) -> Result<bool, Error> {
    let orth = l_orthogonal(space, w, level)?;
    w.contains(&orth)
}

/// Decide the l-lagrangian property. See [`Lagrangian`].
///
/// At level k the answer follows the fixed-point characterization: `Yes`
/// iff `W = W^{⊥,k}`, with the witness complement constructed. Below k,
/// `W = W^{⊥,l}` remains sufficient; otherwise the graph-correction solver
/// of [`isotropic_complement`] settles whether any l-isotropic complement
/// exists, so the answer stays exact.
pub fn is_l_lagrangian(
    space: &KSymplecticSpace,
    w: &Subspace,
    level: usize,
) -> Result<Lagrangian, Error> {
    space.check_level(level)?;
    space.check_ambient(w)?;
    if !is_l_isotropic(space, w, level)? {
        return Ok(Lagrangian::No);
    }
    let orth = l_orthogonal(space, w, level)?;
    if orth == *w {
        let complement = isotropic_complement(space, w, level)?;
        return Ok(Lagrangian::Yes { complement });
    }
    if level == space.k() {
        // a k-lagrangian subspace necessarily equals its own complement
        return Ok(Lagrangian::No);
    }
    match graph_complement(space, w, level)? {
        Some(complement) => Ok(Lagrangian::Yes { complement }),
        None => Ok(Lagrangian::No),
    }
}

/// Classify at one level: isotropy, coisotropy, and the lagrangian tri-state.
pub fn classify(
    space: &KSymplecticSpace,
    w: &Subspace,
    level: usize,
) -> Result<Classification, Error> {
    Ok(Classification {
        level,
        isotropic: is_l_isotropic(space, w, level)?,
        coisotropic: is_l_coisotropic(space, w, level)?,
        lagrangian: is_l_lagrangian(space, w, level)?,
    })
}

/// Grow an l-isotropic subspace to one equal to its own l-th complement
/// (hence l-lagrangian). One vector is adjoined per step: the first
/// canonical-basis row of the current complement not already contained,
/// which keeps the result deterministic. Isotropy is re-verified after
/// every extension.
pub fn lagrangian_completion(
    space: &KSymplecticSpace,
    seed: &Subspace,
    level: usize,
) -> Result<Subspace, Error> {
    space.check_level(level)?;
    space.check_ambient(seed)?;
    if !is_l_isotropic(space, seed, level)? {
        return Err(Error::NotIsotropic { level });
    }
    let mut w = seed.clone();
    loop {
        let orth = l_orthogonal(space, &w, level)?;
        if orth == w {
            return Ok(w);
        }
        if !orth.contains(&w)? {
            return Err(Error::InvariantBroken {
                detail: "isotropic chain left its own complement",
            });
        }
        let next = orth
            .basis_rows()
            .find(|row| !w.contains_vector(row).expect("ambient dims agree"))
            .ok_or(Error::InvariantBroken {
                detail: "strictly larger complement has no new basis vector",
            })?
            .to_vec();
        w = w.sum(&Subspace::line(&next))?;
        if !is_l_isotropic(space, &w, level)? {
            return Err(Error::InvariantBroken {
                detail: "adjoined vector destroyed isotropy",
            });
        }
    }
}

/// Given `W = W^{⊥,l}`, construct an l-isotropic `U` with `V = W ⊕ U`.
/// Delegates to the graph-correction solver below; the direct-sum and
/// isotropy postconditions are re-verified exactly before returning. A
/// provably unsolvable correction system is reported as
/// [`Error::ConstructionIncomplete`], never accepted silently.
pub fn isotropic_complement(
    space: &KSymplecticSpace,
    w: &Subspace,
    level: usize,
) -> Result<Subspace, Error> {
    space.check_level(level)?;
    space.check_ambient(w)?;
    let orth = l_orthogonal(space, w, level)?;
    if orth != *w {
        return Err(Error::PreconditionFailed {
            detail: format!(
                "subspace of dimension {} does not equal its level-{} complement (dimension {})",
                w.dim(),
                level,
                orth.dim()
            ),
        });
    }
    match graph_complement(space, w, level)? {
        Some(u) => Ok(u),
        None => Err(Error::ConstructionIncomplete {
            built: Subspace::zero(space.dim()),
        }),
    }
}

/// Decide whether an l-isotropic `w` admits an l-isotropic direct-sum
/// complement, and construct one if so.
///
/// Fix the coordinate complement `S` spanned by the standard vectors at the
/// non-pivot columns of `w`'s basis, so `V = w ⊕ S`. Every complement of
/// `w` is then the graph `{s + φ(s)}` of a unique linear `φ: S → w`, and —
/// because `w` is l-isotropic — the graph is l-isotropic exactly when the
/// entries of `φ` satisfy the linear system
///
/// ```text
/// ω_r(s_a, φ(s_b)) - ω_r(s_b, φ(s_a)) = -ω_r(s_a, s_b)   (r ≤ l, a < b)
/// ```
///
/// Consistency is decided by exact elimination; the particular solution
/// with vanishing free variables keeps the output deterministic (and
/// reduces to `φ = 0`, i.e. `U = S`, whenever `S` itself works). `None`
/// means no l-isotropic complement exists at all.
fn graph_complement(
    space: &KSymplecticSpace,
    w: &Subspace,
    level: usize,
) -> Result<Option<Subspace>, Error> {
    let dim = space.dim();
    let w_basis: Vec<Vec<_>> = w.basis_rows().map(<[_]>::to_vec).collect();
    let dw = w_basis.len();

    // standard vectors completing the RREF basis of w
    let mut is_pivot = alloc::vec![false; dim];
    for row in &w_basis {
        let pivot = row
            .iter()
            .position(|e| !e.is_zero())
            .expect("basis rows are nonzero");
        is_pivot[pivot] = true;
    }
    let s_idx: Vec<usize> = (0..dim).filter(|&j| !is_pivot[j]).collect();
    let ds = s_idx.len();

    // pairing[r-1][m][i] = (A_r w_m)_i, so ω_r(e_i, w_m) = pairing[r-1][m][i]
    let mut pairing = Vec::with_capacity(level);
    for r in 1..=level {
        let form = space.form(r)?;
        pairing.push(
            w_basis
                .iter()
                .map(|wm| form.mul_vec(wm))
                .collect::<Vec<_>>(),
        );
    }

    let unknowns = ds * dw;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for r in 1..=level {
        let form = space.form(r)?;
        for a in 0..ds {
            for b in a + 1..ds {
                let mut row = alloc::vec![Rational::zero(); unknowns + 1];
                for m in 0..dw {
                    row[b * dw + m] += &pairing[r - 1][m][s_idx[a]];
                    row[a * dw + m] -= &pairing[r - 1][m][s_idx[b]];
                }
                row[unknowns] = -form.at(s_idx[a], s_idx[b]).clone();
                rows.push(row);
            }
        }
    }
    let system = Matrix::from_rows(unknowns + 1, &rows);
    let echelon = system.rref();
    if echelon.pivots.contains(&unknowns) {
        return Ok(None);
    }
    // particular solution with free variables set to zero
    let mut x = alloc::vec![Rational::zero(); unknowns];
    for (row, &col) in echelon.pivots.iter().enumerate() {
        x[col] = echelon.matrix.at(row, unknowns).clone();
    }

    let u_rows: Vec<Vec<Rational>> = (0..ds)
        .map(|b| {
            let mut v = alloc::vec![Rational::zero(); dim];
            v[s_idx[b]] = crate::rational::int(1);
            for (m, wm) in w_basis.iter().enumerate() {
                let c = &x[b * dw + m];
                if !c.is_zero() {
                    for (slot, entry) in v.iter_mut().zip(wm) {
                        *slot += c * entry;
                    }
                }
            }
            v
        })
        .collect();
    let u = Subspace::from_generators(dim, &u_rows);

    let direct = w.sum(&u)?.is_full() && w.intersection(&u)?.is_zero();
    if !direct || !is_l_isotropic(space, &u, level)? {
        return Err(Error::InvariantBroken {
            detail: "graph correction produced an invalid complement",
        });
    }
    Ok(Some(u))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kspace::fixtures::r3_2symp;
    use crate::kspace::{canonical_y_index, KSymplecticSpace};

    fn span(indices: &[usize]) -> Subspace {
        Subspace::coordinate_span(3, indices)
    }

    #[test]
    fn printed_orthogonals_on_r3() {
        let s = r3_2symp();
        let e2 = span(&[1]);
        assert_eq!(l_orthogonal(&s, &e2, 1).unwrap(), Subspace::full(3));
        assert_eq!(l_orthogonal(&s, &e2, 2).unwrap(), span(&[0, 1]));
        assert_eq!(
            l_orthogonal(&s, &span(&[0, 2]), 2).unwrap(),
            Subspace::zero(3)
        );
        assert_eq!(
            l_orthogonal(&s, &Subspace::zero(3), 1).unwrap(),
            Subspace::full(3)
        );
        assert_eq!(
            l_orthogonal(&s, &Subspace::zero(3), 2).unwrap(),
            Subspace::full(3)
        );
    }

    #[test]
    fn level_out_of_range_and_ambient_mismatch() {
        let s = r3_2symp();
        assert!(matches!(
            l_orthogonal(&s, &span(&[0]), 0),
            Err(Error::LevelOutOfRange { level: 0, k: 2 })
        ));
        assert!(matches!(
            l_orthogonal(&s, &span(&[0]), 3),
            Err(Error::LevelOutOfRange { level: 3, k: 2 })
        ));
        let wrong = Subspace::coordinate_span(4, &[0]);
        assert!(matches!(
            l_orthogonal(&s, &wrong, 1),
            Err(Error::AmbientMismatch {
                expected: 3,
                got: 4
            })
        ));
    }

    #[test]
    fn isotropy_on_r3() {
        let s = r3_2symp();
        assert!(is_l_isotropic(&s, &span(&[1]), 1).unwrap());
        assert!(is_l_isotropic(&s, &span(&[1]), 2).unwrap());
        assert!(!is_l_isotropic(&s, &span(&[0, 2]), 1).unwrap());
        // every line is isotropic at every level
        for l in 1..=2 {
            for i in 0..3 {
                assert!(is_l_isotropic(&s, &span(&[i]), l).unwrap());
            }
        }
    }

    #[test]
    fn coisotropy_on_r3() {
        let s = r3_2symp();
        assert!(is_l_coisotropic(&s, &span(&[0, 2]), 2).unwrap());
        assert!(!is_l_coisotropic(&s, &span(&[1]), 1).unwrap());
        // codimension-1 subspaces are k-coisotropic
        for planes in [[0, 1], [0, 2], [1, 2]] {
            assert!(is_l_coisotropic(&s, &span(&planes), 2).unwrap());
        }
    }

    #[test]
    fn lagrangian_decisions_on_r3() {
        let s = r3_2symp();
        // span{e3} = span{e3}^{⊥,2}: 2-lagrangian
        assert!(is_l_lagrangian(&s, &span(&[2]), 2).unwrap().is_yes());
        // span{e1}: 1-lagrangian with witness span{e2,e3}
        match is_l_lagrangian(&s, &span(&[0]), 1).unwrap() {
            Lagrangian::Yes { complement } => assert_eq!(complement, span(&[1, 2])),
            other => panic!("expected yes, got {other:?}"),
        }
        // span{e1,e3}: not isotropic, hence not lagrangian
        assert_eq!(
            is_l_lagrangian(&s, &span(&[0, 2]), 2).unwrap(),
            Lagrangian::No
        );
    }

    #[test]
    fn proven_absence_of_an_isotropic_complement() {
        // span{e2} is 1-isotropic but has no 1-isotropic complement: any
        // complement is spanned by e1 + a e2 and e3 + b e2, and
        // ω_1(e1 + a e2, e3 + b e2) = ω_1(e1, e3) = 1 for every a, b.
        // The correction system is inconsistent, so the answer is a
        // definite no, not an inconclusive search.
        let s = r3_2symp();
        assert!(is_l_isotropic(&s, &span(&[1]), 1).unwrap());
        assert_eq!(
            is_l_lagrangian(&s, &span(&[1]), 1).unwrap(),
            Lagrangian::No
        );
    }

    #[test]
    fn y_subspace_of_canonical_model_is_k_lagrangian() {
        for (n, k) in [(1, 2), (2, 2), (1, 3), (2, 3)] {
            let s = KSymplecticSpace::canonical(n, k);
            let y_axes: Vec<usize> = (1..=k)
                .flat_map(|r| (0..n).map(move |i| canonical_y_index(n, r, i)))
                .collect();
            let y = Subspace::coordinate_span(s.dim(), &y_axes);
            assert!(is_l_lagrangian(&s, &y, k).unwrap().is_yes());
        }
    }

    #[test]
    fn canonical_model_special_subspaces_at_every_level() {
        for (n, k) in [(1, 2), (2, 2), (1, 3)] {
            let s = KSymplecticSpace::canonical(n, k);
            let y_axes: Vec<usize> = (1..=k)
                .flat_map(|r| (0..n).map(move |i| canonical_y_index(n, r, i)))
                .collect();
            let y = Subspace::coordinate_span(s.dim(), &y_axes);
            let x = Subspace::coordinate_span(s.dim(), &(0..n).collect::<Vec<_>>());

            // the dual factor is its own complement at every level, hence
            // simultaneously l-isotropic and l-coisotropic for all l
            for l in 1..=k {
                assert_eq!(l_orthogonal(&s, &y, l).unwrap(), y);
                assert!(is_l_isotropic(&s, &y, l).unwrap());
                assert!(is_l_coisotropic(&s, &y, l).unwrap());
            }

            // the base factor satisfies x = x^{⊥,k}; below k its complement
            // picks up the higher y-blocks, so it is isotropic but not
            // coisotropic there
            assert_eq!(l_orthogonal(&s, &x, k).unwrap(), x);
            for l in 1..k {
                let axes: Vec<usize> = (0..n)
                    .chain(
                        (l + 1..=k)
                            .flat_map(|r| (0..n).map(move |i| canonical_y_index(n, r, i))),
                    )
                    .collect();
                assert_eq!(
                    l_orthogonal(&s, &x, l).unwrap(),
                    Subspace::coordinate_span(s.dim(), &axes)
                );
                assert!(is_l_isotropic(&s, &x, l).unwrap());
                assert!(!is_l_coisotropic(&s, &x, l).unwrap());
            }

            // both factors are k-lagrangian
            assert!(is_l_lagrangian(&s, &x, k).unwrap().is_yes());
            assert!(is_l_lagrangian(&s, &y, k).unwrap().is_yes());
        }
    }

    #[test]
    fn completion_from_the_printed_seeds() {
        let s = r3_2symp();
        // already a fixed point
        assert_eq!(
            lagrangian_completion(&s, &span(&[2]), 2).unwrap(),
            span(&[2])
        );
        // from zero: first usable canonical vectors give span{e1,e2}
        assert_eq!(
            lagrangian_completion(&s, &Subspace::zero(3), 2).unwrap(),
            span(&[0, 1])
        );
        // one adjunction then the fixed-point check
        assert_eq!(
            lagrangian_completion(&s, &span(&[1]), 2).unwrap(),
            span(&[0, 1])
        );
        // non-isotropic seed is rejected
        assert!(matches!(
            lagrangian_completion(&s, &span(&[0, 2]), 1),
            Err(Error::NotIsotropic { level: 1 })
        ));
    }

    #[test]
    fn completion_output_is_its_own_complement() {
        let s = r3_2symp();
        let w = lagrangian_completion(&s, &Subspace::zero(3), 2).unwrap();
        assert_eq!(l_orthogonal(&s, &w, 2).unwrap(), w);
    }

    #[test]
    fn complement_on_r3() {
        let s = r3_2symp();
        let w = span(&[0, 1]);
        let u = isotropic_complement(&s, &w, 2).unwrap();
        assert_eq!(u, span(&[2]));
        assert!(w.sum(&u).unwrap().is_full());
        assert!(w.intersection(&u).unwrap().is_zero());
        assert!(is_l_isotropic(&s, &u, 2).unwrap());
    }

    #[test]
    fn complement_of_y_subspace_is_x_subspace() {
        let s = KSymplecticSpace::canonical(2, 2);
        let y = Subspace::coordinate_span(6, &[2, 3, 4, 5]);
        let x = Subspace::coordinate_span(6, &[0, 1]);
        assert_eq!(isotropic_complement(&s, &y, 2).unwrap(), x);
    }

    #[test]
    fn complement_precondition_is_verified() {
        let s = r3_2symp();
        // span{e2}^{⊥,2} = span{e1,e2} ≠ span{e2}
        assert!(matches!(
            isotropic_complement(&s, &span(&[1]), 2),
            Err(Error::PreconditionFailed { .. })
        ));
    }

    #[test]
    fn double_complement_counterexample() {
        // ({0}^{⊥,1})^{⊥,1} = span{e2} ≠ {0}
        let s = r3_2symp();
        let zero = Subspace::zero(3);
        let once = l_orthogonal(&s, &zero, 1).unwrap();
        let twice = l_orthogonal(&s, &once, 1).unwrap();
        assert_eq!(twice, span(&[1]));
        assert_ne!(twice, zero);
    }

    #[test]
    fn dimension_sum_can_fall_short() {
        // dim span{e3} + dim span{e3}^{⊥,2} = 2 ≠ 3
        let s = r3_2symp();
        let w = span(&[2]);
        let orth = l_orthogonal(&s, &w, 2).unwrap();
        assert_eq!(w.dim() + orth.dim(), 2);
        assert_ne!(w.dim() + orth.dim(), s.dim());
    }
}
