//! Domain errors shared by every module.

use core::fmt;

use alloc::string::String;

use crate::subspace::Subspace;

/// Everything that can go wrong when constructing or querying k-symplectic
/// structures. Each variant carries enough data to reconstruct the failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A form matrix is not skew-symmetric; `form` is the 1-based index.
    NotSkew { form: usize },
    /// The common kernel of the forms is nontrivial; carries a basis of it.
    DegenerateCommonKernel { kernel: Subspace },
    /// The space dimension is not of the shape n(k+1) with n >= 1.
    BadDimension { dim: usize, k: usize },
    /// Two spaces with different numbers of forms were combined.
    MismatchedK { k1: usize, k2: usize },
    /// A subspace or vector does not live in the expected ambient space.
    AmbientMismatch { expected: usize, got: usize },
    /// A matrix has the wrong shape for the requested operation.
    ShapeMismatch {
        expected_rows: usize,
        expected_cols: usize,
        rows: usize,
        cols: usize,
    },
    /// A form index or orthogonality level lies outside 1..=k.
    LevelOutOfRange { level: usize, k: usize },
    /// The input subspace is not l-isotropic although the operation requires it.
    NotIsotropic { level: usize },
    /// A loop invariant that the underlying theory guarantees was observed
    /// to fail; this indicates an implementation defect, never bad input.
    InvariantBroken { detail: &'static str },
    /// An explicit precondition was violated by the caller.
    PreconditionFailed { detail: String },
    /// The chain construction terminated without producing a direct-sum
    /// complement; carries the partial subspace it built.
    ConstructionIncomplete { built: Subspace },
    /// The given subspace is not a polarization of the space.
    NotPolarized,
    /// Building or validating an isotropic complement failed.
    ComplementFailed { detail: String },
    /// The dual-pairing matrix of the Darboux construction is singular,
    /// which contradicts its preconditions.
    SingularPhi,
    /// The graph criterion requires a linear isomorphism but the map is
    /// not invertible.
    NotIsomorphism,
    /// Polynomials over different variable lists were combined.
    VariableMismatch { detail: String },
    /// A section expected to be closed is not.
    NotClosed,
}

impl Error {
    /// Stable machine-readable identifier for the variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotSkew { .. } => "not_skew",
            Error::DegenerateCommonKernel { .. } => "degenerate_common_kernel",
            Error::BadDimension { .. } => "bad_dimension",
            Error::MismatchedK { .. } => "mismatched_k",
            Error::AmbientMismatch { .. } => "ambient_mismatch",
            Error::ShapeMismatch { .. } => "shape_mismatch",
            Error::LevelOutOfRange { .. } => "level_out_of_range",
            Error::NotIsotropic { .. } => "not_isotropic",
            Error::InvariantBroken { .. } => "invariant_broken",
            Error::PreconditionFailed { .. } => "precondition_failed",
            Error::ConstructionIncomplete { .. } => "construction_incomplete",
            Error::NotPolarized => "not_polarized",
            Error::ComplementFailed { .. } => "complement_failed",
            Error::SingularPhi => "singular_phi",
            Error::NotIsomorphism => "not_isomorphism",
            Error::VariableMismatch { .. } => "variable_mismatch",
            Error::NotClosed => "not_closed",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotSkew { form } => {
                write!(f, "form {form} is not skew-symmetric")
            }
            Error::DegenerateCommonKernel { kernel } => {
                write!(
                    f,
                    "common kernel of the forms is nontrivial (dimension {})",
                    kernel.dim()
                )
            }
            Error::BadDimension { dim, k } => {
                write!(f, "dimension {dim} is not n(k+1) with n >= 1 for k = {k}")
            }
            Error::MismatchedK { k1, k2 } => {
                write!(f, "spaces carry different numbers of forms: {k1} vs {k2}")
            }
            Error::AmbientMismatch { expected, got } => {
                write!(
                    f,
                    "ambient dimension {got} does not match space dimension {expected}"
                )
            }
            Error::ShapeMismatch {
                expected_rows,
                expected_cols,
                rows,
                cols,
            } => {
                write!(
                    f,
                    "matrix is {rows}x{cols}, expected {expected_rows}x{expected_cols}"
                )
            }
            Error::LevelOutOfRange { level, k } => {
                write!(f, "level {level} outside 1..={k}")
            }
            Error::NotIsotropic { level } => {
                write!(f, "subspace is not {level}-isotropic")
            }
            Error::InvariantBroken { detail } => {
                write!(f, "internal invariant broken: {detail}")
            }
            Error::PreconditionFailed { detail } => {
                write!(f, "precondition failed: {detail}")
            }
            Error::ConstructionIncomplete { built } => {
                write!(
                    f,
                    "chain construction stopped at dimension {} without a direct-sum complement",
                    built.dim()
                )
            }
            Error::NotPolarized => write!(f, "subspace is not a polarization"),
            Error::ComplementFailed { detail } => {
                write!(f, "complement construction failed: {detail}")
            }
            Error::SingularPhi => {
                write!(f, "dual pairing of the Darboux construction is singular")
            }
            Error::NotIsomorphism => write!(f, "map is not a linear isomorphism"),
            Error::VariableMismatch { detail } => {
                write!(f, "variable mismatch: {detail}")
            }
            Error::NotClosed => write!(f, "section is not closed"),
        }
    }
}

impl core::error::Error for Error {}
