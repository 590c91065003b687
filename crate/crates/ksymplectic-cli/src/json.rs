//! JSON documents for spaces, subspaces, matrices, frames, polynomials, and
//! sections. Rationals travel as strings `p/q` (or `p` when the denominator
//! is 1). Skew form matrices are given sparsely by their strict upper
//! triangle; the lower triangle is implied.

use serde::{Deserialize, Serialize};

use ksymplectic::darboux::DarbouxFrame;
use ksymplectic::forms::{OneForm, Section};
use ksymplectic::poly::{Exponents, Poly};
use ksymplectic::rational::{self, Rational, Zero};
use ksymplectic::{KSymplecticSpace, Matrix, Subspace};

use crate::CliError;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpaceDoc {
    pub dim: usize,
    pub k: usize,
    /// One form per entry: strict-upper-triangle triplets `[i, j, "p/q"]`
    /// with `i < j`, 0-based.
    pub forms: Vec<Vec<(usize, usize, String)>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SubspaceDoc {
    pub ambient: usize,
    /// Generator rows; canonicalized on load.
    pub basis: Vec<Vec<String>>,
}

pub type MatrixDoc = Vec<Vec<String>>;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FrameDoc {
    pub e: Vec<Vec<String>>,
    pub f: Vec<Vec<Vec<String>>>,
    #[serde(rename = "P")]
    pub p: MatrixDoc,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermDoc {
    pub exp: Vec<u32>,
    pub coef: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolyDoc {
    pub vars: Vec<String>,
    pub terms: Vec<TermDoc>,
}

/// `section[r-1][i]` is the coefficient polynomial of `dq^{i+1}` in `γ_r`.
pub type SectionDoc = Vec<Vec<PolyDoc>>;

fn parse_rational(s: &str, context: &str) -> Result<Rational, CliError> {
    rational::parse(s)
        .ok_or_else(|| CliError::Schema(format!("{context}: malformed rational {s:?}")))
}

pub fn space_from_doc(doc: &SpaceDoc) -> Result<KSymplecticSpace, CliError> {
    if doc.k != doc.forms.len() {
        return Err(CliError::Schema(format!(
            "space declares k = {} but carries {} forms",
            doc.k,
            doc.forms.len()
        )));
    }
    let mut forms = Vec::with_capacity(doc.forms.len());
    for (idx, triplets) in doc.forms.iter().enumerate() {
        let mut m = Matrix::zero(doc.dim, doc.dim);
        for (i, j, value) in triplets {
            if i >= j {
                return Err(CliError::Schema(format!(
                    "form {}: triplet ({i}, {j}) is not strictly upper-triangular",
                    idx + 1
                )));
            }
            if *j >= doc.dim {
                return Err(CliError::Schema(format!(
                    "form {}: index {j} outside dimension {}",
                    idx + 1,
                    doc.dim
                )));
            }
            if !m.at(*i, *j).is_zero() {
                return Err(CliError::Schema(format!(
                    "form {}: duplicate triplet ({i}, {j})",
                    idx + 1
                )));
            }
            let v = parse_rational(value, &format!("form {}", idx + 1))?;
            m.set(*j, *i, -v.clone());
            m.set(*i, *j, v);
        }
        forms.push(m);
    }
    Ok(KSymplecticSpace::new(doc.dim, forms)?)
}

pub fn space_to_doc(space: &KSymplecticSpace) -> SpaceDoc {
    let forms = space
        .forms()
        .iter()
        .map(|m| {
            let mut triplets = Vec::new();
            for i in 0..m.rows() {
                for j in i + 1..m.cols() {
                    if !m.at(i, j).is_zero() {
                        triplets.push((i, j, m.at(i, j).to_string()));
                    }
                }
            }
            triplets
        })
        .collect();
    SpaceDoc {
        dim: space.dim(),
        k: space.k(),
        forms,
    }
}

pub fn subspace_from_doc(doc: &SubspaceDoc) -> Result<Subspace, CliError> {
    let mut rows = Vec::with_capacity(doc.basis.len());
    for (idx, row) in doc.basis.iter().enumerate() {
        if row.len() != doc.ambient {
            return Err(CliError::Schema(format!(
                "basis row {idx} has length {} but ambient is {}",
                row.len(),
                doc.ambient
            )));
        }
        let parsed: Result<Vec<Rational>, CliError> = row
            .iter()
            .map(|s| parse_rational(s, &format!("basis row {idx}")))
            .collect();
        rows.push(parsed?);
    }
    Ok(Subspace::from_generators(doc.ambient, &rows))
}

pub fn subspace_to_doc(s: &Subspace) -> SubspaceDoc {
    SubspaceDoc {
        ambient: s.ambient_dim(),
        basis: s
            .basis_rows()
            .map(|row| row.iter().map(|r| r.to_string()).collect())
            .collect(),
    }
}

pub fn matrix_from_doc(doc: &MatrixDoc) -> Result<Matrix, CliError> {
    let rows = doc.len();
    let cols = doc.first().map_or(0, Vec::len);
    let mut entries = Vec::with_capacity(rows * cols);
    for (idx, row) in doc.iter().enumerate() {
        if row.len() != cols {
            return Err(CliError::Schema(format!(
                "matrix row {idx} has length {}, expected {cols}",
                row.len()
            )));
        }
        for s in row {
            entries.push(parse_rational(s, &format!("matrix row {idx}"))?);
        }
    }
    Ok(Matrix::new(rows, cols, entries))
}

pub fn matrix_to_doc(m: &Matrix) -> MatrixDoc {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|r| r.to_string()).collect())
        .collect()
}

pub fn frame_to_doc(frame: &DarbouxFrame) -> FrameDoc {
    let row_doc = |v: &Vec<Rational>| v.iter().map(|r| r.to_string()).collect::<Vec<_>>();
    FrameDoc {
        e: frame.e.iter().map(row_doc).collect(),
        f: frame
            .f
            .iter()
            .map(|block| block.iter().map(row_doc).collect())
            .collect(),
        p: matrix_to_doc(&frame.change_of_basis),
    }
}

pub fn poly_from_doc(doc: &PolyDoc) -> Result<Poly, CliError> {
    let mut p = Poly::zero(doc.vars.clone());
    for term in &doc.terms {
        if term.exp.len() != doc.vars.len() {
            return Err(CliError::Schema(format!(
                "term exponent length {} does not match {} variables",
                term.exp.len(),
                doc.vars.len()
            )));
        }
        let coef = parse_rational(&term.coef, "polynomial term")?;
        p = &p + &Poly::monomial(doc.vars.clone(), term.exp.clone(), coef);
    }
    Ok(p)
}

pub fn poly_to_doc(p: &Poly) -> PolyDoc {
    PolyDoc {
        vars: p.vars().to_vec(),
        terms: p
            .terms()
            .map(|(Exponents(exp), coef)| TermDoc {
                exp: exp.clone(),
                coef: coef.to_string(),
            })
            .collect(),
    }
}

pub fn section_from_doc(doc: &SectionDoc) -> Result<Section, CliError> {
    let mut forms = Vec::with_capacity(doc.len());
    for row in doc {
        let coeffs: Result<Vec<Poly>, CliError> = row.iter().map(poly_from_doc).collect();
        let coeffs = coeffs?;
        let Some(first) = coeffs.first() else {
            return Err(CliError::Schema("empty one-form in section".into()));
        };
        if coeffs.len() != first.vars().len() {
            return Err(CliError::Schema(format!(
                "one-form has {} coefficients for {} variables",
                coeffs.len(),
                first.vars().len()
            )));
        }
        if coeffs.iter().any(|c| c.vars() != first.vars()) {
            return Err(CliError::Schema(
                "one-form coefficients disagree on variables".into(),
            ));
        }
        forms.push(OneForm::new(first.vars().to_vec(), coeffs));
    }
    // chart validation happens in the library; report it as a schema problem
    Section::new(forms).map_err(|e| CliError::Schema(e.to_string()))
}

pub fn potentials_from_doc(doc: &[PolyDoc]) -> Result<Vec<Poly>, CliError> {
    doc.iter().map(poly_from_doc).collect()
}
