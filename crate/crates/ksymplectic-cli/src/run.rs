//! Command implementations. Each returns the JSON document to print; the
//! binary maps errors onto exit codes.

use std::path::Path;

use serde_json::{json, Value};

use ksymplectic::darboux::{
    darboux_map, find_polarization, graph_criterion, is_ksymplectomorphism,
};
use ksymplectic::forms::{hamilton_jacobi_check, hamilton_jacobi_check_section, is_closed_section};
use ksymplectic::gen::random_kspace;
use ksymplectic::orthogonal::{
    classify, isotropic_complement, l_orthogonal, lagrangian_completion, Lagrangian,
};
use ksymplectic::{KSymplecticSpace, Matrix, Subspace};

use crate::json::{
    frame_to_doc, matrix_from_doc, matrix_to_doc, potentials_from_doc, section_from_doc,
    space_from_doc, space_to_doc, subspace_from_doc, subspace_to_doc, MatrixDoc, PolyDoc,
    SectionDoc, SpaceDoc, SubspaceDoc,
};
use crate::suite::{run_suite, SuiteConfig};
use crate::{fixtures, CliError};

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Schema(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Schema(format!("{}: {e}", path.display())))
}

/// Resolve `--space FILE` / `--fixture NAME` into a validated space.
pub fn load_space(
    file: Option<&Path>,
    fixture: Option<&str>,
) -> Result<KSymplecticSpace, CliError> {
    match (file, fixture) {
        (Some(path), None) => {
            let doc: SpaceDoc = read_json(path)?;
            space_from_doc(&doc)
        }
        (None, Some(name)) => fixtures::resolve(name),
        _ => Err(CliError::Schema(
            "exactly one of --space FILE or --fixture NAME is required".into(),
        )),
    }
}

pub fn load_subspace(path: &Path, space: &KSymplecticSpace) -> Result<Subspace, CliError> {
    let doc: SubspaceDoc = read_json(path)?;
    let subspace = subspace_from_doc(&doc)?;
    space.check_ambient(&subspace)?;
    Ok(subspace)
}

pub fn load_matrix(path: &Path) -> Result<Matrix, CliError> {
    let doc: MatrixDoc = read_json(path)?;
    matrix_from_doc(&doc)
}

pub fn cmd_validate(space: &KSymplecticSpace) -> Value {
    json!({ "valid": true, "n": space.n(), "k": space.k() })
}

pub fn cmd_kernel_of_map(path: &Path) -> Result<Value, CliError> {
    let m = load_matrix(path)?;
    Ok(json!({ "kernel": subspace_to_doc(&m.kernel()) }))
}

pub fn cmd_kernel_of_form(space: &KSymplecticSpace, r: usize) -> Result<Value, CliError> {
    let form = space.form(r)?;
    Ok(json!({ "level": r, "kernel": subspace_to_doc(&form.kernel()) }))
}

pub fn cmd_orth(space: &KSymplecticSpace, w: &Subspace, level: usize) -> Result<Value, CliError> {
    let orth = l_orthogonal(space, w, level)?;
    Ok(json!({ "level": level, "orthogonal": subspace_to_doc(&orth) }))
}

fn lagrangian_fields(l: &Lagrangian) -> (&'static str, Value) {
    match l {
        Lagrangian::Yes { complement } => (
            "yes",
            serde_json::to_value(subspace_to_doc(complement)).unwrap(),
        ),
        Lagrangian::No => ("no", Value::Null),
        Lagrangian::Unknown => ("unknown", Value::Null),
    }
}

pub fn cmd_classify(
    space: &KSymplecticSpace,
    w: &Subspace,
    level: usize,
) -> Result<Value, CliError> {
    let c = classify(space, w, level)?;
    let (lagr, witness) = lagrangian_fields(&c.lagrangian);
    Ok(json!({
        "level": level,
        "isotropic": c.isotropic,
        "coisotropic": c.coisotropic,
        "lagrangian": lagr,
        "witness": witness,
    }))
}

pub fn cmd_complete(
    space: &KSymplecticSpace,
    w: &Subspace,
    level: usize,
) -> Result<Value, CliError> {
    let completed = lagrangian_completion(space, w, level)?;
    Ok(json!({ "level": level, "completion": subspace_to_doc(&completed) }))
}

pub fn cmd_complement(
    space: &KSymplecticSpace,
    w: &Subspace,
    level: usize,
) -> Result<Value, CliError> {
    let u = isotropic_complement(space, w, level)?;
    Ok(json!({ "level": level, "complement": subspace_to_doc(&u) }))
}

pub fn cmd_polarize(space: &KSymplecticSpace, seed: u64) -> Value {
    match find_polarization(space, seed) {
        Some(w) => json!({ "result": "found", "polarization": subspace_to_doc(&w) }),
        None => json!({ "result": "unknown" }),
    }
}

pub fn cmd_darboux(space: &KSymplecticSpace, w: &Subspace) -> Result<Value, CliError> {
    let frame = darboux_map(space, w, None)?;
    Ok(json!({ "frame": frame_to_doc(&frame) }))
}

pub fn cmd_symplecto(
    s1: &KSymplecticSpace,
    s2: &KSymplecticSpace,
    p: &Matrix,
) -> Result<Value, CliError> {
    Ok(json!({ "symplectomorphism": is_ksymplectomorphism(s1, s2, p)? }))
}

pub fn cmd_graph_check(
    s1: &KSymplecticSpace,
    s2: &KSymplecticSpace,
    p: &Matrix,
) -> Result<Value, CliError> {
    let check = graph_criterion(s1, s2, p)?;
    let (lagr, _) = lagrangian_fields(&check.graph_lagrangian);
    Ok(json!({
        "symplectomorphism": check.symplectomorphism,
        "graph_lagrangian": lagr,
        "agree": check.sides_agree(),
    }))
}

pub fn cmd_closed(path: &Path) -> Result<Value, CliError> {
    let doc: SectionDoc = read_json(path)?;
    let section = section_from_doc(&doc)?;
    Ok(json!({ "closed": is_closed_section(&section) }))
}

pub fn cmd_hj(
    hamiltonian: &Path,
    potentials: Option<&Path>,
    section: Option<&Path>,
) -> Result<Value, CliError> {
    let h_doc: PolyDoc = read_json(hamiltonian)?;
    let h = crate::json::poly_from_doc(&h_doc)?;
    let solution = match (potentials, section) {
        (Some(path), None) => {
            let docs: Vec<PolyDoc> = read_json(path)?;
            let w = potentials_from_doc(&docs)?;
            hamilton_jacobi_check(&h, &w)?
        }
        (None, Some(path)) => {
            let doc: SectionDoc = read_json(path)?;
            let s = section_from_doc(&doc)?;
            hamilton_jacobi_check_section(&h, &s)?
        }
        _ => {
            return Err(CliError::Schema(
                "exactly one of --potentials FILE or --section FILE is required".into(),
            ))
        }
    };
    Ok(json!({ "solution": solution }))
}

pub fn cmd_gen(n: usize, k: usize, seed: u64) -> Result<Value, CliError> {
    if n == 0 || k == 0 {
        return Err(CliError::Schema("gen requires n >= 1 and k >= 1".into()));
    }
    let (space, witness) = random_kspace(n, k, seed);
    Ok(json!({
        "n": n,
        "k": k,
        "seed": seed,
        "space": space_to_doc(&space),
        "witness": matrix_to_doc(&witness),
    }))
}

/// Returns the report document and whether every check passed.
pub fn cmd_prop_suite(seed: u64, trials: usize, n_max: usize, k_max: usize) -> (Value, bool) {
    let report = run_suite(&SuiteConfig {
        seed,
        trials,
        n_max,
        k_max,
    });
    let ok = report.all_passed();
    (serde_json::to_value(&report).unwrap(), ok)
}
