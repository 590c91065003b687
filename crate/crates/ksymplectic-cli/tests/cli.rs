//! Black-box tests of the `ksym` binary: exit codes, schemas, determinism.

use std::path::Path;
use std::process::{Command, Output};

fn ksym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ksym"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON document")
}

fn write(path: &Path, content: &str) {
    std::fs::write(path, content).unwrap();
}

#[test]
fn validate_fixture_succeeds() {
    let out = ksym(&["validate", "--fixture", "r3-2symp"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    assert_eq!(doc["valid"], true);
    assert_eq!(doc["n"], 1);
    assert_eq!(doc["k"], 2);
}

#[test]
fn domain_errors_exit_one_with_structured_document() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("degenerate.json");
    write(
        &path,
        r#"{"dim": 3, "k": 2, "forms": [[[0,2,"1"]], [[0,2,"1"]]]}"#,
    );
    let out = ksym(&["validate", "--space", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let doc = stdout_json(&out);
    assert_eq!(doc["error"]["code"], "degenerate_common_kernel");
    // the witness kernel is span{e2}
    assert_eq!(doc["error"]["kernel"]["basis"][0][1], "1");
}

#[test]
fn schema_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();

    // lower-triangle triplet is rejected by the parser
    let lower = dir.path().join("lower.json");
    write(&lower, r#"{"dim": 3, "k": 1, "forms": [[[2,0,"1"]]]}"#);
    let out = ksym(&["validate", "--space", lower.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stdout_json(&out)["error"]["code"], "parse");

    // diagonal triplet likewise
    let diag = dir.path().join("diag.json");
    write(&diag, r#"{"dim": 3, "k": 1, "forms": [[[1,1,"1"]]]}"#);
    let out = ksym(&["validate", "--space", diag.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // broken JSON
    let broken = dir.path().join("broken.json");
    write(&broken, "{not json");
    let out = ksym(&["validate", "--space", broken.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // unknown fixture name
    let out = ksym(&["validate", "--fixture", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn orth_reproduces_the_worked_example() {
    let dir = tempfile::tempdir().unwrap();
    let sub = dir.path().join("e2.json");
    write(&sub, r#"{"ambient": 3, "basis": [["0","1","0"]]}"#);

    let out = ksym(&[
        "orth",
        "--fixture",
        "r3-2symp",
        "--subspace",
        sub.to_str().unwrap(),
        "--level",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    assert_eq!(
        doc["orthogonal"]["basis"],
        serde_json::json!([["1", "0", "0"], ["0", "1", "0"]])
    );

    // level out of range is a domain error
    let out = ksym(&[
        "orth",
        "--fixture",
        "r3-2symp",
        "--subspace",
        sub.to_str().unwrap(),
        "--level",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["error"]["code"], "level_out_of_range");
}

#[test]
fn darboux_identity_on_the_canonical_model() {
    let dir = tempfile::tempdir().unwrap();
    let sub = dir.path().join("y.json");
    write(
        &sub,
        r#"{"ambient": 3, "basis": [["0","1","0"],["0","0","1"]]}"#,
    );
    let out = ksym(&[
        "darboux",
        "--fixture",
        "canonical:1,2",
        "--subspace",
        sub.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    assert_eq!(
        doc["frame"]["P"],
        serde_json::json!([["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]])
    );
}

#[test]
fn classify_tri_state_and_witness() {
    let dir = tempfile::tempdir().unwrap();
    let sub = dir.path().join("e1.json");
    write(&sub, r#"{"ambient": 3, "basis": [["1","0","0"]]}"#);
    let out = ksym(&[
        "classify",
        "--fixture",
        "r3-2symp",
        "--subspace",
        sub.to_str().unwrap(),
        "--level",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    assert_eq!(doc["lagrangian"], "yes");
    assert_eq!(
        doc["witness"]["basis"],
        serde_json::json!([["0", "1", "0"], ["0", "0", "1"]])
    );
}

#[test]
fn generated_space_round_trips_through_validate_and_symplecto() {
    let dir = tempfile::tempdir().unwrap();
    let out = ksym(&["gen", "--n", "2", "--k", "2", "--seed", "11"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);

    let space_path = dir.path().join("space.json");
    write(&space_path, &doc["space"].to_string());
    let witness_path = dir.path().join("witness.json");
    write(&witness_path, &doc["witness"].to_string());

    let out = ksym(&["validate", "--space", space_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["valid"], true);

    let out = ksym(&[
        "symplecto",
        "--space",
        space_path.to_str().unwrap(),
        "--fixture2",
        "canonical:2,2",
        "--map",
        witness_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["symplectomorphism"], true);

    let out = ksym(&[
        "graph-check",
        "--space",
        space_path.to_str().unwrap(),
        "--fixture2",
        "canonical:2,2",
        "--map",
        witness_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    assert_eq!(doc["graph_lagrangian"], "yes");
    assert_eq!(doc["agree"], true);
}

#[test]
fn hamilton_jacobi_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let h = dir.path().join("h.json");
    write(
        &h,
        r#"{"vars": ["q1","p1_1","p2_1"],
            "terms": [{"exp":[0,1,0],"coef":"1"},{"exp":[0,0,1],"coef":"1"}]}"#,
    );
    let w = dir.path().join("w.json");
    write(
        &w,
        r#"[{"vars":["q1"],"terms":[{"exp":[1],"coef":"1"}]},
            {"vars":["q1"],"terms":[{"exp":[1],"coef":"-1"}]}]"#,
    );
    let out = ksym(&[
        "hj",
        "--hamiltonian",
        h.to_str().unwrap(),
        "--potentials",
        w.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["solution"], true);

    // raw non-closed sections are rejected
    let sec = dir.path().join("open.json");
    write(
        &sec,
        r#"[[{"vars":["q1","q2"],"terms":[{"exp":[0,1],"coef":"1"}]},
             {"vars":["q1","q2"],"terms":[]}],
            [{"vars":["q1","q2"],"terms":[]},
             {"vars":["q1","q2"],"terms":[]}]]"#,
    );
    let h2 = dir.path().join("h2.json");
    write(
        &h2,
        r#"{"vars": ["q1","q2","p1_1","p1_2","p2_1","p2_2"],
            "terms": [{"exp":[0,0,1,0,0,0],"coef":"1"}]}"#,
    );
    let out = ksym(&[
        "hj",
        "--hamiltonian",
        h2.to_str().unwrap(),
        "--section",
        sec.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["error"]["code"], "not_closed");
}

#[test]
fn byte_identical_determinism() {
    for args in [
        vec!["gen", "--n", "2", "--k", "2", "--seed", "3"],
        vec![
            "prop-suite",
            "--seed",
            "7",
            "--trials",
            "4",
            "--n-max",
            "2",
            "--k-max",
            "2",
        ],
        vec!["polarize", "--fixture", "r6-5symp"],
    ] {
        let a = ksym(&args);
        let b = ksym(&args);
        assert_eq!(a.status.code(), b.status.code());
        assert_eq!(a.stdout, b.stdout, "output differs for {args:?}");
    }
}

#[test]
fn prop_suite_exit_codes_and_empty_run() {
    let out = ksym(&[
        "prop-suite",
        "--seed",
        "0",
        "--trials",
        "0",
        "--n-max",
        "2",
        "--k-max",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    assert_eq!(doc["results"], serde_json::json!([]));
    assert_eq!(doc["failures"], serde_json::json!([]));

    let out = ksym(&[
        "prop-suite",
        "--seed",
        "1",
        "--trials",
        "3",
        "--n-max",
        "2",
        "--k-max",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    assert!(doc["results"].as_array().unwrap().len() > 20);
}

#[test]
fn complete_and_complement_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let e2 = dir.path().join("e2.json");
    write(&e2, r#"{"ambient": 3, "basis": [["0","1","0"]]}"#);

    // one adjunction grows span{e2} to span{e1,e2}
    let out = ksym(&[
        "complete",
        "--fixture",
        "r3-2symp",
        "--subspace",
        e2.to_str().unwrap(),
        "--level",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_json(&out)["completion"]["basis"],
        serde_json::json!([["1", "0", "0"], ["0", "1", "0"]])
    );

    // complementing the completion gives span{e3}
    let w12 = dir.path().join("w12.json");
    write(&w12, r#"{"ambient": 3, "basis": [["1","0","0"],["0","1","0"]]}"#);
    let out = ksym(&[
        "complement",
        "--fixture",
        "r3-2symp",
        "--subspace",
        w12.to_str().unwrap(),
        "--level",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_json(&out)["complement"]["basis"],
        serde_json::json!([["0", "0", "1"]])
    );

    // span{e2} does not equal its own level-2 complement: precondition error
    let out = ksym(&[
        "complement",
        "--fixture",
        "r3-2symp",
        "--subspace",
        e2.to_str().unwrap(),
        "--level",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["error"]["code"], "precondition_failed");

    // a non-isotropic seed cannot be completed
    let e13 = dir.path().join("e13.json");
    write(&e13, r#"{"ambient": 3, "basis": [["1","0","0"],["0","0","1"]]}"#);
    let out = ksym(&[
        "complete",
        "--fixture",
        "r3-2symp",
        "--subspace",
        e13.to_str().unwrap(),
        "--level",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["error"]["code"], "not_isotropic");
}

#[test]
fn kernel_of_explicit_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let m = dir.path().join("m.json");
    write(&m, r#"[["1","2"],["2","4"]]"#);
    let out = ksym(&["kernel", "--map", m.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    assert_eq!(doc["kernel"]["basis"], serde_json::json!([["1", "-1/2"]]));
}
