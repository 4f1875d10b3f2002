use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use hopfkit::catalog::{build, Params, RootOfUnity};
use hopfkit::comatrix::{ComatrixMap, MapKind};
use hopfkit::interchange::{AlgebraDocument, MatrixDocument, ALGEBRA_SCHEMA, MATRIX_SCHEMA};
use hopfkit::linalg::Matrix;
use hopfkit::CycNumber;
use num_traits::{One, Zero};
use serde_json::Value;

const OUTPUT_SCHEMA: &str = include_str!("../schema/output.schema.json");

fn hopfkit(args: &[&str]) -> Output {
    hopfkit_env(args, None)
}

fn hopfkit_env(args: &[&str], workers: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hopfkit"));
    cmd.args(args);
    match workers {
        Some(w) => cmd.env("HOPFKIT_WORKERS", w),
        None => cmd.env_remove("HOPFKIT_WORKERS"),
    };
    cmd.output().expect("spawn hopfkit")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn run_ok(args: &[&str]) -> String {
    let o = hopfkit(args);
    assert_eq!(code(&o), 0, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

fn write(dir: &Path, name: &str, contents: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

fn doc(name: &str, params: &Params) -> String {
    AlgebraDocument::from_hopf(&build(name, params).unwrap()).to_json()
}

fn q3() -> Params {
    Params::q(RootOfUnity::new(3, 1))
}

fn matrix_doc(rows: Vec<Vec<CycNumber>>, m: u32) -> String {
    MatrixDocument::from_matrix(&Matrix::from_rows(rows).unwrap(), m).to_json()
}

fn int(k: i64) -> CycNumber {
    CycNumber::from_int(k)
}

/// Compares against `tests/golden/<name>`; `UPDATE_GOLDEN=1` rewrites the file.
fn golden(name: &str, actual: &str) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}; rerun with UPDATE_GOLDEN=1", path.display()));
    assert_eq!(actual, expected, "golden mismatch for {name}");
}

fn validator(schema: &str) -> jsonschema::Validator {
    jsonschema::validator_for(&serde_json::from_str(schema).unwrap()).unwrap()
}

fn assert_valid_envelope(text: &str) -> Value {
    let v: Value = serde_json::from_str(text).unwrap();
    let val = validator(OUTPUT_SCHEMA);
    let errors: Vec<String> = val.iter_errors(&v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}");
    v
}

#[test]
fn construct_taft_two() {
    let out = run_ok(&["construct", "taft", "--N", "2", "--q", "-1"]);
    golden("construct_taft2.json", &out);
    assert!(validator(ALGEBRA_SCHEMA).is_valid(&serde_json::from_str(&out).unwrap()));
}

#[test]
fn verify_and_analyze_text() {
    let dir = tempfile::tempdir().unwrap();
    let taft3 = write(dir.path(), "taft3.json", &doc("taft", &Params { n: Some(3), ..q3() }));
    let c3 = write(dir.path(), "c3.json", &doc("cyclic", &Params { n: Some(3), ..Params::default() }));
    let uq = write(dir.path(), "uq.json", &doc("uq_sl2", &q3()));
    let p = |p: &PathBuf| p.to_str().unwrap().to_string();
    golden("verify_taft3.txt", &run_ok(&["verify", &p(&taft3)]));
    golden("analyze_taft3_filtration.txt", &run_ok(&["analyze", &p(&taft3), "--filtration"]));
    golden("analyze_c3_isotypic.txt", &run_ok(&["analyze", &p(&c3), "--isotypic"]));
    golden("analyze_uq_invariants.txt", &run_ok(&["analyze", &p(&uq), "--invariants"]));
}

#[test]
fn census_text() {
    golden("census_27_g1.txt", &run_ok(&["census", "--dim", "27", "--grouplikes", "1"]));
    golden("census_thm27.txt", &run_ok(&["census", "--dim", "27", "--scenario", "paper-thm-27"]));
}

#[test]
fn normal_form_text() {
    let dir = tempfile::tempdir().unwrap();
    let (o, l) = (CycNumber::one, CycNumber::zero);
    let identity = write(dir.path(), "id.json", &matrix_doc((0..4).map(|i| (0..4).map(|j| if i == j { o() } else { l() }).collect()).collect(), 1));
    let transpose = write(
        dir.path(),
        "tr.json",
        &matrix_doc(vec![vec![o(), l(), l(), l()], vec![l(), l(), o(), l()], vec![l(), o(), l(), l()], vec![l(), l(), l(), o()]], 4),
    );
    let z9 = CycNumber::root_of_unity(9, 1);
    let a = Matrix::from_rows(vec![vec![l(), l(), z9], vec![l(), o(), l()], vec![o(), l(), l()]]).unwrap();
    let f = ComatrixMap::from_conjugator(&a, MapKind::AntiAutomorphism, 9).unwrap();
    let lambda = write(dir.path(), "lambda.json", &MatrixDocument::from_matrix(&f.matrix, 9).to_json());
    let p = |p: &PathBuf| p.to_str().unwrap().to_string();
    golden("normal_form_identity.txt", &run_ok(&["normal-form", "--matrix", &p(&identity)]));
    golden("normal_form_transpose.txt", &run_ok(&["normal-form", "--matrix", &p(&transpose)]));
    golden("normal_form_lambda.txt", &run_ok(&["normal-form", "--matrix", &p(&lambda)]));
    let v = assert_valid_envelope(&run_ok(&["--json", "normal-form", "--matrix", &p(&lambda)]));
    assert_eq!(v["result"]["order"], 9);
    assert!(!v["result"]["anti"]["a_lambda"].is_null());
}

#[test]
fn catalog_list() {
    golden("catalog.txt", &run_ok(&["catalog"]));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let p = |p: PathBuf| p.to_str().unwrap().to_string();

    assert_eq!(code(&hopfkit(&["construct", "taft", "--N", "3", "--q", "1"])), 2);
    assert_eq!(code(&hopfkit(&["census", "--dim", "27", "--grouplikes", "4"])), 2);
    assert_eq!(code(&hopfkit(&["verify"])), 2);
    assert_eq!(code(&hopfkit(&["construct", "no_such_entry"])), 2);

    assert_eq!(code(&hopfkit(&["verify", &p(d.join("missing.json"))])), 3);

    let taft = doc("taft", &Params { n: Some(3), ..q3() });
    let truncated = write(d, "trunc.json", &taft[..taft.len() / 2]);
    assert_eq!(code(&hopfkit(&["verify", &p(truncated)])), 4);

    let wrong_sign = taft.replacen("\"1\"]", "\"-1\"]", 1);
    assert_ne!(wrong_sign, taft);
    let broken = write(d, "broken.json", &wrong_sign);
    let o = hopfkit(&["verify", &p(broken.clone())]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("FAIL"));

    let over_q = doc("cyclic", &Params { n: Some(3), ..Params::default() }).replace("\"cyclotomic_order\": 3", "\"cyclotomic_order\": 1");
    let over_q = write(d, "c3q.json", &over_q);
    assert_eq!(code(&hopfkit(&["analyze", &p(over_q.clone())])), 0);
    assert_eq!(code(&hopfkit(&["analyze", &p(over_q.clone()), "--dual", "--filtration"])), 5);
    assert_eq!(code(&hopfkit(&["--field-order", "3", "analyze", &p(over_q), "--dual", "--filtration"])), 0);

    let mut rows: Vec<Vec<CycNumber>> = (0..4).map(|i| (0..4).map(|j| int((i == j) as i64)).collect()).collect();
    rows[0][1] = int(1);
    let bad = write(d, "bad.json", &matrix_doc(rows, 1));
    assert_eq!(code(&hopfkit(&["normal-form", "--matrix", &p(bad)])), 6);

    let tr: Vec<Vec<CycNumber>> = vec![vec![int(1), int(0), int(0), int(0)], vec![int(0), int(0), int(1), int(0)], vec![int(0), int(1), int(0), int(0)], vec![int(0), int(0), int(0), int(1)]];
    let tr = write(d, "trq.json", &matrix_doc(tr, 1));
    assert_eq!(code(&hopfkit(&["normal-form", "--matrix", &p(tr)])), 7);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("taft2.json");
    let o = hopfkit(&["--out", target.to_str().unwrap(), "construct", "taft", "--N", "2", "--q", "-1"]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let back = AlgebraDocument::parse(&std::fs::read_to_string(&target).unwrap()).unwrap();
    assert_eq!(back.to_hopf().unwrap().dim(), 4);
}

#[test]
fn worker_count_does_not_change_output() {
    for args in [&["--json", "census", "--dim", "125"][..], &["--json", "census", "--dim", "27", "--grouplikes", "all"][..]] {
        let one = hopfkit_env(args, Some("1"));
        let three = hopfkit_env(args, Some("3"));
        assert_eq!(code(&one), 0);
        assert_eq!(one.stdout, three.stdout);
    }
    assert_eq!(code(&hopfkit_env(&["catalog"], Some("0"))), 2);
}

#[test]
fn json_outputs_match_schemas() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let algebra = validator(ALGEBRA_SCHEMA);
    let matrix = validator(MATRIX_SCHEMA);
    let taft_x_c3 = run_ok(&["construct", "taft_x_c3", "--q", "z3"]);
    assert!(algebra.is_valid(&serde_json::from_str(&taft_x_c3).unwrap()));
    let tx = write(d, "tx.json", &taft_x_c3);
    let uq = write(d, "uq.json", &run_ok(&["construct", "uq_sl2", "--q", "z3"]));
    let tr_doc = matrix_doc(vec![vec![int(1), int(0), int(0), int(0)], vec![int(0), int(0), int(1), int(0)], vec![int(0), int(1), int(0), int(0)], vec![int(0), int(0), int(0), int(1)]], 4);
    assert!(matrix.is_valid(&serde_json::from_str(&tr_doc).unwrap()));
    let tr = write(d, "tr.json", &tr_doc);
    let (tx, uq, tr) = (tx.to_str().unwrap(), uq.to_str().unwrap(), tr.to_str().unwrap());
    let cases: Vec<Vec<&str>> = vec![
        vec!["verify", tx],
        vec!["analyze", tx, "--filtration", "--isotypic", "--invariants"],
        vec!["analyze", uq, "--dual", "--invariants"],
        vec!["census", "--dim", "27", "--grouplikes", "1"],
        vec!["census", "--dim", "27", "--scenario", "paper-thm-27"],
        vec!["catalog"],
        vec!["normal-form", "--matrix", tr],
    ];
    for c in cases {
        let mut args = vec!["--json"];
        args.extend(&c);
        let v = assert_valid_envelope(&run_ok(&args));
        assert_eq!(v["ok"], true, "{c:?}");
    }
    // Documents carry no envelope, and a non-document is rejected by the schema.
    assert!(!algebra.is_valid(&serde_json::json!({"format_version": "hopfkit/1"})));
}
