use std::path::PathBuf;
use std::process::Command;

use frobcat::constructions::builtin;
use frobcat::doc::Document;
use frobcat::exactla::Matrix;
use frobcat::filtration::FilteredObj;
use serde_json::{json, Value};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Run {
    fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("{e}: {}", self.stdout))
    }
}

fn frobcat(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_frobcat")).args(args).output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).to_string_lossy().into_owned()
}

fn ints(v: &Value) -> Vec<Vec<Vec<i64>>> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|a| {
            a.as_array()
                .unwrap()
                .iter()
                .map(|b| b.as_array().unwrap().iter().map(|s| s.as_str().unwrap().parse().unwrap()).collect())
                .collect()
        })
        .collect()
}

/// `m[i][j][k]` of `Lambda(k^2)` on `1, x1, x2, x1 x2`.
fn exterior2_constants() -> Vec<Vec<Vec<i64>>> {
    let mut m = vec![vec![vec![0; 4]; 4]; 4];
    let prod = [(0, 0, 0, 1), (0, 1, 1, 1), (0, 2, 2, 1), (0, 3, 3, 1), (1, 0, 1, 1), (2, 0, 2, 1), (3, 0, 3, 1),
        (1, 2, 3, 1), (2, 1, 3, -1)];
    for (i, j, k, c) in prod {
        m[i][j][k] = c;
    }
    m
}

#[test]
fn validate_builtin_passes() {
    let r = frobcat(&["validate", "matn:2"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let b = r.json();
    assert_eq!(b["passed"], true);
    assert_eq!(b["failures"], json!([]));
    assert_eq!(b["exit_status"], 0);
}

#[test]
fn validate_names_the_associativity_failure() {
    let r = frobcat(&["validate", &data("perturbed_mult.json")]);
    assert_eq!(r.code, 1);
    let failures = r.json()["failures"].clone();
    assert!(failures.as_array().unwrap().iter().any(|f| f == "algebras.A: m associative"), "{failures}");
}

#[test]
fn validate_reports_bad_scalars_with_context() {
    let r = frobcat(&["validate", &data("bad_scalar.json")]);
    assert_eq!(r.code, 2);
    let b = r.json();
    assert_eq!(b["error"]["kind"], "parse");
    assert!(b["error"]["message"].as_str().unwrap().contains("algebras.A.u[0]"));
    assert!(b["error"]["message"].as_str().unwrap().contains("1/0"));
}

#[test]
fn malformed_json_reports_a_line() {
    let dir = std::env::temp_dir().join(format!("frobcat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join("broken.json");
    std::fs::write(&p, "{\n  \"version\": \"1\",\n  \"hopf\": \n}").unwrap();
    let r = frobcat(&["validate", p.to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert!(r.json()["error"]["message"].as_str().unwrap().contains("line 4"));
}

#[test]
fn frobenius_exterior3() {
    let r = frobcat(&["frobenius", "exterior:3"]);
    assert_eq!(r.code, 0);
    let b = r.json();
    assert_eq!(b["certificate"]["verdict"], "frobenius");
    assert_eq!(b["dim"], 8);
}

#[test]
fn frobenius_refutes_upper_triangular_exactly() {
    let r = frobcat(&["frobenius", "upper-triangular-2", "--mode", "exact"]);
    assert_eq!(r.code, 1);
    let c = &r.json()["certificate"];
    assert_eq!(c["verdict"], "not-frobenius");
    assert_eq!(c["mode"], "exact-symbolic");
    assert_eq!(c["refutation"]["variables"], 3);
}

#[test]
fn frobenius_matn2_has_matrix_unit_tensors() {
    let r = frobcat(&["frobenius", "matn:2"]);
    assert_eq!(r.code, 0);
    let c = &r.json()["certificate"];
    // E_ij at index 2i + j; Delta(E_ij) = sum_k E_ik (x) E_kj
    let mut want = vec![vec![vec![0i64; 4]; 4]; 4];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                want[2 * i + j][2 * i + k][2 * k + j] = 1;
            }
        }
    }
    assert_eq!(ints(&c["comult"]), want);
    assert_eq!(c["counit"], json!(["1", "0", "0", "1"]));
}

#[test]
fn exact_mode_capacity_is_distinct() {
    let r = frobcat(&["frobenius", "exterior:3", "--mode", "exact", "--symbolic-capacity", "2"]);
    assert_eq!(r.code, 5);
    assert_eq!(r.json()["error"]["kind"], "capacity");
}

#[test]
fn gr_of_clifford2_is_exterior() {
    let r = frobcat(&["gr", "clifford:2:identity"]);
    assert_eq!(r.code, 0);
    let b = r.json();
    assert_eq!(b["graded"]["components"], json!([1, 2, 1]));
    assert_eq!(b["dimension_conserved"], true);
    assert_eq!(ints(&b["graded"]["m"]), exterior2_constants());
}

#[test]
fn gr_of_trivial_filtration_is_unchanged() {
    let ext = builtin("exterior:2").unwrap().algebra;
    let f = FilteredObj::new(ext.carrier().clone(), &[Matrix::identity(4)]).unwrap();
    let doc = Document::from_algebra("E", &ext, Some(&f));
    let dir = std::env::temp_dir().join(format!("frobcat-cli-trivial-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join("exterior2_trivial.json");
    std::fs::write(&p, doc.to_string_pretty()).unwrap();
    let r = frobcat(&["gr", p.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    let b = r.json();
    assert_eq!(b["graded"]["components"], json!([4]));
    assert_eq!(ints(&b["graded"]["m"]), exterior2_constants());
}

#[test]
fn gr_of_deformed_truncpoly() {
    let r = frobcat(&["gr", &data("deformed_truncpoly3.json")]);
    assert_eq!(r.code, 0);
    let b = r.json();
    assert_eq!(b["graded"]["components"], json!([1, 1, 1]));
    // gr is k[x]/(x^3): x * x^2 = 0
    assert_eq!(ints(&b["graded"]["m"])[1][2], vec![0, 0, 0]);
}

#[test]
fn bongale_clifford3() {
    let r = frobcat(&["bongale", "clifford:3:identity"]);
    assert_eq!(r.code, 0);
    let b = r.json();
    assert_eq!(b["conclusion"], "lifted");
    assert_eq!(b["gr_certificate"]["verdict"], "frobenius");
    assert_eq!(b["certificate"]["verdict"], "frobenius");
    assert_eq!(b["gr_components"], json!([1, 3, 3, 1]));
}

#[test]
fn bongale_deformed_eta_is_top_coefficient() {
    let r = frobcat(&["bongale", &data("deformed_truncpoly3.json")]);
    assert_eq!(r.code, 0);
    let b = r.json();
    assert_eq!(b["eta"], json!(["0", "0", "1"]));
    assert_eq!(b["gr_certificate"]["verdict"], "frobenius");
    assert_eq!(b["certificate"]["verdict"], "frobenius");
}

#[test]
fn bongale_rejects_disconnected_filtration() {
    let r = frobcat(&["bongale", &data("mat2_filtered.json")]);
    assert_eq!(r.code, 4);
    let msg = r.json()["error"]["message"].as_str().unwrap().to_string();
    assert!(msg.contains("F(0)"), "{msg}");
}

#[test]
fn bongale_without_conclusion_in_super_vector_spaces() {
    let r = frobcat(&["frobenius", &data("super_clifford_line.json")]);
    assert_eq!(r.code, 0);
    let r = frobcat(&["bongale", &data("super_clifford_line.json")]);
    assert_eq!(r.code, 1);
    assert_eq!(r.json()["conclusion"], "no-conclusion");
}

#[test]
fn demos() {
    let r = frobcat(&["demo", "lemma-6-3-exterior"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json()["block_ranks"], json!([1, 3, 3, 1]));
    let r = frobcat(&["demo", "cor-4-6-quotient"]);
    assert_eq!(r.code, 0);
    for ex in r.json()["examples"].as_array().unwrap() {
        assert_eq!(ex["isomorphic"], true);
    }
    let r = frobcat(&["demo", "theorem-7-3-min"]);
    assert_eq!(r.code, 0);
    let b = r.json();
    assert_eq!(b["dim"], 4);
    assert_eq!(b["certificate"]["verdict"], "frobenius");
}

#[test]
fn unknown_demo_lists_the_available_ones() {
    let r = frobcat(&["demo", "nope"]);
    assert_eq!(r.code, 2);
    let msg = r.json()["error"]["message"].as_str().unwrap().to_string();
    for d in ["theorem-7-3-min", "lemma-6-3-exterior", "cor-4-6-quotient"] {
        assert!(msg.contains(d), "{msg}");
    }
}

#[test]
fn reports_are_reproducible() {
    for args in [
        &["frobenius", "dual-numbers", "--mode", "randomized", "--seed", "7"][..],
        &["bongale", "clifford:2:identity"][..],
        &["validate", &data("perturbed_mult.json")][..],
    ] {
        let a = frobcat(args);
        let b = frobcat(args);
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.code, b.code);
        assert_eq!(a.json()["exit_status"], a.code);
    }
}

#[test]
fn summary_output() {
    let r = frobcat(&["--output", "summary", "frobenius", "matn:2"]);
    assert_eq!(r.code, 0);
    assert!(serde_json::from_str::<Value>(&r.stdout).is_err());
    assert!(r.stdout.contains("frobenius"));
    assert!(r.stderr.contains("wall time"));
}
