//! CLI behavior: exit codes, JSON round-trips, determinism, file
//! inputs, and text/JSON agreement.

use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nakayama"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn u1_spec_file() -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(
        f,
        r#"{{
            "lambda_kupisch": [3],
            "gamma": {{"labels": ["e1Gamma", "e2Gamma"], "gldim_finite": true, "sigma_gorenstein": true}},
            "bimodule": {{"e1Gamma": [], "e2Gamma": [0, 0]}},
            "module": {{"V": ["0,1"], "W": [], "coker": ["0,1"]}}
        }}"#
    )
    .unwrap();
    f
}

#[test]
fn validation_errors_exit_2() {
    let out = run(&["defring", "--kupisch", "2,4", "--module", "0,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("NotAdmissible"));

    let out = run(&["core", "--kupisch", "3,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("SimpleProjectivePresent"));

    let out = run(&["defring", "--kupisch", "4,5", "--module", "0,9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("LengthOutOfRange"));

    // neither --kupisch nor --input
    let out = run(&["core"]);
    assert_eq!(out.status.code(), Some(2));

    // malformed module coordinate
    let out = run(&["defring", "--kupisch", "4,5", "--module", "0,2,3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn refusals_exit_3() {
    let out = run(&["defring", "--kupisch", "4,5", "--module", "0,1"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("NotGorensteinProjective"));

    // (3,3,2) has an empty Gorenstein core
    let out = run(&["core", "--kupisch", "3,3,2"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("EmptyCore"));

    // position of a projective core object
    let out = run(&["position", "--kupisch", "4,5", "--module", "0,4"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("ProjectiveInCore"));

    // position of a module outside the core
    let out = run(&["position", "--kupisch", "4,5", "--module", "1,3"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("NotInCore"));
}

#[test]
fn certificate_failures_exit_4() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(
        f,
        r#"{{
            "lambda_kupisch": [4, 5],
            "gamma": {{"labels": ["q"], "gldim_finite": true, "sigma_gorenstein": true}},
            "bimodule": {{"q": [0]}},
            "module": {{"V": ["0,1"], "W": [], "coker": ["0,1"]}}
        }}"#
    )
    .unwrap();
    let out = run(&["triangular", "--spec", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr(&out).contains("CokerNotGorenstein"));
}

#[test]
fn unknown_label_exits_2() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(
        f,
        r#"{{
            "lambda_kupisch": [3],
            "gamma": {{"labels": ["q"], "gldim_finite": true, "sigma_gorenstein": true}},
            "bimodule": {{"q": [0]}},
            "module": {{"V": ["0,3"], "W": ["mystery"], "coker": ["0,3"]}}
        }}"#
    )
    .unwrap();
    let out = run(&["triangular", "--spec", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("UnknownLabel"));
}

#[test]
fn triangular_golden_via_file() {
    let f = u1_spec_file();
    let out = run(&["triangular", "--spec", f.path().to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out).trim(),
        r#"{"gorenstein_projective":true,"v_gorenstein_projective":true,"presentation":{"n":1,"m":3,"generators":[[[[3],1]]]}}"#
    );
}

#[test]
fn jn_text_output() {
    let out = run(&["jn", "--n", "2", "--a", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.trim().lines().collect();
    assert_eq!(lines.len(), 4);
    for g in ["t1", "t2", "t1*t2", "t1^2+t2"] {
        assert!(lines.contains(&g), "missing {g} in {lines:?}");
    }

    let out = run(&["jn", "--n", "0", "--a", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "(zero ideal of k)");
}

#[test]
fn json_round_trips_byte_exact() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["defring", "--kupisch", "4,5", "--module", "0,2", "--json"],
        vec!["position", "--kupisch", "4,5", "--module", "0,2", "--json"],
        vec!["core", "--kupisch", "4,5", "--json"],
        vec!["info", "--kupisch", "3,3,2", "--json"],
        vec!["gp-list", "--kupisch", "4,5", "--json"],
        vec!["elementaries", "--kupisch", "3", "--json"],
        vec!["jn", "--n", "3", "--a", "4", "--json"],
        vec!["survey", "--max-s", "2", "--max-c", "4", "--json"],
    ];
    for case in cases {
        let out = run(&case);
        assert_eq!(out.status.code(), Some(0), "{case:?}: {}", stderr(&out));
        let text = stdout(&out);
        let value: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
        assert_eq!(
            serde_json::to_string(&value).unwrap(),
            text.trim(),
            "round trip for {case:?}"
        );
    }
}

#[test]
fn deterministic_bytes() {
    for case in [
        vec!["defring", "--kupisch", "4,5", "--module", "0,2", "--json"],
        vec!["survey", "--max-s", "3", "--max-c", "6", "--json"],
        vec!["survey", "--max-s", "3", "--max-c", "6"],
    ] {
        let a = run(&case);
        let b = run(&case);
        assert_eq!(a.stdout, b.stdout, "{case:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn text_and_json_agree() {
    // defring: the text ring string regenerates from the JSON fields
    let json_out = run(&["defring", "--kupisch", "4,5", "--module", "0,2", "--json"]);
    let text_out = run(&["defring", "--kupisch", "4,5", "--module", "0,2"]);
    let pres: nakayama_core::DefRingPresentation =
        serde_json::from_str(stdout(&json_out).trim()).unwrap();
    assert_eq!(pres.to_string(), stdout(&text_out).trim());

    // position: every numeric field appears in the text form
    let json_out = run(&["position", "--kupisch", "3", "--module", "0,2", "--json"]);
    let text_out = run(&["position", "--kupisch", "3", "--module", "0,2"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&json_out).trim()).unwrap();
    let text = stdout(&text_out);
    for key in ["m", "d", "ell_v"] {
        let line = format!("{key}: {}", v[key]);
        assert!(text.lines().any(|l| l == line), "{line} not in {text}");
    }
}

#[test]
fn algebra_from_input_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(f, r#"{{"kupisch": [4, 5]}}"#).unwrap();
    let out = run(&["core", "--input", f.path().to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let from_flag = run(&["core", "--kupisch", "4,5", "--json"]);
    assert_eq!(out.stdout, from_flag.stdout);
}

#[test]
fn survey_csv_export() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rows.csv");
    let out = run(&[
        "survey",
        "--max-s",
        "2",
        "--max-c",
        "5",
        "--csv",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let csv = std::fs::read_to_string(&path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("kupisch,g,ell_core,module,n,m"));
    assert!(csv.contains("\"4,5\",1,2,\"0,2\",1,2"));
}

#[test]
fn overflow_is_a_validation_error() {
    let out = run(&["jn", "--n", "2", "--a", "200"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("Overflow"));
}
