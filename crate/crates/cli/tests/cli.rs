use std::process::Command;

use betamat::exact::ExactMatrix;
use betamat::linalg::det_bareiss;
use betamat_cli::{run, Report, EXIT_FAILURE, EXIT_PASS, EXIT_USAGE};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("betamat").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn report(args: &[&str]) -> (i32, Report) {
    let (code, out, err) = call(args);
    let r = serde_json::from_str(&out).unwrap_or_else(|e| panic!("bad json ({e}): {out}\n{err}"));
    (code, r)
}

fn entries(r: &Report) -> Vec<Vec<String>> {
    serde_json::from_value(r.results["entries"].clone()).unwrap()
}

#[test]
fn gen_beta_and_recip() {
    let (code, r) = report(&["gen", "beta", "2"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(entries(&r), [["1", "1/2"], ["1/2", "1/6"]]);
    assert_eq!(r.command, "gen");
    assert_eq!(r.version, betamat_cli::VERSION);
    assert_eq!(r.seed, None);
    let (_, r) = report(&["gen", "beta-recip", "--n", "2"]);
    assert_eq!(entries(&r), [["1", "2"], ["2", "6"]]);
}

#[test]
fn gen_other_kinds() {
    let (_, r) = report(&["gen", "a", "2"]);
    assert_eq!(entries(&r), [["-1", "0"], ["-1", "1"]]);
    let (_, r) = report(&["gen", "b", "2"]);
    assert_eq!(entries(&r), [["1", "-3"], ["0", "1"]]);
    for kind in ["pascal-hinv", "k", "d1", "d2"] {
        let (code, r) = report(&["gen", kind, "3"]);
        assert_eq!(code, EXIT_PASS, "{kind}");
        assert_eq!(entries(&r).len(), 3, "{kind}");
    }
}

#[test]
fn gen_generalized() {
    let (code, r) = report(&["gen", "generalized", "--lambdas", "1/2,3/2", "--mus", "1/2,3/2", "--m", "1"]);
    assert_eq!(code, EXIT_PASS);
    let core: Vec<Vec<String>> = serde_json::from_value(r.results["reduced"]["core"].clone()).unwrap();
    assert_eq!(core, [["1", "1/2"], ["1", "1/4"]]);
    assert!(r.results.get("entries").is_none(), "half-integer scales have no rational value");
    assert_eq!(r.parameters["lambdas"], "1/2,3/2");

    // integer parameters recover the rational matrix
    let (_, r) = report(&["gen", "generalized", "--lambdas", "1,2", "--mus", "1,2"]);
    assert_eq!(entries(&r), [["1", "1/2"], ["1/2", "1/6"]]);
}

#[test]
fn usage_errors_exit_2() {
    let (code, out, err) = call(&["gen", "beta", "0"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(out.is_empty());
    assert!(!err.is_empty());
    assert_eq!(call(&["gen", "nope", "2"]).0, EXIT_USAGE);
    assert_eq!(call(&["gen", "beta"]).0, EXIT_USAGE);
    assert_eq!(call(&["verify", "no-such-theorem"]).0, EXIT_USAGE);
    assert_eq!(call(&["gen", "generalized", "--lambdas", "1/2"]).0, EXIT_USAGE);
    assert_eq!(call(&["gen", "generalized", "--lambdas", "1,2", "--mus", "1,3/2"]).0, EXIT_USAGE);
    assert_eq!(call(&["gen", "generalized", "--lambdas", "1,x", "--mus", "1,2"]).0, EXIT_USAGE);
    assert_eq!(call(&["analyze", "--matrix", "/nonexistent/m.json"]).0, EXIT_USAGE);
    assert_eq!(call(&["verify", "inertia", "--n", "0"]).0, EXIT_USAGE);
    assert_eq!(call(&["verify", "lu", "--lambdas", "1", "--mus", "1"]).0, EXIT_USAGE);
}

#[test]
fn analyze_examples() {
    let (code, r) = report(&["analyze", "2"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(r.results["det"], "-1/12");
    assert_eq!(r.results["inertia"], serde_json::json!({"positive": 1, "zero": 0, "negative": 1}));
    assert_eq!(r.results["inverse_is_integer"], true);
    let (_, r) = report(&["analyze", "--n", "3"]);
    assert_eq!(r.results["inertia"], serde_json::json!({"positive": 2, "zero": 0, "negative": 1}));
}

#[test]
fn analyze_matrix_files() {
    let dir = tempfile::tempdir().unwrap();
    let id = dir.path().join("id.json");
    std::fs::write(&id, r#"[["1","0","0"],["0","1","0"],["0","0","1"]]"#).unwrap();
    let (code, r) = report(&["analyze", "--matrix", id.to_str().unwrap()]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(r.results["det"], "1");
    assert_eq!(r.results["inertia"], serde_json::json!({"positive": 3, "zero": 0, "negative": 0}));

    let sing = dir.path().join("sing.json");
    std::fs::write(&sing, r#"[["1","2"],["2","4"]]"#).unwrap();
    let (code, r) = report(&["analyze", "--matrix", sing.to_str().unwrap()]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(r.results["det"], "0");
    assert_eq!(r.results["singular"], true);
    assert_eq!(r.results["inverse_is_integer"], serde_json::Value::Null);
    assert_eq!(r.results["inertia"], serde_json::json!({"positive": 1, "zero": 1, "negative": 0}));

    let nonsym = dir.path().join("ns.json");
    std::fs::write(&nonsym, r#"[["1","2"],["3","4"]]"#).unwrap();
    let (_, r) = report(&["analyze", "--matrix", nonsym.to_str().unwrap()]);
    assert_eq!(r.results["det"], "-2");
    assert_eq!(r.results["inertia"], serde_json::Value::Null);
}

#[test]
fn gen_report_round_trips_through_analyze() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("beta4.json");
    let (code, _, _) = call(&["gen", "beta", "4", "--out", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_PASS);
    let text = std::fs::read_to_string(&path).unwrap();
    let r: Report = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&r).unwrap() + "\n", text);
    let m = ExactMatrix::from_string_rows(&entries(&r)).unwrap();
    assert_eq!(m, betamat::matrices::beta_matrix(4).unwrap());

    let (_, a) = report(&["analyze", "--matrix", path.to_str().unwrap()]);
    let det = det_bareiss(&m).unwrap();
    assert_eq!(a.results["det"], betamat::exact::format_scalar(&det));
}

#[test]
fn verify_examples() {
    let (code, r) = report(&["verify", "inertia", "--n-max", "12"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(r.results["instances"].as_array().unwrap().len(), 12);
    assert_eq!(r.results["all_passed"], true);

    let (code, r) = report(&["verify", "summation", "--n", "10"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(r.parameters["n"], "10");

    let (code, r) = report(&["verify", "tp", "--seed", "42", "--samples", "50"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(r.seed, Some(42));
    assert_eq!(r.results["sweep"]["samples"], 50);
}

#[test]
fn verify_every_label_passes() {
    for label in [
        "det-formula",
        "inverse-formula",
        "lu",
        "k-factorization",
        "a-involution",
        "b-inverse",
        "summation",
        "pascal",
    ] {
        let (code, r) = report(&["verify", label, "--n-max", "6"]);
        assert_eq!(code, EXIT_PASS, "{label}");
        assert_eq!(r.results["all_passed"], true, "{label}");
    }
    let (code, r) = report(&["verify", "bj", "--n-max", "5"]);
    assert_eq!(code, EXIT_PASS);
    let inst = r.results["instances"].as_array().unwrap();
    assert_eq!(inst[0]["orthogonal"], false);
    assert!(inst[2]["witness"]["t"].is_string());
    assert_eq!(inst[3]["orthogonal"], true);
    assert!(inst[3]["witness"].is_null());

    let (code, r) = report(&["verify", "nonsingular", "--samples", "20", "--seed", "7"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(r.seed, Some(7));
    let (code, _) = report(&["verify", "tp", "--lambdas", "1/2,3/2", "--mus", "1/2,3/2", "--m", "2"]);
    assert_eq!(code, EXIT_PASS);
}

#[test]
fn verify_default_seed_recorded() {
    let (_, r) = report(&["verify", "nonsingular", "--samples", "5"]);
    assert_eq!(r.seed, Some(betamat_cli::app::DEFAULT_SEED));
}

#[test]
fn reports_are_deterministic() {
    let a = call(&["verify", "tp", "--seed", "3", "--samples", "10"]);
    let b = call(&["verify", "tp", "--seed", "3", "--samples", "10"]);
    assert_eq!(a, b);
}

#[test]
fn csv_output() {
    let (code, out, _) = call(&["gen", "beta", "2", "--format", "csv"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(out, "1,1/2\n1/2,1/6\n");
    let (_, out, _) = call(&["verify", "lu", "--n-max", "2", "--format", "csv"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "holds,identity,n,witness");
    assert_eq!(lines[1], "true,lu,1,");
    assert_eq!(lines.len(), 3);
    let (_, out, _) = call(&["analyze", "2", "--format", "csv"]);
    assert!(out.lines().any(|l| l == "det,-1/12"));
}

#[test]
fn failed_checks_map_to_exit_1() {
    let (_, mut r) = report(&["verify", "lu", "--n-max", "2"]);
    assert_eq!(betamat_cli::app::exit_code(&r), EXIT_PASS);
    r.results["all_passed"] = serde_json::Value::Bool(false);
    assert_eq!(betamat_cli::app::exit_code(&r), EXIT_FAILURE);
    let (_, g) = report(&["gen", "beta", "2"]);
    assert_eq!(betamat_cli::app::exit_code(&g), EXIT_PASS);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_betamat");
    let ok = Command::new(bin).args(["gen", "beta", "2"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let bad = Command::new(bin).args(["gen", "beta", "0"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(!bad.stderr.is_empty());
    let unknown = Command::new(bin).args(["verify", "nope"]).output().unwrap();
    assert_eq!(unknown.status.code(), Some(2));
}
