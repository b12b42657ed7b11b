//! End-to-end tests of the command line: golden outputs, exit codes,
//! error objects and determinism.

use std::process::Command;

use mpweyl_cli::run;
use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_mpweyl");

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

fn call(args: &[&str]) -> mpweyl_cli::Outcome {
    run(std::iter::once("mpweyl").chain(args.iter().copied()), None)
}

fn exec(args: &[&str], format: Option<&str>) -> std::process::Output {
    let mut cmd = Command::new(BIN);
    cmd.args(args);
    match format {
        Some(f) => cmd.env("MPWEYL_FORMAT", f),
        None => cmd.env_remove("MPWEYL_FORMAT"),
    };
    cmd.output().expect("binary runs")
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).unwrap_or_else(|e| panic!("not JSON ({e}): {text}"))
}

#[test]
fn normalize_golden() {
    let out = exec(&["normalize", "-n", "1", "y1*x1"], None);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(stdout, golden("normalize_y1x1.json"));
    // independent reading of the golden: r^2/(r^2-s^2) rho^2 - s^2/(r^2-s^2) sigma^2
    let v = json(&stdout);
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    let find = |key: &str| {
        terms
            .iter()
            .find(|t| t["monomial"][key][0] == 2)
            .unwrap_or_else(|| panic!("no {key}^2 term"))
    };
    assert_eq!(find("rho")["coeff"]["num"], "r1^2");
    assert_eq!(find("rho")["coeff"]["den"], "r1^2 - s1^2");
    assert_eq!(find("sigma")["coeff"]["num"], "-(s1^2)");
    assert_eq!(find("sigma")["coeff"]["den"], "r1^2 - s1^2");
    for t in terms {
        assert_eq!(t["monomial"]["x"][0], 0);
        assert_eq!(t["monomial"]["y"][0], 0);
    }
}

#[test]
fn classify_golden() {
    let out = exec(&["classify", "-n", "1", "--mu", "1", "--nu", "1"], None);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(stdout, golden("classify_mu1_nu1.json"));
    let v = json(&stdout);
    assert_eq!(v["J"], serde_json::json!([1]));
    assert_eq!(v["simples"], 2);
    assert_eq!(v["breaks"][0]["shift"], -1);
    let text = exec(&["classify", "-n", "1", "--mu", "1", "--nu", "1"], Some("text"));
    let text = String::from_utf8(text.stdout).unwrap();
    assert!(text.starts_with("J = [1]\nsimples: 2\n"), "{text}");
}

#[test]
fn skeleton_golden() {
    let out = exec(&["skeleton", "-J", "1,3", "--dot"], None);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(stdout, golden("skeleton_J13.dot"));
    assert!(stdout.starts_with("digraph"));
    let nodes = stdout.lines().filter(|l| l.contains("[label=") && !l.contains("->")).count();
    let arrows: Vec<&str> = stdout.lines().filter(|l| l.contains("->")).collect();
    assert_eq!(nodes, 4);
    assert_eq!(arrows.len(), 8);
    for kind in ["a1", "b1", "a3", "b3"] {
        assert_eq!(arrows.iter().filter(|l| l.contains(&format!("\"{kind}\""))).count(), 2, "{kind}");
    }
}

#[test]
fn skeleton_json_reports_dimension() {
    let out = call(&["skeleton", "-J", "2", "--json"]);
    assert_eq!(out.code, 0);
    let v = json(&out.stdout);
    assert_eq!(v["dimension"], 4);
    assert_eq!(v["objects"].as_array().unwrap().len(), 2);
    assert_eq!(v["arrows"].as_array().unwrap().len(), 2);
}

#[test]
fn output_is_deterministic_across_runs() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["normalize", "-n", "2", "(y1 + x2)^3*rho2 - sigma1^-1*y2*x1"],
        vec!["classify", "-n", "3", "--mu", "r1,2,s3+1", "--nu", "s1,2*r2/s2,s3"],
        vec!["skeleton", "-J", "1,2,3", "--dot"],
        vec!["skeleton", "-J", "1,2", "--json"],
        vec!["act", "-n", "2", "--module", "whittaker", "--xi", "r1,s2", "--vector", "0,1,-1,2", "y1*y2 + x1"],
        vec!["uqrs-verify", "-n", "2"],
    ];
    for args in cases {
        for format in [None, Some("text")] {
            let a = exec(&args, format);
            let b = exec(&args, format);
            assert_eq!(a.stdout, b.stdout, "{args:?}");
            assert_eq!(a.stderr, b.stderr, "{args:?}");
            assert_eq!(a.status.code(), b.status.code(), "{args:?}");
            assert!(!a.stdout.is_empty(), "{args:?}");
        }
    }
}

#[test]
fn library_and_binary_agree() {
    let args = ["normalize", "-n", "1", "x1*y1*x1"];
    let lib = call(&args);
    let bin = exec(&args, None);
    assert_eq!(lib.stdout.as_bytes(), bin.stdout.as_slice());
    assert_eq!(Some(lib.code), bin.status.code());
}

fn error_of(out: &mpweyl_cli::Outcome) -> Value {
    assert!(out.stdout.is_empty(), "stdout on error: {}", out.stdout);
    json(&out.stderr)["error"].clone()
}

#[test]
fn syntax_errors_carry_positions() {
    let out = call(&["normalize", "-n", "1", "x1 + * y1"]);
    assert_eq!(out.code, 2);
    let e = error_of(&out);
    assert_eq!(e["kind"], "syntax");
    assert_eq!(e["line"], 1);
    assert_eq!(e["column"], 6);

    let out = call(&["normalize", "-n", "1", "(x1\n + y1"]);
    let e = error_of(&out);
    assert_eq!(e["kind"], "syntax");
    assert_eq!(e["line"], 2);
}

#[test]
fn unknown_symbols_are_rejected() {
    for expr in ["x2", "r0", "q1", "e1", "rho3*x1"] {
        let out = call(&["normalize", "-n", "1", expr]);
        assert_eq!(out.code, 2, "{expr}");
        assert_eq!(error_of(&out)["kind"], "unknown_symbol", "{expr}");
    }
    // e_i, f_i exist for i < n
    assert_eq!(call(&["normalize", "-n", "2", "e1*f1"]).code, 0);
    assert_eq!(error_of(&call(&["normalize", "-n", "2", "e2"]))["kind"], "unknown_symbol");
}

#[test]
fn domain_errors_exit_with_one() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["normalize", "-n", "1", "y1^-2"],
        vec!["normalize", "-n", "1", "x1/r1"],
        vec!["normalize", "-n", "1", "1/(r1 - r1)"],
        vec!["normalize", "-n", "1", "(x1 + rho1)^-1"],
        vec!["classify", "-n", "1", "--mu", "0", "--nu", "1"],
        vec!["classify", "-n", "1", "--mu", "x1", "--nu", "1"],
        vec!["act", "-n", "1", "--module", "whittaker", "--xi", "0", "--vector", "0,0", "x1"],
    ];
    for args in cases {
        let out = call(&args);
        assert_eq!(out.code, 1, "{args:?}: {}", out.stderr);
        assert_eq!(error_of(&out)["kind"], "domain", "{args:?}");
    }
}

#[test]
fn usage_errors_exit_with_two() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["normalize", "y1"],
        vec!["frobnicate"],
        vec!["normalize", "-n", "0", "x1"],
        vec!["classify", "-n", "2", "--mu", "1", "--nu", "1,1"],
        vec!["act", "-n", "1", "--module", "verma", "--vector", "0", "x1"],
        vec!["skeleton", "-J", "0"],
        vec!["skeleton", "-J", "1", "--dot", "--json"],
    ];
    for args in cases {
        let out = call(&args);
        assert_eq!(out.code, 2, "{args:?}");
        assert_eq!(error_of(&out)["kind"], "usage", "{args:?}");
    }
    let out = run(["mpweyl", "normalize", "-n", "1", "x1"], Some("yaml"));
    assert_eq!(out.code, 2);
    assert_eq!(error_of(&out)["kind"], "usage");
}

#[test]
fn help_exits_cleanly() {
    let out = call(&["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("normalize"));
    assert!(out.stdout.contains("uqrs-verify"));
}

#[test]
fn text_errors_are_one_line() {
    let out = run(["mpweyl", "normalize", "-n", "1", "x1 +"], Some("text"));
    assert_eq!(out.code, 2);
    assert_eq!(out.stderr.lines().count(), 1);
    assert!(out.stderr.contains("1:5"), "{}", out.stderr);
}

#[test]
fn act_on_each_family() {
    let poly = call(&["act", "-n", "1", "--module", "poly", "--vector", "2", "y1"]);
    assert_eq!(poly.code, 0);
    let v = json(&poly.stdout);
    assert_eq!(v["result"]["terms"][0]["index"], serde_json::json!([1]));
    // y z(2) = [2] z(1) with [2] = r^2 + s^2
    assert_eq!(v["result"]["terms"][0]["coeff"]["num"], "r1^2 + s1^2");

    let cases: Vec<Vec<&str>> = vec![
        vec!["act", "-n", "1", "--module", "verma", "--lambda", "r1", "--zeta-sigma", "-", "--vector", "1", "y1*x1"],
        vec!["act", "-n", "2", "--module", "weight", "--mu", "1,1", "--nu", "1+r1,2", "--vector", "-3,4", "x1*y2"],
        vec![
            "act", "-n", "1", "--module", "weight-broken", "--mu", "s1", "--nu", "r1", "--breaks", "1", "--alpha", "0",
            "--vector", "-2", "x1",
        ],
        vec!["act", "-n", "1", "--module", "whittaker", "--xi", "r1", "--vector", "1,-1", "y1*x1"],
    ];
    for args in cases {
        let out = call(&args);
        assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
        assert!(json(&out.stdout)["result"]["terms"].is_array());
    }
}

#[test]
fn act_outside_the_support_is_a_domain_error() {
    let out = call(&["act", "-n", "1", "--module", "poly", "--vector", "-1", "x1"]);
    assert_eq!(out.code, 1);
    assert_eq!(error_of(&out)["kind"], "domain");
}

#[test]
fn verify_commands_report_status() {
    let out = call(&["verify", "-n", "1", "--radius", "2"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    let v = json(&out.stdout);
    assert_eq!(v["ok"], true);
    assert_eq!(v["presentation"]["nonzero"], 0);

    let out = call(&["whittaker", "-n", "1", "--xi", "r1 + s1", "--radius", "2"]);
    assert_eq!(out.code, 0);
    let v = json(&out.stdout);
    assert_eq!(v["cyclicity"]["reached"], 25);
    assert_eq!(v["cyclicity"]["complete"], true);

    // the Cartan commutators survive with independent parameters
    let out = call(&["uqrs-verify", "-n", "3"]);
    assert_eq!(out.code, 1);
    let v = json(&out.stdout);
    assert_eq!(v["relations"], 60);
    assert_eq!(v["nonzero"], 2);
    for f in v["failures"].as_array().unwrap() {
        assert_eq!(f["family"], "Commutator");
        assert_eq!(f["zero_with_equal_parameters"], true);
    }
}

#[test]
fn parse_check_prints_canonical_text() {
    let out = call(&["parse-check", "-n", "2", "((x1))*(y2 + (3))"]);
    assert_eq!(out.code, 0);
    assert_eq!(json(&out.stdout)["expr"], "x1*(y2 + 3)");
}
