use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qmprimes"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> serde_json::Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn enumerate_small() {
    let v = json(&["enumerate", "--m", "1", "--n", "1"]);
    assert_eq!(v["elements"].as_array().unwrap().len(), 2);
    assert_eq!(v["edges"].as_array().unwrap().len(), 1);
    let v = json(&["enumerate", "--m", "2", "--n", "2"]);
    assert_eq!(v["elements"].as_array().unwrap().len(), 14);
    assert_eq!(v["top"], "3412");
}

#[test]
fn enumerate_dot() {
    let out = run(&["enumerate", "--m", "2", "--n", "1", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("digraph"));
    assert!(text.contains("\"312 (2)\"") || text.contains("312 (2)"));
}

#[test]
fn generator_tables() {
    let rows = |y: &str| {
        let v = json(&["generators", "--m", "2", "--n", "2", "--y", y]);
        let entries = v["rows"].as_array().expect("rows").clone();
        entries
            .into_iter()
            .filter(|e| !e["duplicate"].as_bool().unwrap_or(false))
            .collect::<Vec<_>>()
    };
    let s2 = rows("1324");
    assert_eq!(s2.len(), 1);
    assert_eq!(s2[0]["quantum_minor"], "x11*x22 - q*x12*x21");
    assert_eq!(rows("3412").len(), 5);
    assert!(rows("1234").is_empty());
}

#[test]
fn verify_suites_pass() {
    for suite in ["poset", "rmatrix", "demazure", "poisson"] {
        let v = json(&["verify", "--suite", suite, "--m", "2", "--n", "2"]);
        assert_eq!(v["ok"], true, "{suite}");
    }
    let v = json(&["verify", "--suite", "rmatrix", "--m", "2", "--n", "2"]);
    for p in v["pairings"].as_array().unwrap() {
        assert!(p["scalar"]["num"].is_object());
    }
    assert_eq!(json(&["verify", "--suite", "all", "--m", "1", "--n", "1"])["ok"], true);
}

#[test]
fn classify_and_pairing() {
    let v = json(&["classify", "--m", "2", "--n", "2", "--matrix", "[[1,0],[0,1]]"]);
    assert_eq!(v["leaf"], "2143");
    let v = json(&["classify", "--m", "2", "--n", "2", "--matrix", "[[\"1/2\",0],[0,0]]"]);
    assert!(v["leaf"].is_string());
    let v = json(&["pairing", "--m", "2", "--n", "2", "--k", "2", "--index", "1,3"]);
    assert_eq!(v["ok"], true);
}

#[test]
fn byte_identical_reports() {
    let args = ["verify", "--suite", "poisson", "--m", "2", "--n", "2", "--seed", "7"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["verify", "--suite", "poisson", "--m", "2", "--n", "2", "--seed", "8"]);
    assert_ne!(a.stdout, c.stdout);
    let e = ["verify", "--suite", "poset", "--m", "2", "--n", "2"];
    assert_eq!(run(&e).stdout, run(&e).stdout);
}

#[test]
fn usage_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &["generators", "--m", "2", "--n", "2", "--y", "4321"],
        &["generators", "--m", "2", "--n", "2", "--y", "[3,1,4,2]"],
        &["enumerate", "--m", "5", "--n", "5"],
        &["enumerate", "--m", "0", "--n", "2"],
        &["verify", "--suite", "poset", "--format", "dot"],
        &["verify", "--suite", "bogus"],
        &["classify", "--m", "2", "--n", "2", "--matrix", "[[0.5,0],[0,1]]"],
        &["classify", "--m", "2", "--n", "2", "--matrix", "[[1,0,0],[0,1,0]]"],
        &["frobnicate"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn degree_bound_exceeded_exits_one() {
    let out = run(&["verify", "--suite", "poset", "--m", "2", "--n", "2", "--degree-bound", "1"]);
    assert_eq!(out.status.code(), Some(1));
}
