use std::fs;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_hopf-forest"));
    c.env_remove("HOPF_FOREST_MAX_DEGREE");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn heap_product() {
    let o = run(&["product", "--algebra", "HHO", "0(2() 1())", "0(1())"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        "1*0(1(3() 2())) + 1*0(2() 1(3())) + 1*0(3() 1(2())) + 1*0(3() 2() 1())"
    );
}

#[test]
fn product_is_deterministic() {
    let args = ["product", "--algebra", "HO", "(()(()))", "(()())"];
    let first = stdout(&run(&args));
    for _ in 0..3 {
        assert_eq!(stdout(&run(&args)), first);
    }
}

#[test]
fn phi_round_trip() {
    let o = run(&["bij", "--which", "phi", "213"]);
    assert_eq!(stdout(&o).trim(), "0(2() 1(3()))");
    let o = run(&["bij", "--which", "phi", "--inverse", "0(2() 1(3()))"]);
    assert_eq!(stdout(&o).trim(), "213");
}

#[test]
fn psi_round_trip() {
    let o = run(&["bij", "--which", "psi", "(L (L L))"]);
    let tree = stdout(&o).trim().to_string();
    let o = run(&["bij", "--which", "psi", "--inverse", &tree]);
    assert_eq!(stdout(&o).trim(), "(L (L L))");
}

#[test]
fn verify_axioms_passes() {
    let o = run(&["verify-axioms", "--algebra", "HO", "--max-degree", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    let last = out.lines().last().unwrap();
    assert!(last.starts_with("RESULT pass checked="), "{last}");
}

#[test]
fn verify_iso_emits_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    let o = run(&[
        "verify-iso",
        "--which",
        "phi",
        "--max-degree",
        "3",
        "--emit",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o)
        .lines()
        .last()
        .unwrap()
        .starts_with("RESULT pass"));
    let json: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    let certs = json["certificates"].as_array().unwrap();
    assert_eq!(certs.len(), 3);
    assert!(certs.iter().all(|c| c["unitriangular"] == true));
}

#[test]
fn json_eulerian() {
    let o = run(&[
        "--format",
        "json",
        "eulerian",
        "--algebra",
        "HHO",
        "0(2() 1(3()))",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let terms = v.as_array().unwrap();
    assert_eq!(terms.len(), 5);
    let lead = terms
        .iter()
        .find(|t| t["basis"] == "0(2() 1(3()))")
        .unwrap();
    assert_eq!(lead["coeff"], "1");
}

#[test]
fn coradical_level_json() {
    let o = run(&[
        "--format",
        "json",
        "coradical-level",
        "--algebra",
        "HHO",
        "0(3() 2() 1())",
    ]);
    assert_eq!(stdout(&o).trim(), r#"{"level":3}"#);
}

#[test]
fn enumerate_counts() {
    let o = run(&["enumerate", "heap", "3"]);
    assert_eq!(stdout(&o).lines().count(), 6);
    let o = run(&["enumerate", "ordered", "3"]);
    assert_eq!(stdout(&o).lines().count(), 5);
}

#[test]
fn errors_exit_two() {
    let o = run(&["enumerate", "heap", "99"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("cap"));
    let o = run(&["coproduct", "--algebra", "HHO", "0(1(2()) 3())"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("heap-order"));
    let o = run(&["bogus"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn env_cap() {
    let o = bin()
        .args(["enumerate", "ordered", "4"])
        .env("HOPF_FOREST_MAX_DEGREE", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn config_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hopf.toml");
    fs::write(&path, "tree_cap = 2\n").unwrap();
    let o = run(&[
        "--config",
        path.to_str().unwrap(),
        "enumerate",
        "ordered",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(2));
    fs::write(&path, "colour = 1\n").unwrap();
    let o = run(&[
        "--config",
        path.to_str().unwrap(),
        "enumerate",
        "ordered",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn structure_constants_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("qsym.csv");
    let o = run(&[
        "--output",
        path.to_str().unwrap(),
        "export-structure-constants",
        "--algebra",
        "QSYM",
        "--max-degree",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = fs::read_to_string(&path).unwrap();
    assert_eq!(
        text.lines().next().unwrap(),
        "degA,basisA,degB,basisB,basisOut,coeff"
    );
    assert!(text.contains("1,(1),1,(1),(2),1"));
}
