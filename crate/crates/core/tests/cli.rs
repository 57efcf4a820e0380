//! The `koszul` binary: exit codes, output formats and reproducibility.

use std::process::{Command, Output};

fn koszul(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_koszul"))
        .args(args)
        .env_remove("KOSZUL_DEGREE_BUDGET")
        .output()
        .expect("binary runs")
}

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn info_reports_class_flags() {
    let o = koszul(&["info", "--family", "butterfly"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("overlap_free = false"));
    let o = koszul(&["info", "--family", "star", "--n", "6"]);
    assert!(stdout(&o).contains("triangle_free = true"));
    let o = koszul(&["info", "--edges", &data("path4.txt"), "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["graph"]["edges"], serde_json::json!([[2, 1], [3, 2], [4, 3]]));
}

#[test]
fn input_errors_exit_2() {
    let o = koszul(&["info", "--edges", &data("loop.txt")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 5"));
    assert_eq!(koszul(&["info", "--graph6", "B~~"]).status.code(), Some(2));
    assert_eq!(
        koszul(&["info", "--edges", &data("missing.txt")]).status.code(),
        Some(2)
    );
    assert_eq!(
        koszul(&["hilbert", "--family", "cycle", "--n", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(koszul(&["verify", "dim3", "--degree", "12"]).status.code(), Some(2));
    assert_eq!(koszul(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn hilbert_methods() {
    let o = koszul(&[
        "hilbert",
        "--family",
        "line",
        "--n",
        "3",
        "--algebra",
        "bdual",
        "--method",
        "formula",
    ]);
    assert_eq!(stdout(&o), "1 + 5z + 5z^2 + z^3\n");
    let o = koszul(&[
        "hilbert",
        "--family",
        "triangle",
        "--algebra",
        "q",
        "--method",
        "inversion",
        "--degree",
        "3",
    ]);
    assert_eq!(stdout(&o), "1 + 6z + 31z^2 + 157z^3\n");
    let o = koszul(&[
        "hilbert",
        "--family",
        "triangle",
        "--algebra",
        "q",
        "--method",
        "gb",
        "--degree",
        "3",
    ]);
    assert_eq!(stdout(&o), "1 + 6z + 31z^2 + 157z^3\n");
    let o = koszul(&[
        "hilbert",
        "--graph6",
        "Bw",
        "--algebra",
        "qdual",
        "--method",
        "inversion",
    ]);
    assert_eq!(stdout(&o), "1 + 6z + 5z^2 + z^3\n");
    let o = koszul(&["hilbert", "--family", "butterfly", "--method", "formula"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn forced_formula_outside_the_class_reports_agreement() {
    let o = koszul(&[
        "hilbert", "--family", "diamond", "--method", "formula", "--force", "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["agree"].is_boolean());
    assert_eq!(v["gb"].as_array().unwrap().len(), 5);
}

#[test]
fn hilbert_json_golden() {
    let o = koszul(&[
        "hilbert", "--family", "line", "--n", "3", "--method", "formula", "--json",
    ]);
    let expected = include_str!("golden/hilbert_path3_formula.json");
    assert_eq!(stdout(&o), expected);
}

#[test]
fn verify_exit_codes_and_stable_json() {
    let a = koszul(&["verify", "palindrome", "--max-n", "5", "--json"]);
    let b = koszul(&["verify", "palindrome", "--max-n", "5", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["suite"], "palindrome");
    let o = koszul(&["verify", "dim3", "--max-n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("dim3: 33 graphs, 0 failing, pass\n"));
    let o = koszul(&["verify", "gb-quadratic", "--max-n", "3"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn degree_budget_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_koszul"))
        .args(["hilbert", "--family", "line", "--n", "3", "--algebra", "q"])
        .env("KOSZUL_DEGREE_BUDGET", "2")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(o.stdout).unwrap(), "1 + 5z + 20z^2\n");
    let o = Command::new(env!("CARGO_BIN_EXE_koszul"))
        .args(["verify", "koszul", "--max-n", "3"])
        .env("KOSZUL_DEGREE_BUDGET", "lots")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
