use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn qcosine(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcosine")).args(args).output().expect("binary runs")
}

fn ok_json(args: &[&str]) -> Value {
    let out = qcosine(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn code(args: &[&str]) -> i32 {
    qcosine(args).status.code().expect("exit code")
}

fn f(v: &Value) -> f64 {
    v.as_f64().expect("number")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("qcosine-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn dog_cat_exact() {
    let (dog, cat) = (fixture("dog.json"), fixture("cat.json"));
    let v = ok_json(&["similarity", s(&dog), s(&cat), "--mode", "exact"]);
    let q = &v["quantum"];
    assert!((f(&q["re"]) - 0.8806).abs() < 5e-5);
    assert!((f(&q["im"]) + 0.3451).abs() < 5e-5);
    assert!((f(&v["classical"]["re"]) - f(&q["re"])).abs() < 1e-10);
    assert!(f(&v["delta"]) < 1e-10);
    assert_eq!(q["method"], "exact");
    assert!((f(&v["magnitude"]) - f(&q["re"]).hypot(f(&q["im"]))).abs() < 1e-12);
}

#[test]
fn identical_files_give_one() {
    let dog = fixture("dog.json");
    let v = ok_json(&["similarity", s(&dog), s(&dog)]);
    assert!((f(&v["quantum"]["re"]) - 1.0).abs() < 1e-12);
    assert!(f(&v["quantum"]["im"]).abs() < 1e-12);
}

#[test]
fn sampled_run_is_deterministic_and_close() {
    let (dog, cat) = (fixture("dog.json"), fixture("cat.json"));
    let args = ["similarity", s(&dog), s(&cat), "--mode", "shots", "--shots", "10000", "--seed", "7"];
    let first = qcosine(&args);
    let second = qcosine(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);

    let v: Value = serde_json::from_slice(&first.stdout).unwrap();
    let q = &v["quantum"];
    assert_eq!(q["method"], "shots");
    assert_eq!(q["shots"], 10000);
    assert_eq!(q["seed"], 7);
    let (se_re, se_im) = (f(&q["stderr_re"]), f(&q["stderr_im"]));
    assert!(se_re > 0.0 && se_im > 0.0);
    assert!((f(&q["re"]) - f(&v["classical"]["re"])).abs() <= 4.0 * se_re);
    assert!((f(&q["im"]) - f(&v["classical"]["im"])).abs() <= 4.0 * se_im);
}

#[test]
fn synthetic_pair_csv_with_mitigation() {
    let (a, b) = (fixture("synth128_a.json"), fixture("synth128_b.json"));
    let out = qcosine(&[
        "similarity",
        s(&a),
        s(&b),
        "--mode",
        "shots",
        "--noise-flip",
        "0.02",
        "--mitigate",
        "--output",
        "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    let header: Vec<_> = lines.next().unwrap().split(',').collect();
    let row: Vec<_> = lines.next().unwrap().split(',').collect();
    assert_eq!(header.len(), row.len());
    let col = |name: &str| row[header.iter().position(|h| *h == name).unwrap()];
    let num = |name: &str| col(name).parse::<f64>().unwrap();
    assert_eq!(col("method"), "shots");
    assert_eq!(num("classical_im"), 0.0);
    assert_eq!(num("quantum_im"), 0.0);
    assert!((num("quantum_re") - num("classical_re")).abs() <= 5.0 * num("stderr_re"));
}

#[test]
fn json_numbers_reparse_exactly() {
    let (dog, cat) = (fixture("dog.json"), fixture("cat.json"));
    let v = ok_json(&["similarity", s(&dog), s(&cat)]);
    let text = serde_json::to_string(&v).unwrap();
    let again: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v, again);
    assert_eq!(f(&v["quantum"]["re"]).to_bits(), f(&again["quantum"]["re"]).to_bits());
}

#[test]
fn bad_configuration_exits_3() {
    let (dog, cat) = (fixture("dog.json"), fixture("cat.json"));
    let base = ["similarity", s(&dog), s(&cat)];
    for extra in [
        &["--mode", "nonsense"][..],
        &["--shots", "0", "--mode", "shots"],
        &["--noise-flip", "0.5"],
        &["--noise-flip", "-0.1"],
        &["--mitigate"],
        &["--output", "xml"],
    ] {
        let args: Vec<&str> = base.iter().chain(extra).copied().collect();
        assert_eq!(code(&args), 3, "{extra:?}");
    }
}

#[test]
fn bad_input_exits_2() {
    let dog = fixture("dog.json");
    let three = temp_file("three.json", r#"{"kind":"real","values":[1,0,0]}"#);
    let broken = temp_file("broken.json", "{");
    assert_eq!(code(&["similarity", s(&dog), s(&three)]), 2);
    assert_eq!(code(&["similarity", s(&dog), s(&broken)]), 2);
    assert_eq!(code(&["similarity", s(&dog), "/nonexistent/file.json"]), 2);
    assert_eq!(code(&["analyze", s(&dog), s(&three)]), 2);
}

#[test]
fn truncation() {
    let (a, b) = (fixture("synth128_a.json"), fixture("synth128_b.json"));
    let v = ok_json(&["similarity", s(&a), s(&b), "--truncate", "64"]);
    assert!(f(&v["delta"]) < 1e-10);
    assert_eq!(code(&["similarity", s(&a), s(&b), "--truncate", "0"]), 2);
    assert_eq!(code(&["similarity", s(&a), s(&b), "--truncate", "129"]), 2);
}

#[test]
fn analyze_dog_cat() {
    let (dog, cat) = (fixture("dog.json"), fixture("cat.json"));
    let v = ok_json(&["analyze", s(&dog), s(&cat)]);
    assert!((f(&v["trace"]) - 1.0).abs() < 1e-9);
    let spectrum = v["spectrum"].as_array().unwrap();
    assert!((f(&spectrum[0]["eigenvalue"]) - 0.795).abs() < 1e-12);
    assert!((f(&spectrum[1]["eigenvalue"]) - 0.205).abs() < 1e-12);
    assert_eq!(spectrum[0]["index"], 1);

    let v = ok_json(&["analyze", s(&dog), s(&dog)]);
    let diag = v["diagonal"].as_array().unwrap();
    assert!((f(&diag[0]) - 0.16).abs() < 1e-12);
    assert!((f(&diag[1]) - 0.84).abs() < 1e-12);
}

fn csv_rows(text: &str) -> Vec<Vec<f64>> {
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("delta_phase,intensity,p0,p1"));
    lines.map(|l| l.split(',').map(|x| x.parse().unwrap()).collect()).collect()
}

#[test]
fn double_slit_three_steps() {
    let out = qcosine(&["double-slit", "--A", "0.7071", "--B", "0.7071", "--steps", "3"]);
    assert!(out.status.success());
    let rows = csv_rows(&String::from_utf8(out.stdout).unwrap());
    assert_eq!(rows.len(), 3);
    let pi = std::f64::consts::PI;
    for (row, (delta, intensity, p0)) in
        rows.iter().zip([(-pi, 0.0, 0.0), (0.0, 1.99996164, 1.0), (pi, 0.0, 0.0)])
    {
        assert!((row[0] - delta).abs() < 1e-12);
        assert!((row[1] - intensity).abs() < 1e-6);
        assert!((row[2] - p0).abs() < 1e-4);
        assert!((row[2] + row[3] - 1.0).abs() < 1e-12);
    }
}

#[test]
fn double_slit_unequal_slits() {
    let out = qcosine(&["double-slit", "--A", "0.6", "--B", "0.8", "--steps", "101"]);
    assert!(out.status.success());
    let rows = csv_rows(&String::from_utf8(out.stdout).unwrap());
    assert_eq!(rows.len(), 101);
    for row in &rows {
        let expected = 0.36 + 0.64 + 2.0 * 0.48 * row[0].cos();
        assert!((row[1] - expected.max(0.0)).abs() < 1e-12);
        assert!((row[2] + row[3] - 1.0).abs() < 1e-12);
    }
    assert!((rows[50][1] - 1.96).abs() < 1e-12);
}

#[test]
fn double_slit_bad_config() {
    assert_eq!(code(&["double-slit", "--A", "1", "--B", "1", "--steps", "1"]), 3);
    assert_eq!(code(&["double-slit", "--A", "-1", "--B", "1"]), 3);
    assert_eq!(code(&["double-slit", "--A", "0", "--B", "0"]), 3);
}

#[test]
fn pack_roundtrip() {
    let unit = temp_file("unit.json", r#"{"kind":"real","values":[1.0,0.0]}"#);
    let out = qcosine(&["pack", s(&unit), "--direction", "to-complex"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), r#"{"kind":"complex","values":[[1.0,0.0]]}"#);

    let a = fixture("synth128_a.json");
    let packed = qcosine(&["pack", s(&a), "--direction", "to-complex"]);
    assert!(packed.status.success());
    let packed = temp_file("packed.json", std::str::from_utf8(&packed.stdout).unwrap());
    let back = ok_json(&["pack", s(&packed), "--direction", "to-real"]);
    let orig: Value = serde_json::from_str(&std::fs::read_to_string(&a).unwrap()).unwrap();
    let (x, y) = (orig["values"].as_array().unwrap(), back["values"].as_array().unwrap());
    assert_eq!(x.len(), y.len());
    for (p, q) in x.iter().zip(y) {
        assert!((f(p) - f(q)).abs() <= 1e-12);
    }
}

#[test]
fn pack_rejects_bad_input() {
    let odd = temp_file("odd.json", r#"{"kind":"real","values":[1.0,0.0,0.0]}"#);
    assert_eq!(code(&["pack", s(&odd), "--direction", "to-complex"]), 2);
    assert_eq!(code(&["pack", s(&fixture("dog.json")), "--direction", "to-complex"]), 2);
}
