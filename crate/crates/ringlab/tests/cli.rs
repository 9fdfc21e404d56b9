//! End-to-end tests of the `ringlab` binary: exit codes, wire formats, and
//! byte-for-byte determinism.

use std::io::Write;
use std::process::{Command, Output};

fn ringlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ringlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_temp(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join("ringlab-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(format!("{}-{name}", std::process::id()));
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    path
}

#[test]
fn classify_z6_reports_clean() {
    let ring = write_temp("z6.json", r#"{"kind":"quotient_int","modulus":6}"#);
    let out = ringlab(&["classify", ring.to_str().unwrap()]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let labels: Vec<&str> = json["labels"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert!(labels.contains(&"clean"));
    assert!(labels.contains(&"gelfand"));
}

#[test]
fn classify_semilocal_excludes_gelfand() {
    let ring = write_temp("sl.json", r#"{"kind":"semilocal_int","primes":[2,3]}"#);
    let out = ringlab(&["classify", ring.to_str().unwrap()]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let labels: Vec<&str> = json["labels"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert!(!labels.contains(&"gelfand"));
    assert!(labels.contains(&"mp"));
}

#[test]
fn malformed_json_exits_2_with_diagnostic() {
    let ring = write_temp("bad.json", "{not json");
    let out = ringlab(&["classify", ring.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.starts_with("error[parse]:"), "got: {err}");
}

#[test]
fn bad_descriptor_exits_2_naming_the_field() {
    let ring = write_temp("bad-desc.json", r#"{"kind":"quotient_int","modulus":1}"#);
    let out = ringlab(&["classify", ring.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.starts_with("error[descriptor]:"));
    assert!(err.contains("modulus"));
}

#[test]
fn spectrum_json_of_z6_has_two_points_and_empty_order() {
    let ring = write_temp("z6s.json", r#"{"kind":"quotient_int","modulus":6}"#);
    let out = ringlab(&["spectrum", ring.to_str().unwrap(), "--format", "json"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["points"].as_array().unwrap().len(), 2);
    assert_eq!(json["order"].as_array().unwrap().len(), 0);
    assert_eq!(json["points"][0]["elements"], serde_json::json!([0, 2, 4]));
}

#[test]
fn spectrum_dot_of_semilocal_has_three_nodes_two_edges() {
    let ring = write_temp("sl-dot.json", r#"{"kind":"semilocal_int","primes":[2,3]}"#);
    let out = ringlab(&["spectrum", ring.to_str().unwrap(), "--format", "dot"]);
    assert!(out.status.success());
    let dot = String::from_utf8(out.stdout).unwrap();
    assert_eq!(dot.matches("label=").count(), 3);
    assert_eq!(dot.matches("->").count(), 2);
}

#[test]
fn poset_dual_swaps_the_fan() {
    let poset = write_temp(
        "v.json",
        r#"{"points":["p","m1","m2"],"le":[["p","m1"],["p","m2"]]}"#,
    );
    let out = ringlab(&["poset", poset.to_str().unwrap(), "--dual"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let le = json["le"].as_array().unwrap();
    assert_eq!(le.len(), 2);
    assert_eq!(le[0], serde_json::json!(["m1", "p"]));
}

#[test]
fn poset_classification_renders_verdicts() {
    let poset = write_temp(
        "lam.json",
        r#"{"points":["p1","p2","m"],"le":[["p1","m"],["p2","m"]]}"#,
    );
    let out = ringlab(&["poset", poset.to_str().unwrap(), "--classify"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(json["gelfand"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["verdict"] == true));
    assert!(json["mp"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["verdict"] == false));
}

#[test]
fn solve_emits_plan_and_assignment() {
    let ring = write_temp("z6-solve.json", r#"{"kind":"quotient_int","modulus":6}"#);
    let sys = write_temp(
        "sys.json",
        r#"{"vars":1,"polys":[{"terms":[{"coeff":1,"exp":[2]},{"coeff":2,"exp":[0]}]}]}"#,
    );
    let out = ringlab(&[
        "solve",
        "--ring",
        ring.to_str().unwrap(),
        "--system",
        sys.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    // x^2 + 2 = 0 mod 6 has the solutions 2 and 4
    assert_eq!(json["status"], "solved");
    assert_eq!(json["plan"]["idempotents"], serde_json::json!([3, 4]));
    let x = json["assignment"][0].as_u64().unwrap();
    assert!((x * x + 2) % 6 == 0);
}

#[test]
fn decompose_and_lift_round_trip() {
    let ring = write_temp("z12.json", r#"{"kind":"quotient_int","modulus":12}"#);
    let out = ringlab(&[
        "decompose",
        "--ring",
        ring.to_str().unwrap(),
        "--element",
        "5",
    ]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let e = json["idempotent"].as_u64().unwrap();
    let u = json["unit"].as_u64().unwrap();
    assert_eq!((e * e) % 12, e);
    assert_eq!((e + u) % 12, 5);

    let out = ringlab(&[
        "lift",
        "--ring",
        ring.to_str().unwrap(),
        "--ideal",
        "[6]",
        "--element",
        "3",
    ]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["idempotent"], 9);
}

#[test]
fn verify_small_corpus_is_deterministic_and_green() {
    let corpus = write_temp(
        "corpus.json",
        r#"{"quotient_int_max":12,"poly_primes":[2],"poly_max_degree":2,"product_max_arity":2,"product_max_size":24}"#,
    );
    let args = ["verify", "--corpus", corpus.to_str().unwrap()];
    let a = ringlab(&args);
    assert_eq!(a.status.code(), Some(0));
    let b = ringlab(&args);
    assert_eq!(a.stdout, b.stdout, "identical runs must be byte-identical");
    let table = String::from_utf8(a.stdout).unwrap();
    assert!(table.contains("agree"));
    assert!(!table.contains("DISAGREE"));
}

#[test]
fn verify_with_injected_fault_exits_1() {
    let corpus = write_temp(
        "corpus-fault.json",
        r#"{"quotient_int_max":6,"poly_primes":[],"poly_max_degree":0,"product_max_arity":1,"product_max_size":1,"semilocal_sets":[]}"#,
    );
    let out = ringlab(&[
        "verify",
        "--corpus",
        corpus.to_str().unwrap(),
        "--inject-fault",
        "gelfand:iii",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let table = String::from_utf8(out.stdout).unwrap();
    assert!(table.contains("DISAGREE"));
}

#[test]
fn unknown_format_exits_2() {
    let ring = write_temp("z6-fmt.json", r#"{"kind":"quotient_int","modulus":6}"#);
    let out = ringlab(&["spectrum", ring.to_str().unwrap(), "--format", "svg"]);
    assert_eq!(out.status.code(), Some(2));
}
