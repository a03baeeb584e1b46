use std::path::PathBuf;
use std::process::{Command, Output};

use reidemeister_cli::catalog;
use reidemeister_cli::document::SpaceDocument;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_reidemeister"))
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("reidemeister-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn chain_complex_document() {
    let doc = scratch(
        "double.json",
        r#"{"schema_version": 1, "space": {"chain_complex": {"dims": [1, 1], "boundaries": [[["2"]]]}}}"#,
    );
    let o = run(&["--json", "torsion", doc.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(json(&o)["torsion"], "2");
}

#[test]
fn cone_over_circle() {
    let o = run(&["generate", "cone", "sphere", "1", "--stratify-apex"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = scratch("cone.json", &stdout(&o));
    for p in ["lower-middle", "upper-middle"] {
        let o = run(&["--json", "ih-torsion", doc.to_str().unwrap(), "--perversity", p]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        assert_eq!(json(&o)["torsion"], "1");
    }
}

#[test]
fn exit_codes() {
    let malformed = scratch("malformed.json", "{ not json");
    assert_eq!(run(&["torsion", malformed.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["generate", "klein", "3"]).status.code(), Some(2));
    assert_eq!(run(&["torsion", "/nonexistent/doc.json"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(2));
    let version = scratch("version.json", r#"{"schema_version": 99, "space": {"generator": {"kind": "point"}}}"#);
    assert_eq!(run(&["torsion", version.to_str().unwrap()]).status.code(), Some(2));
    // A zero vector cannot represent the class of a point.
    let bad_basis = scratch(
        "bad_basis.json",
        r#"{"schema_version": 1, "space": {"generator": {"kind": "simplex", "n": 1}}, "homology_basis": [[["0", "0"]], []]}"#,
    );
    assert_eq!(run(&["torsion", bad_basis.to_str().unwrap()]).status.code(), Some(3));
}

#[test]
fn homology_basis_scales_torsion() {
    let doc = scratch(
        "scaled.json",
        r#"{"schema_version": 1, "space": {"generator": {"kind": "simplex", "n": 1}}, "homology_basis": [[["3", "0"]], []]}"#,
    );
    let o = run(&["--json", "torsion", doc.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(json(&o)["torsion"], "3");
}

#[test]
fn generate_is_byte_stable() {
    let a = run(&["generate", "product", "circle:3", "cone:sphere:1"]);
    let b = run(&["generate", "product:circle:3:cone:sphere:1"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let doc = SpaceDocument::from_json(&stdout(&a)).unwrap();
    assert_eq!(doc.to_json(), stdout(&a));
}

#[test]
fn catalog_documents_round_trip() {
    for (name, k) in catalog::smooth() {
        let doc = SpaceDocument::explicit(name.to_string(), &k);
        let text = doc.to_json();
        let back = SpaceDocument::from_json(&text).unwrap();
        assert_eq!(back.to_json(), text, "{name}");
        let resolved = back.resolve().unwrap();
        assert_eq!(resolved.name, name);
    }
}

#[test]
fn verify_is_deterministic_across_workers() {
    let args = ["--json", "verify", "gluing", "--seed", "7", "--random-covers", "2"];
    let one = bin().args(args).env("REIDEMEISTER_WORKERS", "1").output().unwrap();
    let four = bin().args(args).env("REIDEMEISTER_WORKERS", "4").output().unwrap();
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    let report = json(&one);
    assert_eq!(report["summary"]["failed"], 0);
    assert!(report["summary"]["passed"].as_u64().unwrap() >= 10);
    let bad = bin().args(args).env("REIDEMEISTER_WORKERS", "zero").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn verify_with_user_document() {
    let o = run(&["generate", "cone", "sphere", "2", "--stratify-apex"]);
    let doc = scratch("cone2.json", &stdout(&o));
    let o = run(&["verify", "main-theorem", "--doc", doc.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("0 failed"));
}
