use std::process::{Command, Output};

use serde_json::Value;

const SMALL: [&str; 8] = ["--k", "1", "--l", "1", "--m", "2", "--n", "2"];
const LARGE: [&str; 8] = ["--k", "1", "--l", "2", "--m", "3", "--n", "3"];

fn nugrass(dims: &[&str], args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nugrass")).args(dims).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn atlas_counts() {
    let out = nugrass(&LARGE, &["--json", "atlas"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["count"], 20);
    assert_eq!(v["standard"], 9);
    assert_eq!(v["charts"].as_array().unwrap().len(), 20);

    let v = json(&nugrass(&SMALL, &["--json", "atlas"]));
    assert_eq!(v["count"], 6);
    assert!(stdout(&nugrass(&SMALL, &["atlas"])).starts_with("G_{1|1}(2|2): 6 charts"));
}

#[test]
fn bad_dimensions_are_usage_errors() {
    let out = nugrass(&["--k", "4", "--l", "0", "--m", "3", "--n", "1"], &["atlas"]);
    assert_eq!(out.status.code(), Some(2));
    let out = nugrass(&["--k", "1"], &["atlas"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--l"));
}

#[test]
fn labels_match_goldens() {
    let golden = |name: &str| std::fs::read_to_string(format!("../core/tests/golden/{name}")).unwrap();
    for (i, r, file) in [("2", "1,3", "label_2_13.txt"), ("", "1,2,3", "label__123.txt"), ("2,3", "1", "label_23_1.txt")] {
        let out = nugrass(&LARGE, &["label", "--I", i, "--R", r]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(stdout(&out), golden(file), "{i}|{r}");
    }
}

#[test]
fn transitions() {
    let v = json(&nugrass(&LARGE, &["--json", "transition", "--from", "1|1,2", "--to", "1|1,2"]));
    assert_eq!(v["status"], "ok");
    for row in v["table"].as_array().unwrap() {
        assert_eq!(row["generator"], row["image"]);
    }

    let out = nugrass(&LARGE, &["--json", "transition", "--from", "2|1,3", "--to", "2,3|1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["status"], "empty-overlap");

    let out = nugrass(&LARGE, &["transition", "--from", "4|1", "--to", "1|1,2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    // Standard triples of the small space all close up; mixed pairs do not.
    let out = nugrass(&SMALL, &["--triples", "standard-only", "verify", "cocycle"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL cocycle.pair"));
    assert!(text.lines().last().unwrap().starts_with("FAIL: "));

    let out = nugrass(&LARGE, &["--nu", "shift", "--json", "--triples", "sample:5", "verify", "bundle"]);
    let v = json(&out);
    assert_eq!(v["nu"]["name"], "shift");
    assert_eq!(out.status.code(), Some(if v["totals"]["fail"] == 0 { 0 } else { 1 }));

    assert_eq!(nugrass(&SMALL, &["--triples", "some", "verify", "all"]).status.code(), Some(2));
}

#[test]
fn nu_files() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("swap.json");
    std::fs::write(&good, r#"{"permutation": [1, 0]}"#).unwrap();
    let out = nugrass(&SMALL, &["--nu", good.to_str().unwrap(), "--json", "verify", "reduced", "--samples", "8"]);
    assert_ne!(out.status.code(), Some(2));
    assert_eq!(json(&out)["nu"]["beta"], 2);

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"permutation": [0, 1, 2]}"#).unwrap();
    assert_eq!(nugrass(&SMALL, &["--nu", bad.to_str().unwrap(), "atlas"]).status.code(), Some(0));
    assert_eq!(nugrass(&SMALL, &["--nu", bad.to_str().unwrap(), "verify", "cocycle"]).status.code(), Some(2));
    let missing = dir.path().join("nope.json");
    assert_eq!(nugrass(&SMALL, &["--nu", missing.to_str().unwrap(), "verify", "cocycle"]).status.code(), Some(2));
}

#[test]
fn out_file_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let args = |path: &std::path::Path| {
        let p = path.to_str().unwrap().to_string();
        vec!["--json".to_string(), "--samples".into(), "16".into(), "--out".into(), p, "verify".into(), "all".into()]
    };
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for path in [&a, &b] {
        let argv = args(path);
        let argv: Vec<&str> = argv.iter().map(String::as_str).collect();
        let out = nugrass(&SMALL, &argv);
        assert!(out.stdout.is_empty());
        assert_eq!(out.status.code(), Some(1));
    }
    let (a, b) = (std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
    assert!(!a.is_empty());
    assert_eq!(a, b);
}
