use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

const SMALL: &[&str] = &["--max-vertices", "3", "--max-arrows", "3", "--max-dim", "2"];

fn arform(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arform")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&arform(&["suite", "no-such-suite"])), 2);
    assert_eq!(code(&arform(&["--field", "fp:8", "suite", "euler"])), 2);
    assert_eq!(code(&arform(&["--field", "r", "suite", "euler"])), 2);
    assert_eq!(code(&arform(&["theorem", "/nonexistent/instance.json"])), 2);
    assert_eq!(code(&arform(&["--max-dim", "0", "suite", "euler"])), 2);
    assert_eq!(code(&arform(&["frobnicate"])), 2);
}

#[test]
fn passing_suite_exits_0() {
    let mut args = vec!["suite", "euler", "--trials", "20"];
    args.extend_from_slice(SMALL);
    let out = arform(&args);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("PASS euler"));
}

#[test]
fn reports_are_byte_identical_across_runs_and_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let files: Vec<_> = (0..3).map(|i| dir.path().join(format!("r{i}.json"))).collect();
    for (f, jobs) in files.iter().zip(["1", "1", "2"]) {
        let mut args = vec!["suite", "perfect", "--trials", "8", "--seed", "11", "--jobs", jobs, "--json", path(f)];
        args.extend_from_slice(SMALL);
        assert_eq!(code(&arform(&args)), 0);
    }
    let a = fs::read(&files[0]).unwrap();
    assert_eq!(a, fs::read(&files[1]).unwrap());
    assert_eq!(a, fs::read(&files[2]).unwrap());
    let v: Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["passed"], 8);
    assert!(v.get("wall_ms").is_none());
}

#[test]
fn seed_changes_instances() {
    let mut a = vec!["gen", "--suite", "euler", "--seed", "1"];
    a.extend_from_slice(SMALL);
    let mut b = vec!["gen", "--suite", "euler", "--seed", "2"];
    b.extend_from_slice(SMALL);
    assert_ne!(stdout(&arform(&a)), stdout(&arform(&b)));
    assert_eq!(stdout(&arform(&a)), stdout(&arform(&a)));
}

#[test]
fn generated_theorem_instances_verify() {
    let dir = tempfile::tempdir().unwrap();
    let mut equal = 0;
    for t in 0..12 {
        let file = dir.path().join(format!("t{t}.json"));
        let trial = t.to_string();
        let mut args = vec!["gen", "--suite", "theorem", "--trial", &trial, "--json", path(&file)];
        args.extend_from_slice(SMALL);
        assert_eq!(code(&arform(&args)), 0);
        let out = arform(&["theorem", path(&file)]);
        assert_eq!(code(&out), 0, "{}", stdout(&out));
        let text = stdout(&out);
        assert!(text.contains("EQUAL") || text.starts_with("SKIPPED"), "{text}");
        equal += usize::from(text.contains("\nEQUAL"));
        assert_eq!(code(&arform(&["replay", path(&file)])), 0);
    }
    assert!(equal > 0);
}

#[test]
fn tau_of_a2_simples() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("a2.json");
    let out = dir.path().join("out.json");
    fs::write(&file, r#"{"quiver": {"vertices": 2, "arrows": [[0, 1]]}, "reps": {"x": {"dims": [0, 1], "mats": [[]]}}}"#)
        .unwrap();
    assert_eq!(code(&arform(&["--field", "q", "tau", path(&file), "--json", path(&out)])), 0);
    let v: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["tau_minus"]["dims"], serde_json::json!([1, 0]));
    assert_eq!(v["tau"]["dims"], serde_json::json!([0, 0]));
}

#[test]
fn ext_and_pairing_on_kronecker() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("k.json");
    let out = dir.path().join("out.json");
    fs::write(
        &file,
        r#"{"quiver": {"vertices": 2, "arrows": [[0, 1], [0, 1]]},
            "reps": {"x": {"dims": [1, 0], "mats": [[], []]}, "y": {"dims": [0, 1], "mats": [[], []]}}}"#,
    )
    .unwrap();
    assert_eq!(code(&arform(&["ext", path(&file), "--json", path(&out)])), 0);
    let v: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!((v["hom_dim"].as_u64(), v["ext_dim"].as_u64(), v["euler"].as_i64()), (Some(0), Some(2), Some(-2)));
    assert_eq!(code(&arform(&["pairing", path(&file), "--json", path(&out)])), 0);
    let v: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["rank"], 2);
    assert_eq!(v["perfect"], true);
}

#[test]
fn theorem_rejects_injective_summands() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("inj.json");
    // X = S_0 is injective on 0 -> 1
    fs::write(
        &file,
        r#"{"quiver": {"vertices": 2, "arrows": [[0, 1]]},
            "reps": {"x": {"dims": [1, 0], "mats": [[]]}, "y": {"dims": [0, 1], "mats": [[]]}},
            "data": {}}"#,
    )
    .unwrap();
    let out = arform(&["theorem", path(&file)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("SKIPPED"));
}

#[test]
fn malformed_replay_data_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.json");
    let mut args = vec!["gen", "--suite", "tau-inverse", "--json", path(&file)];
    args.extend_from_slice(SMALL);
    assert_eq!(code(&arform(&args)), 0);
    let mut v: Value = serde_json::from_str(&fs::read_to_string(&file).unwrap()).unwrap();
    v["data"]["f"]["maps"] = serde_json::json!([[1, 2, 3]]);
    fs::write(&file, v.to_string()).unwrap();
    assert_eq!(code(&arform(&["replay", path(&file)])), 2);
}
