use std::path::Path;
use std::process::{Command, Output};

fn cusplump(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cusplump")).args(args).output().unwrap()
}

fn ok(o: &Output) -> String {
    assert!(o.status.success(), "{}\n{}", String::from_utf8_lossy(&o.stdout), String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn p(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

#[test]
fn semigroup_report() {
    let v: serde_json::Value = serde_json::from_str(&ok(&cusplump(&["semigroup", "--gens", "4,5,6"]))).unwrap();
    assert_eq!(v["gaps"], serde_json::json!([1, 2, 3, 7]));
    assert_eq!(v["gorenstein"], true);
}

#[test]
fn bicuspidal_files() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let th = p(d, "theta.json");
    let tau = p(d, "tau.json");
    let out = ok(&cusplump(&["theta", "--curve", "builtin:bicuspidal", "--basis", "builtin:bicuspidal", "--out", &th]));
    assert!(out.contains("leading    PASS Z1^3*Z3^3"), "{out}");
    ok(&cusplump(&["tau", "--theta", &th, "--curve", "builtin:bicuspidal", "--out", &tau]));
    let out = ok(&cusplump(&["verify", "--tau", &tau, "--checks", "reality,sos"]));
    assert!(out.contains("sos        PASS constant 513/8"), "{out}");

    let lumps = p(d, "lumps.json");
    ok(&cusplump(&["lumps", "--tau", &tau, "--times", "-1.375", "--out", &lumps]));
    let text = std::fs::read_to_string(&lumps).unwrap();
    assert!(text.contains("\"count\": 3"), "{text}");

    let csv = p(d, "u.csv");
    ok(&cusplump(&["evaluate", "--tau", &tau, "--nx", "3", "--ny", "2", "--out", &csv]));
    assert_eq!(std::fs::read_to_string(&csv).unwrap().lines().count(), 7);

    let bad = cusplump(&["evaluate", "--tau", &tau, "--times", "", "--out", &csv]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn failing_check_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let out = cusplump(&["pipeline", "--curve", "builtin:monomial456", "--out-dir", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("membership PASS") && text.contains("tau        FAIL"), "{text}");
    assert!(dir.path().join("theta.json").exists());
}

#[test]
fn unknown_builtin() {
    let out = cusplump(&["differentials", "--curve", "builtin:nope"]);
    assert_eq!(out.status.code(), Some(2));
}
