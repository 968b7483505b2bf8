use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_edgeideal"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf-8"),
        String::from_utf8(out.stderr).expect("utf-8"),
    )
}

fn json(args: &[&str]) -> Value {
    let (code, stdout, stderr) = run(args);
    assert_eq!(code, 0, "{args:?}: {stderr}");
    serde_json::from_str(&stdout).expect("JSON output")
}

#[test]
fn family_outputs() {
    let v = json(&["family", "anti_d_path", "--n", "7", "--d", "2"]);
    assert_eq!(v["ideal"]["gens"].as_array().unwrap().len(), 10);
    assert_eq!(v["graph"]["edges"][0], serde_json::json!([1, 4]));
    let v = json(&["family", "lexseg_final", "--u", "x2x4", "--n", "4"]);
    assert_eq!(v["generators"], serde_json::json!(["x2x4", "x3x4"]));
}

#[test]
fn betti_methods() {
    let v = json(&["betti", "anti_d_path", "--n", "7", "--d", "2", "--k", "1", "--method", "both"]);
    assert_eq!(v["agree"], true);
    assert_eq!(v["formula"]["graded"]["3,5"], 4);
    let (code, stdout, _) = run(&["betti", "lexseg_final", "--u", "x2x4", "--n", "5", "--k", "2", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("i,formula,oracle\n"));
    let (code, _, stderr) = run(&["betti", "ideal", "--n", "4", "--gens", "x1x2,x3x4", "--order", "given"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("not linear quotients at position 2"));
}

#[test]
fn power_and_ass() {
    let v = json(&["power", "star", "--n", "3", "--k", "2"]);
    assert_eq!(v["count"], 3);
    let v = json(&["ass", "anti_d_path", "--n", "5", "--d", "1", "--K", "3"]);
    assert_eq!(v["first_change"], 2);
    assert_eq!(v["chain"]["2"].as_array().unwrap().len(), 5);
    let v = json(&["ass", "star", "--n", "3", "--K", "2"]);
    assert_eq!(v["constant"], true);
    assert_eq!(v["chain"]["1"], serde_json::json!([[1], [2, 3]]));
    assert_eq!(run(&["ass", "anti_d_path", "--n", "2", "--d", "1"]).0, 2);
}

#[test]
fn ntf_and_witness() {
    let v = json(&["ntf", "anti_d_path", "--n", "6", "--d", "2"]);
    assert_eq!(v["status"], "certified_by_bipartite");
    assert_eq!(v["evidence"]["part1"], serde_json::json!([1, 2, 3]));
    let v = json(&["witness", "--n", "7", "--d", "2", "--k", "2"]);
    assert_eq!(v["display"], "x1x4x7");
}

#[test]
fn verify_suites_and_exit_codes() {
    let v = json(&["verify", "audits", "--family", "star", "--n", "3", "--t", "2"]);
    assert_eq!(v["ok"], true);
    assert_eq!(v["checks"][0]["status"], "documented-discrepancy");
    let v = json(&["verify", "antipath", "--n-max", "6", "--d-max", "2", "--k-max", "2"]);
    assert_eq!(v["failed"], 0);
    assert_eq!(run(&["verify", "nonsense"]).0, 2);
    assert_eq!(run(&["family", "star"]).0, 2);
    assert_eq!(run(&["betti", "anti_d_path", "--n", "30", "--d", "1"]).0, 2);
}

#[test]
fn output_file_and_determinism() {
    let dir = std::env::temp_dir().join(format!("edgeideal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("chain.json");
    let (code, stdout, _) = run(&["ass", "star", "--n", "4", "--output", path.to_str().unwrap()]);
    assert_eq!((code, stdout.as_str()), (0, ""));
    let written = std::fs::read_to_string(&path).unwrap();
    let (_, again, _) = run(&["ass", "star", "--n", "4"]);
    assert_eq!(written, again);
    std::fs::remove_dir_all(&dir).unwrap();
}
