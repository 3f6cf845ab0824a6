use std::process::Command;

use serde_json::Value;

fn bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_kirchhoff")).args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let (code, stdout, stderr) = bin(&full);
    assert!(code != 2, "{stderr}");
    (code, serde_json::from_str(&stdout).expect("valid json"))
}

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn kirchhoff_builtin_and_file_agree_on_deletion() {
    let (code, full) = json(&["kirchhoff", "K4"]);
    assert_eq!(code, 0);
    assert_eq!(full["results"][0]["terms"], 16);
    assert_eq!(full["results"][0]["match"], true);
    let (_, deleted) = json(&["kirchhoff", "K4", "--delete", "2-3"]);
    let (_, file) = json(&["kirchhoff", "--file", &data("k4_minus_23.txt")]);
    assert_eq!(deleted["results"][0]["matrix_tree"], file["results"][0]["matrix_tree"]);
    assert_eq!(file["results"][0]["spanning_trees"], 8);
}

#[test]
fn hessian_identity_r3_symbolic() {
    let (code, v) = json(&["hessian-identity", "--r", "3", "--mode", "symbolic"]);
    assert_eq!(code, 0);
    let details = &v["results"][0]["details"];
    assert_eq!(details["constant"], "-16/1");
    assert_eq!(details["exponent"], 2);
    assert_eq!(v["verdict"], true);
}

#[test]
fn slp_k4_at_ones() {
    let (code, v) = json(&["slp", "--graph", "K4", "--point", "1,1,1,1,1,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"][0]["slp"], true);
    assert_eq!(v["results"][0]["inertia"], serde_json::json!([1, 5, 0]));
}

#[test]
fn negative_verdicts_exit_one() {
    let (code, v) = json(&["slp", "--poly", "x1*x2 + x1*x3 + 4*x1*x4 + x2*x3 + x2*x4 + x3*x4"]);
    assert_eq!(code, 1);
    assert_eq!(v["verdict"], false);
    let (code, _) = json(&["logconcavity", "--graph", "K3", "--mode", "strict", "--point", "1,0,0"]);
    assert_eq!(code, 1);
}

#[test]
fn usage_and_input_errors_exit_two() {
    assert_eq!(bin(&["nonsense"]).0, 2);
    assert_eq!(bin(&["slp", "--graph", "K4", "--point", "1/0,1,1,1,1,1"]).0, 2);
    assert_eq!(bin(&["kirchhoff", "--file", "/nonexistent/graph.txt"]).0, 2);
    assert_eq!(bin(&["kirchhoff", "--graph", "K4", "--delete", "1-1"]).0, 2);
    assert_eq!(bin(&["logconcavity", "--graph", "K4", "--mode", "sideways"]).0, 2);
    let (code, _, stderr) = bin(&["euler", "--poly", "x1 +"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("error"));
}

#[test]
fn seed_and_trials_are_echoed_and_runs_reproduce() {
    let args = ["identity1", "--graph", "K4", "--seed", "17", "--trials", "4", "--format", "json"];
    let (a, b) = (bin(&args), bin(&args));
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a.1).unwrap();
    assert_eq!(v["seed"], 17);
    assert_eq!(v["trials"], 4);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], "identity1");
    let (_, text, _) = bin(&["cayley", "--r", "4", "--seed", "9"]);
    assert!(text.contains("seed: 9"));
}

#[test]
fn trees_listing() {
    let (code, v) = json(&["trees", "K3", "--list"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"][0]["count"], 3);
    assert_eq!(v["results"][0]["trees"].as_array().unwrap().len(), 3);
}

#[test]
fn hodge_riemann_and_euler() {
    let (code, v) = json(&["hodge-riemann", "K4"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"][0]["holds"], true);
    let (code, v) = json(&["euler", "--poly", "x1^2*x2 + 3*x2^3"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"][0]["degree"], 3);
}

#[test]
fn logconcavity_modes() {
    for mode in ["plain", "strict", "homogeneous", "strict_homogeneous", "strict-homogeneous"] {
        let (code, v) = json(&["logconcavity", "K4", "--mode", mode]);
        assert_eq!(code, 0, "{mode}");
        assert_eq!(v["results"][0]["verdict"], true, "{mode}");
    }
    let (code, v) = json(&["logconcavity", "--poly", "x1^3 + x2^3 + x3^3"]);
    assert_eq!(code, 1);
    assert!(v["results"][0]["witness"].is_array());
}

#[test]
fn sweep_small_config_passes() {
    let (code, v) = json(&["sweep", "--suite", "matrix_tree", "--suite", "sylvester", "--max-vertices", "4", "--points", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"].as_array().unwrap().len(), 2);
    assert_eq!(bin(&["sweep", "--suite", "bogus"]).0, 2);
}
