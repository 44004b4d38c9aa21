use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (bool, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_ribbonlab")).args(args).output().expect("binary runs");
    let v = if out.stdout.is_empty() { Value::Null } else { serde_json::from_slice(&out.stdout).expect("stdout is JSON") };
    (out.status.success(), v)
}

fn conic_squared_g3() -> String {
    // (u0 u2 - u1^2)^2 = u0^2 u2^2 - 2 u0 u1^2 u2 + u1^4
    r#"[{"u":[2,0,2],"v":[0],"c":"1"},{"u":[1,2,1],"v":[0],"c":"-2"},{"u":[0,4,0],"v":[0],"c":"1"}]"#.into()
}

#[test]
fn limit_quadric_examples() {
    let (ok, v) = run(&["limit-quadric", "--g", "4", "--q", "[[1,0],[0,0]]"]);
    assert!(ok);
    assert_eq!(v["payload"]["degenerate"], true);
    assert_eq!(v["payload"]["witness_lambda"], serde_json::json!(["0", "1"]));

    let (_, v) = run(&["limit-quadric", "--g", "3", "--q", "[[1]]"]);
    assert_eq!(v["payload"]["degenerate"], false);

    let (_, v) = run(&["limit-quadric", "--g", "4", "--q", "[[1,0],[0,1]]"]);
    assert_eq!(v["payload"]["det"], "1");
    assert_eq!(v["payload"]["witness_lambda"], Value::Null);
}

#[test]
fn malformed_input_is_an_error() {
    for q in ["[[1,2],[3,4]]", "[[1]]", "not json"] {
        let (ok, v) = run(&["limit-quadric", "--g", "4", "--q", q]);
        assert!(!ok, "{q}");
        assert_eq!(v["status"], "error");
        assert!(v["error"].is_string());
    }
}

#[test]
fn limit_relation_examples() {
    let (ok, v) = run(&["limit-relation", "--d", "4", "--poly", &conic_squared_g3()]);
    assert!(ok);
    assert_eq!(v["payload"]["rank"], 0);
    assert_eq!(v["payload"]["limit"], true);

    // u0 (u0 u2 - u1^2 + u1 u3 - u2^2): u0 times x_q for q = identity at g=4
    let x = r#"[{"u":[2,0,1,0],"v":[0,0],"c":"1"},{"u":[1,2,0,0],"v":[0,0],"c":"-1"},{"u":[1,1,0,1],"v":[0,0],"c":"1"},{"u":[1,0,2,0],"v":[0,0],"c":"-1"}]"#;
    let (ok, v) = run(&["limit-relation", "--d", "3", "--poly", x]);
    assert!(ok, "{v}");
    assert_eq!(v["payload"]["limit"], false);
    assert_eq!(v["payload"]["rank"], 2);

    let (ok, v) = run(&["limit-relation", "--g", "3", "--d", "2", "--poly", r#"[{"u":[2,0,0],"v":[0],"c":"1"}]"#]);
    assert!(!ok);
    assert!(v["error"].as_str().unwrap().contains("not a canonical relation"));
}

#[test]
fn fitting_suite_passes() {
    let (ok, v) = run(&["verify", "--suite", "fitting", "--gmax", "6"]);
    assert!(ok);
    assert_eq!(v["payload"]["failed"], 0);
}

#[test]
fn verify_reports_failures_as_data() {
    // the product span misses the secant cubic at g=5
    let (ok, v) = run(&["verify", "--suite", "rnc", "--gmax", "5", "--dmax", "3"]);
    assert!(!ok);
    assert_eq!(v["status"], "ok");
    let failed: Vec<&Value> = v["payload"]["properties"].as_array().unwrap().iter().filter(|p| p["passed"] == false).collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0]["params"], serde_json::json!({"g": 5, "d": 3}));
}

#[test]
fn family_pipeline_recovers_h() {
    let dir = tempfile::tempdir().unwrap();
    let built = dir.path().join("f.json");
    let rescaled = dir.path().join("r.json");
    let h = "[1,0,0,0,0,0,0,0,1]";
    let (ok, _) = run(&["family", "build", "--g", "3", "--d", "1", "--h", h, "--quiet", "--json-out", built.to_str().unwrap()]);
    assert!(ok);
    let (ok, _) = run(&["family", "rescale", "--family", built.to_str().unwrap(), "--k", "1", "--quiet", "--json-out", rescaled.to_str().unwrap()]);
    assert!(ok);
    let (_, v) = run(&["family", "discriminant", "--family", rescaled.to_str().unwrap()]);
    assert_eq!(v["payload"]["s"], serde_json::json!(["1", "0", "0", "0", "0", "0", "0", "0", "1"]));
    let (_, v) = run(&["family", "order", "--family", rescaled.to_str().unwrap()]);
    assert_eq!(v["payload"]["ribbon_order"]["order"], 2);
    let (_, v) = run(&["family", "order", "--family", built.to_str().unwrap()]);
    assert_eq!(v["payload"]["hyperell_order"]["order"], 1);
}

#[test]
fn split_ribbon_order_is_at_the_bound() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.json");
    run(&["family", "split", "--g", "4", "--n", "6", "--quiet", "--json-out", path.to_str().unwrap()]);
    let (_, v) = run(&["family", "order", "--family", path.to_str().unwrap()]);
    assert_eq!(v["payload"]["ribbon_order"]["display"], "≥ 6");
}

#[test]
fn json_out_matches_stdout_and_timing_is_opt_in() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let out = Command::new(env!("CARGO_BIN_EXE_ribbonlab"))
        .args(["limit-quadric", "--g", "3", "--q", "[[2]]", "--json-out", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(std::fs::read(&path).unwrap(), out.stdout);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["timing_ms"], Value::Null);
    let (_, v) = run(&["limit-quadric", "--g", "3", "--q", "[[2]]", "--timing"]);
    assert!(v["timing_ms"].is_u64());
}
