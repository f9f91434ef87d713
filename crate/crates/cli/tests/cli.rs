use std::process::{Command, Output};

fn hodge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hodge")).args(args).output().expect("binary runs")
}

fn first_line(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).lines().next().unwrap_or_default().to_string()
}

#[test]
fn lambda_g_with_no_psi() {
    let o = hodge(&["integral", "--lambda-g", "--g", "1", "--psi", "0"]);
    assert!(o.status.success());
    assert_eq!(first_line(&o), "1/24");
}

#[test]
fn genus_three_one_point_values() {
    let o = hodge(&["integral", "--thm32", "--g", "3", "--m", "1"]);
    assert_eq!(first_line(&o), "1/362880");
    let o = hodge(&["integral", "--thm32", "--g", "3", "--m", "2"]);
    assert_eq!(first_line(&o), "0/1");
    assert!(String::from_utf8_lossy(&o.stdout).contains("= 1/60480"));
}

#[test]
fn other_integrals() {
    assert_eq!(first_line(&hodge(&["integral", "--lambda1-lambdag", "--g", "3"])), "41/1451520");
    assert_eq!(first_line(&hodge(&["integral", "--lambda-g-linear", "--g", "2", "--mu", "2,1"])), "21/640");
    assert_eq!(first_line(&hodge(&["integral", "--lambda-gm1", "--g", "1", "--mu", "1,1"])), "1/8");
}

#[test]
fn dimension_violation_exits_with_two() {
    let o = hodge(&["integral", "--lambda-g", "--g", "1", "--psi", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("dimension"));
    let o = hodge(&["integral", "--lambda1-lambdag", "--g", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = hodge(&["series", "--g", "1", "--mu", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_reports_json() {
    let o = hodge(&["verify", "thm53", "--dmax", "20"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let records = v.as_array().unwrap();
    assert!(!records.is_empty());
    assert!(records.iter().all(|r| r["pass"] == true));
    assert!(records[0]["lhs"].as_str().unwrap().contains('/'));
    for suite in [["f-closed-vs-brute", "--gmax", "4", "--dmax", "30"], ["eq31", "--gmax", "2", "--dmax", "4"]] {
        assert!(hodge(&[&["verify"][..], &suite[..]].concat()).status.success(), "{suite:?}");
    }
}

#[test]
fn unknown_identity_is_a_usage_error() {
    assert_eq!(hodge(&["verify", "nonsense"]).status.code(), Some(2));
}

#[test]
fn tables() {
    let o = hodge(&["table", "bernoulli", "--max", "12", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[12]["B_m"], "-691/2730");
    let o = String::from_utf8(hodge(&["table", "bg", "--gmax", "3"]).stdout).unwrap();
    assert!(o.contains("3\t31/967680"));
    let o = String::from_utf8(hodge(&["table", "lambda1-lambdag", "--gmax", "6"]).stdout).unwrap();
    assert_eq!(o.lines().count(), 6);
}

#[test]
fn series_output_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_hodge"))
            .args(["series", "--g", "1", "--mu", "2,1"])
            .env("HODGE_CACHE_DIR", dir.path())
            .output()
            .unwrap()
    };
    let first = run();
    assert!(first.status.success());
    let v: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(v["tau_coefficients"][0], serde_json::json!(["1", "8"]));
    assert_eq!(v["tau_coefficients"][2], serde_json::json!(["-1", "6"]));
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    let second = run();
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn too_small_lambda_order_is_a_consistency_error() {
    let o = hodge(&["series", "--g", "2", "--mu", "2,1", "--lambda-order", "0"]);
    assert_eq!(o.status.code(), Some(3));
}
