use std::process::{Command, Output};

use serde_json::Value;

fn skein(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skein")).args(args).env_remove("SKEIN_WINDOW").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = skein(&all);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).expect("valid json")
}

#[test]
fn unknot_prints_factored_series() {
    let o = skein(&["series", "unknot", "--b", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "(1 + a^-1*q^2)/(1 - q^2)");
}

#[test]
fn unknot_json_has_schema_and_coefficients() {
    let v = json(&["series", "unknot", "--b", "1", "--deformed"]);
    assert_eq!(v["schema"], 1);
    let coeffs = v["coefficients"].as_array().unwrap();
    assert!(coeffs.iter().any(|c| c["q"] == -2 && c["t"] == 2 && c["a"] == 0 && c["coef"] == "1"));
}

#[test]
fn ideal_hilbert_has_dim_one_at_q2() {
    let v = json(&["ideal", "hilbert", "--a", "1", "--b", "1"]);
    let table = v["hilbert"].as_array().unwrap();
    let at = table.iter().find(|e| e["weight"]["q"] == 2 && e["weight"]["t"] == 0).expect("weight q^2");
    assert_eq!(at["dim"], 1);
    assert!(table.iter().all(|e| e["weight"]["q"] != 0 || e["weight"]["t"] != 0));
}

#[test]
fn membership_certificate() {
    let v = json(&["ideal", "member", "--a", "1", "--b", "1", "--poly", "x1*y1 - x2*y2"]);
    assert_eq!(v["memberships"][0]["ok"], true);
    let v = json(&["ideal", "member", "--a", "1", "--b", "1", "--poly", "x1 + x2"]);
    assert_eq!(v["memberships"][0]["ok"], false);
}

#[test]
fn generators_of_one_one() {
    let v = json(&["ideal", "gens", "--a", "1", "--b", "1"]);
    let gens: Vec<&str> = v["generators"].as_array().unwrap().iter().map(|g| g["poly"].as_str().unwrap()).collect();
    assert_eq!(gens, ["x1 - x2", "-vL1 + vR1"]);
}

#[test]
fn determinants() {
    assert_eq!(stdout(&skein(&["hdet", "--shape", "[[0,0],[1,0]]"])).trim(), "x1 - x2");
    assert_eq!(stdout(&skein(&["schur", "--lambda", "1", "--n", "2"])).trim(), "x1 + x2");
    let v = json(&["keydet", "--a", "1", "--b", "1", "--l", "1"]);
    assert_eq!(v["quotient"], "-vL1 + vR1");
}

#[test]
fn checked_commands_pass() {
    for args in [
        vec!["koszul", "build", "--b", "2"],
        vec!["koszul", "contract", "--b", "2"],
        vec!["digon", "--a", "2", "--b", "1"],
        vec!["series", "compare", "--a", "1", "--b", "1"],
        vec!["coords", "map", "--from", "U", "--to", "V", "--a", "2"],
        vec!["verify", "symfun"],
    ] {
        let o = skein(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(skein(&["bogus"]).status.code(), Some(2));
    assert_eq!(skein(&["series", "unknot", "--nope"]).status.code(), Some(2));
    assert_eq!(skein(&["verify", "nothing"]).status.code(), Some(2));
    assert_eq!(skein(&["schur", "--lambda", "1,2", "--n", "2"]).status.code(), Some(2));
    assert_eq!(skein(&["ideal", "member", "--a", "1", "--b", "1"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["ideal", "hilbert", "--a", "2", "--b", "1", "--qmax", "6", "--vmax", "1", "--format", "json"];
    assert_eq!(skein(&args).stdout, skein(&args).stdout);
    let args = ["verify", "frobdem", "--format", "json"];
    assert_eq!(skein(&args).stdout, skein(&args).stdout);
}

#[test]
fn window_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_skein"))
        .args(["ideal", "hilbert", "--a", "1", "--b", "1", "--format", "json"])
        .env("SKEIN_WINDOW", "qmax=4,vmax=1")
        .output()
        .unwrap();
    let v: Value = serde_json::from_str(&String::from_utf8(o.stdout).unwrap()).unwrap();
    assert_eq!(v["window"]["qmax"], 4);
    assert_eq!(v["window"]["vmax"], 1);
}
