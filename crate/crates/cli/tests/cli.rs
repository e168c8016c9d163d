//! Black-box tests of the command-line binary: documented outputs, schema
//! roundtrips, determinism, and exit codes.

use std::process::{Command, Output};

use orbit_limits_core::limits::{LimitSet, OrbitComponent};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbit-limits"))
        .args(args)
        .env_remove("ORBIT_LIMITS_SEED")
        .output()
        .expect("binary runs")
}

fn run_with_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbit-limits"))
        .args(args)
        .env_remove("ORBIT_LIMITS_SEED")
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

#[test]
fn limit_sl_reports_the_image_partition() {
    let out = run(&[
        "limit",
        "sl",
        "--partition",
        "8,7,6,4,4,3,2,1",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let limit: LimitSet = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(limit.group.to_string(), "SL(35,R)");
    match &limit.components[0] {
        OrbitComponent::Partition(c) => {
            assert_eq!(c.partition.parts(), &[15, 9, 5, 4, 2]);
        }
        _ => panic!("expected partition component"),
    }
}

#[test]
fn sigma_prints_ascii_and_json() {
    let out = run(&[
        "sigma",
        "--lambda",
        "6,3,2,2,-1,-3,-4",
        "--mu",
        "3,2,-3,-3,-4",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("+-+-+\n+-+-\n+-\n+\n"));
    let json_line = text.lines().last().unwrap();
    let parsed: serde_json::Value = serde_json::from_str(json_line).unwrap();
    assert_eq!(parsed["rows"][0]["len"], 5);
    assert_eq!(parsed["rows"][0]["sign"], "+");
}

#[test]
fn sigma_inverse_roundtrips_through_json() {
    let out = run(&["sigma", "--lambda", "1,0", "--mu", "-1", "--format", "json"]);
    assert!(out.status.success());
    let diagram_json = stdout(&out);

    let out = run(&[
        "sigma-inverse",
        "--diagram",
        diagram_json.trim(),
        "--format",
        "json",
    ]);
    assert!(out.status.success(), "stderr: {:?}", out.stderr);
    let spectrum: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(spectrum["lambda"].is_array());

    // and the diagram of that spectrum is the original one
    let lambda: Vec<String> = spectrum["lambda"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().to_string())
        .collect();
    let mu: Vec<String> = spectrum["mu"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().to_string())
        .collect();
    let out = run(&[
        "sigma",
        "--lambda",
        &lambda.join(","),
        "--mu",
        &mu.join(","),
        "--format",
        "json",
    ]);
    assert_eq!(stdout(&out), diagram_json);
}

#[test]
fn richardson_of_spectrum() {
    let out = run(&["richardson", "--spectrum", "1,1,-1,-1", "--format", "json"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "[2,2]");
}

#[test]
fn minimal_table_json_parses_back() {
    let out = run(&["minimal", "--type", "BI", "--p", "1", "--q", "1", "--format", "json"]);
    assert!(out.status.success());
    let limit: LimitSet = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(limit.group.to_string(), "SO(2,3)");
    assert_eq!(limit.components.len(), 3);
}

#[test]
fn poset_dot_output() {
    let out = run(&["poset", "--n", "4", "--type", "A", "--format", "dot"]);
    assert!(out.status.success());
    let dot = stdout(&out);
    assert!(dot.starts_with("digraph orbit_poset {"));
    assert_eq!(dot.matches("label=").count(), 5);
    assert_eq!(dot.matches(" -> ").count(), 4);
}

#[test]
fn verify_supq_with_pinned_signature() {
    let out = run(&["verify", "supq", "--p", "2", "--q", "2", "--trials", "20", "--seed", "1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("20/20"));

    let out = run(&["verify", "curves", "--p", "2", "--q", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_output_is_deterministic() {
    let args = ["verify", "supq", "--trials", "5", "--seed", "3", "--format", "json"];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn env_seed_matches_explicit_flag() {
    let via_env = run_with_env(&["verify", "sl", "--trials", "3"], "ORBIT_LIMITS_SEED", "9");
    let via_flag = run(&["verify", "sl", "--trials", "3", "--seed", "9"]);
    assert!(via_env.status.success());
    assert_eq!(via_env.stdout, via_flag.stdout);

    // explicit flag wins over the environment
    let flag_wins = run_with_env(
        &["verify", "sl", "--trials", "3", "--seed", "9"],
        "ORBIT_LIMITS_SEED",
        "1234",
    );
    assert_eq!(flag_wins.stdout, via_flag.stdout);
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["limit", "sl", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn domain_errors_exit_one_with_json_payload() {
    // zero parts are rejected
    let out = run(&["limit", "sl", "--partition", "3,0,1"]);
    assert_eq!(out.status.code(), Some(1));

    // floats are rejected for exact spectra
    let out = run(&["sigma", "--lambda", "1.5", "--mu", "-1.5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let err: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(err["error"].as_str().unwrap().contains("rational"));

    // nonzero trace is a domain error
    let out = run(&["richardson", "--spectrum", "1,1"]);
    assert_eq!(out.status.code(), Some(1));

    // table constraints are enforced
    let out = run(&["minimal", "--type", "AIII", "--p", "3", "--q", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let err: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(err["error"].as_str().unwrap().contains("AIII"));

    // annotation is a type A feature
    let out = run(&["poset", "--n", "2", "--type", "B", "--annotate"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn limit_supq_side_of_the_schema() {
    let out = run(&["limit", "supq", "--lambda", "1", "--mu", "-1", "--format", "json"]);
    assert!(out.status.success());
    let limit: LimitSet = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(limit.group.to_string(), "SU(1,1)");
    match &limit.components[0] {
        OrbitComponent::Diagram(c) => {
            assert_eq!(c.diagram.underlying_partition().parts(), &[2]);
        }
        _ => panic!("expected diagram component"),
    }
}
