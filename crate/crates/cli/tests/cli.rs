use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bullchrome(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_bullchrome"))
        .args(args)
        .env_remove("BULLCHROME_BUDGET")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.unwrap_or("").as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn generate(args: &[&str]) -> String {
    let out = bullchrome(args, None);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn spindle_plus_apex_is_reported_by_name() {
    let g = generate(&["gen", "join", "spindle:2", "complete:1"]);
    let out = bullchrome(
        &["decide", "-", "--k", "4", "--family", "bull-claw"],
        Some(&g),
    );
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["colorable"], false);
    assert_eq!(v["obstruction"]["kind"], "M7+K1");
    assert_eq!(v["obstruction"]["witness"].as_array().unwrap().len(), 8);
}

#[test]
fn seven_cycle_is_three_colored() {
    let g = generate(&["gen", "cycle", "7"]);
    let out = bullchrome(
        &["decide", "-", "--k", "3", "--family", "bull-claw"],
        Some(&g),
    );
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let colors: Vec<u64> = v["coloring"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_u64().unwrap())
        .collect();
    assert_eq!(colors.len(), 7);
    for i in 0..7 {
        assert_ne!(colors[i], colors[(i + 1) % 7]);
        assert!((1..=3).contains(&colors[i]));
    }
}

#[test]
fn claw_is_a_precondition_violation_with_witness() {
    let claw = r#"{"n": 4, "edges": [[0, 1], [0, 2], [0, 3]]}"#;
    let out = bullchrome(
        &["decide", "-", "--k", "4", "--family", "bull-claw"],
        Some(claw),
    );
    assert_eq!(out.status.code(), Some(3));
    let v = json(&out);
    assert_eq!(v["witness"]["kind"], "claw");
    assert_eq!(v["witness"]["vertices"], serde_json::json!([0, 1, 2, 3]));
}

#[test]
fn parse_errors_exit_one() {
    let out = bullchrome(
        &["decide", "-", "--k", "3", "--family", "bull-claw"],
        Some("not a graph"),
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    let out = bullchrome(&["decide", "-", "--k", "3", "--family", "nope"], Some("{}"));
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn exhausted_budget_exits_four() {
    let g = generate(&["gen", "antihole", "9"]);
    let out = bullchrome(
        &[
            "--budget",
            "5",
            "decide",
            "-",
            "--k",
            "4",
            "--family",
            "bull-claw",
        ],
        Some(&g),
    );
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn formats_round_trip() {
    for shape in [
        &["expansion", "2,1,2,1,2,1,1"][..],
        &["spindle", "3"],
        &["join", "antihole:7", "complete:2"],
    ] {
        let mut args = vec!["gen"];
        args.extend_from_slice(shape);
        let j = generate(&args);
        args.extend(["--format", "dimacs"]);
        let d = generate(&args);
        assert!(d.starts_with("p edge"));
        // Info re-parses either format; identical graphs give identical summaries.
        let a = bullchrome(&["info", "-"], Some(&j));
        let b = bullchrome(&["info", "-"], Some(&d));
        assert_eq!(a.stdout, b.stdout);
        let o = bullchrome(&["oracle", "-"], Some(&d));
        assert_eq!(json(&o)["schema"], 1);
    }
}

#[test]
fn oracle_reports_all_parameters() {
    let g = generate(&["gen", "antihole", "7"]);
    let v = json(&bullchrome(&["oracle", "-"], Some(&g)));
    assert_eq!(v["chi"], 4);
    assert_eq!(v["omega"], 3);
    assert_eq!(v["alpha"], 2);
    assert_eq!(v["beta0_complement"], 3);
}

#[test]
fn color_expansion_and_infeasible_vector() {
    let out = bullchrome(&["color", "--k", "4", "--expansion", "2,1,2,1,2,1,1"], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["feasibility"]["feasible"], true);
    let out = bullchrome(&["color", "--k", "4", "--expansion", "2,2,2,2,2,2,1"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(json(&out)["coloring"].is_null());
}

#[test]
fn detect_finds_spindle() {
    let g = generate(&["gen", "spindle", "2"]);
    let v = json(&bullchrome(
        &["detect", "-", "--pattern", "spindle"],
        Some(&g),
    ));
    assert_eq!(v["found"], true);
    assert_eq!(v["witness"]["kind"], "M7");
    let v = json(&bullchrome(&["detect", "-", "--pattern", "claw"], Some(&g)));
    assert_eq!(v["found"], false);
}

#[test]
fn verify_reports_are_deterministic_and_pass() {
    let a = bullchrome(
        &[
            "verify",
            "fact13",
            "--seeds",
            "40",
            "--seed0",
            "7",
            "--threads",
            "1",
        ],
        None,
    );
    let b = bullchrome(
        &[
            "verify",
            "fact13",
            "--seeds",
            "40",
            "--seed0",
            "7",
            "--threads",
            "4",
        ],
        None,
    );
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let out = bullchrome(
        &[
            "verify",
            "thm4",
            "--p",
            "5",
            "--sizes-max",
            "3",
            "--k",
            "3,4,5",
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["checked"], 3 * 243);
}
