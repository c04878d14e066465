use std::process::{Command, Output};

fn rothe(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rothe"))
        .args(args)
        .env_remove("ROTHE_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = rothe(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    rothe(args).status.code().unwrap()
}

#[test]
fn diagram_and_code() {
    let grid = stdout(&["diagram", "426315"]);
    let rows: Vec<&str> = grid.lines().collect();
    assert_eq!(rows[0].trim_end(), "□□□·");
    assert_eq!(rows[2].trim_end(), "□ □ □·");
    assert_eq!(grid.matches('□').count(), 8);
    assert_eq!(stdout(&["code", "426315"]), "(3,1,3,1,0,0)\n");
    assert_eq!(
        stdout(&["--json", "code", "426315"]),
        "{\"code\":[3,1,3,1,0,0],\"perm\":[4,2,6,3,1,5]}\n"
    );
}

#[test]
fn enumeration() {
    assert_eq!(stdout(&["enumerate", "--kind", "srt", "2413", "--count-only"]), "1\n");
    assert_eq!(stdout(&["enumerate", "--kind", "words", "2413"]), "[1,3,2]\n[3,1,2]\n");
    assert_eq!(stdout(&["enumerate", "--kind", "brt", "2413", "--count-only"]), "2\n");
}

#[test]
fn promotion_round_trip() {
    let fwd = stdout(&["promote", "1,3,4/2,5,9/6,8,10/7"]);
    assert!(fwd.starts_with(" 1  2  5\n 3  4  6\n 7  9 10\n 8\n"));
    assert!(fwd.contains("(3,3)"));
    let back = stdout(&["promote", "--dual", "1,2,5/3,4,6/7,9,10/8"]);
    assert!(back.starts_with(" 1  3  4\n 2  5  9\n 6  8 10\n 7\n"));
}

#[test]
fn words_from_staircases() {
    assert_eq!(stdout(&["gamma", "1,3,5,6/2,4,10/7,8/9"]), "[3,1,2,1,4,3,2,4,1,3]\n");
    assert_eq!(stdout(&["gamma-star", "1,3,5,6/2,4,10/7,8/9"]), "[3,1,4,2,3,4,1,2,1,3]\n");
    assert_eq!(stdout(&["omega", "1,2,5,6,9/3,4/7/8"]), "[5,1,2,4,3,2,1,4,2]\n632415\n");
}

#[test]
fn lifting_and_injection() {
    let lift = stdout(&["lift", "426315", "1,3,6/2/4,.,7,.,8/5"]);
    assert!(lift.contains("suffix [2, 1]"));
    assert!(lift.contains("target 642315"));
    assert!(lift.contains(" 1  2  3  8 10\n 4  5  9\n 6\n 7"));
    assert_eq!(stdout(&["inject", "2413", "1/2,.,3"]), "[3,1,2]\n");
}

#[test]
fn formula_and_avoiders() {
    assert_eq!(stdout(&["formula", "312486759"]), "126\n");
    assert!(stdout(&["formula", "426315"]).starts_with("not applicable: contains 2413"));
    let table = stdout(&["count-avoiders", "--max-n", "6", "--gf-check"]);
    assert!(table.lines().any(|l| l.starts_with("6\t243\t243")));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["code", "4263"]), 2);
    assert_eq!(code(&["gamma", "1,2,3/4"]), 2);
    assert_eq!(code(&["--limit", "2", "enumerate", "--kind", "words", "4321"]), 3);
    assert_eq!(code(&["verify", "--suite", "all", "--max-n", "4"]), 0);
}

#[test]
fn lifting_failure_in_s5_is_reported() {
    let out = rothe(&["--json", "verify", "--suite", "lifting-facts", "--max-n", "5"]);
    assert_eq!(out.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["passed"], false);
}

#[test]
fn json_is_deterministic_across_workers() {
    let run = |workers: &str| {
        Command::new(env!("CARGO_BIN_EXE_rothe"))
            .args(["--json", "verify", "--suite", "all", "--max-n", "4"])
            .env("ROTHE_WORKERS", workers)
            .output()
            .unwrap()
            .stdout
    };
    let one = run("1");
    assert_eq!(one, run("4"));
    let doc: serde_json::Value = serde_json::from_slice(&one).unwrap();
    assert_eq!(doc["passed"], true);
}
