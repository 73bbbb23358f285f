use std::io::Write;
use std::process::{Command, Stdio};

fn superplane() -> Command {
    Command::new(env!("CARGO_BIN_EXE_superplane"))
}

#[test]
fn one_shot_expression() {
    let out = superplane()
        .args(["--algebra", "plane", "Delta(x)"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "x ⊗ x");
}

#[test]
fn repl_reads_stdin() {
    let mut child = superplane()
        .arg("--json")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"# comment\nd(x)\n:algebra plane\nnf(th x)\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let lines: Vec<serde_json::Value> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["value"], "dx");
    assert_eq!(lines[1]["algebra"], "plane");
    assert_eq!(lines[1]["value"], "q^-1*x*th");
}

#[test]
fn errors_exit_two() {
    let out = superplane().arg("th^").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().starts_with("error:"));
}

#[test]
fn passing_suite_exits_zero() {
    let out = superplane()
        .args(["--check", "lie", "--check", "cartan"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.contains("Tnabla-commute:m=8")));
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .ends_with(" 0 fail\n"));
}

#[test]
fn failing_suite_exits_one() {
    let out = superplane()
        .args(["--check", "gl", "--json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let failing: Vec<String> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap())
        .filter(|v| v["status"] == "fail")
        .map(|v| v["id"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(failing, ["coaction:phi^3", "transformed-dual:phi'^3"]);
}
