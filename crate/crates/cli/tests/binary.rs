//! End-to-end runs of the `pqsym` binary: output text, JSON and exit codes.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn pqsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pqsym")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap().trim_end().to_string()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn eval_examples() {
    for (expr, basis, expected) in [
        ("L[1]*L[1]", "L", "2*L[1,1]"),
        ("theta(M[2,1])", "L", "-L[3]"),
        ("q[2]", "M", "4*M[1,1] + 2*M[2]"),
    ] {
        let o = pqsym(&["eval", expr, "--basis", basis]);
        assert_eq!(o.status.code(), Some(0), "{expr}: {}", stderr(&o));
        assert_eq!(stdout(&o), expected, "{expr}");
    }
    let a = pqsym(&["eval", "L[3]*L[1] + 2*K[1,3]", "--basis", "L"]);
    let b = pqsym(&["eval", &stdout(&a), "--basis", "L"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn invalid_index_reports_location_and_exit_2() {
    let o = pqsym(&["eval", "M[1] + L[2]"]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("line 1, column 8"), "{err}");
    assert!(err.contains("L indices must have odd parts"), "{err}");
}

#[test]
fn implicit_theta_is_refused() {
    let o = pqsym(&["eval", "M[2,1]", "--basis", "L"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("theta(...)"));
    let o = pqsym(&["eval", "theta(M[2,1])", "--basis", "L"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn leading_minus_is_an_expression() {
    let o = pqsym(&["eval", "-L[3] + L[1]", "--basis", "L"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), "-L[3] + L[1]");
}

#[test]
fn json_round_trip_through_convert() {
    let o = pqsym(&["--json", "eval", "3/2*L[1,3] - L[5]"]);
    let json = stdout(&o);
    assert_eq!(json, r#"{"ring":"pqsym","basis":"L","terms":[{"index":[5],"coef":"-1"},{"index":[1,3],"coef":"3/2"}]}"#);
    let k = pqsym(&["convert", &json, "--basis", "K"]);
    let back = pqsym(&["convert", &stdout(&k), "--basis", "L"]);
    assert_eq!(stdout(&back), "-L[5] + 3/2*L[1,3]");
}

#[test]
fn decompose_methods() {
    let o = pqsym(&["decompose", "L[3]"]);
    assert_eq!(stdout(&o), "3*Q[3; 1] - Q[2; 1]*Q[1; 1]");
    let o = pqsym(&["decompose", "L[3]", "--method", "odd"]);
    assert_eq!(stdout(&o), "3*Q[3; 1] - 1/2*Q[1; 1]^3");
    let zb = pqsym(&["decompose", "L[1,1,3]", "--method", "zb"]);
    let ind = pqsym(&["decompose", "L[1,1,3]", "--method", "inductive"]);
    assert_eq!(stdout(&zb), stdout(&ind));
    let back = pqsym(&["eval", &stdout(&zb), "--basis", "L"]);
    assert_eq!(stdout(&back), "L[1,1,3]");
}

#[test]
fn stdin_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pqsym"))
        .args(["eval", "-", "--basis", "L"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"L[1]\n  * L[1]\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(stdout(&o), "2*L[1,1]");
}

#[test]
fn verify_suites_exit_zero() {
    let o = pqsym(&["verify", "ranks", "--max-weight", "14"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("PASS ranks"));
    for (n, f) in [(1, 1), (5, 5), (9, 34), (10, 55), (14, 377)] {
        assert!(text.lines().any(|l| {
            let cols: Vec<&str> = l.split_whitespace().collect();
            cols.len() == 5 && cols[0] == n.to_string() && cols[1] == f.to_string() && cols[3] == f.to_string()
        }));
    }
    let o = pqsym(&["verify", "euler", "--max-weight", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let o = pqsym(&["verify", "decompose", "--max-weight", "9"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_json_report() {
    let o = pqsym(&["--json", "verify", "all", "--max-weight", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    let names: Vec<&str> = v["suites"].as_array().unwrap().iter().map(|s| s["suite"].as_str().unwrap()).collect();
    assert_eq!(names, ["euler", "theta-hom", "adams", "ranks", "decompose", "oracle"]);
}

#[test]
fn internal_errors_exit_2() {
    let o = pqsym(&["verify", "oracle", "--max-weight", "4", "--vars", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("variables"));
    let o = pqsym(&["verify", "euler", "--max-weight", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["--json", "decompose", "L[1,1,1,3] + 2*L[3,3] - K[1,5]"];
    let a = pqsym(&args);
    let b = pqsym(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
