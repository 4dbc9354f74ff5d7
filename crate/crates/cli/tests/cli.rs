use std::process::{Command, Output};

fn kvertex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kvertex"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn expand_emits_kernel_json() {
    let o = kvertex(&[
        "expand",
        "--formula",
        "one-leg",
        "--q-order",
        "2",
        "--deg",
        "2",
        "--out",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert!(v.is_object(), "{v}");
}

#[test]
fn pair_vacuum_of_gluing_is_one() {
    let o = kvertex(&["pair", "--formula", "gluing", "--q-order", "2", "--deg", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "[2,0] q^0*Q^0: 1");
}

#[test]
fn localize_reports_rank() {
    let o = kvertex(&["localize", "--family", "Ed", "--d", "3", "--out", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["rank_t_half_vir"], -9);
}

#[test]
fn check_suite_lines_are_json() {
    let o = kvertex(&["check", "--suite", "hall", "--deg", "3", "--out", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(lines.len() > 1);
    assert!(lines.iter().all(|v| v["passed"] == true));
}

#[test]
fn known_failing_suite_exits_one() {
    let o = kvertex(&["check", "--suite", "two-leg", "--deg", "2", "--q-order", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).lines().any(|l| l.starts_with("FAIL")));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(kvertex(&["expand", "--formula", "nope"]).status.code(), Some(2));
    assert_eq!(kvertex(&["localize", "--family", "Ed"]).status.code(), Some(2));
    assert_eq!(kvertex(&["check", "--suite", "bogus"]).status.code(), Some(2));
    assert_eq!(
        kvertex(&["pair", "--formula", "one-leg", "--lambda", "2,3"])
            .status
            .code(),
        Some(2)
    );
    let o = Command::new(env!("CARGO_BIN_EXE_kvertex"))
        .args(["check", "--suite", "hall"])
        .env("KVERTEX_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
