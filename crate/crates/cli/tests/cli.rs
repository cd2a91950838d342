use std::process::{Command, Output};

fn eulersum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eulersum"))
        .args(args)
        .env_remove("EULERSUM_PREC")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_exact_targets() {
    let o = eulersum(&["compute", "genocchi", "6"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "G_6 = -3\n");
    let o = eulersum(&["compute", "dpoly", "2"]);
    assert_eq!(stdout(&o), "P_2(y) = 2*y^3 - 2*y\n");
    let o = eulersum(&["compute", "bernoulli", "1"]);
    assert_eq!(stdout(&o), "B_1 = -1/2\n");
}

#[test]
fn compute_t12_to_fifty_digits() {
    let o = eulersum(&["--format", "json", "compute", "T", "1", "2"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["digits"], 50);
    let value = v["value"].as_str().unwrap();
    // T_{1,2} = pi^2 ln 2 - S_{1,2}; reference digits from an independent evaluation
    assert!(
        value.starts_with("2.633889302798536545948395588664021103622327"),
        "{value}"
    );
    assert_eq!(value.chars().filter(char::is_ascii_digit).count(), 50);
}

#[test]
fn precision_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_eulersum"))
        .args(["compute", "pi"])
        .env("EULERSUM_PREC", "20")
        .output()
        .unwrap();
    assert_eq!(stdout(&o), "pi = 3.1415926535897932385  (20 digits)\n");
    let o = Command::new(env!("CARGO_BIN_EXE_eulersum"))
        .args(["compute", "pi"])
        .env("EULERSUM_PREC", "14")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn compute_parse_errors_exit_2_with_hint() {
    for args in [
        &["compute", "zeta", "1"][..],
        &["compute", "T", "1"],
        &["compute", "frobnicate"],
    ] {
        let o = eulersum(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8(o.stderr).unwrap();
        assert!(err.contains("--help"), "{err}");
    }
}

#[test]
fn verify_single_instance() {
    let o = eulersum(&["verify", "SYM_TS", "--m", "3", "--p", "3", "--q", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("PASS SYM_TS (m=3, p=3, q=3)"), "{out}");
    // the theorem's left side is three times the displayed one
    assert!(out.contains("= 2604*z(3)*z(5) - 17/60*pi^8"), "{out}");
}

#[test]
fn verify_conv_bgg_grid() {
    let o = eulersum(&["--format", "json", "verify", "CONV_BGG", "--n", "0..40", "--q", "2..40"]);
    assert_eq!(o.status.code(), Some(0));
    let lines = stdout(&o).lines().count();
    assert_eq!(lines, 41 * 39);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(eulersum(&["verify", "NOT_AN_ID"]).status.code(), Some(2));
    assert_eq!(
        eulersum(&["verify", "TS_QEQ_COEFF", "--p", "2", "--q", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(eulersum(&["verify", "CONV_BGG", "--m", "1"]).status.code(), Some(2));
    assert_eq!(eulersum(&["verify", "CONV_BGG", "--q", "0..1"]).status.code(), Some(2));
    assert_eq!(eulersum(&["verify", "all", "--q", "2"]).status.code(), Some(2));
    assert_eq!(eulersum(&["bogus"]).status.code(), Some(2));
}

#[test]
fn thread_count_does_not_change_report() {
    let args = [
        "--format",
        "json",
        "--prec",
        "30",
        "verify",
        "SYM_T",
        "--max-weight",
        "9",
    ];
    let one = eulersum(&[&["--threads", "1"][..], &args].concat());
    let four = eulersum(&[&["--threads", "4"][..], &args].concat());
    assert!(one.status.success() && four.status.success());
    assert_eq!(one.stdout, four.stdout);
    assert!(!one.stdout.is_empty());
}

#[test]
fn json_report_round_trips() {
    let o = eulersum(&["--format", "json", "--prec", "30", "verify", "R1Q"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let records = eulersum::verify::from_jsonl(&text).unwrap();
    assert_eq!(eulersum::verify::to_jsonl(&records), text);
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(serde_json::to_string(&v).unwrap().len(), line.len());
    }
}

#[test]
fn out_and_summary_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.csv");
    let summary = dir.path().join("summary.json");
    let o = eulersum(&[
        "--format",
        "csv",
        "--out",
        out.to_str().unwrap(),
        "--summary",
        summary.to_str().unwrap(),
        "verify",
        "PN_GENOCCHI",
        "--n",
        "0..3",
        "--k",
        "0..3",
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let csv = std::fs::read_to_string(out).unwrap();
    assert!(csv.starts_with("identity,params,label,kind,weight,parity,lhs,rhs,residual,tolerance,passed"));
    assert_eq!(csv.lines().count(), 17);
    let s: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(summary).unwrap()).unwrap();
    assert_eq!(s["total"], 16);
    assert_eq!(s["failed"], 0);
    assert_eq!(s["groups"][0]["bucket"], "exact");
}

#[test]
fn timings_only_on_request() {
    let plain = eulersum(&["--format", "json", "verify", "CONV_BGG", "--n", "1", "--q", "3"]);
    assert!(!stdout(&plain).contains("elapsed_ms"));
    let timed = eulersum(&[
        "--timings",
        "--format",
        "json",
        "verify",
        "CONV_BGG",
        "--n",
        "1",
        "--q",
        "3",
    ]);
    assert!(stdout(&timed).contains("\"elapsed_ms\":"));
}

#[test]
fn displayed_examples_all_pass() {
    let o = eulersum(&["--format", "json", "examples"]);
    assert_eq!(o.status.code(), Some(0));
    let records = eulersum::verify::from_jsonl(&stdout(&o)).unwrap();
    assert!(records.len() >= 38);
    let labels: Vec<&str> = records.iter().filter_map(|r| r.label.as_deref()).collect();
    assert!(labels.contains(&"9*R[2,10] + 2*R[3,9] = 58254*z(3)*z(9) + 94488*z(5)*z(7) - 691/3780*pi^12"));
    assert!(labels.contains(&"T[1,5] + S[1,5] = 62*ln2*z(5) - 7*z(3)^2 - 1/30*pi^6"));
    assert!(labels.contains(
        &"3*TT(5,7) + 10*TT(6,6) + 18*TT(7,5) + 21*TT(8,4) + 14*TT(9,3) = 11811/1024*z(5)*z(7) - 1/92160*pi^12"
    ));
}

#[test]
fn list_names_every_identity() {
    let out = stdout(&eulersum(&["list"]));
    assert_eq!(out.lines().count(), 20);
    assert!(out.contains("CONV_EGG      exact    n alpha gamma delta epsilon"));
}

#[test]
fn full_suite_passes() {
    let o = eulersum(&["verify", "all", "--max-weight", "12"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(
        out.contains(" records: ") && out.contains(", 0 failed"),
        "{}",
        out.lines().last().unwrap_or("")
    );
}
