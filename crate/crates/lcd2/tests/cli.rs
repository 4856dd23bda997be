use std::process::{Command, Output};

use lcd2::records::{ClassRecord, ReportRecord};
use lcd2_core::classify::PointGroup;
use lcd2_core::{classify_optimal, EquivClass};

fn lcd2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lcd2"))
        .args(args)
        .env_remove("LCD2_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn bound_examples() {
    let o = lcd2(&["bound", "10"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "n=10 dmax=7 delta=5");
    let o = lcd2(&["bound", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v, serde_json::json!({"n": 3, "dmax": 2, "delta": 2}));
    let o = lcd2(&["bound", "1"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("n = 1"));
}

#[test]
fn check_examples() {
    let o = lcd2(&["check", "1,0;0,1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("lcd=true") && stdout(&o).contains("d=1"));
    let o = lcd2(&["check", "1,1,1;1,0,0"]);
    assert!(stdout(&o).contains("lcd=false"));
    let o = lcd2(&["check", "1,0,0,1,1,1,1;0,1,1,0,1,w,w2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["lcd"], true);
    assert_eq!(v["d"], 5);
    assert_eq!(v["weight_enumerator"], serde_json::json!({"0": 1, "5": 6, "6": 9}));
}

#[test]
fn usage_and_input_errors_exit_2() {
    for args in [
        &["check", "1,0;1,0"][..],
        &["check", "1,x;0,1"],
        &["check", "1,0;0"],
        &["construct", "1,2,3"],
        &["enumerate", "1"],
        &["classify", "1"],
        &["census", "0"],
        &["verify", "--n-max", "3"],
        &["frobnicate"],
        &["bound"],
        &["--format", "xml", "bound", "5"],
    ] {
        let o = lcd2(args);
        assert_eq!(code(&o), 2, "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn construct_and_enumerate() {
    let o = lcd2(&["construct", "a0=1;1,0,2,1,1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("generator=1,0,0,0,1,1,1,1;0,1,0,1,1,1,w,w2"));
    let o = lcd2(&["enumerate", "7", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["tuples"], serde_json::json!([[1, 0, 2, 1, 1], [1, 1, 1, 1, 1]]));
    let o = lcd2(&["enumerate", "7", "--format", "csv"]);
    assert_eq!(stdout(&o), "a1,a2,a3,a4,a5\n1,0,2,1,1\n1,1,1,1,1\n");
}

#[test]
fn classify_json_round_trip() {
    let o = lcd2(&["classify", "19", "--include-zero-columns", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let records: Vec<ClassRecord> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(records.len(), 6);
    assert_eq!(records.iter().filter(|r| r.dual_min_weight_one).count(), 1);
    let group = PointGroup::new();
    let rebuilt: Vec<EquivClass> = records.iter().map(|r| r.to_class(&group)).collect();
    assert_eq!(rebuilt, classify_optimal(19, true).unwrap());
}

#[test]
fn census_filters_and_jobs() {
    let base = lcd2(&["census", "9", "--filter", "lcd", "--format", "csv", "--jobs", "1"]);
    assert_eq!(code(&base), 0);
    for extra in [&["--jobs", "4"][..], &["--jobs", "3", "--seed", "11"]] {
        let mut args = vec!["census", "9", "--filter", "lcd", "--format", "csv"];
        args.extend_from_slice(extra);
        assert_eq!(lcd2(&args).stdout, base.stdout);
    }
    let all = lcd2(&["census", "3", "--filter", "all"]);
    // (2,1) and (1,1,1) point distributions; the group is 2-transitive
    assert!(stdout(&all).starts_with("2 classes"), "{}", stdout(&all));
    let env = Command::new(env!("CARGO_BIN_EXE_lcd2"))
        .args(["census", "9", "--filter", "lcd", "--format", "csv"])
        .env("LCD2_JOBS", "2")
        .output()
        .unwrap();
    assert_eq!(env.stdout, base.stdout);
}

#[test]
fn verify_exit_codes() {
    // n = 7 hits the one family whose tabulated enumerator is inconsistent.
    let o = lcd2(&["verify", "--n-max", "7", "--format", "json"]);
    assert_eq!(code(&o), 1);
    let report: ReportRecord = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report.n_max, 7);
    let failed: Vec<(String, usize)> =
        report.checks.iter().filter(|c| !c.pass).map(|c| (c.id.clone(), c.n)).collect();
    assert_eq!(failed, vec![("T3".to_string(), 2), ("T3".to_string(), 7)]);
    assert!(report.to_report().is_some());
    let o = lcd2(&["verify", "--n-max", "7", "--format", "csv"]);
    assert!(stdout(&o).starts_with("id,n,pass,detail\n"));
}
