//! End-to-end tests of the `nqual` binary: every subcommand, the exit-code
//! contract, store continuation arithmetic, and fault tolerance.

use std::io::Write as _;
use std::path::PathBuf;
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_nqual");

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("nqual-cli-test-{}-{name}", std::process::id()));
    let _ = std::fs::remove_file(&p);
    p
}

fn run(args: &[&str]) -> Output {
    Command::new(BIN)
        .args(args)
        .env_remove("NQUAL_STORE")
        .output()
        .expect("binary launches")
}

fn stdout_of(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr_of(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn assert_ok(o: &Output) {
    assert!(
        o.status.success(),
        "expected success; stdout: {} stderr: {}",
        stdout_of(o),
        stderr_of(o)
    );
}

fn exit_code(o: &Output) -> i32 {
    o.status.code().expect("no signal")
}

fn store_lines(path: &PathBuf) -> Vec<serde_json::Value> {
    std::fs::read_to_string(path)
        .unwrap_or_default()
        .lines()
        .filter(|l| !l.trim().is_empty())
        .filter_map(|l| serde_json::from_str(l).ok())
        .collect()
}

#[test]
fn check_reports_the_frozen_qualities() {
    let store = tmp("check-frozen.jsonl");
    let s = store.to_str().unwrap();

    let z = run(&["check", "--ring", "Z", "--store", s, "1,8,-9"]);
    assert_ok(&z);
    assert!(stdout_of(&z).contains("1.226294"), "got: {}", stdout_of(&z));
    assert!(stdout_of(&z).contains("in_A yes"));
    assert!(stdout_of(&z).contains("in_U yes"));

    let zi = run(&["check", "--ring", "Zi", "--store", s, "1,8,-9"]);
    assert_ok(&zi);
    assert!(stdout_of(&zi).contains("2.452589"), "got: {}", stdout_of(&zi));

    let hw = run(&["check", "--ring", "Hurwitz", "--store", s, "4,1,-5"]);
    assert_ok(&hw);
    assert!(stdout_of(&hw).contains("1.397940"), "got: {}", stdout_of(&hw));

    let records = store_lines(&store);
    assert_eq!(records.len(), 3);
    assert!(records.iter().all(|r| r["family_id"] == "adhoc"));
    let _ = std::fs::remove_file(&store);
}

#[test]
fn check_accepts_complex_and_quaternion_literals() {
    let store = tmp("check-literals.jsonl");
    let s = store.to_str().unwrap();

    let zi = run(&["check", "--ring", "Zi", "--store", s, "3+2i, -1, -2-2i"]);
    assert_ok(&zi);
    assert!(stdout_of(&zi).contains("Z yes"), "zero sum should hold: {}", stdout_of(&zi));

    let hw = run(&["check", "--ring", "Hurwitz", "--store", s, "1+24i-288k,1-24i+288k,-2"]);
    assert_ok(&hw);
    assert!(stdout_of(&hw).contains("in_U yes"));
    let _ = std::fs::remove_file(&store);
}

#[test]
fn check_applies_the_forbidden_divisor_set() {
    let store = tmp("check-fset.jsonl");
    let s = store.to_str().unwrap();

    let plain = run(&["check", "--ring", "Z", "--store", s, "3,5,-8"]);
    assert_ok(&plain);
    assert!(stdout_of(&plain).contains("F yes"));
    assert!(stdout_of(&plain).contains("in_U yes"));

    // -8 is a multiple of 4, so forbidding 4 expels the tuple.
    let gated = run(&["check", "--ring", "Z", "--f-set", "4", "--store", s, "3,5,-8"]);
    assert_ok(&gated);
    assert!(stdout_of(&gated).contains("F no"));
    assert!(stdout_of(&gated).contains("in_U no"));
    let _ = std::fs::remove_file(&store);
}

#[test]
fn gen_prints_a_table_and_appends_records() {
    let store = tmp("gen-table.jsonl");
    let s = store.to_str().unwrap();
    let out = run(&["gen", "--family", "elkies4", "--count", "3", "--store", s]);
    assert_ok(&out);
    let text = stdout_of(&out);
    assert!(text.contains("x=3,y=1"));
    assert!(text.contains("x=41,y=15"));
    assert!(text.contains("3.365547"));
    assert!(text.contains("appended 3 record(s)"));

    let records = store_lines(&store);
    assert_eq!(records.len(), 3);
    for (i, r) in records.iter().enumerate() {
        assert_eq!(r["family_id"], "elkies4");
        assert_eq!(r["ring"], "Zi");
        assert_eq!(r["index"], i as u64);
        assert_eq!(r["n"], 4);
        assert_eq!(r["entries"].as_array().unwrap().len(), 4);
    }
    let _ = std::fs::remove_file(&store);
}

#[test]
fn gen_power_triples_by_lmax_with_increasing_quality() {
    let store = tmp("gen-lmax.jsonl");
    let s = store.to_str().unwrap();
    let out = run(&["gen", "--family", "hurwitz-power3", "--lmax", "4", "--store", s]);
    assert_ok(&out);
    let records = store_lines(&store);
    assert_eq!(records.len(), 4);
    let params: Vec<&str> = records.iter().map(|r| r["params"].as_str().unwrap()).collect();
    assert_eq!(params, vec!["l=1", "l=2", "l=3", "l=4"]);
    let qs: Vec<f64> = records.iter().map(|r| r["quality"]["q"].as_f64().unwrap()).collect();
    assert!(qs.windows(2).all(|w| w[0] < w[1]), "quality should rise with l: {qs:?}");
    let _ = std::fs::remove_file(&store);
}

#[test]
fn resume_continues_to_the_total_without_duplicates() {
    let store = tmp("resume.jsonl");
    let s = store.to_str().unwrap();
    assert_ok(&run(&["gen", "--family", "hurwitz-power3", "--count", "3", "--store", s]));
    let out = run(&["resume", "--family", "hurwitz-power3", "--count", "5", "--store", s]);
    assert_ok(&out);
    assert!(stdout_of(&out).contains("appended 2 record(s)"), "got: {}", stdout_of(&out));

    let records = store_lines(&store);
    let mut params: Vec<&str> = records.iter().map(|r| r["params"].as_str().unwrap()).collect();
    assert_eq!(params.len(), 5);
    params.sort();
    params.dedup();
    assert_eq!(params.len(), 5, "every exponent exactly once");

    // A second resume to the same target has nothing to add.
    let idle = run(&["resume", "--family", "hurwitz-power3", "--count", "5", "--store", s]);
    assert_ok(&idle);
    assert!(stdout_of(&idle).contains("nothing to generate"));
    assert_eq!(store_lines(&store).len(), 5);
    let _ = std::fs::remove_file(&store);
}

#[test]
fn resume_on_a_missing_store_is_a_fresh_scan() {
    let store = tmp("resume-fresh.jsonl");
    let s = store.to_str().unwrap();
    let out = run(&["resume", "--family", "elkies4", "--count", "2", "--store", s]);
    assert_ok(&out);
    assert_eq!(store_lines(&store).len(), 2);
    let _ = std::fs::remove_file(&store);
}

#[test]
fn resume_skips_corrupt_lines_and_still_continues() {
    let store = tmp("resume-corrupt.jsonl");
    let s = store.to_str().unwrap();
    assert_ok(&run(&["gen", "--family", "hurwitz-power3", "--count", "2", "--store", s]));
    {
        let mut f = std::fs::OpenOptions::new().append(true).open(&store).unwrap();
        f.write_all(b"{ definitely not a record ]\n").unwrap();
    }
    let out = run(&["resume", "--family", "hurwitz-power3", "--count", "4", "--store", s]);
    assert_ok(&out);
    assert!(stderr_of(&out).contains("skipped 1 unreadable line"));
    let records = store_lines(&store);
    assert_eq!(records.len(), 4);
    let params: Vec<&str> = records.iter().map(|r| r["params"].as_str().unwrap()).collect();
    assert_eq!(params, vec!["l=1", "l=2", "l=3", "l=4"]);
    let _ = std::fs::remove_file(&store);
}

#[test]
fn resume_tracks_each_tuple_length_separately() {
    let store = tmp("resume-n.jsonl");
    let s = store.to_str().unwrap();
    assert_ok(&run(&["gen", "--family", "hurwitz-n", "--n", "4", "--count", "2", "--store", s]));
    // The n = 5 scan shares the family id but starts from its own index 0.
    let out = run(&["resume", "--family", "hurwitz-n", "--n", "5", "--count", "1", "--store", s]);
    assert_ok(&out);
    let records = store_lines(&store);
    assert_eq!(records.len(), 3);
    assert_eq!(records[2]["params"], "n=5,a=3,b=2");
    assert_eq!(records[2]["index"], 0);
    let _ = std::fs::remove_file(&store);
}

#[test]
fn export_writes_the_stable_csv_schema() {
    let store = tmp("export.jsonl");
    let csv_path = tmp("export.csv");
    let s = store.to_str().unwrap();
    assert_ok(&run(&["gen", "--family", "hurwitz-power3", "--count", "2", "--store", s]));
    assert_ok(&run(&["gen", "--family", "hurwitz-pell3", "--count", "1", "--store", s]));
    let out =
        run(&["export", "--store", s, "--out", csv_path.to_str().unwrap()]);
    assert_ok(&out);

    let text = std::fs::read_to_string(&csv_path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[0], "ring,n,family,params,q,rad,rad_complete,max_norm,entries");
    assert!(lines[1].starts_with("Hurwitz,3,hurwitz-power3,l=1,"));
    assert!(lines[1].ends_with(",4;1;-5"));
    // Comma-bearing params arrive quoted, entries joined with semicolons.
    assert!(lines[3].contains("\"a=3,b=2\""));
    assert!(lines[3].contains("1+24i-288k;1-24i+288k;-2"));

    // The q column round-trips to the exact stored double (power-triple
    // params carry no comma, so a plain split finds the field).
    let records = store_lines(&store);
    for (line, record) in lines[1..3].iter().zip(&records) {
        let q_text = line.split(',').nth(4).unwrap();
        assert_eq!(q_text.parse::<f64>().unwrap(), record["quality"]["q"].as_f64().unwrap());
    }
    let _ = std::fs::remove_file(&store);
    let _ = std::fs::remove_file(&csv_path);
}

#[test]
fn export_to_stdout_and_of_an_empty_store() {
    let store = tmp("export-empty.jsonl");
    std::fs::write(&store, "").unwrap();
    let out = run(&["export", "--store", store.to_str().unwrap()]);
    assert_ok(&out);
    let text = stdout_of(&out);
    assert_eq!(text.lines().count(), 1, "header only for an empty store");
    assert!(text.starts_with("ring,n,family,params,q,"));
    let _ = std::fs::remove_file(&store);
}

#[test]
fn usage_errors_exit_one() {
    let store = tmp("usage.jsonl");
    let s = store.to_str().unwrap();
    let cases: Vec<Vec<&str>> = vec![
        vec!["gen", "--family", "no-such-family", "--count", "1", "--store", s],
        vec!["gen", "--family", "elkies4", "--store", s], // missing --count
        vec!["gen", "--family", "hurwitz-n", "--count", "1", "--store", s], // missing --n
        vec!["gen", "--family", "hurwitz-n", "--n", "3", "--count", "1", "--store", s],
        vec!["check", "--ring", "Q", "--store", s, "1,2,-3"],
        vec!["check", "--ring", "Z", "--store", s, "1,x,-3"],
        vec!["check", "--ring", "Z", "--f-set", "2", "--store", s, "1,2,-3"],
        vec!["no-such-subcommand"],
        vec!["gen", "--family", "elkies4", "--count", "1", "--no-such-flag"],
    ];
    for args in cases {
        let out = run(&args);
        assert_eq!(exit_code(&out), 1, "args {args:?}: stderr {}", stderr_of(&out));
    }
    assert!(!store.exists(), "failed runs must not create store records");
}

#[test]
fn computation_errors_exit_two() {
    let store = tmp("comp-errors.jsonl");
    let s = store.to_str().unwrap();
    let cases: Vec<Vec<&str>> = vec![
        vec!["check", "--ring", "Z", "--store", s, "1,0,-1"],
        vec!["check", "--ring", "Z", "--store", s, "1,1,-1,-1"], // all units
        vec!["check", "--ring", "Z", "--store", s, "1,-1"],      // too short
        vec!["export", "--store", "/nonexistent/nqual-void.jsonl"],
    ];
    for args in cases {
        let out = run(&args);
        assert_eq!(exit_code(&out), 2, "args {args:?}: stderr {}", stderr_of(&out));
    }
    let _ = std::fs::remove_file(&store);
}

#[test]
fn the_store_env_var_supplies_the_default_path() {
    let store = tmp("env-default.jsonl");
    let out = Command::new(BIN)
        .args(["check", "--ring", "Z", "4,5,-9"])
        .env("NQUAL_STORE", &store)
        .output()
        .expect("binary launches");
    assert_ok(&out);
    assert_eq!(store_lines(&store).len(), 1);
    let _ = std::fs::remove_file(&store);
}

#[test]
fn selftest_passes() {
    let out = run(&["selftest"]);
    assert_ok(&out);
    assert!(stdout_of(&out).contains("selftest passed"));
}

#[test]
fn lower_bound_qualities_are_marked() {
    let store = tmp("lower-bound.jsonl");
    let s = store.to_str().unwrap();
    // A semiprime entry (1000003 * 1000151) that a starved budget cannot
    // split: the report must carry the ">=" marker and the record the flag.
    let out = run(&[
        "check",
        "--ring",
        "Z",
        "--trial-bound",
        "10",
        "--budget",
        "0",
        "--store",
        s,
        "1000154000453,6,-10",
    ]);
    assert_ok(&out);
    assert!(stdout_of(&out).contains(">="), "got: {}", stdout_of(&out));
    let records = store_lines(&store);
    assert_eq!(records[0]["quality"]["q_is_lower_bound"], true);
    assert_eq!(records[0]["quality"]["rad_complete"], false);
    let _ = std::fs::remove_file(&store);
}
