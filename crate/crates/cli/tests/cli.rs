use std::process::{Command, Output};

fn rcperm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rcperm")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn enumerate_centrosymmetric_members() {
    let o = rcperm(&["enumerate", "--class", "av:321", "--n", "4", "--centro", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "permutation\n1234\n1324\n2143\n2413\n3142\n3412\n");
    let o = rcperm(&["enumerate", "--class", "av:321", "--n", "5", "--centro", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let count = v["checks"].as_array().unwrap().iter().find(|c| c["id"] == "count").unwrap();
    assert_eq!(count["actual"], 2);
}

#[test]
fn root_of_the_threshold_polynomial() {
    let o = rcperm(&["root", "x^5-2x^4-x^2-x-1", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let root: f64 = stdout(&o).lines().nth(1).unwrap().parse().unwrap();
    assert!((root - 2.30522).abs() < 1e-5);
}

#[test]
fn x_class_centrosymmetric_counts() {
    let o = rcperm(&["grid", "--matrix", "-1,1;1,-1", "--check", "centro", "--n", "5", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let counts: Vec<String> =
        stdout(&o).lines().skip(1).map(|l| l.split(',').nth(1).unwrap().to_string()).collect();
    assert_eq!(counts, ["2", "4", "8", "16", "32"]);
}

#[test]
fn gf_expansion() {
    let o = rcperm(&["gf", "(1-x-x^2)/(1-2x-x^2)", "--terms", "6", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let coeffs: Vec<String> = stdout(&o).lines().skip(1).map(|l| l.split(',').nth(1).unwrap().to_string()).collect();
    assert_eq!(coeffs, ["1", "1", "2", "5", "12", "29"]);
}

#[test]
fn verify_and_scan_exit_codes() {
    for target in ["table1", "table3", "section5"] {
        let o = rcperm(&["verify", "--target", target, "--max", "8"]);
        assert_eq!(o.status.code(), Some(0), "{target}: {}", stdout(&o));
    }
    let o = rcperm(&["scan", "--class", "av:321,3142,2413", "--max-n", "8", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["command"], "scan");
}

#[test]
fn failed_witness_search_exits_one() {
    let o = rcperm(&["atomic", "--class", "union(av:312,rc(av:312))", "--sigma", "312", "--bound", "8"]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    let o = rcperm(&["atomic", "--class", "av:321", "--max-sigma", "3", "--bound", "8"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    let o = rcperm(&["enumerate", "--class", "av:3x1", "--n", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("`x1`"));
    let o = rcperm(&["enumerate", "--class", "av:321", "--n", "3", "--format", "yaml"]);
    assert_eq!(o.status.code(), Some(2));
    let o = rcperm(&["counts", "--class", "av:321", "--max-n", "11"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--force"));
    let o = rcperm(&["enumerate", "--class", "av:321,312,231", "--n", "11", "--force", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1 + 144);
}

#[test]
fn thread_count_does_not_change_output() {
    let a = rcperm(&["verify", "--target", "table1", "--max", "10", "--jobs", "1", "--format", "json"]);
    let b = rcperm(&["verify", "--target", "table1", "--max", "10", "--jobs", "3", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}
