//! End-to-end tests driving the compiled binary: output formats, exit codes,
//! cache behavior, and determinism of the verification reports.

use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_redwords"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
    )
}

#[test]
fn table_lists_all_coefficient_rows() {
    let (code, stdout, _) = run(&["table", "--format", "tsv"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("pattern\ta\tb\n"));
    assert_eq!(stdout.lines().count(), 14);
    assert!(stdout.contains("4321\t2\t3"));
    assert!(stdout.contains("3412\t1\t2"));
    let (code, jsonl, _) = run(&["table"]);
    assert_eq!(code, 0);
    assert_eq!(jsonl.lines().count(), 13);
    assert!(jsonl.contains(r#""pattern":"321""#));
}

#[test]
fn symmetric_group_sweeps_verify_at_small_degree() {
    for sub in ["verify-a-lower-bound", "verify-equality", "verify-3412"] {
        let (code, stdout, stderr) = run(&[sub, "--n-max", "4"]);
        assert_eq!(code, 0, "{sub}: {stdout}{stderr}");
        assert!(stdout.contains(r#""status":"verified""#), "{sub}: {stdout}");
    }
}

#[test]
fn signed_permutation_bound_verifies_exhaustively_at_rank_two() {
    let (code, stdout, _) = run(&["verify-b-conjecture", "--n-max", "2"]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains(r#""status":"verified""#));
}

#[test]
fn valley_family_verifies() {
    let (code, stdout, _) = run(&["verify-d-example", "--n-max", "6"]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains(r#""claim_id":"d-valley-family""#));
    assert!(stdout.contains(r#""status":"verified""#));
}

#[test]
fn d_w0_suite_reports_every_claim_at_rank_four() {
    let (code, stdout, _) = run(&["d-w0-suite", "--rank", "4"]);
    assert_eq!(code, 0, "{stdout}");
    assert_eq!(stdout.lines().count(), 5);
    for claim in
        ["l2-formula", "rro-form", "defect-bound", "diameter-window", "accessibility"]
    {
        let line = stdout
            .lines()
            .find(|l| l.contains(&format!(r#""claim_id":"d-w0-{claim}""#)))
            .unwrap_or_else(|| panic!("missing claim {claim}: {stdout}"));
        assert!(line.contains(r#""status":"verified""#), "{line}");
    }
}

#[test]
fn d_w0_suite_is_inconclusive_when_budget_starved() {
    let (code, stdout, _) = run(&["d-w0-suite", "--rank", "4", "--budget-vertices", "100"]);
    assert_eq!(code, 3, "{stdout}");
    assert!(stdout.contains(r#""status":"inconclusive""#));
    assert!(!stdout.contains(r#""status":"counterexample""#));
}

#[test]
fn subsystem_count_of_the_longest_symmetric_element() {
    let (code, stdout, _) = run(&["l2", "--type", "A", "--rank", "3", "--window", "4,3,2,1"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(stdout.trim()).expect("json");
    assert_eq!(v["l2"], 7);
    assert_eq!(v["by_kind"]["A2"], 4);
}

#[test]
fn diameter_is_exact_within_budget_and_truncated_beyond() {
    let (code, stdout, _) =
        run(&["diameter", "--type", "A", "--rank", "3", "--window", "3,4,1,2"]);
    assert_eq!(code, 0, "{stdout}");
    let v: serde_json::Value = serde_json::from_str(stdout.trim()).expect("json");
    assert_eq!(v["diameter_lower_bound"], 1);
    assert_eq!(v["exact"], true);

    let (code, stdout, _) = run(&[
        "diameter", "--type", "A", "--rank", "3", "--window", "4,3,2,1",
        "--budget-sources", "3",
    ]);
    assert_eq!(code, 3, "{stdout}");
    let v: serde_json::Value = serde_json::from_str(stdout.trim()).expect("json");
    assert_eq!(v["exact"], false);
}

#[test]
fn enumerate_lists_words_and_respects_the_vertex_budget() {
    let (code, stdout, _) =
        run(&["enumerate", "--type", "A", "--rank", "2", "--window", "3,2,1", "--format", "tsv"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "1,2,1\n2,1,2\n");

    let (code, _, stderr) = run(&[
        "enumerate", "--type", "A", "--rank", "3", "--window", "4,3,2,1",
        "--budget-vertices", "5",
    ]);
    assert_eq!(code, 3);
    assert!(stderr.contains("budget-vertices"));
}

#[test]
fn pattern_counts_in_a_window() {
    let (code, stdout, _) =
        run(&["patterns", "--window", "4,5,1,3,2", "--patterns", "321,3412", "--format", "tsv"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "321\t2\n3412\t2\n");
}

#[test]
fn negative_window_entries_parse() {
    let (code, stdout, _) =
        run(&["dump", "element", "--type", "B", "--rank", "2", "--window", "-1,-2"]);
    assert_eq!(code, 0, "{stdout}");
    let v: serde_json::Value = serde_json::from_str(stdout.trim()).expect("json");
    assert_eq!(v["length"], 4);
}

#[test]
fn graph_cache_roundtrip() {
    let dir = tempfile::tempdir().expect("tempdir");
    let dir_str = dir.path().to_str().unwrap();
    let (code, stdout, _) = run(&[
        "--cache-dir", dir_str, "dump", "graph", "--type", "A", "--rank", "3",
        "--window", "4,3,2,1",
    ]);
    assert_eq!(code, 0, "{stdout}");
    let v: serde_json::Value = serde_json::from_str(stdout.trim()).expect("json");
    assert_eq!(v["vertices"], 16);
    let path = std::path::PathBuf::from(v["path"].as_str().unwrap());
    assert!(path.exists());
    assert_eq!(path.file_name().unwrap().to_str().unwrap(), "A3-4,3,2,1.rwg");

    let (code, stdout, _) = run(&[
        "--cache-dir", dir_str, "diameter", "--type", "A", "--rank", "3",
        "--window", "4,3,2,1",
    ]);
    assert_eq!(code, 0, "{stdout}");
    let v: serde_json::Value = serde_json::from_str(stdout.trim()).expect("json");
    assert_eq!(v["diameter_lower_bound"], 7);
    assert_eq!(v["exact"], true);
}

#[test]
fn verification_reports_are_deterministic() {
    let strip_times = |stdout: &str| -> Vec<String> {
        stdout
            .lines()
            .map(|line| {
                let mut v: serde_json::Value = serde_json::from_str(line).expect("json");
                v.as_object_mut().unwrap().remove("wall_time_ms");
                v.to_string()
            })
            .collect()
    };
    let (_, first, _) = run(&["verify-equality", "--n-max", "4"]);
    let (_, second, _) = run(&["verify-equality", "--n-max", "4"]);
    assert_eq!(strip_times(&first), strip_times(&second));
    let (_, first, _) = run(&["verify-b-conjecture", "--n-max", "2"]);
    let (_, second, _) = run(&["verify-b-conjecture", "--n-max", "2"]);
    assert_eq!(strip_times(&first), strip_times(&second));
}

#[test]
fn usage_errors_exit_one_and_help_exits_zero() {
    let (code, _, _) = run(&["--bogus-flag"]);
    assert_eq!(code, 1);
    let (code, _, _) = run(&["diameter", "--type", "A", "--rank", "3"]);
    assert_eq!(code, 1, "missing --window is a usage error");
    let (code, _, _) = run(&["--help"]);
    assert_eq!(code, 0);
    let (code, _, _) = run(&["verify-d-example", "--n-max", "99"]);
    assert_eq!(code, 1, "out-of-range rank is an input error");
}
