//! End-to-end tests of the `eigenperm` binary: output formats, file
//! formats, configuration precedence, and the exit-code contract
//! (0 = success, 1 = mathematical failure, 2 = usage error).

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_eigenperm"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write_file(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn seq_eigen_first_seven_terms() {
    let out = run(&["seq", "eigen", "--terms", "7"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1 1 2 6 23 104 531\n");
}

#[test]
fn seq_fixpoint_single_term() {
    let out = run(&["seq", "fixpoint", "--terms", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn seq_routes_agree_in_json() {
    let eigen = run(&["seq", "eigen", "--terms", "20", "--format", "json"]);
    let fixpoint = run(&["seq", "fixpoint", "--terms", "20", "--format", "json"]);
    assert!(eigen.status.success() && fixpoint.status.success());
    assert_eq!(stdout(&eigen), stdout(&fixpoint));
    let parsed: Vec<String> = serde_json::from_str(stdout(&eigen).trim()).unwrap();
    assert_eq!(parsed.len(), 20);
    assert_eq!(parsed[6], "531");
}

#[test]
fn seq_check_flag_cross_verifies() {
    let out = run(&["seq", "eigen", "--terms", "10", "--check"]);
    assert!(out.status.success());
}

#[test]
fn seq_csv_format() {
    let out = run(&["seq", "eigen", "--terms", "3", "--format", "csv"]);
    assert_eq!(stdout(&out), "index,value\n1,1\n2,1\n3,2\n");
}

#[test]
fn seq_usage_errors_exit_2() {
    assert_eq!(run(&["seq", "eigen", "--terms", "0"]).status.code(), Some(2));
    assert_eq!(run(&["seq", "eigen", "--terms", "201"]).status.code(), Some(2));
    // the fixpoint route is partition-bounded
    assert_eq!(run(&["seq", "fixpoint", "--terms", "60"]).status.code(), Some(2));
    // clap rejects unknown flags with exit 2
    assert_eq!(run(&["seq", "eigen", "--bogus"]).status.code(), Some(2));
}

#[test]
fn transform_rr_on_zeros_gives_identity() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_file(dir.path(), "zeros.txt", "0\n0\n0\n0\n");
    let out = run(&["transform", "rr", "--input", &input, "--terms", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1 0 0 0\n");
}

#[test]
fn transform_rr_fixes_the_eigensequence() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_file(
        dir.path(),
        "eigen.txt",
        "# eigensequence prefix\n1\n1\n2\n6\n23\n104\n531\n2982\n",
    );
    let out = run(&["transform", "rr", "--input", &input, "--terms", "8"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1 1 2 6 23 104 531 2982\n");
}

#[test]
fn transform_routes_agree_on_integer_input() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_file(dir.path(), "random.txt", "3\n-5\n0\n7\n-2\n9\n1\n-9\n4\n0\n");
    let rr = run(&["transform", "rr", "--input", &input, "--terms", "10"]);
    let lag = run(&["transform", "lagrange-rr", "--input", &input, "--terms", "10"]);
    assert!(rr.status.success() && lag.status.success());
    assert_eq!(stdout(&rr), stdout(&lag));
}

#[test]
fn transform_self_comp_shifts_the_eigensequence() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_file(dir.path(), "eigen.txt", "1\n1\n2\n6\n23\n104\n531\n");
    let out = run(&["transform", "self-comp", "--input", &input, "--terms", "6"]);
    assert_eq!(stdout(&out), "1 2 6 23 104 531\n");
}

#[test]
fn transform_fsqrt_reports_irrational_leading_term() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_file(dir.path(), "two.txt", "2\n0\n0\n");
    let out = run(&["transform", "fsqrt", "--input", &input, "--terms", "3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn transform_parse_failures_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_file(dir.path(), "bad.txt", "1\nnot-a-number\n");
    let out = run(&["transform", "rr", "--input", &bad, "--terms", "2"]);
    assert_eq!(out.status.code(), Some(2));

    let rational = write_file(dir.path(), "rat.txt", "1\n1/2\n");
    let out = run(&["transform", "lagrange-rr", "--input", &rational, "--terms", "2"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["transform", "rr", "--input", "/nonexistent/file", "--terms", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn count_methods_agree() {
    let mut values = Vec::new();
    for method in ["brute", "recurrence", "trees", "eigen"] {
        let out = run(&["count", "--n", "6", "--method", method]);
        assert!(out.status.success(), "method {method}");
        values.push(stdout(&out));
    }
    assert!(values.iter().all(|v| v == "531\n"), "{values:?}");
}

#[test]
fn count_edge_cases_and_bounds() {
    let out = run(&["count", "--n", "0", "--method", "brute"]);
    assert_eq!(stdout(&out), "1\n");
    // default exhaustive bound is 10
    assert_eq!(run(&["count", "--n", "11", "--method", "brute"]).status.code(), Some(2));
    assert_eq!(run(&["count", "--n", "11", "--method", "trees"]).status.code(), Some(2));
}

#[test]
fn count_env_var_lowers_the_bound_but_flags_win() {
    let out = bin()
        .args(["count", "--n", "5", "--method", "brute"])
        .env("EIGENPERM_MAX_N", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    // --allow-long overrides the environment entirely
    let out = bin()
        .args(["count", "--n", "5", "--method", "brute", "--allow-long"])
        .env("EIGENPERM_MAX_N", "4")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out), "104\n");
}

#[test]
fn count_cache_detects_mismatches() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.json");
    let cache_str = cache.to_string_lossy().into_owned();

    let out = run(&["count", "--n", "4", "--method", "brute", "--cache", &cache_str]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "23\n");

    // consistent rerun passes
    let out = run(&["count", "--n", "4", "--method", "brute", "--cache", &cache_str]);
    assert!(out.status.success());

    // a corrupted entry is a verification failure
    std::fs::write(&cache, "{\"count:brute:4\": \"999\"}").unwrap();
    let out = run(&["count", "--n", "4", "--method", "brute", "--cache", &cache_str]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bijection_reference_round_trip() {
    let word = "3 1 2 5 4 11 7 6 8 12 14 13 10 9";
    let out = run(&["bijection", "to-tree", word, "--check"]);
    assert!(out.status.success());
    let json = stdout(&out);
    let v: serde_json::Value = serde_json::from_str(json.trim()).unwrap();
    assert_eq!(v["labels"], serde_json::json!([4, 3, 2, 1]));

    let dir = tempfile::tempdir().unwrap();
    let path = write_file(dir.path(), "tree.json", &json);
    let back = run(&["bijection", "to-perm", &path, "--check"]);
    assert!(back.status.success());
    assert_eq!(stdout(&back), format!("{word}\n"));
}

#[test]
fn bijection_path_tree_for_identity() {
    let out = run(&["bijection", "to-tree", "1 2 3"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim(),
        "{\"labels\":[1],\"children\":[{\"labels\":[1],\"children\":\
         [{\"labels\":[1],\"children\":[{\"labels\":[],\"children\":[]}]}]}]}"
    );
}

#[test]
fn bijection_failures_use_the_exit_contract() {
    // condition-(i) violation is a mathematical failure
    let out = run(&["bijection", "to-tree", "3 2 4 1"]);
    assert_eq!(out.status.code(), Some(1));

    // a structurally invalid tree is a mathematical failure
    let dir = tempfile::tempdir().unwrap();
    let bad = write_file(
        dir.path(),
        "bad.json",
        "{\"labels\":[1,2],\"children\":[{\"labels\":[],\"children\":[]},\
         {\"labels\":[],\"children\":[]}]}",
    );
    let out = run(&["bijection", "to-perm", &bad]);
    assert_eq!(out.status.code(), Some(1));

    // malformed JSON and malformed words are usage errors
    let garbled = write_file(dir.path(), "garbled.json", "{not json");
    assert_eq!(run(&["bijection", "to-perm", &garbled]).status.code(), Some(2));
    assert_eq!(run(&["bijection", "to-tree", "1 2 2"]).status.code(), Some(2));
}

#[test]
fn verify_suites_pass_and_render_json() {
    let out = run(&["verify", "--suite", "bijection", "--max-n", "1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("pass"));

    let out = run(&["verify", "--suite", "counts", "--max-n", "5", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["suite"], "counts");
    assert_eq!(v["status"], "pass");
    assert!(v["checks"].as_array().unwrap().len() >= 3);
    for check in v["checks"].as_array().unwrap() {
        assert_eq!(check["status"], "pass", "{check}");
        assert!(check["ms"].is_number());
    }
}

#[test]
fn verify_bounds_exit_2() {
    let out = run(&["verify", "--suite", "counts", "--max-n", "11"]);
    assert_eq!(out.status.code(), Some(2));
}
