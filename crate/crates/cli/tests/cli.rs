//! End-to-end behavior of the `qcodes` binary: exit codes, output
//! formats, determinism across worker counts, and file handling.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use qcodes_core::catalog;
use qcodes_core::cosets;
use qcodes_core::field::FieldContext;
use qcodes_core::reference;

fn qcodes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcodes"))
        .args(args)
        .output()
        .expect("binary launches")
}

fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn data_dir_arg() -> String {
    data_dir().to_str().expect("utf-8 path").to_string()
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn code_of(out: &Output) -> i32 {
    out.status.code().expect("terminated by exit, not signal")
}

fn temp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("qcodes-test-{}-{name}", std::process::id()))
}

#[test]
fn verify_exit_code_contract() {
    let optimal = qcodes(&["verify", "--m", "4", "--e", "314"]);
    assert_eq!(code_of(&optimal), 0);
    assert!(stdout_of(&optimal).contains("optimal = true"));

    let short = qcodes(&["verify", "--m", "4", "--e", "9"]);
    assert_eq!(code_of(&short), 1);
    let text = stdout_of(&short);
    assert!(text.contains("d = 3"));
    assert!(text.contains("witness exponents: 0, 156, 312"));
    assert!(text.contains("witness coefficients: 1, 1, 3"));

    let conjugate = qcodes(&["verify", "--m", "4", "--e", "5"]);
    assert_eq!(code_of(&conjugate), 2);
    assert!(stderr_of(&conjugate).contains("coset of 1"));

    let half = qcodes(&["verify", "--m", "4", "--e", "312"]);
    assert_eq!(code_of(&half), 2);
    assert!(stderr_of(&half).contains("half-order"));

    let range = qcodes(&["verify", "--m", "4", "--e", "900"]);
    assert_eq!(code_of(&range), 2);
    assert!(stderr_of(&range).contains("outside"));

    let usage = qcodes(&["verify", "--m", "4"]);
    assert_eq!(code_of(&usage), 64);
    let unknown_flag = qcodes(&["verify", "--m", "4", "--e", "9", "--bogus"]);
    assert_eq!(code_of(&unknown_flag), 64);
}

#[test]
fn verify_machine_formats() {
    let json = qcodes(&["verify", "--m", "4", "--e", "9", "--json"]);
    assert_eq!(code_of(&json), 1);
    let value: serde_json::Value = serde_json::from_str(stdout_of(&json).trim()).unwrap();
    assert_eq!(value["command"], "verify");
    assert_eq!(value["n"], 624);
    assert_eq!(value["k"], 615);
    assert_eq!(value["d"], 3);
    assert_eq!(value["optimal"], false);
    assert_eq!(value["witness"], "0;156;312;1;1;3");

    let csv = qcodes(&["verify", "--m", "4", "--e", "9", "--csv"]);
    let text = stdout_of(&csv);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "command,p,m,e,n,k,d,optimal,witness,family,name,params,branch,hypothesis_ok,millis"
    );
    let row = lines.next().unwrap();
    assert!(row.starts_with("verify,5,4,9,624,615,3,false,0;156;312;1;1;3,"));
    assert_eq!(row.split(',').count(), 15);

    let both = qcodes(&["verify", "--m", "4", "--e", "9", "--json", "--csv"]);
    assert_eq!(code_of(&both), 64);
}

#[test]
fn verify_works_over_the_seven_element_field() {
    let optimal = qcodes(&["verify", "--p", "7", "--m", "2", "--e", "26"]);
    assert_eq!(code_of(&optimal), 0);
    assert!(stdout_of(&optimal).contains("n = 48  k = 43  d = 4"));

    let light = qcodes(&["verify", "--p", "7", "--m", "3", "--e", "173"]);
    assert_eq!(code_of(&light), 1);
    let text = stdout_of(&light);
    assert!(text.contains("d = 2"));
    assert!(text.contains("witness exponents: 0, 171"));
}

#[test]
fn enumerate_round_trips_through_the_reference_parser() {
    let out = qcodes(&["enumerate", "--m", "2"]);
    assert_eq!(code_of(&out), 0);
    let table = reference::parse_table(&stdout_of(&out)).unwrap();
    let report = reference::evaluate(&table, 5, 24);
    assert!(report.issues.is_empty());
    assert_eq!(report.leaders, [3, 7, 14, 19]);
}

#[test]
fn enumerate_csv_matches_the_library_catalog() {
    let out = qcodes(&["enumerate", "--m", "3", "--format", "csv"]);
    let text = stdout_of(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "leader,coset,length,d,optimal");

    let ctx = FieldContext::new(5, 3);
    let expected = catalog::enumerate_optimal(&ctx);
    let mut leaders = Vec::new();
    for line in lines {
        let cols: Vec<&str> = line.split(',').collect();
        assert_eq!(cols.len(), 5);
        let leader: u64 = cols[0].parse().unwrap();
        let coset: Vec<u64> = cols[1].split(';').map(|v| v.parse().unwrap()).collect();
        assert_eq!(coset, cosets::orbit(leader, 5, 124));
        assert_eq!(cols[2].parse::<usize>().unwrap(), coset.len());
        assert_eq!(cols[3], "4");
        assert_eq!(cols[4], "true");
        leaders.push(leader);
    }
    assert_eq!(leaders, expected);
}

#[test]
fn enumerate_output_is_independent_of_worker_count() {
    let one = qcodes(&["enumerate", "--m", "4", "--format", "csv", "--jobs", "1"]);
    let four = qcodes(&["enumerate", "--m", "4", "--format", "csv", "--jobs", "4"]);
    let again = qcodes(&["enumerate", "--m", "4", "--format", "csv", "--jobs", "4"]);
    assert_eq!(code_of(&one), 0);
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(four.stdout, again.stdout);
}

#[test]
fn enumerate_writes_files_and_reports_io_failures() {
    let path = temp_path("catalog.txt");
    let out = qcodes(&[
        "enumerate",
        "--m",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code_of(&out), 0);
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with('#'));
    std::fs::remove_file(&path).unwrap();

    let bad = qcodes(&[
        "enumerate",
        "--m",
        "2",
        "--out",
        "/nonexistent-qcodes-dir/catalog.txt",
    ]);
    assert_eq!(code_of(&bad), 74);
    assert!(stderr_of(&bad).contains("cannot write"));
}

#[test]
fn theorem_exit_codes_and_listings() {
    let thm8 = qcodes(&["theorem", "--name", "thm8", "--m", "5"]);
    assert_eq!(code_of(&thm8), 0);
    let text = stdout_of(&thm8);
    assert_eq!(text.matches("optimal").count(), 5);
    for e in [3, 7, 27, 127, 627] {
        assert!(text.contains(&format!("e={e} ")), "missing e={e}");
    }

    let thm9 = qcodes(&["theorem", "--name", "thm9", "--m", "4"]);
    assert_eq!(code_of(&thm9), 0);
    assert!(stdout_of(&thm9).contains("e=31 "));

    // observational families report without promising optimality
    let remark = qcodes(&["theorem", "--name", "remark_p7", "--m", "3"]);
    assert_eq!(code_of(&remark), 0);
    let text = stdout_of(&remark);
    assert!(text.contains("not optimal"));
    assert!(text.contains("hypothesis=violated"));

    assert_eq!(code_of(&qcodes(&["theorem", "--name", "thm6", "--m", "5"])), 64);
    assert_eq!(code_of(&qcodes(&["theorem", "--name", "thm11", "--m", "4"])), 64);
    assert_eq!(code_of(&qcodes(&["theorem", "--name", "thm4", "--m", "4"])), 64);
    assert_eq!(code_of(&qcodes(&["theorem", "--name", "nosuch", "--m", "4"])), 64);
}

#[test]
fn theorem_json_records_parse() {
    let out = qcodes(&["theorem", "--name", "thm8", "--m", "4", "--json"]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2); // h = 0 and h = 2 survive the parity table
    for line in lines {
        let value: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(value["command"], "theorem");
        assert_eq!(value["family"], "thm8");
        assert_eq!(value["optimal"], true);
        assert!(value["params"].is_array());
    }
}

#[test]
fn factor_prints_canonical_products() {
    let six = qcodes(&["factor", "--poly", "(x+1)^8-1"]);
    assert_eq!(code_of(&six), 0);
    assert_eq!(
        stdout_of(&six).trim(),
        "(x) * (x+2) * (x+3) * (x+4) * (x^2+2x+3) * (x^2+2x+4)"
    );

    let fourteen = qcodes(&["factor", "--poly", "(x+4)^24-1"]);
    assert_eq!(code_of(&fourteen), 0);
    assert_eq!(stdout_of(&fourteen).trim().split(" * ").count(), 14);

    assert_eq!(stdout_of(&qcodes(&["factor", "--poly", "x"])).trim(), "x");
    assert_eq!(stdout_of(&qcodes(&["factor", "--poly", "3"])).trim(), "3");

    let seeded = qcodes(&["factor", "--poly", "x^24+x^20+1", "--seed", "1"]);
    let reseeded = qcodes(&["factor", "--poly", "x^24+x^20+1", "--seed", "99"]);
    assert_eq!(code_of(&seeded), 0);
    assert_eq!(seeded.stdout, reseeded.stdout);
}

#[test]
fn factor_parse_errors_point_at_the_byte() {
    let out = qcodes(&["factor", "--poly", "x^3++1"]);
    assert_eq!(code_of(&out), 65);
    let text = stderr_of(&out);
    assert!(text.contains("offset 4"));
    let caret_line = text.lines().last().unwrap();
    assert_eq!(caret_line, "      ^");
}

#[test]
fn tables_diff_is_clean_with_bundled_errata() {
    let m4 = qcodes(&["tables", "diff", "--m", "4", "--data-dir", &data_dir_arg()]);
    assert_eq!(code_of(&m4), 0);
    let text = stdout_of(&m4);
    assert!(text.contains("result: clean"));
    assert!(text.contains("(40 rows, 14 studied)"));

    // same resolution through the environment variable
    let via_env = Command::new(env!("CARGO_BIN_EXE_qcodes"))
        .args(["tables", "diff", "--m", "4"])
        .env("QCODES_DATA_DIR", data_dir_arg())
        .output()
        .expect("binary launches");
    assert_eq!(code_of(&via_env), 0);
}

#[test]
fn tables_diff_reports_raw_discrepancies() {
    let raw = qcodes(&[
        "tables", "diff", "--m", "5", "--no-errata", "--data-dir", &data_dir_arg(),
    ]);
    assert_eq!(code_of(&raw), 1);
    let text = stdout_of(&raw);
    assert!(text.contains("8103"));
    assert!(text.contains("missing from reference: 459, 1059, 1099, 1123"));
    assert!(text.contains("not confirmed by computation: 37, 141, 142, 143"));

    let fixed = qcodes(&[
        "tables", "diff", "--m", "5", "--json", "--data-dir", &data_dir_arg(),
    ]);
    assert_eq!(code_of(&fixed), 0);
    let text = stdout_of(&fixed);
    let summary: serde_json::Value =
        serde_json::from_str(text.lines().last().unwrap()).unwrap();
    assert_eq!(summary["kind"], "summary");
    assert_eq!(summary["clean"], true);
    assert_eq!(summary["rows"], 265);
    assert_eq!(summary["computed"], 265);
}

#[test]
fn tables_diff_misuse_paths() {
    let missing = qcodes(&["tables", "diff", "--m", "4", "--ref", "/nope/missing.txt"]);
    assert_eq!(code_of(&missing), 66);
    assert!(stderr_of(&missing).contains("cannot read"));

    let no_default = qcodes(&["tables", "diff", "--m", "3", "--data-dir", &data_dir_arg()]);
    assert_eq!(code_of(&no_default), 64);
    assert!(stderr_of(&no_default).contains("--ref"));
}

#[test]
fn tables_diff_confirms_enumerate_output() {
    let path = temp_path("self-table.txt");
    let gen = qcodes(&["enumerate", "--m", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(code_of(&gen), 0);
    let diff = qcodes(&["tables", "diff", "--m", "2", "--ref", path.to_str().unwrap()]);
    assert_eq!(code_of(&diff), 0);
    assert!(stdout_of(&diff).contains("result: clean"));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn help_and_version_exit_cleanly() {
    let help = qcodes(&["--help"]);
    assert_eq!(code_of(&help), 0);
    assert!(stdout_of(&help).contains("verify"));
    let version = qcodes(&["--version"]);
    assert_eq!(code_of(&version), 0);
    assert!(stdout_of(&version).contains("qcodes"));
}
