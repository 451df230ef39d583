use std::path::PathBuf;
use std::process::{Command, Output};

use mlq::combinatorics::parse_ratio;
use mlq::formulas::{closed_c_gt, closed_c_lt};
use mlq::ExactRatio;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn mlq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mlq"))
        .args(args)
        .env_remove("MLQ_MAX_N")
        .output()
        .expect("run mlq")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn project_continuous_fixture() {
    let o = mlq(&["project", fixture("continuous_1312.txt").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.starts_with("word: 3441222\n"), "{out}");
    assert!(out.contains("path 1: (1,5) -> (2,7) -> (3,8) -> (4,11)"), "{out}");
    assert!(out.contains("wrap: row 3 value 16 -> row 4 value 2"), "{out}");
}

#[test]
fn project_discrete_fixture() {
    let o = mlq(&["project", "--discrete", fixture("discrete_2122.txt").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("word: 3345515525145\n"));
}

#[test]
fn malformed_input_exits_2_with_line() {
    let dir = std::env::temp_dir().join(format!("mlq-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.txt");
    std::fs::write(&bad, "# header\n2\n1 x 3\n").unwrap();
    let o = mlq(&["project", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));

    std::fs::write(&bad, "1 2\n3\n").unwrap();
    let o = mlq(&["project", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));

    let o = mlq(&["project", dir.join("missing.txt").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let o = mlq(&["tables", "n13", "--n", "6..5"]);
    assert_eq!(o.status.code(), Some(2));
    let o = mlq(&["correlations", "--n", "3", "--workers", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn tables_match_published() {
    let o = mlq(&["tables", "n13", "--n", "5..6", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("n13,3,1,5,770,770,thm:n13,,770,true"), "{out}");
    assert!(out.contains("n13,2,2,6,462,462,thm:n13,,462,true"), "{out}");

    let o = mlq(&["tables", "rho23", "--n", "3..6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains(" no\n"));
}

#[test]
fn beta_table_reports_disagreements() {
    // Enumeration and the published cells differ at t = 0.
    let o = mlq(&["tables", "beta13", "--n", "5..6", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let cells = v["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 25);
    for c in cells {
        let t = c["t"].as_i64().unwrap();
        assert_eq!(c["match"].as_bool().unwrap(), t > 0, "{c}");
    }
}

#[test]
fn correlations_json_round_trip() {
    for method in ["direct", "projection", "closed"] {
        let o = mlq(&["correlations", "--n", "4", "--method", method, "--format", "json"]);
        assert_eq!(o.status.code(), Some(0), "{method}: {}", stderr(&o));
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["method"], method);
        for e in v["entries"].as_array().unwrap() {
            let (i, j) = (e["i"].as_i64().unwrap(), e["j"].as_i64().unwrap());
            let value = parse_ratio(e["value"].as_str().unwrap()).unwrap();
            let frac = format!("{}/{}", e["num"].as_str().unwrap(), e["den"].as_str().unwrap());
            assert_eq!(parse_ratio(&frac).unwrap(), value);
            let expect = match i.cmp(&j) {
                std::cmp::Ordering::Greater => closed_c_gt(i, j, 4).unwrap(),
                std::cmp::Ordering::Less => closed_c_lt(i, j, 4).unwrap(),
                std::cmp::Ordering::Equal => continue,
            };
            assert_eq!(value, expect, "{method} ({i},{j})");
        }
    }
}

#[test]
fn correlations_csv_round_trip() {
    let o = mlq(&["correlations", "--n", "7", "--method", "projection", "--format", "csv"]);
    let p = mlq(&["correlations", "--n", "7", "--method", "closed", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), stdout(&p));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("i,j,value"));
    let mut first_row = ExactRatio::from_integer(0.into());
    for line in lines {
        let f: Vec<&str> = line.split(',').collect();
        assert_eq!(f.len(), 3);
        let v = parse_ratio(f[2]).unwrap();
        if f[0] == "1" {
            first_row += v;
        }
    }
    // Each species is followed by some other species.
    assert_eq!(first_row, ExactRatio::from_integer(1.into()));
}

#[test]
fn correlations_n2_are_one() {
    for method in ["direct", "projection", "closed"] {
        let o = mlq(&["correlations", "--n", "2", "--method", method, "--format", "csv"]);
        assert_eq!(stdout(&o), "i,j,value\n1,1,0/1\n1,2,1/1\n2,1,1/1\n2,2,0/1\n");
    }
}

#[test]
fn guard_refusals_exit_3() {
    let o = mlq(&["correlations", "--n", "6", "--method", "direct"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("refusing to enumerate"), "{}", stderr(&o));
    let o = mlq(&["verify", "--suite", "theorems", "--max-N", "30"]);
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_mlq"))
        .args(["tables", "n13", "--n", "5..6"])
        .env("MLQ_MAX_N", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn verify_passes_and_catches_faults() {
    let o = mlq(&["verify", "--suite", "theorems", "--max-N", "9"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("result: ok\n"));

    let o = mlq(&["verify", "--suite", "theorems", "--max-N", "9", "--inject-fault", "thm:n13"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("thm:n13"), "{out}");
    assert!(out.ends_with("result: mismatch\n"), "{out}");

    // Conjecture disagreements are listed but do not fail the run.
    let o = mlq(&["verify", "--suite", "conjectures", "--max-N", "9", "--inject-fault", "conjecture:gamma"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("COUNTEREXAMPLE"), "{}", stdout(&o));
}

#[test]
fn conjectures_report_no_counterexamples() {
    let o = mlq(&["verify", "--suite", "conjectures"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("no counterexamples found"));
}

#[test]
fn output_is_independent_of_workers() {
    let run = |w: &str| stdout(&mlq(&["verify", "--suite", "all", "--max-N", "8", "--workers", w, "--format", "json"]));
    let one = run("1");
    assert_eq!(one, run("2"));
    assert_eq!(one, run("8"));
    let run = |w: &str| stdout(&mlq(&["tables", "beta13", "--n", "5..6", "--workers", w]));
    assert_eq!(run("1"), run("8"));
}

#[test]
fn output_file_option() {
    let path = std::env::temp_dir().join(format!("mlq-out-{}.csv", std::process::id()));
    let o = mlq(&["tables", "rho23", "--n", "3..4", "--format", "csv", "-o", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("table,s,t,n,"));
    assert!(text.contains("rho23,2,,4,40,40,"), "{text}");
    std::fs::remove_file(path).ok();
}
