use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn irrg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_irrg"))
        .args(args)
        .output()
        .expect("run irrg")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

#[test]
fn irr_report_for_clique_star() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ks.txt");
    let o = irrg(&[
        "extremal",
        "ks",
        "--p",
        "2",
        "--q",
        "4",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));

    let o = irrg(&["irr", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("irr         24  (third Zagreb index M3)"), "{text}");

    let v = json(&irrg(&["irr", path.to_str().unwrap(), "--json"]));
    assert_eq!(v["irr"], 24);
    assert_eq!(v["n"], 6);
    assert_eq!(v["m"], 9);
}

#[test]
fn irr_on_trivial_and_path_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let single = dir.path().join("k1.txt");
    fs::write(&single, "1 0\n").unwrap();
    let v = json(&irrg(&["irr", single.to_str().unwrap(), "--json"]));
    for key in ["m", "irr", "zagreb1", "zagreb2", "max_degree", "min_degree"] {
        assert_eq!(v[key], 0, "{key}");
    }

    let p3 = dir.path().join("p3.g6");
    fs::write(&p3, "Bg\n").unwrap();
    let v = json(&irrg(&["irr", p3.to_str().unwrap(), "--json"]));
    assert_eq!(v["irr"], 2);
}

#[test]
fn irr_parse_error_names_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    fs::write(&path, "3 2\n0 1\n1 1\n").unwrap();
    let o = irrg(&["irr", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn extremal_examples() {
    let o = irrg(&["extremal", "ks", "--n", "7", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let graph = stdout(&o);
    assert!(graph.starts_with("7 11\n"));
    let report: Value = serde_json::from_str(String::from_utf8_lossy(&o.stderr).trim()).unwrap();
    assert_eq!(report["construction"], "KS_{2,5}");
    assert_eq!(report["recomputed"], 40);

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("fs.g6");
    let o = irrg(&[
        "extremal",
        "fs",
        "--n",
        "6",
        "--k",
        "2",
        "--format",
        "graph6",
        "--out",
        out.to_str().unwrap(),
        "--json",
    ]);
    let v = json(&o);
    assert_eq!(
        (v["m"].as_u64(), v["closed_form"].as_u64(), v["ok"].as_bool()),
        (Some(7), Some(18), Some(true))
    );
    let v = json(&irrg(&["irr", out.to_str().unwrap(), "--json"]));
    assert_eq!(v["irr"], 18);

    let o = irrg(&[
        "extremal",
        "chain",
        "--copies",
        "2",
        "--p",
        "1",
        "--q",
        "2",
        "--out",
        out.to_str().unwrap(),
        "--json",
    ]);
    assert_eq!(json(&o)["recomputed"], 4);
}

#[test]
fn extremal_rejects_bad_parameters() {
    let o = irrg(&["extremal", "chain", "--n", "10", "--max-degree", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not divisible"));
    assert_eq!(irrg(&["extremal", "fs", "--n", "4"]).status.code(), Some(2));
}

#[test]
fn seq_commands() {
    let o = irrg(&["seq", "check", "3,3,1,1"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "not graphic (Erdős–Gallai fails at r=2)\n");
    assert_eq!(irrg(&["seq", "check", "2,2,2"]).status.code(), Some(0));

    let o = irrg(&["seq", "realize", "5,5,2,2,2,2", "--json"]);
    assert!(stdout(&o).starts_with("6 9\n"));
    let v: Value = serde_json::from_str(String::from_utf8_lossy(&o.stderr).trim()).unwrap();
    assert_eq!(v["irr"], 24);

    let v = json(&irrg(&["seq", "maxbound", "--n", "11", "--json"]));
    assert_eq!(v["max_bound"], 168);
    assert_eq!(
        v["argmax"],
        serde_json::json!([
            [10, 10, 10, 10, 4, 4, 4, 4, 4, 4, 4],
            [10, 10, 10, 3, 3, 3, 3, 3, 3, 3, 3]
        ])
    );

    let o = irrg(&["seq", "enumerate", "--n", "3"]);
    assert_eq!(stdout(&o), "2,2,2\n2,1,1\n1,1,0\n0,0,0\n");
    let o = irrg(&["seq", "enumerate", "--n", "6", "--min-degree", "1", "--count"]);
    assert_eq!(stdout(&o), "71\n");
}

#[test]
fn table_rows() {
    let o = irrg(&["table1", "--max-n", "12", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 10);
    assert_eq!(
        rows[0],
        serde_json::json!({"n": 3, "constructions": [[1, 2]], "sequences": [[2, 1, 1]], "irr": 2})
    );
    let last = &rows[9];
    assert_eq!(last["constructions"], serde_json::json!([[4, 8]]));
    assert_eq!(last["irr"], 224);
    assert_eq!(irrg(&["table1", "--max-n", "2"]).status.code(), Some(2));
}

#[test]
fn verify_examples() {
    let o = irrg(&["verify", "extremal", "--n", "3..6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("extremal: 4 checks, 4 passed, 0 failed\n"));
    assert!(String::from_utf8_lossy(&o.stderr).contains("time extremal n=6"));

    let o = irrg(&["verify", "kcyclic", "--n", "5", "--k", "0..6", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 8);
    assert!(lines[..7].iter().all(|r| r["pass"] == true));
    assert_eq!(lines[7]["summary"]["failed"], 0);

    let o = irrg(&["verify", "bounds", "--n", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("violations 0"));
}

#[test]
fn verify_refuses_large_orders() {
    let o = irrg(&["verify", "extremal", "--n", "3..9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("2^36"));
    assert_eq!(
        irrg(&["verify", "kcyclic", "--n", "4", "--k", "4"]).status.code(),
        Some(2)
    );
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(irrg(&["nonsense"]).status.code(), Some(2));
    assert_eq!(irrg(&["seq", "check"]).status.code(), Some(2));
    assert_eq!(irrg(&["--help"]).status.code(), Some(0));
}
