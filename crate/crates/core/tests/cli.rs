use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use pathbench::bench::read_records;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pathbench"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn csp_prints_the_constrained_optimum() {
    let g2 = data("g2.txt");
    let o = run(&[
        "csp",
        "--graph",
        g2.to_str().unwrap(),
        "--source",
        "1",
        "--target",
        "4",
        "--bound",
        "5",
        "--algo",
        "dijkstra",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    for line in ["status: ok", "weight: 4", "delay: 3", "path: 1 2 3 4"] {
        assert!(
            text.lines().any(|l| l == line),
            "missing {line:?} in\n{text}"
        );
    }
    for key in ["preprocessing_ns: ", "computation_ns: ", "total_ns: "] {
        assert!(text.lines().any(|l| l.starts_with(key)));
    }
}

#[test]
fn equal_endpoints_go_through_the_split_source() {
    let g2 = data("g2.txt");
    let o = run(&[
        "sssp",
        "--graph",
        g2.to_str().unwrap(),
        "--source",
        "1",
        "--target",
        "1",
        "--algo",
        "dijkstra",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("status: unreachable\nweight: inf\npath: none\n"));

    let g3 = data("g3.txt");
    let o = run(&[
        "sssp",
        "--graph",
        g3.to_str().unwrap(),
        "--source",
        "2",
        "--target",
        "2",
        "--algo",
        "bf-yen",
    ]);
    assert!(stdout(&o).contains("weight: 2\npath: 2 3 2\n"));

    let o = run(&[
        "csp",
        "--graph",
        g3.to_str().unwrap(),
        "--source",
        "2",
        "--target",
        "2",
        "--algo",
        "bellman-ford",
    ]);
    assert!(stdout(&o).contains("weight: 2\ndelay: 0\npath: 2 3 2\n"));
}

#[test]
fn ksp_warns_when_walks_run_out() {
    let k1 = data("k1.txt");
    let o = run(&[
        "ksp",
        "--graph",
        k1.to_str().unwrap(),
        "--source",
        "1",
        "--k",
        "5",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("count: 1\npath 1: weight 7: 1 2\n"));
    assert_eq!(
        String::from_utf8_lossy(&o.stderr),
        "warning: only 1 path exists\n"
    );
}

#[test]
fn bad_input_exits_nonzero_with_a_message() {
    let o = run(&[
        "ksp",
        "--graph",
        data("k1.txt").to_str().unwrap(),
        "--source",
        "1",
        "--k",
        "0",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("k must be at least 1"));

    let o = run(&[
        "sssp",
        "--graph",
        data("g2.txt").to_str().unwrap(),
        "--source",
        "9",
        "--algo",
        "dijkstra",
    ]);
    assert_eq!(o.status.code(), Some(1));

    let o = run(&["sssp", "--source", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Usage"));
}

#[test]
fn bench_writes_the_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("out.csv");
    let o = run(&[
        "bench",
        "--graph",
        data("g2.txt").to_str().unwrap(),
        "--task",
        "1",
        "--sample",
        "3",
        "--runs",
        "2",
        "--seed",
        "4",
        "--out",
        csv.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let records = read_records(std::fs::File::open(&csv).unwrap()).unwrap();
    assert_eq!(records.len(), 3 * 2 * 2 * 4);

    let o = run(&[
        "bench",
        "--graph",
        data("g2.txt").to_str().unwrap(),
        "--task",
        "2",
        "--sample",
        "4",
        "--runs",
        "1",
        "--bound",
        "6",
        "--algos",
        "bellman-ford",
        "--out",
        csv.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let records = read_records(std::fs::File::open(&csv).unwrap()).unwrap();
    assert_eq!(records.len(), 12);
    assert!(records.iter().all(|r| r.algorithm == "csp-bellman-ford"));
}

#[test]
fn generate_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.txt");
    let o = run(&[
        "generate",
        "--n",
        "30",
        "--m",
        "120",
        "--seed",
        "5",
        "--out",
        g.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let o = run(&["verify", "--graph", g.to_str().unwrap(), "--seed", "2"]);
    assert!(o.status.success());
    assert!(stdout(&o).ends_with("disagreements: 0\n"));
}
