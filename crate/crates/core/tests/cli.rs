use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use scx::fixtures::{CONTRACTION_EXAMPLE, COVER_EXAMPLE};

fn scx(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_scx"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_path(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("scx-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn check_contraction_example_reports_witness() {
    let o = scx(&["check", "-", "--witness", "--naive", "--oracle"], CONTRACTION_EXAMPLE);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("singly-connected: no"));
    assert!(text.contains("paths 0 -> 7: [0 7] [0 1 7]"));
    assert!(text.contains("naive: no (agrees)"));
    assert!(text.contains("oracle: no (agrees)"));
}

#[test]
fn check_butterfly_stats() {
    let gen = scx(&["gen", "butterfly", "3"], "");
    assert_eq!(gen.status.code(), Some(0));
    let edges = stdout(&gen);
    assert!(edges.starts_with("32 48\n"));
    let o = scx(&["check", "-", "--stats"], &edges);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("dfs_vertex_visits: 120\n"));
}

#[test]
fn empty_graph_is_singly_connected() {
    assert_eq!(scx(&["check", "-"], "0 0\n").status.code(), Some(0));
}

#[test]
fn parse_errors_exit_two_with_line() {
    let o = scx(&["check", "-"], "3 1\n0 5\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(scx(&["check", "/no/such/file"], "").status.code(), Some(2));
}

#[test]
fn oracle_refuses_large_graphs() {
    let cycle = stdout(&scx(&["gen", "cycle", "17"], ""));
    assert_eq!(scx(&["check", "-", "--oracle"], &cycle).status.code(), Some(2));
    assert_eq!(scx(&["check", "-"], &cycle).status.code(), Some(0));
}

#[test]
fn gen_cycle_one_and_bad_parameters() {
    assert_eq!(stdout(&scx(&["gen", "cycle", "1"], "")), "1 1\n0 0\n");
    assert_eq!(scx(&["gen", "butterfly", "0"], "").status.code(), Some(2));
    assert_eq!(scx(&["gen", "gnp", "5", "1.5", "1"], "").status.code(), Some(2));
    assert_eq!(scx(&["gen", "nonsense"], "").status.code(), Some(2));
}

#[test]
fn reduce_prints_mapping() {
    let o = scx(&["reduce", "-"], CONTRACTION_EXAMPLE);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("5 7\n"));
    assert!(text.contains("# 1: 1 2\n"));

    let map = temp_path("reduce.map");
    let o = scx(&["reduce", "-", "--map", map.to_str().unwrap()], CONTRACTION_EXAMPLE);
    assert!(!stdout(&o).contains("# 1: 1 2"));
    assert!(std::fs::read_to_string(&map).unwrap().contains("1: 1 2\n"));

    let o = scx(&["reduce", "-"], "2 2\n0 1\n1 0\n");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("1 0\n"));
}

#[test]
fn hardness_and_solve() {
    let esc = scx(&["hardness", "esc", "-"], COVER_EXAMPLE);
    assert_eq!(esc.status.code(), Some(0));
    let esc = stdout(&esc);
    assert!(esc.starts_with("16 20\n"));
    let vsc = stdout(&scx(&["hardness", "vsc", "-"], COVER_EXAMPLE));
    assert!(vsc.starts_with("12 16\n"));

    for (kind, input) in [("vc", COVER_EXAMPLE), ("esc", esc.as_str()), ("vsc", vsc.as_str())] {
        let o = scx(&["solve", kind, "-", "--exact"], input);
        assert_eq!(o.status.code(), Some(0), "{kind}");
        assert!(stdout(&o).contains("size: 2\n"), "{kind}");
        assert!(stdout(&o).contains("certificate: ok\n"), "{kind}");
    }
    assert_eq!(scx(&["solve", "vc", "-"], COVER_EXAMPLE).status.code(), Some(2));
}

#[test]
fn solve_reports_limits() {
    let o = scx(&["solve", "vc", "-", "--exact"], "21 1\n0 1\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("20"));
}

#[test]
fn bench_writes_csv() {
    let csv = temp_path("bench.csv");
    let o = scx(&["bench", "--family", "butterfly", "--min", "2", "--max", "4", "--csv", csv.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().count(), 4);
    assert!(text.lines().nth(1).unwrap().starts_with("butterfly,2,12,16,4,4,100,"));

    let o = scx(&["bench", "--family", "butterfly", "--min", "2", "--max", "3", "--csv", "/no/such/dir/x.csv"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn in_process_runner_matches_binary() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = scx::cli::run(["scx", "check", "-", "--witness"], &mut CONTRACTION_EXAMPLE.as_bytes(), &mut out, &mut err);
    let bin = scx(&["check", "-", "--witness"], CONTRACTION_EXAMPLE);
    assert_eq!(Some(code), bin.status.code());
    assert_eq!(out, bin.stdout);
}
