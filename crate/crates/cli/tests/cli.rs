use std::io::Write;
use std::process::{Command, Output, Stdio};

use avgdeg::sequences::Graph;
use avgdeg_cli::sweep::read_csv;
use avgdeg_cli::MAX_N_VAR;

fn avgdeg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_avgdeg"))
        .args(args)
        .env_remove(MAX_N_VAR)
        .output()
        .unwrap()
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_avgdeg"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn interval_endpoints() {
    for (n, m, expected) in [
        ("4", "3", "[1, 2]"),
        ("6", "0", "[0, 2]"),
        ("6", "15", "[3, 5]"),
    ] {
        let o = avgdeg(&["interval", "--n", n, "--m", m]);
        assert_eq!(o.status.code(), Some(0));
        assert!(
            stdout(&o).contains(&format!("interval: {expected}")),
            "{}",
            stdout(&o)
        );
    }
}

#[test]
fn interval_rejects_too_many_edges() {
    let o = avgdeg(&["interval", "--n", "4", "--m", "7"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error:"));
}

#[test]
fn bound_values() {
    let o = avgdeg(&["bound", "--n", "4", "--m", "3", "--dplus", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("d_minus: 0.803848"));

    let o = avgdeg(&["bound", "--n", "4", "--m", "3", "--dplus", "2.75"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("d_minus: 0.750000"), "{text}");
    assert!(text.contains("ell_min: 2.000000"), "{text}");
}

#[test]
fn bound_below_sqrt_dn_is_a_usage_error() {
    let o = avgdeg(&["bound", "--n", "4", "--m", "3", "--dplus", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("sqrt(d n)"), "{}", stderr(&o));
}

#[test]
fn extremal_prints_an_edge_list() {
    let o = avgdeg(&["extremal", "--n", "4", "--m", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let g = Graph::from_edge_list(&stdout(&o)).unwrap();
    assert_eq!((g.n(), g.edge_count()), (4, 3));
    assert_eq!(stdout(&o).lines().count(), 4);
    let mut degrees = g.degrees().to_vec();
    degrees.sort_unstable();
    assert_eq!(degrees, vec![1, 1, 2, 2]);

    let o = avgdeg(&["extremal", "--n", "6", "--m", "6"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn extremal_near_optimum() {
    let o = avgdeg(&["extremal", "--n", "100", "--m", "1250", "--dplus", "60"]);
    assert_eq!(o.status.code(), Some(0));
    let g = Graph::from_edge_list(&stdout(&o)).unwrap();
    assert_eq!(g.edge_count(), 1250);
}

#[test]
fn peel_reads_stdin() {
    let o = with_stdin(&["peel", "-"], "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 5);
}

#[test]
fn peel_reads_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("star.txt");
    std::fs::write(&path, "4 3\n0 1\n0 2\n0 3\n").unwrap();
    let o = avgdeg(&["peel", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 5);

    let o = avgdeg(&["peel", dir.path().join("missing").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn realize_and_check_seq() {
    let o = avgdeg(&["realize", "--seq", "3,1,1,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "4 3\n0 1\n0 2\n0 3\n");

    assert_eq!(
        avgdeg(&["realize", "--seq", "3,3,1,1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        avgdeg(&["check-seq", "--seq", "3,3,1,1"]).status.code(),
        Some(1)
    );
    assert_eq!(
        avgdeg(&["check-seq", "--seq", "2,2,2"]).status.code(),
        Some(0)
    );
    assert_eq!(
        avgdeg(&["check-seq", "--seq", "2,x"]).status.code(),
        Some(2)
    );
}

#[test]
fn sweep_writes_a_readable_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("curves.csv");
    let o = avgdeg(&[
        "sweep",
        "--dn",
        "0.5",
        "--steps",
        "20",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let rows = read_csv(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(rows.len(), 21);
    assert!(rows
        .iter()
        .any(|r| r.d_plus_over_n == 0.75 && (r.ell_min_over_n - 0.5).abs() < 1e-12));

    let o = avgdeg(&["sweep", "--dn", "1.5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sweep_to_stdout() {
    let o = avgdeg(&["sweep", "--dn", "0.25", "--steps", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(read_csv(&stdout(&o)).unwrap().len(), 11);
}

#[test]
fn verify_modes() {
    let o = avgdeg(&["verify", "--mode", "t2", "--nmax", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("violations: 0"));

    // stars and co-stars avoid the open interval without the extremal shape
    let o = avgdeg(&["verify", "--mode", "t1", "--nmax", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("violations: 0"), "{}", stdout(&o));
}

#[test]
fn verify_respects_the_order_cap() {
    let o = Command::new(env!("CARGO_BIN_EXE_avgdeg"))
        .args(["verify", "--mode", "t1", "--nmax", "8"])
        .env(MAX_N_VAR, "6")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains(MAX_N_VAR));
}

#[test]
fn unknown_subcommand_is_a_usage_error() {
    assert_eq!(avgdeg(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(avgdeg(&["bound", "--n", "4"]).status.code(), Some(2));
}
