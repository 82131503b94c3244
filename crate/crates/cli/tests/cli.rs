use std::fs;
use std::process::{Command, Output};

use grooming_core::graph::io::{parse_graph, write_graph};
use grooming_core::graph::named::{cycle, petersen};
use grooming_core::partition::{parse_partition, verify_partition, AdmAssignment};

fn grooming(args: &[&str], stdin: Option<&str>) -> Output {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_grooming"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn bounds_table() {
    let o = grooming(&["bounds", "--C", "1..6", "--delta", "1..6"], None);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let row = |c: &str| -> Vec<String> {
        let line = text.lines().find(|l| l.starts_with(c)).unwrap();
        line.split_whitespace().skip(1).map(String::from).collect()
    };
    assert_eq!(row("3 ")[2], "3");
    assert_eq!(row("4 ")[2], "2?");
    assert_eq!(row("5 ")[5], "≥4");
}

#[test]
fn cubic_decomposition_round_trips() {
    let input = write_graph(&petersen());
    let o = grooming(&["decompose", "--method", "cubic", "--grooming", "3"], Some(&input));
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("B:")).count(), 5);
    assert_eq!(text.lines().last(), Some("cost 20 max-appearances 2"));
    let p = parse_partition(&parse_graph(&input).unwrap(), 3, &text).unwrap();
    assert_eq!(verify_partition(&p, &AdmAssignment::uniform(10, 2)), Ok(()));
}

#[test]
fn worst_case_on_five_nodes() {
    let o = grooming(&["solve-worst-case", "5", "3", "2"], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "optimum 8"));
    let o = grooming(
        &["solve-worst-case", "4", "3", "3", "--class", "bridgeless-cubic"],
        None,
    );
    assert!(stdout(&o).lines().any(|l| l == "optimum 7"));
}

#[test]
fn check_reports_infeasible_caps_with_exit_one() {
    let mut input = write_graph(&cycle(6));
    input.push_str("A 0 1\nA 1 1\nA 2 1\nA 3 1\nA 4 1\nA 5 1\n");
    let o = grooming(&["check", "--grooming", "3"], Some(&input));
    assert_eq!(o.status.code(), Some(1));
    let o = grooming(&["check", "--grooming", "6"], Some(&input));
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("feasible"));
}

#[test]
fn usage_and_io_errors_exit_two() {
    assert_eq!(grooming(&["bounds", "--C", "0..3"], None).status.code(), Some(2));
    assert_eq!(
        grooming(&["decompose", "--method", "sideways", "--grooming", "3"], None)
            .status
            .code(),
        Some(2)
    );
    let o = grooming(
        &["solve-graph", "--grooming", "2", "--input", "/nonexistent/graph.txt"],
        None,
    );
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("/nonexistent/graph.txt"));
}

#[test]
fn tightness_verdicts_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    let tight = grooming(&["tightness", "--n", "5", "--grooming", "3"], None);
    assert_eq!(tight.status.code(), Some(0));
    assert!(stdout(&tight).ends_with("VERIFIED\n"));
    let path = dir.path().join("cert.txt");
    fs::write(&path, stdout(&tight)).unwrap();
    let o = grooming(&["verify", "--input", path.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let loose = grooming(&["tightness", "--n", "4", "--grooming", "4"], None);
    assert_eq!(loose.status.code(), Some(1));
    assert!(stdout(&loose).ends_with("REFUTED-BY assignment 1 1 1 1\n"));
}

#[test]
fn interrupted_scan_resumes_to_the_same_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let cp = dir.path().join("cp.txt");
    let cp = cp.to_str().unwrap();
    let args = ["conjecture", "4-3", "--max-n", "7", "--resume", cp];
    let o = grooming(&[&args[..], &["--stop-after", "40"]].concat(), None);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("interrupted after 40 graphs"));
    let resumed = grooming(&args, None);
    let straight = grooming(&["conjecture", "4-3", "--max-n", "7"], None);
    assert_eq!(resumed.status.code(), Some(0));
    assert_eq!(stdout(&resumed), stdout(&straight));
    assert!(stdout(&straight).ends_with("VERIFIED\n"));
}

#[test]
fn output_is_reproducible_and_records_the_seed() {
    let args = ["--seed", "17", "--porcelain", "witness", "m33", "--max-n", "10"];
    let a = grooming(&args, None);
    let b = grooming(&[&args[..], &["--threads", "1"]].concat(), None);
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).lines().any(|l| l == "seed 17"));
    assert!(stdout(&a).lines().any(|l| l == "claim m33-none-up-to 10"));
}
