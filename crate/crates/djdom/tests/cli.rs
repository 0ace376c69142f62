//! End-to-end checks of the command-line binary: porcelain formats, exit
//! codes, determinism, and solve-then-verify round trips.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_djdom"))
}

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary exits")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("no signal")
}

/// Pull the `s` line of a porcelain report as a comma-joined --set argument.
fn solution_as_set_arg(porcelain: &str) -> String {
    let line = porcelain
        .lines()
        .find(|l| l.starts_with("s"))
        .expect("s line present");
    line[1..].split_whitespace().collect::<Vec<_>>().join(",")
}

#[test]
fn pig_solve_porcelain_is_exact_bytes() {
    let out = run(&["solve", "pig", &fixture("p5.graph"), "--porcelain"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "k 2\ns 1 4\nok 1\n");
}

#[test]
fn porcelain_output_is_stable_across_runs() {
    for args in [
        vec!["solve", "exact", &fixture("c6.graph"), "--porcelain"],
        vec!["solve", "greedy", &fixture("petersen.graph"), "--porcelain"],
        vec!["order", &fixture("p5.graph"), "--porcelain"],
        vec!["generate", "pig", "--n", "9", "--seed", "7"],
        vec!["transform", "apx", &fixture("k3.graph"), "--roles"],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert_eq!(code(&first), 0);
        assert_eq!(stdout(&first), stdout(&second), "args {args:?}");
    }
}

#[test]
fn every_solver_round_trips_through_verify() {
    let cases = [
        ("pig", "p5.graph", "ddp"),
        ("exact", "c6.graph", "ddp"),
        ("exact", "petersen.graph", "dom"),
        ("exact", "c6.graph", "2dom"),
        ("exact", "k3.graph", "vc"),
        ("greedy", "petersen.graph", "ddp"),
        ("greedy", "two_paths.graph", "ddp"),
    ];
    for (algo, fix, problem) in cases {
        let solve = run(&[
            "solve",
            algo,
            &fixture(fix),
            "--problem",
            problem,
            "--porcelain",
        ]);
        assert_eq!(code(&solve), 0, "{algo} {fix}");
        let text = stdout(&solve);
        assert!(text.ends_with("ok 1\n"), "{algo} {fix}: {text}");
        let set = solution_as_set_arg(&text);
        let verify = run(&[
            "verify",
            &fixture(fix),
            "--set",
            &set,
            "--problem",
            problem,
            "--porcelain",
        ]);
        assert_eq!(code(&verify), 0);
        assert!(stdout(&verify).ends_with("ok 1\n"), "{algo} {fix}");
    }
}

#[test]
fn known_optima_through_the_cli() {
    let out = run(&["solve", "exact", &fixture("petersen.graph"), "--problem", "dom", "--porcelain"]);
    assert!(stdout(&out).starts_with("k 3\n"));
    let out = run(&["solve", "exact", &fixture("c6.graph"), "--problem", "2dom", "--porcelain"]);
    assert!(stdout(&out).starts_with("k 3\n"));
    let out = run(&["solve", "exact", &fixture("k3.graph"), "--problem", "vc", "--porcelain"]);
    assert!(stdout(&out).starts_with("k 2\n"));
    let out = run(&["solve", "exact", &fixture("star4.graph"), "--porcelain"]);
    assert!(stdout(&out).starts_with("k 1\n"));
    let out = run(&["solve", "exact", &fixture("two_paths.graph"), "--porcelain"]);
    assert_eq!(stdout(&out), "k 2\ns 1 4\nok 1\n");
}

#[test]
fn transform_outputs() {
    let out = run(&["transform", "gc", &fixture("k2.graph")]);
    assert_eq!(stdout(&out), "p 4 3\ne 0 1\ne 0 2\ne 1 3\n");
    let out = run(&["transform", "domhard", &fixture("k2.graph")]);
    assert!(stdout(&out).starts_with("p 8 8\n"));
    let out = run(&["transform", "apx", &fixture("k3.graph"), "--roles"]);
    let text = stdout(&out);
    assert!(text.starts_with("p 30 33\n"));
    assert!(text.contains("role 0 orig:0\n"));
    assert!(text.contains("role 3 gadget:0:w\n"));
    assert!(text.contains("role 11 gadget:0:f\n"));
    let roles = text.lines().filter(|l| l.starts_with("role ")).count();
    assert_eq!(roles, 30);
}

#[test]
fn reads_graphs_from_standard_input() {
    let k2 = "p 2 1\ne 0 1\n";
    let out = run_stdin(&["solve", "exact", "-", "--porcelain"], k2);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "k 1\ns 0\nok 1\n");
}

#[test]
fn verdicts_report_without_failing() {
    // A wrong set is a clean run with verdict 0, not an input error.
    let out = run(&["verify", &fixture("k2.graph"), "--set", "", "--porcelain"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "k 0\ns \nok 0\n");
    let out = run(&["verify", &fixture("c6.graph"), "--set", "0,3", "--porcelain"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).ends_with("ok 1\n"));
}

#[test]
fn invalid_inputs_exit_two() {
    // Edge count mismatch in the header.
    let out = run_stdin(&["solve", "exact", "-"], "p 2 5\ne 0 1\n");
    assert_eq!(code(&out), 2);
    // Vertex out of range in --set.
    let out = run(&["verify", &fixture("k2.graph"), "--set", "9"]);
    assert_eq!(code(&out), 2);
    // The pig solver refuses graphs outside its class.
    let out = run(&["solve", "pig", &fixture("c6.graph")]);
    assert_eq!(code(&out), 2);
    let out = run(&["order", &fixture("c6.graph")]);
    assert_eq!(code(&out), 2);
    // Gadget transform needs minimum degree two.
    let out = run(&["transform", "apx", &fixture("p5.graph")]);
    assert_eq!(code(&out), 2);
    // Missing file.
    let out = run(&["solve", "exact", "/nonexistent/g.graph"]);
    assert_eq!(code(&out), 2);
    // b = 0 is rejected.
    let out = run(&["solve", "exact", &fixture("k2.graph"), "--b", "0"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn budget_exhaustion_exits_three() {
    let out = run(&[
        "solve",
        "exact",
        &fixture("petersen.graph"),
        "--budget",
        "2",
        "--porcelain",
    ]);
    assert_eq!(code(&out), 3);
    assert_eq!(stdout(&out), "");
}

#[test]
fn timing_line_is_opt_in() {
    let plain = run(&["solve", "pig", &fixture("p5.graph"), "--porcelain"]);
    assert!(!stdout(&plain).contains("\nt "));
    let timed = run(&["solve", "pig", &fixture("p5.graph"), "--porcelain", "--timing"]);
    let text = stdout(&timed);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("k 2"));
    assert_eq!(lines.next(), Some("s 1 4"));
    assert!(lines.next().unwrap().starts_with("t "));
    assert_eq!(lines.next(), Some("ok 1"));
}

#[test]
fn human_report_shape() {
    let out = run(&["solve", "pig", &fixture("p5.graph")]);
    let text = stdout(&out);
    assert!(text.starts_with("command: solve pig "));
    assert!(text.contains("\ninput: n=5 m=4 fnv1a="));
    assert!(text.contains("\nk: 2\ns: 1 4\nverify: VALID\n"));
}

#[test]
fn generated_graphs_are_parseable_and_usable() {
    let gen = run(&["generate", "pig", "--n", "12", "--seed", "3"]);
    assert_eq!(code(&gen), 0);
    let text = stdout(&gen);
    let solved = run_stdin(&["solve", "pig", "-", "--porcelain"], &text);
    assert_eq!(code(&solved), 0);
    assert!(stdout(&solved).ends_with("ok 1\n"));
    let ordered = run_stdin(&["order", "-", "--porcelain"], &text);
    assert_eq!(code(&ordered), 0);
    assert!(stdout(&ordered).ends_with("ok 1\n"));

    let gen = run(&["generate", "gnp", "--n", "7", "--seed", "5", "--p", "0.4"]);
    let solved = run_stdin(&["solve", "greedy", "-", "--porcelain"], &stdout(&gen));
    assert!(stdout(&solved).ends_with("ok 1\n"));

    let gen = run(&["generate", "cubic", "--n", "8", "--seed", "1"]);
    let transformed = run_stdin(&["transform", "apx", "-"], &stdout(&gen));
    assert_eq!(code(&transformed), 0);
    assert!(stdout(&transformed).starts_with("p 116 132\n"));

    let gen = run(&["generate", "tree", "--n", "9", "--seed", "2"]);
    let solved = run_stdin(&["solve", "exact", "-", "--problem", "dom", "--porcelain"], &stdout(&gen));
    assert!(stdout(&solved).ends_with("ok 1\n"));
}

#[test]
fn empty_and_single_graphs() {
    let out = run(&["solve", "exact", &fixture("empty.graph"), "--porcelain"]);
    assert_eq!(stdout(&out), "k 0\ns \nok 1\n");
    let out = run(&["solve", "exact", &fixture("single.graph"), "--porcelain"]);
    assert_eq!(stdout(&out), "k 1\ns 0\nok 1\n");
    let out = run(&["solve", "pig", &fixture("single.graph"), "--porcelain"]);
    assert_eq!(stdout(&out), "k 1\ns 0\nok 1\n");
}
