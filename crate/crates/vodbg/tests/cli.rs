//! Golden tests for the command-line surface: answers, exit codes,
//! and bench reproducibility.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_vodbg");
const FIG_READ: &str = "TACGTCGACGACT";
const FIG_KMERS: &str = "CGAC\nGACG\nGACT\nTACG\nGTCG\nACGA\nACGT\nTCGA\nCGTC\n";

fn vodbg(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

/// Builds the worked-example index in `dir` and returns its path.
fn fig_index(dir: &Path) -> String {
    let reads = dir.join("fig.reads");
    fs::write(&reads, format!("{FIG_READ}\n")).unwrap();
    let index = dir.join("fig.vdbg");
    let out = vodbg(&[
        "build",
        "--k",
        "3",
        "--input",
        reads.to_str().unwrap(),
        "--output",
        index.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "build failed: {}", stderr(&out));
    index.to_str().unwrap().to_string()
}

#[test]
fn build_reports_sizes() {
    let dir = tempfile::tempdir().unwrap();
    let reads = dir.path().join("fig.reads");
    fs::write(&reads, format!("{FIG_READ}\n")).unwrap();
    let index = dir.path().join("fig.vdbg");
    let out = vodbg(&[
        "build",
        "--k",
        "3",
        "--input",
        reads.to_str().unwrap(),
        "--output",
        index.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("n_rows 13"), "{text}");
    assert!(text.contains("n_nodes 11"), "{text}");
    assert!(text.contains("construction_seconds"), "{text}");
    assert!(text.contains("lstar_bits"), "{text}");
    assert!(index.exists());
}

#[test]
fn build_from_kmers() {
    let dir = tempfile::tempdir().unwrap();
    let kmers = dir.path().join("fig.kmers");
    fs::write(&kmers, FIG_KMERS).unwrap();
    let index = dir.path().join("fig.vdbg");
    let out = vodbg(&[
        "build",
        "--k",
        "3",
        "--input",
        kmers.to_str().unwrap(),
        "--input-format",
        "kmers",
        "--output",
        index.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("n_rows 13"));
}

#[test]
fn build_empty_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let reads = dir.path().join("empty.reads");
    fs::write(&reads, "").unwrap();
    let out = vodbg(&[
        "build",
        "--k",
        "3",
        "--input",
        reads.to_str().unwrap(),
        "--output",
        dir.path().join("x.vdbg").to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("no (K+1)-mers extracted"), "{}", stderr(&out));
}

#[test]
fn query_answers_match_library() {
    let dir = tempfile::tempdir().unwrap();
    let index = fig_index(dir.path());
    let cases: &[(&[&str], &str)] = &[
        (&["--op", "shorter", "--node", "4,5,3", "--order", "2"], "4,6,2\n"),
        (&["--op", "longer", "--node", "4,6,2", "--order", "3"], "4,5,3\n6,6,3\n"),
        (&["--op", "maxlen", "--node", "4,6,2", "--symbol", "A"], "NULL\n"),
        (&["--op", "maxlen", "--node", "4,6,2", "--symbol", "T"], "4,5,3\n"),
        (&["--op", "forward", "--node", "8,9,3", "--symbol", "A"], "2,2,3\n"),
        (&["--op", "backward", "--node", "2,2,3"], "8,9,3\n10,10,3\n"),
        (&["--op", "lastchar", "--node", "8,9,3"], "G\n"),
        (&["--op", "label", "--node", "8,9,3"], "ACG\n"),
        (&["--op", "label", "--node", "4,6,2"], "AC\n"),
    ];
    for (args, want) in cases {
        let mut full = vec!["query", "--index", &index];
        full.extend_from_slice(args);
        let out = vodbg(&full);
        assert_eq!(code(&out), 0, "{args:?}: {}", stderr(&out));
        assert_eq!(stdout(&out), *want, "wrong answer for {args:?}");
    }
}

#[test]
fn query_invalid_handle_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let index = fig_index(dir.path());
    let out = vodbg(&["query", "--index", &index, "--op", "label", "--node", "4,5,2"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("not a maximal"), "{}", stderr(&out));
}

#[test]
fn usage_errors_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let index = fig_index(dir.path());
    // missing a required per-op flag
    let out = vodbg(&["query", "--index", &index, "--op", "shorter", "--node", "4,5,3"]);
    assert_eq!(code(&out), 1);
    // unknown subcommand (clap parse error)
    let out = vodbg(&["frobnicate"]);
    assert_eq!(code(&out), 1);
    // malformed node triple
    let out = vodbg(&["query", "--index", &index, "--op", "label", "--node", "4;5;3"]);
    assert_eq!(code(&out), 1);
    // bench needs at least one query
    let out = vodbg(&["bench", "--index", &index, "--queries", "0"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn corrupt_index_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let bogus = dir.path().join("bogus.vdbg");
    fs::write(&bogus, b"not an index at all").unwrap();
    let out = vodbg(&["stats", "--index", bogus.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
}

#[test]
fn stats_reports_components() {
    let dir = tempfile::tempdir().unwrap();
    let index = fig_index(dir.path());
    let out = vodbg(&["stats", "--index", &index]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    for key in ["n_rows 13", "n_nodes 11", "K 3", "total_bits", "bits_per_node"] {
        assert!(text.contains(key), "missing {key} in {text}");
    }
}

#[test]
fn validate_clean_corpus_exits_0() {
    let dir = tempfile::tempdir().unwrap();
    let index = fig_index(dir.path());
    let reads = dir.path().join("fig.reads");
    let out = vodbg(&[
        "validate",
        "--index",
        &index,
        "--input",
        reads.to_str().unwrap(),
        "--orders",
        "0..3",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("OK"));
}

#[test]
fn bench_rows_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let index = fig_index(dir.path());
    let run = || {
        let out = vodbg(&["bench", "--index", &index, "--queries", "500", "--seed", "5"]);
        assert_eq!(code(&out), 0, "{}", stderr(&out));
        stdout(&out)
    };
    let first = run();
    for name in [
        "forward", "backward", "shorter_1", "shorter_4", "longer_1", "longer_4", "maxlen",
        "maxlen_c",
    ] {
        assert!(
            first.lines().any(|l| l.split_whitespace().next() == Some(name)),
            "missing bench row {name} in {first}"
        );
    }
    // everything except the trailing timing column must be reproducible
    let strip = |text: &str| -> Vec<String> {
        text.lines()
            .map(|l| {
                let cols: Vec<&str> = l.split_whitespace().collect();
                cols[..cols.len().saturating_sub(1)].join(" ")
            })
            .collect()
    };
    assert_eq!(strip(&first), strip(&run()));
}

#[test]
fn contigs_split_at_branches() {
    let dir = tempfile::tempdir().unwrap();
    let index = fig_index(dir.path());
    let out = vodbg(&["contigs", "--index", &index, "--order", "3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let got: Vec<&str> = text.lines().collect();
    // unary paths of the worked-example graph, split at the
    // out-degree-2 nodes GAC and ACG and at the in-degree-2 node CGA
    assert_eq!(got, vec!["CGAC", "TAC", "ACG", "ACT", "CGTCG"]);

    let out = vodbg(&["contigs", "--index", &index, "--order", "3", "--min-length", "100"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).is_empty());

    let out = vodbg(&["contigs", "--index", &index, "--order", "0"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).is_empty());
}
