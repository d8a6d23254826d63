//! End-to-end tests of the `qbch` binary: file round-trips, failure
//! sentinels and exit codes.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn qbch(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qbch"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn make_small_spec(dir: &Path) {
    let out = qbch(
        dir,
        &[
            "make-code",
            "--q",
            "2",
            "--s",
            "1",
            "--l",
            "2",
            "--m",
            "3",
            "--delta",
            "2",
            "--out",
            "c.spec",
        ],
    );
    assert!(out.status.success());
}

fn make_tau1_spec(dir: &Path) {
    let out = qbch(
        dir,
        &[
            "make-code",
            "--q",
            "2",
            "--s",
            "2",
            "--l",
            "2",
            "--m",
            "5",
            "--delta",
            "3",
            "--out",
            "t.spec",
        ],
    );
    assert!(out.status.success());
}

#[test]
fn make_code_writes_spec_and_prints_parameters() {
    let dir = tempfile::tempdir().unwrap();
    let out = qbch(
        dir.path(),
        &[
            "make-code",
            "--q",
            "2",
            "--s",
            "1",
            "--l",
            "2",
            "--m",
            "3",
            "--delta",
            "2",
            "--out",
            "c.spec",
        ],
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("dim=4 tau=0"));
    let spec = fs::read_to_string(dir.path().join("c.spec")).unwrap();
    assert_eq!(
        spec,
        "q=2\ns=1\nl=2\nm=3\ndelta=2\np=2\nd=1\nmodulus=0,1\ngamma=0,1,1,1\n"
    );
}

#[test]
fn make_code_accepts_explicit_gamma() {
    let dir = tempfile::tempdir().unwrap();
    let out = qbch(
        dir.path(),
        &[
            "make-code",
            "--q",
            "2",
            "--s",
            "1",
            "--l",
            "2",
            "--m",
            "3",
            "--delta",
            "2",
            "--gamma",
            "0,1,1,1",
            "--out",
            "g.spec",
        ],
    );
    assert_eq!(out.status.code(), Some(0));
    // An identity matrix is not an order-3 root.
    let out = qbch(
        dir.path(),
        &[
            "make-code",
            "--q",
            "2",
            "--s",
            "1",
            "--l",
            "2",
            "--m",
            "3",
            "--delta",
            "2",
            "--gamma",
            "1,0,0,1",
            "--out",
            "bad.spec",
        ],
    );
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn missing_flag_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = qbch(
        dir.path(),
        &[
            "make-code",
            "--q",
            "2",
            "--s",
            "1",
            "--l",
            "2",
            "--delta",
            "2",
            "--out",
            "c.spec",
        ],
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invalid_parameters_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let out = qbch(
        dir.path(),
        &[
            "make-code",
            "--q",
            "2",
            "--s",
            "1",
            "--l",
            "2",
            "--m",
            "3",
            "--delta",
            "4",
            "--out",
            "c.spec",
        ],
    );
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn unknown_decoder_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    make_small_spec(dir.path());
    fs::write(dir.path().join("w.txt"), "0 0 0 0 0 0\n").unwrap();
    let out = qbch(
        dir.path(),
        &[
            "decode",
            "--code",
            "c.spec",
            "--in",
            "w.txt",
            "--out",
            "o.txt",
            "--decoder",
            "nonsense",
        ],
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn encode_then_decode_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    make_small_spec(dir.path());
    let messages = "1 0 0 0\n0 1 1 0\n1 1 1 1\n0 0 0 0\n";
    fs::write(dir.path().join("msgs.txt"), messages).unwrap();
    let out = qbch(
        dir.path(),
        &[
            "encode",
            "--code",
            "c.spec",
            "--in",
            "msgs.txt",
            "--out",
            "words.txt",
        ],
    );
    assert_eq!(out.status.code(), Some(0));
    for decoder in ["wb", "ilrs"] {
        let out = qbch(
            dir.path(),
            &[
                "decode",
                "--code",
                "c.spec",
                "--in",
                "words.txt",
                "--out",
                "round.txt",
                "--decoder",
                decoder,
            ],
        );
        assert_eq!(out.status.code(), Some(0), "decoder {decoder}");
        assert_eq!(
            fs::read_to_string(dir.path().join("round.txt")).unwrap(),
            messages
        );
    }
}

#[test]
fn decode_corrects_single_block_corruption() {
    let dir = tempfile::tempdir().unwrap();
    make_tau1_spec(dir.path());
    fs::write(dir.path().join("msgs.txt"), "1 0\n0 1\n").unwrap();
    assert_eq!(
        qbch(
            dir.path(),
            &[
                "encode",
                "--code",
                "t.spec",
                "--in",
                "msgs.txt",
                "--out",
                "words.txt"
            ],
        )
        .status
        .code(),
        Some(0)
    );
    // Flip one block per line.
    let words = fs::read_to_string(dir.path().join("words.txt")).unwrap();
    let corrupted: Vec<String> = words
        .lines()
        .enumerate()
        .map(|(i, line)| {
            let mut symbols: Vec<u64> = line
                .split_whitespace()
                .map(|t| t.parse().unwrap())
                .collect();
            let pos = (3 * i + 1) % 5;
            symbols[2 * pos] ^= 1;
            symbols[2 * pos + 1] ^= 1;
            symbols
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();
    fs::write(dir.path().join("noisy.txt"), corrupted.join("\n") + "\n").unwrap();
    let out = qbch(
        dir.path(),
        &[
            "decode",
            "--code",
            "t.spec",
            "--in",
            "noisy.txt",
            "--out",
            "fixed.txt",
        ],
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        fs::read_to_string(dir.path().join("fixed.txt")).unwrap(),
        "1 0\n0 1\n"
    );
}

#[test]
fn undecodable_lines_emit_fail_and_exit_three() {
    let dir = tempfile::tempdir().unwrap();
    make_tau1_spec(dir.path());
    fs::write(dir.path().join("msgs.txt"), "1 0\n1 1\n").unwrap();
    qbch(
        dir.path(),
        &[
            "encode",
            "--code",
            "t.spec",
            "--in",
            "msgs.txt",
            "--out",
            "words.txt",
        ],
    );
    // Corrupt two blocks on the first line only; the minimum block distance
    // is above 4, so no codeword lies within radius 1 of it.
    let words = fs::read_to_string(dir.path().join("words.txt")).unwrap();
    let mut lines: Vec<String> = words.lines().map(str::to_owned).collect();
    let mut symbols: Vec<u64> = lines[0]
        .split_whitespace()
        .map(|t| t.parse().unwrap())
        .collect();
    symbols[0] ^= 1;
    symbols[4] ^= 1;
    lines[0] = symbols
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(" ");
    fs::write(dir.path().join("noisy.txt"), lines.join("\n") + "\n").unwrap();
    let out = qbch(
        dir.path(),
        &[
            "decode",
            "--code",
            "t.spec",
            "--in",
            "noisy.txt",
            "--out",
            "mixed.txt",
        ],
    );
    assert_eq!(out.status.code(), Some(3));
    let text = fs::read_to_string(dir.path().join("mixed.txt")).unwrap();
    let mut produced = text.lines();
    assert_eq!(produced.next(), Some("FAIL"));
    assert_eq!(produced.next(), Some("1 1"));
}

#[test]
fn wrong_symbol_count_reports_line_number() {
    let dir = tempfile::tempdir().unwrap();
    make_small_spec(dir.path());
    fs::write(dir.path().join("bad.txt"), "1 0 0 0\n1 0\n").unwrap();
    let out = qbch(
        dir.path(),
        &[
            "encode", "--code", "c.spec", "--in", "bad.txt", "--out", "o.txt",
        ],
    );
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains(":2:"), "stderr should name the line: {err}");
}

#[test]
fn simulate_within_radius_is_perfect() {
    let dir = tempfile::tempdir().unwrap();
    make_tau1_spec(dir.path());
    for decoder in ["wb", "ilrs"] {
        let out = qbch(
            dir.path(),
            &[
                "simulate",
                "--code",
                "t.spec",
                "--decoder",
                decoder,
                "--errors",
                "1",
                "--trials",
                "50",
                "--seed",
                "31337",
            ],
        );
        assert_eq!(out.status.code(), Some(0));
        let text = stdout(&out);
        assert!(text.contains("successes      50"), "{decoder}: {text}");
        assert!(text.contains("success_rate   1.0000"), "{decoder}: {text}");
    }
}

#[test]
fn collaborative_requires_scalar_root() {
    let dir = tempfile::tempdir().unwrap();
    make_small_spec(dir.path());
    let out = qbch(
        dir.path(),
        &[
            "simulate",
            "--code",
            "c.spec",
            "--decoder",
            "collab",
            "--errors",
            "0",
            "--trials",
            "1",
            "--seed",
            "1",
        ],
    );
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn spec_file_round_trips_through_parser() {
    let dir = tempfile::tempdir().unwrap();
    let out = qbch(
        dir.path(),
        &[
            "make-code",
            "--q",
            "2",
            "--s",
            "4",
            "--l",
            "2",
            "--m",
            "15",
            "--delta",
            "7",
            "--out",
            "big.spec",
        ],
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("length=30 dim=10 tau=3 sprime=4"));
    let inspect = qbch(dir.path(), &["inspect", "--code", "big.spec"]);
    assert_eq!(inspect.status.code(), Some(0));
    let text = stdout(&inspect);
    assert!(text.contains("q=2 s=4 l=2 m=15 delta=7"));
    assert!(text.contains("eigenvalues"));
}
