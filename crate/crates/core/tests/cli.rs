mod common;

use std::io::Write;
use std::process::{Command, Output};

use common::*;
use proptest::prelude::*;

use sigbasis::io::{format_ideal, parse_ideal};
use sigbasis::poly::Polynomial;
use sigbasis::RingOrder;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sigbasis")).args(args).output().unwrap()
}

fn temp_file(name: &str, text: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("sigbasis-{}-{name}", std::process::id()));
    std::fs::File::create(&path).unwrap().write_all(text.as_bytes()).unwrap();
    path
}

#[test]
fn two_generator_file() {
    let path = temp_file("two.txt", "101\n3\ngrevlex\nx1^2-x2\nx1*x2-x3\n");
    let out = bin(&[path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let basis: Vec<&str> = text.lines().filter(|l| !l.contains("e_")).collect();
    assert_eq!(basis, ["x1^2-x2", "x1*x2-x3", "x2^2-x1*x3"]);
    let classic = bin(&[path.to_str().unwrap(), "--algorithm", "classic"]);
    assert_eq!(String::from_utf8(classic.stdout).unwrap().lines().collect::<Vec<_>>(), basis);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(bin(&["katsura4", "--hashed", "--dedup"]).status.code(), Some(2));
    assert_eq!(bin(&["katsura4", "--base-divisors", "3"]).status.code(), Some(2));
    assert_eq!(bin(&["katsura4", "--reducer", "fibheap"]).status.code(), Some(2));
    let zero = temp_file("zero.txt", "7\n2\nlex\n0\n");
    assert_eq!(bin(&[zero.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(bin(&["--help"]).status.code(), Some(0));
}

#[test]
fn bad_inputs_exit_1_with_a_message() {
    for (name, text) in [
        ("prime.txt", "8\n2\nlex\nx1\n"),
        ("range.txt", "7\n2\nlex\nx3\n"),
        ("junk.txt", "7\n2\nlex\nx1+?\n"),
        ("short.txt", "7\n"),
    ] {
        let path = temp_file(name, text);
        let out = bin(&[path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(1), "{name}");
        assert!(String::from_utf8(out.stderr).unwrap().starts_with("sigbasis: "), "{name}");
    }
    assert_eq!(bin(&["/nonexistent/ideal.txt"]).status.code(), Some(1));
}

#[test]
fn output_does_not_depend_on_data_structures() {
    let want = cli(&["katsura5"]);
    for extra in [
        &["--reducer", "geobucket", "--hashed"][..],
        &["--reducer", "tourtree", "--dedup", "--compressed"],
        &["--lookup", "list", "--spair-queue", "heap"],
        &["--lookup", "kdtree", "--spair-queue", "triangle-heap"],
    ] {
        let mut args = vec!["katsura5"];
        args.extend_from_slice(extra);
        assert_eq!(cli(&args), want, "{extra:?}");
    }
}

#[test]
fn out_flag_writes_the_file() {
    let path = std::env::temp_dir().join(format!("sigbasis-{}-out.txt", std::process::id()));
    let out = bin(&["cyclic4", "--out", path.to_str().unwrap()]);
    assert!(out.status.success() && out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), cli(&["cyclic4"]));
}

#[test]
fn stats_block_rows() {
    let text = cli(&["katsura5", "--stats"]);
    for row in ["algorithm: sb", "#spairs: ", "#spairs which need reduction: ", "#SB: ", "time: "] {
        assert!(text.contains(row), "{row}");
    }
    let classic = cli(&["katsura5", "--stats", "--algorithm", "classic"]);
    assert!(classic.contains("algorithm: classic") && classic.contains("0-reductions: "));
}

#[test]
fn katsura10_reductions() {
    let text = cli(&["katsura10", "--stats", "--reducer", "geobucket", "--hashed"]);
    assert!(text.contains("#spairs which need reduction: 347\n"));
    assert!(text.contains("reduce to SB elements: 266\nreduce to new syzygy signatures: 81\n"));
    assert!(text.contains("#SB: 276\n"));
}

proptest! {
    #[test]
    fn printed_ideals_parse_back(seed in any::<u64>(), n in 2usize..5, order in prop_oneof![
        Just(RingOrder::Grevlex), Just(RingOrder::Lex), Just(RingOrder::Elimination(1))]) {
        let r = ring(31, n, order);
        let mut g = rng(seed);
        let polys: Vec<Polynomial> = (0..3).map(|_| random_poly(&mut g, &r, 5, 3)).collect();
        let text = format_ideal(&r, &polys);
        let (r2, back) = parse_ideal(&text).unwrap();
        prop_assert_eq!(r2.num_vars(), n);
        prop_assert_eq!(r2.order(), order);
        prop_assert_eq!(back, polys);
    }
}
