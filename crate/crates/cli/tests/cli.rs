use std::fs;
use std::path::Path;
use std::process::Command;

use sc_lab_cli::format::{parse, serialize, Automaton};
use sc_lab_cli::run;
use sc_lab_core::combined::cat_star;
use sc_lab_core::harness::{random_dfa, sweep, Operation, SweepSource, SweepSpec};
use sc_lab_core::ops::reverse_nfa;
use sc_lab_core::witness::gen_cat_star_witness;
use sc_lab_core::Alphabet;

const A_STAR: &str = "type: dfa\nalphabet: a\nstates: 1\ninitial: 0\nfinal: 0\ntrans: 0 a 0\n";
const A_PLUS: &str =
    "type: dfa\nalphabet: a\nstates: 2\ninitial: 0\nfinal: 1\ntrans: 0 a 1\ntrans: 1 a 1\n";

fn sc(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("sc-lab").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn min_keeps_minimal_automaton() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "plus.aut", A_PLUS);
    let (code, out, _) = sc(&["min", &f]);
    assert_eq!(code, 0);
    assert_eq!(out, A_PLUS);
}

#[test]
fn min_collapses_redundant_states() {
    let dir = tempfile::tempdir().unwrap();
    let redundant = "type: dfa\nalphabet: a\nstates: 3\ninitial: 0\nfinal: 0 1 2\ntrans: 0 a 1\ntrans: 1 a 2\ntrans: 2 a 0\n";
    let f = write(dir.path(), "r.aut", redundant);
    let (code, out, _) = sc(&["min", &f]);
    assert_eq!(code, 0);
    assert_eq!(out, A_STAR);
}

#[test]
fn equiv_prints_empty_word() {
    let dir = tempfile::tempdir().unwrap();
    let (star, plus) = (
        write(dir.path(), "s.aut", A_STAR),
        write(dir.path(), "p.aut", A_PLUS),
    );
    assert_eq!(
        sc(&["equiv", &star, &plus]),
        (1, "\"\"\n".to_string(), String::new())
    );
    assert_eq!(sc(&["equiv", &plus, &plus]).0, 0);
}

#[test]
fn witness_sweep_prints_twelve_rows() {
    let (code, out, _) = sc(&[
        "sweep", "--op", "cat-rev", "--source", "witness", "--m", "2..4", "--n", "2..5",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(lines.len(), 13);
    let spec = SweepSpec {
        op: Operation::CatRev,
        m_range: 2..=4,
        n_range: 2..=5,
        source: SweepSource::Witness,
    };
    let rows = sweep(&spec, None).unwrap();
    for (line, row) in lines[1..].iter().zip(&rows) {
        let cols: Vec<_> = line.split('\t').collect();
        let r = row.report().unwrap();
        assert_eq!(cols[6], r.minimal_size.to_string());
        assert_eq!(cols[8], r.predicted_tight.unwrap().to_string());
        assert_eq!(cols[9], "true");
    }
    assert!(lines
        .iter()
        .any(|l| l.starts_with("cat-rev\t3\t4\t") && l.split('\t').nth(6) == Some("38")));
}

#[test]
fn sweep_reports_skipped_cells() {
    let (code, out, err) = sc(&["sweep", "--op", "cat-star", "--m", "2", "--n", "2..3"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 3);
    assert!(err.contains("skipped m=2 n=3"));
}

#[test]
fn bound_values() {
    assert_eq!(
        sc(&["bound", "--op", "cat-rev", "--m", "3", "--n", "4"]).1,
        "38\n"
    );
    assert_eq!(
        sc(&["bound", "--op", "cat-rev", "--m", "4", "--n", "5"]).1,
        "109\n"
    );
    assert_eq!(
        sc(&["bound", "--op", "cat-star", "--m", "4", "--n", "2"]).1,
        "11\n"
    );
    assert_eq!(
        sc(&[
            "bound",
            "--op",
            "cat-star",
            "--m",
            "2",
            "--n",
            "2",
            "--case",
            "final-is-initial"
        ])
        .1,
        "6\n"
    );
    assert_eq!(
        sc(&["bound", "--op", "cat-star", "--m", "2", "--n", "3", "--k1", "1", "--k2", "1"]).1,
        "10\n"
    );
    assert_eq!(
        sc(&["bound", "--op", "composed-cat-rev", "--m", "2", "--n", "2"]).1,
        "24\n"
    );
    assert_eq!(
        sc(&["bound", "--op", "cat-rev", "--m", "0", "--n", "2"]).0,
        2
    );
}

#[test]
fn apply_cat_star_matches_library() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.aut"), dir.path().join("b.aut"));
    let (a, b) = (a.to_str().unwrap(), b.to_str().unwrap());
    let (code, out, _) = sc(&[
        "witness", "--family", "cat-star", "--m", "4", "--out-a", a, "--out-b", b,
    ]);
    assert_eq!((code, out.as_str()), (0, "11\n"));
    let (code, out, _) = sc(&["apply", "--op", "cat-star", a, b]);
    assert_eq!(code, 0);
    let w = gen_cat_star_witness(4).unwrap();
    assert_eq!(
        parse(&out).unwrap(),
        Automaton::Dfa(cat_star(&w.a, &w.b).unwrap().0)
    );
    let (_, out, _) = sc(&["apply", "--op", "cat-star", "--minimize", a, b]);
    assert!(out.contains("states: 11\n"));
}

#[test]
fn apply_letter_maps() {
    let dir = tempfile::tempdir().unwrap();
    let ab = "type: dfa\nalphabet: a b\nstates: 3\ninitial: 0\nfinal: 1\ntrans: 0 a 1\ntrans: 0 b 2\ntrans: 1 a 2\ntrans: 1 b 2\ntrans: 2 a 2\ntrans: 2 b 2\n";
    let f = write(dir.path(), "a.aut", ab);
    let (code, out, _) = sc(&["apply", "--op", "hom", "--map", "a=b,b=a", &f]);
    assert_eq!(code, 0);
    assert!(out.contains("trans: 0 a 2\ntrans: 0 b 1\n"));
    let (code, out, _) = sc(&[
        "apply",
        "--op",
        "theta",
        "--map",
        "a=b,b=a",
        "--minimize",
        &f,
    ]);
    assert_eq!(code, 0);
    let only_b = write(dir.path(), "b.aut", &out);
    let (_, hom, _) = sc(&["apply", "--op", "hom", "--map", "a=b,b=a", &f]);
    let hom = write(dir.path(), "h.aut", &hom);
    assert_eq!(sc(&["equiv", &only_b, &hom]).0, 0);
    assert_eq!(sc(&["apply", "--op", "hom", "--map", "a=a,b=a", &f]).0, 2);
    assert_eq!(sc(&["apply", "--op", "theta", "--map", "a=b", &f]).0, 2);
    assert_eq!(sc(&["apply", "--op", "hom", &f]).0, 2);
    assert_eq!(sc(&["apply", "--op", "cat", &f]).0, 2);
}

#[test]
fn search_finds_small_pair() {
    let (code, out, _) = sc(&[
        "search", "--op", "cat-rev", "--m", "1", "--n", "2", "--target", "2",
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("# found"), "{out}");
    let (code, out, _) = sc(&[
        "search",
        "--op",
        "cat-star",
        "--m",
        "2",
        "--n",
        "2",
        "--constraint",
        "second-finals-are-initial",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("predicted size 6"));
}

#[test]
fn dot_output() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "p.aut", A_PLUS);
    let (code, out, _) = sc(&["dot", &f]);
    assert_eq!(code, 0);
    assert!(out.starts_with("digraph automaton {\n"));
    assert!(out.contains("\t1 [shape=doublecircle];") && out.contains("\tstart0 -> 0;"));
}

#[test]
fn usage_errors_exit_two() {
    let (code, _, err) = sc(&["frobnicate"]);
    assert_eq!(code, 2);
    assert!(err.contains("Usage"));
    assert_eq!(sc(&["min", "/nonexistent/file.aut"]).0, 2);
    assert_eq!(
        sc(&["sweep", "--op", "cat-rev", "--m", "4..2", "--n", "2"]).0,
        2
    );
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.aut", "type: dfa\nalphabet: a\n");
    let (code, _, err) = sc(&["min", &bad]);
    assert_eq!(code, 2);
    assert!(err.contains("missing field `states`"));
    assert_eq!(sc(&["--help"]).0, 0);
}

#[test]
fn round_trip_is_stable() {
    for seed in 0..40 {
        let alphabet = Alphabet::letters(1 + seed as usize % 3);
        let d = random_dfa(1 + seed as usize % 6, &alphabet, 0.3, seed);
        for x in [Automaton::Dfa(d.clone()), Automaton::Nfa(reverse_nfa(&d))] {
            let text = serialize(&x);
            assert_eq!(parse(&text).unwrap(), x);
            assert_eq!(serialize(&parse(&text).unwrap()), text);
        }
    }
}

#[test]
fn thread_variable_is_validated() {
    let bin = env!("CARGO_BIN_EXE_sc-lab");
    let args = [
        "sweep", "--op", "cat-rev", "--source", "random", "--count", "3", "--m", "1..3", "--n",
        "1..3",
    ];
    let strip = |s: &[u8]| {
        String::from_utf8(s.to_vec())
            .unwrap()
            .lines()
            .map(|l| l.rsplit_once('\t').unwrap().0.to_string())
            .collect::<Vec<_>>()
    };
    let one = Command::new(bin)
        .args(args)
        .env("SC_LAB_THREADS", "1")
        .output()
        .unwrap();
    let four = Command::new(bin)
        .args(args)
        .env("SC_LAB_THREADS", "4")
        .output()
        .unwrap();
    assert!(one.status.success());
    assert_eq!(strip(&one.stdout), strip(&four.stdout));
    let bad = Command::new(bin)
        .args(args)
        .env("SC_LAB_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
