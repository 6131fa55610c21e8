//! End-to-end tests of the command-line binary: exit codes, output
//! stability, and the build/extend/chain workflows.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hopfcheck"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("the binary should run")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("the binary should exit normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout should be utf-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr should be utf-8")
}

fn path_str(p: &Path) -> &str {
    p.to_str().expect("paths in this test are utf-8")
}

#[test]
fn check_accepts_a_valid_file() {
    let out = run(&["check", path_str(&fixture("trunc2.alg"))]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("ok: hopf of dimension 2 over F_2"));
}

#[test]
fn check_names_the_violated_axiom_and_exits_one() {
    let out = run(&["check", path_str(&fixture("corrupted.alg"))]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("violation:"), "got: {text}");
    assert!(text.contains("unit"), "the broken axiom is the unit law: {text}");
}

#[test]
fn parse_and_io_problems_exit_two() {
    let out = run(&["check", path_str(&fixture("badprime.alg"))]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("modulus not prime"));

    let out = run(&["check", path_str(&fixture("garbage.alg"))]);
    assert_eq!(code(&out), 2);

    let out = run(&["check", "no/such/file.alg"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("no/such/file.alg"));
}

#[test]
fn invalid_algebras_stop_the_analysis_commands_with_exit_one() {
    for cmd in ["radical", "integrals", "center", "coradical", "primitives", "masuoka", "chain"] {
        let out = run(&[cmd, path_str(&fixture("corrupted.alg"))]);
        assert_eq!(code(&out), 1, "{cmd} should refuse a broken algebra");
        assert!(stderr(&out).contains("violation"), "{cmd}: {}", stderr(&out));
    }
}

#[test]
fn cohomology_of_the_truncated_line_prints_the_classic_class() {
    let out = run(&["cohomology", path_str(&fixture("trunc2.alg")), "--degree", "2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("dim H^2 = 1"), "got: {text}");
    assert!(text.contains("x(x)x"), "the representative should be x tensor x: {text}");

    let out = run(&["cohomology", path_str(&fixture("trunc2.alg")), "--degree", "1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("dim H^1 = 1"));

    let out = run(&["cohomology", path_str(&fixture("trunc2.alg")), "--degree", "9"]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("degree"));
}

#[test]
fn masuoka_json_is_byte_identical_across_runs() {
    let file = fixture("trunc2.alg");
    let first = run(&["masuoka", path_str(&file), "--json"]);
    let second = run(&["masuoka", path_str(&file), "--json"]);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
    let text = stdout(&first);
    assert!(text.contains("\"agreement\": true"));
    assert!(text.contains("\"semisimple\": false"));
    assert!(text.contains("\"K_semisimple\": false"));
}

#[test]
fn builds_are_deterministic_and_validate() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.alg");
    let b = dir.path().join("b.alg");
    for path in [&a, &b] {
        let out = run(&["build", "group-dual", "--group", "c4", "--p", "2", "-o", path_str(path)]);
        assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());

    let out = run(&["check", path_str(&a)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("ok: hopf of dimension 4 over F_2"));

    let out = run(&["masuoka", path_str(&a)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("agreement = true"));
}

#[test]
fn build_reads_cayley_tables_and_rejects_bad_moduli() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("klein.alg");
    let out = run(&[
        "build",
        "group-algebra",
        "--cayley",
        path_str(&fixture("klein.grp")),
        "--p",
        "3",
        "-o",
        path_str(&out_path),
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let out = run(&["check", path_str(&out_path)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("hopf of dimension 4 over F_3"));

    let out = run(&["build", "group-dual", "--group", "c2", "--p", "4", "-o", "/dev/null"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("modulus not prime"));

    let out =
        run(&["build", "group-dual", "--group", "no-such-group", "--p", "2", "-o", "/dev/null"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("no-such-group"));
}

#[test]
fn build_restricted_env_from_a_lie_file() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("line3.alg");
    let out = run(&[
        "build",
        "restricted-env",
        "--lie",
        path_str(&fixture("line3.lie")),
        "-o",
        path_str(&out_path),
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("hopf of dimension 3 over F_3"));

    let out = run(&["masuoka", path_str(&out_path)]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("agreement = true"));
    assert!(text.contains("semisimple             false"));
}

#[test]
fn extend_grows_the_semisimple_dimension_four_hopf_algebra() {
    let dir = tempfile::tempdir().unwrap();
    let base = dir.path().join("kc2dual.alg");
    let ext = dir.path().join("ext.alg");
    let out = run(&["build", "group-dual", "--group", "c2", "--p", "2", "-o", path_str(&base)]);
    assert_eq!(code(&out), 0);

    // z^2 + z = 0 against the unique H^2 class keeps the result semisimple.
    let out = run(&[
        "extend",
        path_str(&base),
        "--cocycle",
        "0",
        "--relation",
        "1,1,0",
        "-o",
        path_str(&ext),
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));

    let out = run(&["masuoka", path_str(&ext)]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("dim = 4"));
    assert!(text.contains("agreement = true"));
    assert!(text.contains("semisimple             true"), "got: {text}");

    let out = run(&["chain", path_str(&ext)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("dimensions 2 -> 4"));
}

#[test]
fn extend_accepts_cocycle_files_and_rejects_mismatches() {
    let dir = tempfile::tempdir().unwrap();
    let ext = dir.path().join("ext.alg");
    // z^2 = 0 with coproduct defect x(x)x over the truncated line.
    let out = run(&[
        "extend",
        path_str(&fixture("trunc2.alg")),
        "--cocycle-file",
        path_str(&fixture("xx.coc")),
        "--relation",
        "1,0,0",
        "-o",
        path_str(&ext),
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let out = run(&["check", path_str(&ext)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("ok: hopf of dimension 4 over F_2"));

    // The cocycle file is sized for dim 2, not 4.
    let out = run(&[
        "extend",
        path_str(&ext),
        "--cocycle-file",
        path_str(&fixture("xx.coc")),
        "--relation",
        "1,0,0",
        "-o",
        "/dev/null",
    ]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("dimension mismatch"));
}

#[test]
fn extend_rejects_malformed_requests() {
    let dir = tempfile::tempdir().unwrap();
    let base = dir.path().join("kc2dual.alg");
    let out = run(&["build", "group-dual", "--group", "c2", "--p", "2", "-o", path_str(&base)]);
    assert_eq!(code(&out), 0);

    let out = run(&[
        "extend",
        path_str(&base),
        "--cocycle",
        "7",
        "--relation",
        "1,1,0",
        "-o",
        "/dev/null",
    ]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("out of range"));

    let out =
        run(&["extend", path_str(&base), "--cocycle", "0", "--relation", "0,1", "-o", "/dev/null"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("degree l"));

    let out =
        run(&["extend", path_str(&base), "--cocycle", "0", "--relation", "1,1", "-o", "/dev/null"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("coefficients"));

    let out = run(&["extend", path_str(&base), "--relation", "1,1,0", "-o", "/dev/null"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn chain_walks_the_cyclic_tower() {
    let dir = tempfile::tempdir().unwrap();
    let base = dir.path().join("kc8dual.alg");
    let out = run(&["build", "group-dual", "--group", "c8", "--p", "2", "-o", path_str(&base)]);
    assert_eq!(code(&out), 0);

    let out = run(&["chain", path_str(&base)]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("dimensions 2 -> 4 -> 8"), "got: {text}");
    assert_eq!(text.matches("certified essential").count(), 2);
}

#[test]
fn suite_passes_and_its_json_is_deterministic() {
    let first = run(&["suite", "--p", "2", "--max-group-order", "4", "--json"]);
    let second = run(&["suite", "--p", "2", "--max-group-order", "4", "--json"]);
    assert_eq!(code(&first), 0, "stderr: {}", stderr(&first));
    assert_eq!(first.stdout, second.stdout);
    assert!(stdout(&first).contains("\"passed\": true"));

    let out = run(&["suite", "--p", "2", "--max-group-order", "4"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("suite passed"));
    assert!(text.contains("PASS dual of c4"));
    assert!(text.contains("rejected as expected"));

    let out = run(&["suite", "--p", "9", "--max-group-order", "4"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("modulus not prime"));
}

#[test]
fn invariant_commands_print_labeled_bases() {
    let file = fixture("trunc2.alg");

    let out = run(&["radical", path_str(&file)]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("radical dimension 1"));
    assert!(text.contains("  x"), "the radical of the truncated line is spanned by x: {text}");

    let out = run(&["integrals", path_str(&file)]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("left integral space dimension 1"));
    assert!(text.contains("eps on left integrals: zero"));

    let out = run(&["primitives", path_str(&file)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("primitive space dimension 1"));

    let out = run(&["center", path_str(&file)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("center dimension 2"));

    let out = run(&["coradical", path_str(&file)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("coradical dimension 1"));
}
