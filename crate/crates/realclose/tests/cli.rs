//! End-to-end tests against the actual binary: output formats, exit codes,
//! stdin handling, and byte-for-byte determinism.

use realclose::io::{document_from_strict, render_document};
use realclose::testkit::{gen_union, TestRng};
use std::io::Write;
use std::process::{Command, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_realclose"))
}

fn run_with_stdin(args: &[&str], input: &str) -> (i32, String, String) {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn closure_reads_stdin() {
    let (code, stdout, _) = run_with_stdin(
        &["closure", "-"],
        "var t\nkind strict\nset\nineq t\nend\n",
    );
    assert_eq!(code, 0);
    assert_eq!(stdout, "var t\nkind closed\nset\nineq t\nend\n");
}

#[test]
fn normalize_command_splits_masked_points() {
    // (t-5)^2 (t-1) > 0: normalization must exclude the masked point 5
    let input = "var t\nkind strict\nset\nineq (t-5)^2*(t-1)\nend\n";
    let (code, stdout, _) = run_with_stdin(&["normalize", "-"], input);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "var t\nkind strict\nset\nineq -t + 5\nineq t - 1\nend\nset\nineq t - 5\nineq t - 1\nend\n"
    );
    // and the normalized document describes the same set
    let (code, d_in, _) = run_with_stdin(&["decompose", "-"], input);
    assert_eq!(code, 0);
    let (code, d_out, _) = run_with_stdin(&["decompose", "-"], &stdout);
    assert_eq!(code, 0);
    assert_eq!(d_in, d_out);
    assert_eq!(d_in, "interval (1, 5)\ninterval (5, +inf)\n");
}

#[test]
fn min_reports_exact_and_decimal() {
    let (code, stdout, _) = run_with_stdin(
        &["min", "-"],
        "var t\nkind closed\nset\nineq t - 1\nend\n",
    );
    assert_eq!(code, 0);
    assert_eq!(stdout, "attained 1\n~ 1.000000\n");

    // irrational minimum: [sqrt(2), inf)
    let (code, stdout, _) = run_with_stdin(
        &["min", "-", "--digits", "4"],
        "var t\nkind closed\nset\nineq t^2-2\nineq t\nend\n",
    );
    assert_eq!(code, 0);
    let mut lines = stdout.lines();
    let first = lines.next().unwrap();
    assert!(
        first.starts_with("attained root of t^2 - 2 in ("),
        "got: {first}"
    );
    assert_eq!(lines.next(), Some("~ 1.4142"));

    let (code, stdout, _) = run_with_stdin(&["min", "-"], "var t\nkind closed\n");
    assert_eq!(code, 0);
    assert_eq!(stdout, "empty\n");

    let (code, stdout, _) = run_with_stdin(
        &["min", "-"],
        "var t\nkind closed\nset\nineq -t\nend\n",
    );
    assert_eq!(code, 0);
    assert_eq!(stdout, "unbounded_below\n");
}

#[test]
fn decompose_renders_algebraic_points() {
    let (code, stdout, _) = run_with_stdin(
        &["decompose", "-"],
        "var t\nkind closed\nset\nineq t\neq t^2-2\nend\n",
    );
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "point ~1.414214 (root of t^2 - 2 in [5931639/4194304, 2965821/2097152])\n"
    );
}

#[test]
fn parse_errors_exit_2_with_line_numbers() {
    let (code, _, stderr) = run_with_stdin(&["closure", "-"], "var t\nkind strict\nset\nineq 1.5\nend\n");
    assert_eq!(code, 2);
    assert!(stderr.contains("line 4"), "stderr: {stderr}");

    let (code, _, stderr) = run_with_stdin(&["closure", "-"], "var t\nkind closed\n");
    assert_eq!(code, 2);
    assert!(stderr.contains("strict"), "stderr: {stderr}");
}

#[test]
fn identical_input_bytes_give_identical_output_bytes() {
    let input = "var t\nkind strict\nset\nineq -t*(t-1)\nineq -t*(t+1)\nend\nset\nineq t^2-2\neq t^3-2*t\nend\n";
    for cmd in ["closure", "normalize", "decompose", "verify"] {
        let a = run_with_stdin(&[cmd, "-"], input);
        let b = run_with_stdin(&[cmd, "-"], input);
        assert_eq!(a, b, "command {cmd} is not deterministic");
    }
}

#[test]
fn verify_agrees_on_bundled_fixtures() {
    for name in ["even_mul.set", "cl_intersection.set", "attain_x1_x2sq.set"] {
        let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
            .join("fixtures")
            .join(name);
        let out = bin().arg("verify").arg(&path).output().unwrap();
        assert_eq!(out.status.code(), Some(0), "fixture {name}");
        assert_eq!(String::from_utf8_lossy(&out.stdout), "agree\n");
    }
}

#[test]
fn verify_agrees_on_random_corpus() {
    let mut rng = TestRng::new(0x7e57);
    let dir = std::env::temp_dir().join(format!("realclose-verify-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for i in 0..50 {
        let u = gen_union(&mut rng, 3, 4, 1, 6);
        let doc = render_document(&document_from_strict(&u, "t"));
        let path = dir.join(format!("case{i}.set"));
        std::fs::write(&path, &doc).unwrap();
        let out = bin().arg("verify").arg(&path).output().unwrap();
        assert_eq!(
            out.status.code(),
            Some(0),
            "case {i} disagreed:\n{}\n{}",
            doc,
            String::from_utf8_lossy(&out.stdout)
        );
        assert_eq!(String::from_utf8_lossy(&out.stdout), "agree\n");
    }
    let _ = std::fs::remove_dir_all(&dir);
}
