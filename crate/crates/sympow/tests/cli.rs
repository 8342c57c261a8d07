//! End-to-end CLI tests: pinned byte-exact outputs for the reference
//! invocations, exit-code conventions, and stdin handling.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn sympow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sympow"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = sympow(args);
    assert!(
        out.status.success(),
        "expected success for {args:?}, stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 output")
}

const TRIANGLE: &str = "(x*y,x*z,y*z)";

#[test]
fn symbolic_power_text_output_is_pinned() {
    let out = stdout_of(&[
        "symbolic-power",
        "--vars",
        "x,y,z",
        TRIANGLE,
        "2",
        "--quiet",
    ]);
    assert_eq!(out, "(x*y*z, x^2*y^2, x^2*z^2, y^2*z^2)\n");
}

#[test]
fn waldschmidt_text_output_is_pinned() {
    let out = stdout_of(&[
        "waldschmidt",
        "--exact",
        "--vars",
        "x,y,z",
        TRIANGLE,
        "--quiet",
    ]);
    assert_eq!(out, "3/2\n");
}

#[test]
fn polyhedron_text_output_is_pinned() {
    let out = stdout_of(&["polyhedron", "--vars", "x,y,z", TRIANGLE, "--quiet"]);
    assert_eq!(
        out,
        "ambient dimension: 3\npolyhedron dimension: 3\nlineality dimension: 0\nfacets: 6\nrays: 3\nvertices: 4\n"
    );
}

#[test]
fn symbolic_power_json_golden() {
    let out = stdout_of(&[
        "symbolic-power",
        "--vars",
        "x,y,z",
        TRIANGLE,
        "2",
        "--format",
        "json",
        "--quiet",
    ]);
    assert_eq!(
        out,
        concat!(
            r#"{"command":"symbolic-power","options":{"vars":["x","y","z"],"min_primes":false,"strategy":"auto","n":2},"#,
            r#""result":{"ideal":[[1,1,1],[2,2,0],[2,0,2],[0,2,2]]}}"#,
            "\n"
        )
    );
}

#[test]
fn waldschmidt_json_golden() {
    let out = stdout_of(&[
        "waldschmidt",
        "--exact",
        "--vars",
        "x,y,z",
        TRIANGLE,
        "--format",
        "json",
        "--quiet",
    ]);
    assert_eq!(
        out,
        concat!(
            r#"{"command":"waldschmidt","options":{"vars":["x","y","z"],"min_primes":false,"strategy":"auto","mode":"exact"},"#,
            r#""result":{"report":{"value":{"num":"3","den":"2"},"mode":"exact","#,
            r#""witness":[{"num":"1","den":"2"},{"num":"1","den":"2"},{"num":"1","den":"2"}]}}}"#,
            "\n"
        )
    );
}

#[test]
fn polyhedron_json_golden() {
    let out = stdout_of(&[
        "polyhedron",
        "--vars",
        "x,y,z",
        TRIANGLE,
        "--format",
        "json",
        "--quiet",
    ]);
    assert_eq!(
        out,
        concat!(
            r#"{"command":"polyhedron","options":{"vars":["x","y","z"],"min_primes":false,"strategy":"auto"},"#,
            r#""result":{"polyhedron":{"inequalities":[["0","0","0","1"],["0","0","1","0"],["1","0","1","1"],["0","1","0","0"],["1","1","0","1"],["1","1","1","0"]],"#,
            r#""vertices":[[{"num":"0","den":"1"},{"num":"1","den":"1"},{"num":"1","den":"1"}],[{"num":"1","den":"2"},{"num":"1","den":"2"},{"num":"1","den":"2"}],"#,
            r#"[{"num":"1","den":"1"},{"num":"0","den":"1"},{"num":"1","den":"1"}],[{"num":"1","den":"1"},{"num":"1","den":"1"},{"num":"0","den":"1"}]],"#,
            r#""rays":[["0","0","1"],["0","1","0"],["1","0","0"]],"#,
            r#""stats":{"ambient":3,"dim":3,"lineality":0,"facets":6,"rays":3,"vertices":4}}}}"#,
            "\n"
        )
    );
}

#[test]
fn machine_output_is_deterministic() {
    let args = [
        "polyhedron",
        "--vars",
        "x,y,z",
        TRIANGLE,
        "--format",
        "json",
        "--quiet",
    ];
    let a = sympow(&args);
    let b = sympow(&args);
    assert_eq!(a.stdout, b.stdout);
    assert!(a.stdout == b.stdout && !a.stdout.is_empty());
}

#[test]
fn parse_errors_exit_with_code_2() {
    let out = sympow(&["symbolic-power", "--vars", "x,y", "(x + y)", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("non-monomial generator"), "{stderr}");
    assert!(out.stdout.is_empty());
}

#[test]
fn usage_errors_exit_with_code_2() {
    // missing required containment direction
    let out = sympow(&["containment", "--vars", "x,y,z", TRIANGLE]);
    assert_eq!(out.status.code(), Some(2));
    // unknown subcommand
    let out = sympow(&["not-a-command"]);
    assert_eq!(out.status.code(), Some(2));
    // min-primes is meaningless for the equality screen
    let out = sympow(&["is-equal-ordinary", "--min-primes", TRIANGLE, "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn domain_errors_exit_with_code_3() {
    // zero ideal
    let out = sympow(&["symbolic-power", "--vars", "x,y", "()", "2"]);
    assert_eq!(out.status.code(), Some(3));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("zero ideal"), "{stderr}");
    // violated strategy precondition
    let out = sympow(&[
        "symbolic-power",
        "--vars",
        "x,y",
        "(x^2, x*y)",
        "2",
        "--strategy",
        "squarefree",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn reads_the_ideal_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sympow"))
        .args(["big-height", "-", "--vars", "x,y,z", "--quiet"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn");
    child
        .stdin
        .take()
        .expect("stdin")
        .write_all(TRIANGLE.as_bytes())
        .expect("write");
    let out = child.wait_with_output().expect("wait");
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "2\n");
}

#[test]
fn emitted_ideals_parse_back_to_the_same_ideal() {
    let first = stdout_of(&[
        "symbolic-power",
        "--vars",
        "x,y,z",
        TRIANGLE,
        "3",
        "--quiet",
    ]);
    // Feed the emitted ideal back in: minimal-part of a symbolic power is
    // itself, so the text must round-trip unchanged.
    let second = stdout_of(&["minimal-part", "--vars", "x,y,z", first.trim(), "--quiet"]);
    assert_eq!(first, second);
}

#[test]
fn min_primes_flag_changes_the_embedded_case() {
    let standard = stdout_of(&[
        "symbolic-power",
        "--vars",
        "x,y",
        "(x^2, x*y)",
        "2",
        "--quiet",
    ]);
    assert_eq!(standard, "(x^4, x^3*y, x^2*y^2)\n");
    let minimal = stdout_of(&[
        "symbolic-power",
        "--vars",
        "x,y",
        "(x^2, x*y)",
        "2",
        "--min-primes",
        "--quiet",
    ]);
    assert_eq!(minimal, "(x^2)\n");
}

#[test]
fn containment_and_defect_commands() {
    assert_eq!(
        stdout_of(&[
            "containment",
            "--vars",
            "x,y,z",
            TRIANGLE,
            "--given-b",
            "2",
            "--quiet"
        ]),
        "3\n"
    );
    assert_eq!(
        stdout_of(&[
            "containment",
            "--vars",
            "x,y,z",
            TRIANGLE,
            "--given-a",
            "3",
            "--quiet"
        ]),
        "2\n"
    );
    assert_eq!(
        stdout_of(&[
            "symbolic-defect",
            "--vars",
            "x,y,z",
            TRIANGLE,
            "2",
            "--quiet"
        ]),
        "1\n"
    );
    assert_eq!(
        stdout_of(&[
            "is-equal-ordinary",
            "--vars",
            "x,y,z",
            TRIANGLE,
            "2",
            "--quiet"
        ]),
        "false\n"
    );
    assert_eq!(
        stdout_of(&[
            "alpha-sequence",
            "--vars",
            "x,y,z",
            TRIANGLE,
            "3",
            "--quiet"
        ]),
        "[2, 3/2, 5/3]\n"
    );
    assert_eq!(
        stdout_of(&[
            "resurgence-bound",
            "--vars",
            "x,y,z",
            TRIANGLE,
            "2",
            "--quiet"
        ]),
        "1\n"
    );
    assert_eq!(
        stdout_of(&[
            "waldschmidt",
            "--approx",
            "--sample-size",
            "2",
            "--vars",
            "x,y,z",
            TRIANGLE,
            "--quiet"
        ]),
        "3/2\n"
    );
}

#[test]
fn decomposition_commands_render_readably() {
    let out = stdout_of(&["assoc-primes", "--vars", "x,y", "(x^2, x*y)", "--quiet"]);
    assert_eq!(out, "(x)\n(x, y)\n");
    let out = stdout_of(&["primary-decomp", "--vars", "x,y", "(x^2, x*y)", "--quiet"]);
    assert_eq!(
        out,
        "component: (x), radical: (x)\ncomponent: (y, x^2), radical: (x, y)\n"
    );
    let out = stdout_of(&["minimal-part", "--vars", "x,y", "(x^2, x*y)", "--quiet"]);
    assert_eq!(out, "(x)\n");
}

#[test]
fn inferred_ring_is_echoed_in_machine_output() {
    let out = stdout_of(&["big-height", "(b*a, a^2)", "--format", "json", "--quiet"]);
    assert_eq!(
        out,
        "{\"command\":\"big-height\",\"options\":{\"vars\":[\"b\",\"a\"],\"min_primes\":false,\"strategy\":\"auto\"},\"result\":{\"integer\":2}}\n"
    );
}
