//! End-to-end tests of the `iterres` binary: output formats, exit codes,
//! JSON stability, and the round-trip guarantee on printed polynomials.

use std::path::PathBuf;
use std::process::{Command, Output};

const SAMPLE: &str = "\
# the worked three-quadric system
vars: z, y, x
f = y^2 + z^2 + x + z - 1
g = -x^2 + y^2 + z^2 - 1
h = x^2 + y + z
";

const SAMPLE_XYZ: &str = "\
vars: x, y, z
f = y^2 + z^2 + x + z - 1
g = -x^2 + y^2 + z^2 - 1
h = x^2 + y + z
";

const DEGREE5: &str = "\
vars: z, y, x
f = -34*x^2*z^3 - 20*y^5 + 7*x^2*y^2 - 43*y^3*z + 63*x + 16*z
g = 13*x*z^4 - 27*z^4 - 21*x*y^2 + 30*y*z - 42*x - 81
h = -65*x*z^4 + 13*z^5 + 30*x^3*z + 17*x*y^3 + 25*y*z + 78
";

fn write_fixture(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("iterres-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn iterres(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_iterres"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn iterate_prints_the_worked_resultant() {
    let sys = write_fixture("sample.sys", SAMPLE);
    let out = iterres(&[
        "iterate",
        "--plan",
        "res(y,res(z,f,g),res(z,f,h))",
        sys.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(
        stdout(&out),
        "5*x^8 + 16*x^7 + 14*x^6 - 2*x^5 - 12*x^4 - 8*x^3 + 3*x^2 + 2*x\n"
    );
}

#[test]
fn groebner_prints_the_basis_in_order() {
    let sys = write_fixture("sample2.sys", SAMPLE);
    let out = iterres(&["groebner", sys.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(
        stdout(&out),
        "x^4 + 2*x^3 + x^2 - 1\ny - x\nz + x^2 + x\n"
    );

    let sys2 = write_fixture("sample-xyz.sys", SAMPLE_XYZ);
    let out = iterres(&["groebner", sys2.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "z^2 - 1\ny^2 + y + z\nx - y\n");
}

#[test]
fn analyze_json_is_exact_and_stable() {
    let sys = write_fixture("sample3.sys", SAMPLE);
    let args = [
        "analyze",
        "--plan",
        "res(y,res(z,f,g),res(z,f,h))",
        sys.to_str().unwrap(),
        "--json",
    ];
    let out = iterres(&args);
    assert!(out.status.success(), "{}", stderr(&out));
    let expected = concat!(
        "{\"content\":\"1\",\"factors\":[",
        "{\"poly\":\"x\",\"mult\":1,\"label\":\"spurious\",\"evidence\":\"fails_elimination_divisibility\"},",
        "{\"poly\":\"x^2 + x - 1\",\"mult\":1,\"label\":\"genuine\",\"evidence\":\"divides_elimination_generator\"},",
        "{\"poly\":\"x^2 + x + 1\",\"mult\":1,\"label\":\"genuine\",\"evidence\":\"divides_elimination_generator\"},",
        "{\"poly\":\"5*x^3 + 6*x^2 - 3*x - 2\",\"mult\":1,\"label\":\"spurious\",\"evidence\":\"fails_elimination_divisibility\"}",
        "]}\n"
    );
    assert_eq!(stdout(&out), expected);
    // byte-identical on a second run
    let again = iterres(&args);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn analyze_text_labels_every_factor() {
    let sys = write_fixture("sample4.sys", SAMPLE);
    let out = iterres(&[
        "analyze",
        "--plan",
        "res(y,res(z,f,h),res(z,g,h))",
        sys.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("content 2\n"), "{text}");
    assert!(text.contains("genuine: x^2 + x - 1 (mult 1; divides_elimination_generator)"));
    assert!(text.contains("genuine: x^2 + x + 1 (mult 1; divides_elimination_generator)"));
    assert!(!text.contains("spurious"));
}

#[test]
fn printed_polynomials_reparse_to_the_same_value() {
    let sys = write_fixture("sample5.sys", SAMPLE);
    for plan in [
        "res(y,res(z,f,g),res(z,f,h))",
        "res(y,res(z,f,g),res(z,g,h))",
        "res(y,res(z,f,h),res(z,g,h))",
        "disc(z,f)",
        "res(z,f,g)",
    ] {
        let out = iterres(&["iterate", "--plan", plan, sys.to_str().unwrap()]);
        assert!(out.status.success(), "{plan}: {}", stderr(&out));
        let text = stdout(&out);
        let ord = iterres_core::variable::VariableOrdering::from_names(&["z", "y", "x"]).unwrap();
        let parsed = iterres_core::parse::parse(text.trim_end(), &ord).unwrap();
        assert_eq!(parsed.to_string(), text.trim_end(), "{plan}");
    }
}

#[test]
fn resultant_and_discriminant_subcommands() {
    let sys = write_fixture("sample6.sys", SAMPLE);
    let out = iterres(&[
        "resultant",
        "--var",
        "z",
        sys.to_str().unwrap(),
        "f",
        "g",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "y^2 + x^4 + 2*x^3 - 1\n");

    let out = iterres(&[
        "discriminant",
        "--var",
        "z",
        sys.to_str().unwrap(),
        "f",
        "--json",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "{\"result\":\"-4*y^2 - 4*x + 5\"}\n");
}

#[test]
fn sturm_and_factor_subcommands() {
    let extra = "\
vars: x
p = x^2 + x + 1
q = x^2 + x - 1
r = 2*x^4 + 4*x^3 + 2*x^2 - 2
";
    let sys = write_fixture("uni.sys", extra);
    let out = iterres(&["sturm", sys.to_str().unwrap(), "p"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0\n");
    let out = iterres(&["sturm", sys.to_str().unwrap(), "q", "--json"]);
    assert_eq!(stdout(&out), "{\"count\":2}\n");

    let out = iterres(&["factor", sys.to_str().unwrap(), "r"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "content 2\nx^2 + x - 1 (mult 1)\nx^2 + x + 1 (mult 1)\n"
    );
    let out = iterres(&["factor", sys.to_str().unwrap(), "r", "--json"]);
    assert_eq!(
        stdout(&out),
        "{\"content\":\"2\",\"factors\":[{\"poly\":\"x^2 + x - 1\",\"mult\":1},{\"poly\":\"x^2 + x + 1\",\"mult\":1}]}\n"
    );
}

#[test]
fn degree_report_subcommand() {
    let sys = write_fixture("sample7.sys", SAMPLE);
    let out = iterres(&[
        "degree-report",
        "--plan",
        "res(y,res(z,f,g),res(z,f,h))",
        sys.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(
        stdout(&out),
        "nested degrees: 4 8\nfinal degree: 8\nbezout bound: 8\ngenuine degree: 4\n"
    );
    let out = iterres(&[
        "degree-report",
        "--plan",
        "res(y,res(z,f,g),res(z,f,h))",
        sys.to_str().unwrap(),
        "--json",
    ]);
    assert_eq!(
        stdout(&out),
        "{\"nested_degrees\":[4,8],\"bezout_bound\":8,\"genuine_degree\":4}\n"
    );
}

#[test]
fn user_errors_exit_1_and_name_the_input() {
    // unreadable file
    let out = iterres(&["groebner", "/nonexistent/never.sys"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("never.sys"));

    // parse error names the file and line
    let bad = write_fixture("bad.sys", "vars: x\nf = x +\n");
    let out = iterres(&["groebner", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let msg = stderr(&out);
    assert!(msg.contains("bad.sys") && msg.contains("line 2"), "{msg}");

    // unknown flag
    let sys = write_fixture("sample8.sys", SAMPLE);
    let out = iterres(&["groebner", "--frobnicate", sys.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("--frobnicate"));

    // unknown command
    let out = iterres(&["transmogrify", sys.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("transmogrify"));

    // unknown polynomial name
    let out = iterres(&["sturm", sys.to_str().unwrap(), "nope"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("nope"));

    // unknown plan input
    let out = iterres(&[
        "iterate",
        "--plan",
        "res(y,res(z,f,q),res(z,f,h))",
        sys.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("`q`"));

    // missing required flag
    let out = iterres(&["resultant", sys.to_str().unwrap(), "f", "g"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("--var"));
}

#[test]
fn budget_errors_exit_2() {
    let sys = write_fixture("sample9.sys", SAMPLE);
    let out = iterres(&[
        "groebner",
        "--budget-pairs",
        "1",
        sys.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("budget"), "{}", stderr(&out));

    let uni = write_fixture("uni2.sys", "vars: x\nr = x^4 + 2*x^3 + x^2 - 1\n");
    let out = iterres(&[
        "factor",
        uni.to_str().unwrap(),
        "r",
        "--factor-ceiling",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("ceiling"), "{}", stderr(&out));
}

#[test]
fn timeout_exits_2() {
    let sys = write_fixture("degree5.sys", DEGREE5);
    let out = iterres(&[
        "iterate",
        "--plan",
        "res(y,res(z,f,g),res(z,f,h))",
        sys.to_str().unwrap(),
        "--timeout",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("time budget"), "{}", stderr(&out));
}

#[test]
fn help_exits_0() {
    let out = iterres(&["--help"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("USAGE"));
    let out = iterres(&[]);
    assert_eq!(out.status.code(), Some(1));
}
