use std::process::{Command, Output};

fn gsc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gsc"))
        .args(args)
        .env("GSC_SEED", "99")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

#[test]
fn eval_examples() {
    for (expr, expected) in [
        ("class(sum(1))", "Infinite\n"),
        ("eq(shift(n) - n, 1)", "true\n"),
        ("sum(1)", "n + 1 [Infinite]\n"),
        ("st((2*n+3)/(n+1))", "2\n"),
        ("ind(0 mod 2) * ind(1 mod 2)", "0 [Zero]\n"),
    ] {
        let out = gsc(&["eval", expr]);
        assert_eq!(stdout(&out), expected, "{expr}");
        assert!(out.status.success(), "{expr}");
    }
}

#[test]
fn zero_divisor_is_an_error_line() {
    let out = gsc(&["eval", "invert(ind(0 mod 2))"]);
    assert_eq!(stdout(&out), "error: ZeroDivisor witness=ind(1 mod 2)\n");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn syntax_errors_carry_position() {
    let out = gsc(&["eval", "1 +\n  * 2"]);
    let text = stdout(&out);
    assert!(text.starts_with("error: SyntaxError line=2 column=3"), "{text}");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn filter_flag_changes_the_quotient() {
    assert_eq!(stdout(&gsc(&["eq", "n except {0: 5}", "n"])), "true\n");
    assert_eq!(stdout(&gsc(&["--filter=principal:{0,1}", "eq", "n except {0: 5}", "n"])), "false\n");
    assert_eq!(stdout(&gsc(&["--filter=principal:{3}", "classify", "n"])), "Appreciable\n");
    assert_eq!(stdout(&gsc(&["classify", "n"])), "Infinite\n");
}

#[test]
fn sum_prints_verdict_and_value() {
    let out = gsc(&["sum", "ind(evens) - ind(odds)"]);
    assert_eq!(stdout(&out).lines().next(), Some("verdict: BoundedDivergent"));
    let out = gsc(&["sum", "n"]);
    assert!(stdout(&out).starts_with("verdict: UnboundedDivergent\nvalue: "));
}

#[test]
fn oracle_flags() {
    let out = gsc(&["oracle", "--lambda=2", "--field=3"]);
    let text = stdout(&out);
    assert!(out.status.success(), "{text}");
    assert!(text.lines().all(|l| l.starts_with("PASS ")), "{text}");
    let out = gsc(&["oracle", "--lambda=9"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn check_suites_by_name() {
    for suite in ["filter-axioms", "galois-roundtrip", "shift-impossibility", "banach-bounds"] {
        let out = gsc(&["check", suite]);
        assert!(out.status.success(), "{suite}: {}", stdout(&out));
    }
    let out = gsc(&["check", "archimedean", "--kmax=50"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let out = gsc(&["--filter=principal:{0}", "check", "archimedean", "--kmax=50"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).lines().any(|l| l.starts_with("FAIL archimedean")));
    assert_eq!(gsc(&["check", "missing"]).status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(gsc(&["frobnicate"]).status.code(), Some(2));
}
