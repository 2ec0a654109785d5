use std::collections::BTreeMap;
use std::process::{Command, Output};

use flatdual::{parse, Coefficient};
use flatdual_cli::{JsonComplex, JsonReal, Report};
use flatdual_testkit::{fstest_gradient, rel_close, richardson_diff, scalar_eval, tenths_plus_i};
use proptest::prelude::*;

fn flatdual(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flatdual"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Report, String, i32) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = flatdual(&all);
    let text = String::from_utf8(out.stdout).unwrap();
    let report = Report::from_json(&text).unwrap_or_else(|e| panic!("{e}: {text}"));
    (report, text, out.status.code().unwrap())
}

fn c(x: f64) -> Coefficient {
    Coefficient::new(x, 0.0)
}

#[test]
fn identity_table() {
    let (r, _, code) = json(&["derivatives", "--expr", "x", "--at", "5", "--order", "2"]);
    assert_eq!(code, 0);
    assert_eq!(r.values(), vec![c(5.0), c(1.0), c(0.0)]);
    assert_eq!(r.shape, vec![3]);
}

#[test]
fn plain_output_has_table_and_timing() {
    let out = flatdual(&["derivatives", "--expr", "x", "--at", "5", "--order", "2"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(
        text.contains("   0  5.0000000000000000e0+0.0000000000000000e0i"),
        "{text}"
    );
    assert!(text.contains("   2  0.0000000000000000e0+0.0000000000000000e0i"));
    assert!(text.contains("elapsed time (s):"));
}

#[test]
fn plain_values_carry_full_precision() {
    let out = flatdual(&[
        "derivatives",
        "--expr",
        "sin(x)",
        "--at",
        "0.7",
        "--order",
        "1",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    let row = text
        .lines()
        .find(|l| l.trim_start().starts_with("0 "))
        .unwrap();
    let value: Coefficient = row.split_whitespace().nth(1).unwrap().parse().unwrap();
    assert_eq!(
        value.re.to_bits(),
        flatdual::scalar::sin(c(0.7)).re.to_bits()
    );
}

#[test]
fn sine_power_log_rows_match_finite_differences() {
    let (r, _, code) = json(&[
        "derivatives",
        "--expr",
        "sin(x)^log(x*x)",
        "--at",
        "1.1+2.2i",
        "--order",
        "5",
    ]);
    assert_eq!(code, 0);
    assert_eq!(r.values.len(), 6);
    let e = parse("sin(x)^log(x*x)").unwrap();
    let f = |z: Coefficient| scalar_eval(&e, &BTreeMap::from([("x".to_string(), z)])).unwrap();
    let values = r.values();
    for (k, v) in values.iter().enumerate().take(4) {
        let fd = richardson_diff(f, Coefficient::new(1.1, 2.2), k).unwrap();
        assert!(rel_close(*v, fd, 1e-6), "k={k}: {v} vs {fd}");
    }
}

#[test]
fn gradient_example() {
    let (r, _, code) = json(&[
        "grad",
        "--exprs",
        "sin(x*y*z)+cos(x*y*z)",
        "--vars",
        "x,y,z",
        "--at",
        "0.1+1i,0.2+1i,0.3+1i",
    ]);
    assert_eq!(code, 0);
    assert_eq!(r.kind, "gradient");
    for (a, b) in r.values().iter().zip(fstest_gradient(&tenths_plus_i(3))) {
        assert!(rel_close(*a, b, 1e-13));
    }
}

#[test]
fn hessian_is_symmetric() {
    let (r, _, code) = json(&[
        "hess",
        "--exprs",
        "sin(x*y*z)+cos(x*y*z)",
        "--vars",
        "x,y,z",
        "--at",
        "0.1+1i,0.2+1i,0.3+1i",
    ]);
    assert_eq!(code, 0);
    assert_eq!(r.shape, vec![3, 3]);
    let v = r.values();
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(v[3 * i + j], v[3 * j + i]);
        }
    }
}

#[test]
fn jacobian_example() {
    let (r, _, code) = json(&["jac", "--exprs", "x*y;x+y", "--vars", "x,y", "--at", "2,3"]);
    assert_eq!(code, 0);
    assert_eq!(r.shape, vec![2, 2]);
    assert_eq!(r.values(), vec![c(3.0), c(2.0), c(1.0), c(1.0)]);
}

#[test]
fn negative_points_are_accepted() {
    let (r, _, code) = json(&[
        "derivatives",
        "--expr",
        "x^2",
        "--at",
        "-1.5-2i",
        "--order",
        "1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(r.values()[1], Coefficient::new(-3.0, -4.0));
}

#[test]
fn usage_and_parse_errors_exit_2() {
    for args in [
        &["derivatives", "--expr", "x+", "--at", "1", "--order", "1"][..],
        &[
            "derivatives",
            "--expr",
            "foo(x)",
            "--at",
            "1",
            "--order",
            "1",
        ],
        &["derivatives", "--expr", "x*y", "--at", "1", "--order", "1"],
        &[
            "derivatives",
            "--expr",
            "x",
            "--at",
            "1 + 2i",
            "--order",
            "1",
        ],
        &[
            "derivatives",
            "--expr",
            "x",
            "--at",
            "1",
            "--order",
            "1",
            "--nest",
            "0",
        ],
        &["derivatives", "--expr", "x", "--at", "1"],
        &["grad", "--exprs", "x*y", "--vars", "x,y", "--at", "1"],
        &["hess", "--exprs", "x;y", "--vars", "x,y", "--at", "1,2"],
        &["frobnicate"],
    ] {
        let out = flatdual(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn non_finite_results_exit_3() {
    let (r, text, code) = json(&[
        "derivatives",
        "--expr",
        "log(x)",
        "--at",
        "0",
        "--order",
        "2",
    ]);
    assert_eq!(code, 3);
    assert!(!r.finite);
    assert!(text.contains("\"NaN\"") || text.contains("Infinity"));
    let plain = flatdual(&[
        "derivatives",
        "--expr",
        "log(x)",
        "--at",
        "0",
        "--order",
        "2",
    ]);
    assert!(String::from_utf8(plain.stdout)
        .unwrap()
        .contains("(non-finite)"));
    assert!(!plain.stderr.is_empty());
}

#[test]
fn precision_flag_is_accepted() {
    let out = flatdual(&[
        "derivatives",
        "--expr",
        "x",
        "--at",
        "1",
        "--order",
        "1",
        "--precision",
        "double",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn emitted_json_reparses_identically() {
    let (r, text, _) = json(&[
        "derivatives",
        "--expr",
        "exp(x)/3",
        "--at",
        "0.1+0.7i",
        "--order",
        "6",
    ]);
    assert_eq!(r.to_json(), text.trim_end());
}

fn real() -> impl Strategy<Value = f64> {
    prop_oneof![
        any::<f64>(),
        Just(f64::NAN),
        Just(f64::INFINITY),
        Just(f64::NEG_INFINITY),
        Just(-0.0),
        Just(5e-324),
    ]
}

fn complex() -> impl Strategy<Value = JsonComplex> {
    (real(), real()).prop_map(|(re, im)| JsonComplex {
        re: JsonReal(re),
        im: JsonReal(im),
    })
}

proptest! {
    #[test]
    fn json_round_trip_is_bit_exact(values in prop::collection::vec(complex(), 1..20), point in complex()) {
        let values: Vec<Coefficient> = values.into_iter().map(Coefficient::from).collect();
        let r = Report::derivatives(point.into(), &values, 1, 0.5);
        let back = Report::from_json(&r.to_json()).unwrap();
        for (a, b) in back.values.iter().zip(&r.values) {
            prop_assert!(a.re.0.to_bits() == b.re.0.to_bits() || (a.re.0.is_nan() && b.re.0.is_nan()));
            prop_assert!(a.im.0.to_bits() == b.im.0.to_bits() || (a.im.0.is_nan() && b.im.0.is_nan()));
        }
        prop_assert_eq!(back, r);
    }
}
