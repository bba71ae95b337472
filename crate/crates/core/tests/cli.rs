//! The `superjordan` binary end to end.

use std::process::Command;

use superjordan::balgebra::Element;
use superjordan::expr::parse_element;
use superjordan::field::FieldSpec;
use superjordan::hopf::coproduct;
use superjordan::maps::{compose_aut, SuperAut};
use superjordan::poly::Poly;
use superjordan::serial::{
    from_json, AutomorphismRecord, BasisRecord, DecompositionRecord, ElementRecord, TensorRecord, VerdictRecord,
};
use superjordan::structure::{classify_zero_divisor, ZdReason};

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Output {
    let out = Command::new(env!("CARGO_BIN_EXE_superjordan"))
        .args(args)
        .output()
        .expect("binary runs");
    Output {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    out.stdout.trim_end().to_string()
}

fn q() -> FieldSpec {
    FieldSpec::rationals()
}

#[test]
fn documented_examples() {
    assert_eq!(ok(&["mul", "y", "x"]), "z - x*y");
    assert_eq!(ok(&["coproduct", "z"]), "z(x)1 + 1(x)z + x(x)x");
    assert_eq!(ok(&["center", "--degree", "6", "--field", "fp:3"]).lines().count(), 2);
}

#[test]
fn text_output_of_each_subcommand() {
    assert_eq!(ok(&["normalize", "x*x + y*z - z*y"]), "x*z");
    assert_eq!(ok(&["mul", "x", "y", "x"]), "x*z");
    assert_eq!(ok(&["mul", "--", "-y", "x"]), "-z + x*y");
    assert_eq!(ok(&["normalize", "-y*x"]), "-z + x*y");
    assert_eq!(ok(&["commutator", "y", "z"]), "x*z");
    assert_eq!(ok(&["eta", "y^2"]), "y^2 - z");
    assert_eq!(ok(&["eta", "--inverse", "y^2 - z"]), "y^2");
    assert_eq!(ok(&["nabla", "z^2"]), "2*z^2");
    assert_eq!(ok(&["center", "--degree", "3"]), "(none)");
    assert_eq!(ok(&["supercenter", "--degree", "6", "--field", "fp:3"]), "y^6\nz^3");
    assert!(ok(&["zerodiv", "x*y"]).contains("EvenInJxy"));
    assert_eq!(ok(&["regular", "y"]), "true");
    assert_eq!(ok(&["regular", "x"]), "false");
    assert_eq!(ok(&["superprime", "x*y", "z - x*y"]), "x");
    assert_eq!(ok(&["apply-aut", "x", "--mu", "-2"]), "-2*x");
    assert_eq!(
        ok(&["compose-aut", "--s", "z", "--mu", "2", "--s2", "1", "--mu2", "3"]),
        "sigma(s = 2 + 3*z, mu = 6)"
    );
    assert_eq!(ok(&["exp-der", "y", "--s", "1"]), "y + x");
    assert_eq!(ok(&["braiding", "x", "y"]), "-y(x)x + x(x)x");
    assert_eq!(ok(&["counit", "3 + y"]), "3");
    assert_eq!(ok(&["primitives", "--degree", "1"]).lines().count(), 2);
    assert_eq!(ok(&["nichols", "z^3 + y^5", "--field", "fp:3"]), "y^5");
    assert_eq!(ok(&["project-l", "y^3 + z + x"]), "eta_L^3");
    assert_eq!(ok(&["hopf-aut", "--s", "z"]), "false");
    assert_eq!(ok(&["hopf-aut", "--s", "1", "--mu", "2"]), "true");
}

#[test]
fn exit_codes() {
    let out = run(&["exp-der", "y", "--field", "fp:5"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("characteristic 0"), "{}", out.stderr);
    assert_eq!(run(&["normalize", "x +"]).code, 1);
    assert_eq!(run(&["nichols", "z"]).code, 1);
    assert_eq!(run(&["frobnicate"]).code, 2);
    assert_eq!(run(&["mul"]).code, 2);
    assert_eq!(run(&["normalize", "x", "--field", "fp:4"]).code, 2);
    assert_eq!(run(&["--help"]).code, 0);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let cases: &[&[&str]] = &[
        &["superprime", "--samples", "30", "--seed", "5"],
        &[
            "superprime",
            "--semiprime",
            "--samples",
            "30",
            "--seed",
            "5",
            "--format",
            "json",
        ],
        &["primitives", "--bound", "5"],
        &["coproduct", "x*z*y^2", "--field", "fp:7"],
        &["decompose", "y^3 + x*y*z", "--format", "json"],
    ];
    for args in cases {
        let (a, b) = (run(args), run(args));
        assert_eq!(a.code, 0, "{args:?}: {}", a.stderr);
        assert_eq!((a.stdout, a.stderr), (b.stdout, b.stderr), "{args:?}");
    }
}

#[test]
fn json_round_trips() {
    let record: ElementRecord = from_json(&ok(&["mul", "y", "x", "--format", "json"])).unwrap();
    assert_eq!(record.to_element().unwrap(), parse_element("z - x*y", q()).unwrap());

    let f5 = FieldSpec::prime(5).unwrap();
    let u = parse_element("x*z*y + 3*y^2", f5).unwrap();
    let record: TensorRecord = from_json(&ok(&[
        "coproduct",
        "x*z*y + 3*y^2",
        "--field",
        "fp:5",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(record.to_tensor().unwrap(), coproduct(&u));

    let f = parse_element("x*y*z - z^2", q()).unwrap();
    let record: VerdictRecord = from_json(&ok(&["zerodiv", "x*y*z - z^2", "--format", "json"])).unwrap();
    let verdict = record.to_verdict().unwrap();
    assert_eq!(verdict, classify_zero_divisor(&f).unwrap());
    assert_eq!(verdict.reason, ZdReason::parse(&record.reason).unwrap());

    let args = [
        "compose-aut",
        "--s",
        "z",
        "--mu",
        "2",
        "--s2",
        "1",
        "--mu2",
        "3",
        "--format",
        "json",
    ];
    let record: AutomorphismRecord = from_json(&ok(&args)).unwrap();
    let expected = compose_aut(
        &SuperAut::new(q().int(2), Poly::from_ints(q(), &[0, 1])).unwrap(),
        &SuperAut::new(q().int(3), Poly::from_ints(q(), &[1])).unwrap(),
    )
    .unwrap();
    assert_eq!(record.to_aut(q()).unwrap(), expected);

    let record: DecompositionRecord = from_json(&ok(&["decompose", "y^3 + x*y*z", "--format", "json"])).unwrap();
    let parts = [&record.p, &record.q, &record.r, &record.s].map(|r| r.to_element().unwrap());
    let (x, y) = (Element::x(q()), Element::y(q()));
    let recomposed = &(&(&parts[0] + &(&parts[1] * &(&x * &y))) + &(&parts[2] * &x)) + &(&parts[3] * &y);
    assert_eq!(recomposed, parse_element("y^3 + x*y*z", q()).unwrap());

    let records: Vec<BasisRecord> =
        from_json(&ok(&["center", "--field", "fp:3", "--bound", "6", "--format", "json"])).unwrap();
    let dims: Vec<usize> = records.iter().map(|r| r.basis.len()).collect();
    assert_eq!(dims, [1, 0, 0, 0, 0, 0, 2]);
}
