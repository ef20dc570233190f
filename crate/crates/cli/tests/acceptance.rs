//! Acceptance criteria, exact equality throughout. Prints one PASS/FAIL line
//! per criterion and exits nonzero if any fails.

use std::process::{Command, Output};
use std::time::{Duration, Instant};

use serde_json::Value;

use wrm_cli::verify::{run_suite, Bounds, Suite, SuiteReport};
use wrm_core::binomial::choose2;
use wrm_core::determinants::det_via_eq11;
use wrm_core::{Matrix, Rational, RecurrenceParams, SequenceSpec, WrmDescriptor};

const SEED: u64 = 20_240_917;

type Criterion = fn() -> Result<(), String>;

fn wrm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wrm"))
        .args(args)
        .env_remove("WRM_SEED")
        .output()
        .expect("wrm binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn matrix_field(doc: &Value, key: &str) -> Result<Matrix, String> {
    serde_json::from_value(doc[key].clone()).map_err(|e| format!("field {key}: {e}"))
}

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    check(took < limit, format!("took {took:?}, limit {limit:?}"))
}

fn suite(s: Suite, trials: u64) -> Result<SuiteReport, String> {
    let r = run_suite(s, SEED, trials, Bounds::default());
    match r.failures.first() {
        Some(f) => Err(format!(
            "{}: trial {} (trial-seed {}) failed: {}",
            s.name(),
            f.trial,
            f.seed,
            f.detail
        )),
        None if r.passed != trials => Err(format!("{}: {} of {trials} passed", s.name(), r.passed)),
        None => Ok(r),
    }
}

fn factor_doc(args: &[&str]) -> Result<Value, String> {
    let o = wrm(args);
    check(o.status.code() == Some(0), format!("factor exited {:?}", o.status.code()))?;
    let doc: Value = serde_json::from_str(&stdout(&o)).map_err(|e| e.to_string())?;
    check(doc["verified"] == Value::Bool(true), "product not verified")?;
    Ok(doc)
}

fn identity_middle_case() -> Result<(), String> {
    let start = Instant::now();
    // a = 2, b = 3: params (b, ab, a), alpha = a^i, beta = b^j
    let wrm_args = ["--params", "3,6,2", "--alpha", "geom:1,2", "--beta", "geom:1,3", "--n", "3"];
    let mut args = vec!["factor", "--mode", "toeplitz"];
    args.extend(wrm_args);
    let doc = factor_doc(&args)?;
    check(matrix_field(&doc, "middle")? == Matrix::identity(3).unwrap(), "middle is not the identity")?;
    let expected = Matrix::from_i64_rows(&[&[1, 3, 9], &[2, 18, 90], &[4, 60, 468]]).unwrap();
    check(matrix_field(&doc, "left")?.mul(&matrix_field(&doc, "right")?).unwrap() == expected, "L·R differs from P")?;

    let mut bareiss = vec!["det", "--method", "bareiss"];
    bareiss.extend(wrm_args);
    let o = wrm(&bareiss);
    check(stdout(&o) == "1728\n", format!("Bareiss gave {:?}", stdout(&o)))?;

    let mut closed = vec!["det", "--method", "closed", "--report", "json"];
    closed.extend(wrm_args);
    let o = wrm(&closed);
    check(o.status.code() == Some(0), "closed-form det did not exit 0")?;
    let report: Value = serde_json::from_str(&stdout(&o)).map_err(|e| e.to_string())?;
    check(
        report["closed_form"] == "1728" && report["bareiss"] == "1728" && report["agrees"] == true,
        format!("report {report}"),
    )?;
    within(start, Duration::from_secs(1))
}

fn ones_middle_case() -> Result<(), String> {
    let start = Instant::now();
    // a = 2: params (a, 1 - a^2, a), boundaries (a + 1)^i
    let doc = factor_doc(&[
        "factor", "--mode", "toeplitz", "--params", "2,-3,2", "--alpha", "geom:1,3", "--beta", "geom:1,3", "--n", "3",
    ])?;
    check(matrix_field(&doc, "middle")? == Matrix::ones(3).unwrap(), "middle is not the all-ones matrix")?;
    within(start, Duration::from_secs(1))
}

fn group_law() -> Result<(), String> {
    let start = Instant::now();
    suite(Suite::GroupLaw, 1000)?;
    within(start, Duration::from_secs(10))
}

fn actions() -> Result<(), String> {
    let start = Instant::now();
    suite(Suite::LeftAction, 500)?;
    suite(Suite::RightAction, 500)?;
    within(start, Duration::from_secs(30))
}

fn unifying() -> Result<(), String> {
    let start = Instant::now();
    suite(Suite::Unifying, 500)?;
    within(start, Duration::from_secs(60))
}

fn toeplitz_middle() -> Result<(), String> {
    let start = Instant::now();
    suite(Suite::ToeplitzFactor, 500)?;
    within(start, Duration::from_secs(60))
}

fn determinant_formulas() -> Result<(), String> {
    suite(Suite::Eq11, 500)?;
    suite(Suite::Geometric, 500)?;
    let one = Rational::one();
    let ones = SequenceSpec::Constant(one.clone());
    for n in 1..=12 {
        let pascal = WrmDescriptor::from_specs(RecurrenceParams::from_i64(1, 0, 1), &ones, &ones, n).unwrap();
        check(pascal.build().det_bareiss() == one, format!("Pascal det at n={n}"))?;
        let unipotent = WrmDescriptor::from_specs(
            RecurrenceParams::from_i64(0, 1, 1),
            &SequenceSpec::lambda(one.clone()),
            &SequenceSpec::mu(),
            n,
        )
        .unwrap();
        check(unipotent.build().det_bareiss() == one, format!("unipotent det at n={n}"))?;
        for y in ["1", "-1/2", "3", "5/7"] {
            let y: Rational = y.parse().unwrap();
            let d = WrmDescriptor::from_specs(RecurrenceParams::new(one.clone(), y.clone(), one.clone()), &ones, &ones, n).unwrap();
            let expected = (&y + &one).powu(choose2(n as u64));
            check(d.build().det_bareiss() == expected, format!("(1,y,1) Bareiss at y={y} n={n}"))?;
            check(det_via_eq11(&d).unwrap() == expected, format!("(1,y,1) closed form at y={y} n={n}"))?;
        }
    }
    let o = wrm(&["det", "--method", "eq11", "--params", "1,1,1", "--alpha", "const:1", "--beta", "const:1", "--n", "4"]);
    check(stdout(&o) == "64\n", format!("CLI eq11 gave {:?}", stdout(&o)))
}

fn k2_geometric() -> Result<(), String> {
    suite(Suite::K2Geometric, 200)?;
    // y + a + b - ab = 0 at a = 2, b = 3, y = 1
    for n in ["2", "3", "6"] {
        let o = wrm(&[
            "det", "--method", "closed", "--report", "json", "--params", "1,1,1", "--alpha", "geom:1,2", "--beta", "geom:1,3",
            "--n", n,
        ]);
        let report: Value = serde_json::from_str(&stdout(&o)).map_err(|e| e.to_string())?;
        check(
            report["formula_name"] == "k2-geometric" && report["closed_form"] == "0" && report["bareiss"] == "0",
            format!("degenerate case at n={n}: {report}"),
        )?;
    }
    Ok(())
}

fn k2_arithmetic() -> Result<(), String> {
    suite(Suite::K2Arithmetic, 50).map(drop)
}

fn middle_diagonal() -> Result<(), String> {
    suite(Suite::MiddleDiagonal, 200).map(drop)
}

fn bareiss_oracle() -> Result<(), String> {
    suite(Suite::BareissOracle, 200).map(drop)
}

fn determinism() -> Result<(), String> {
    let args = ["verify", "--trials", "25", "--seed", "99"];
    let a = wrm(&args);
    let b = wrm(&args);
    check(a.status.code() == Some(0), "verify did not pass")?;
    check(a.stdout == b.stdout, "text reports differ")?;
    let json = ["verify", "--trials", "25", "--seed", "99", "--out", "json"];
    check(wrm(&json).stdout == wrm(&json).stdout, "JSON reports differ")?;
    let env_run = || {
        Command::new(env!("CARGO_BIN_EXE_wrm"))
            .args(["verify", "--trials", "10"])
            .env("WRM_SEED", "4242")
            .output()
            .expect("wrm binary runs")
    };
    let (c, d) = (env_run(), env_run());
    check(c.stdout == d.stdout, "env-seeded reports differ")?;
    check(stdout(&c).contains("seed: 4242 ($WRM_SEED)"), "env seed not echoed in header")
}

fn main() {
    let criteria: [(&str, Criterion); 12] = [
        ("a=2, b=3: Toeplitz middle is I, det 1728", identity_middle_case),
        ("a=2: Toeplitz middle is the all-ones matrix", ones_middle_case),
        ("group law: 1000 trials", group_law),
        ("left and right actions: 500 trials each", actions),
        ("general factorization: 500 trials", unifying),
        ("Toeplitz factorization: 500 trials, middle Toeplitz", toeplitz_middle),
        ("weighted and geometric determinants: 500 trials each", determinant_formulas),
        ("(1,y,1) geometric determinant: 200 trials", k2_geometric),
        ("(1,y,1) arithmetic determinant: 50 trials", k2_arithmetic),
        ("diagonal middle biconditional: 200 trials", middle_diagonal),
        ("Bareiss vs cofactor: 200 trials", bareiss_oracle),
        ("determinism: byte-identical verify reports", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = f();
        let took = start.elapsed().as_secs_f64();
        match result {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({took:.2}s)", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {e}", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
