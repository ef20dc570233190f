//! Subcommand dispatch. Everything is rendered into an [`Outcome`] so the
//! binary only prints and exits.

use serde_json::json;

use wrm_core::determinants::{det_via_eq11, report_closed_form, report_eq11};
use wrm_core::factorization::{
    mp_factorization, tan_factorization, toeplitz_factorization, unifying_factorization,
    Factorization,
};
use wrm_core::group::{group_action_left, group_action_right, left_mul_descriptor, right_mul_descriptor};
use wrm_core::{DetReport, GroupElement, Matrix, Rational, WrmDescriptor, WrmError, WrmSpec};

use crate::args::{
    ActArgs, ActKind, Cli, Command, DetArgs, DetMethod, FactorArgs, FactorMode, GenArgs, OutFormat,
    Side, VerifyArgs, VerifyFormat, WrmArgs,
};
use crate::sample::DEFAULT_SEED;
use crate::verify::{run_all, run_trial, Bounds, Suite};

pub const EXIT_OK: u8 = 0;
pub const EXIT_PARSE: u8 = 1;
pub const EXIT_HYPOTHESIS: u8 = 2;
pub const EXIT_VERIFY: u8 = 3;

/// Environment variable that overrides the default `verify` seed.
pub const SEED_ENV: &str = "WRM_SEED";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: EXIT_OK }
    }

    fn with_code(stdout: String, code: u8) -> Self {
        Outcome { stdout, stderr: String::new(), code }
    }

    fn error(e: &WrmError, hint: Option<&str>) -> Self {
        let mut stderr = format!("error: {e}\n");
        if let Some(h) = hint {
            stderr.push_str(&format!("hint: {h}\n"));
        }
        Outcome { stdout: String::new(), stderr, code: exit_code_for(e) }
    }
}

pub fn exit_code_for(e: &WrmError) -> u8 {
    if e.is_hypothesis_violation() {
        EXIT_HYPOTHESIS
    } else {
        EXIT_PARSE
    }
}

pub fn run(cli: &Cli) -> Outcome {
    run_with_env(cli, |k| std::env::var(k).ok())
}

pub fn run_with_env(cli: &Cli, env: impl Fn(&str) -> Option<String>) -> Outcome {
    match &cli.command {
        Command::Gen(a) => gen(a),
        Command::Factor(a) => factor(a),
        Command::Det(a) => det(a),
        Command::Act(a) => act(a),
        Command::Verify(a) => verify(a, env),
    }
}

fn descriptor(w: &WrmArgs) -> Result<WrmDescriptor, WrmError> {
    WrmDescriptor::from_specs(w.params.clone(), &w.alpha, &w.beta, w.n as usize)
}

fn render(m: &Matrix, out: OutFormat) -> String {
    match out {
        OutFormat::Json => m.to_json() + "\n",
        OutFormat::Csv => m.to_csv(),
        OutFormat::Latex => m.to_latex() + "\n",
    }
}

fn gen(a: &GenArgs) -> Outcome {
    match descriptor(&a.wrm) {
        Ok(d) => Outcome::ok(render(&d.build(), a.out)),
        Err(e) => Outcome::error(&e, None),
    }
}

fn factor(a: &FactorArgs) -> Outcome {
    let d = match descriptor(&a.wrm) {
        Ok(d) => d,
        Err(e) => return Outcome::error(&e, None),
    };
    let p = &d.params;
    let rsvw = a
        .rsvw
        .clone()
        .unwrap_or_else(|| [Rational::one(), p.z.clone(), p.weight(), p.x.clone()]);
    let result = match a.mode {
        FactorMode::Unifying => {
            let [r, s, v, w] = &rsvw;
            unifying_factorization(&d, r, s, v, w).map_err(|e| {
                let hint = a.rsvw.is_none().then_some(
                    "the default r,s,v,w = 1,z,y+xz,x needs y+xz != 0; pass --rsvw with r*v != 0",
                );
                (e, hint)
            })
        }
        FactorMode::Toeplitz => toeplitz_factorization(&d)
            .map_err(|e| (e, Some("y+xz = 0 here; try `factor --mode unifying --rsvw r,s,v,w`"))),
        FactorMode::Tan => tan_factorization(&d).map_err(|e| (e, None)),
        FactorMode::Mp => mp_factorization(&d).map_err(|e| (e, None)),
    };
    let f = match result {
        Ok(f) => f,
        Err((e, hint)) => return Outcome::error(&e, hint),
    };
    let verified = f.verify();
    let text = match a.out {
        OutFormat::Json => factor_json(a.mode, &f, verified),
        OutFormat::Csv => format!(
            "# left\n{}# middle\n{}# right\n{}# verified: {verified}\n",
            f.left.to_csv(),
            f.middle.to_csv(),
            f.right.to_csv()
        ),
        OutFormat::Latex => format!(
            "{}\n{}\n{}\n= {}\n% verified: {verified}\n",
            f.left.to_latex(),
            f.middle.to_latex(),
            f.right.to_latex(),
            f.product().to_latex()
        ),
    };
    Outcome::with_code(text, if verified { EXIT_OK } else { EXIT_VERIFY })
}

fn factor_json(mode: FactorMode, f: &Factorization, verified: bool) -> String {
    let mode = match mode {
        FactorMode::Unifying => "unifying",
        FactorMode::Toeplitz => "toeplitz",
        FactorMode::Tan => "tan",
        FactorMode::Mp => "mp",
    };
    let doc = json!({
        "mode": mode,
        "n": f.claimed.n(),
        "verified": verified,
        "claimed": f.claimed,
        "middle_descriptor": f.middle_descriptor,
        "left": f.left,
        "middle": f.middle,
        "right": f.right,
    });
    serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
}

fn det(a: &DetArgs) -> Outcome {
    let d = match descriptor(&a.wrm) {
        Ok(d) => d,
        Err(e) => return Outcome::error(&e, None),
    };
    let report = match a.method {
        DetMethod::Bareiss => {
            let v = d.build().det_bareiss();
            Ok(DetReport::new("bareiss", d.n(), v.clone(), v))
        }
        DetMethod::Eq11 if a.report.is_none() => {
            return match det_via_eq11(&d) {
                Ok(v) => Outcome::ok(format!("{v}\n")),
                Err(e) => Outcome::error(&e, Some("y+xz = 0 here; use --method bareiss")),
            };
        }
        DetMethod::Eq11 => report_eq11(&d),
        DetMethod::Closed => report_closed_form(&d),
    };
    let report = match report {
        Ok(r) => r,
        Err(e) => {
            return Outcome::error(
                &e,
                Some("closed forms cover geometric boundaries and the (1,y,1) families; use --method bareiss"),
            )
        }
    };
    let code = if report.agrees { EXIT_OK } else { EXIT_VERIFY };
    let text = match a.report {
        Some(_) => serde_json::to_string_pretty(&report).expect("serializable") + "\n",
        None => format!("{}\n", report.closed_form),
    };
    Outcome::with_code(text, code)
}

fn act(a: &ActArgs) -> Outcome {
    let [v, w] = a.g.clone();
    let g = match GroupElement::new(v, w) {
        Ok(g) => g,
        Err(e) => return Outcome::error(&e, None),
    };
    let n = a.n as usize;
    let d = match a.desc.descriptor(n) {
        Ok(d) => d,
        Err(e) => return Outcome::error(&e, None),
    };
    let (result, operator) = match (a.side, a.kind) {
        (Side::Left, ActKind::Action) => (group_action_left(&g, &d), g.inverse().to_matrix(n)),
        (Side::Left, ActKind::Mul) => (left_mul_descriptor(&g, &d), g.to_matrix(n)),
        (Side::Right, ActKind::Action) => (group_action_right(&g, &d), g.to_matrix(n)),
        (Side::Right, ActKind::Mul) => (right_mul_descriptor(&g, &d), g.to_matrix(n)),
    };
    let operator = operator.expect("n >= 1");
    let result_spec = WrmSpec {
        params: result.params.clone(),
        alpha: result.boundary.alpha().to_spec(),
        beta: result.boundary.beta().to_spec(),
    };
    let mut doc = json!({
        "side": match a.side { Side::Left => "left", Side::Right => "right" },
        "kind": match a.kind { ActKind::Action => "action", ActKind::Mul => "mul" },
        "g": g.to_string(),
        "n": n,
        "input": d,
        "result": result,
        "result_spec": result_spec.to_string(),
    });
    let mut code = EXIT_OK;
    if a.check {
        let p = d.build();
        let explicit = match a.side {
            Side::Left => operator.mul(&p),
            Side::Right => p.mul(&operator.transpose()),
        }
        .expect("same order");
        let verified = explicit == result.build();
        doc["verified"] = json!(verified);
        if !verified {
            code = EXIT_VERIFY;
        }
    }
    Outcome::with_code(serde_json::to_string_pretty(&doc).expect("serializable") + "\n", code)
}

/// Resolves the master seed: flag, then environment, then the built-in default.
pub fn resolve_seed(flag: Option<u64>, env: impl Fn(&str) -> Option<String>) -> Result<(u64, String), String> {
    if let Some(s) = flag {
        return Ok((s, "--seed".into()));
    }
    match env(SEED_ENV) {
        Some(raw) => raw
            .trim()
            .parse()
            .map(|s| (s, format!("${SEED_ENV}")))
            .map_err(|_| format!("${SEED_ENV} is not a 64-bit unsigned integer: {raw:?}")),
        None => Ok((DEFAULT_SEED, "default".into())),
    }
}

fn verify(a: &VerifyArgs, env: impl Fn(&str) -> Option<String>) -> Outcome {
    let bounds = Bounds { num_bound: a.num_bound, den_bound: a.den_bound };
    let suites: Vec<Suite> = if a.suites.is_empty() { Suite::ALL.to_vec() } else { a.suites.clone() };

    if let Some(seed) = a.trial_seed {
        let mut out = String::new();
        let mut code = EXIT_OK;
        for suite in suites {
            let (rejected, outcome) = run_trial(suite, seed, a.trial, bounds);
            let status = match &outcome {
                Ok(()) => "PASS".to_string(),
                Err(detail) => {
                    code = EXIT_VERIFY;
                    format!("FAIL: {detail}")
                }
            };
            out.push_str(&format!(
                "suite={} trial={} trial-seed={seed} rejected={rejected}: {status}\n",
                suite.name(),
                a.trial
            ));
        }
        return Outcome::with_code(out, code);
    }

    let (seed, source) = match resolve_seed(a.seed, env) {
        Ok(s) => s,
        Err(msg) => {
            return Outcome { stdout: String::new(), stderr: format!("error: {msg}\n"), code: EXIT_PARSE }
        }
    };
    let report = run_all(&suites, seed, &source, a.trials, bounds);
    let text = match a.out {
        VerifyFormat::Text => report.to_text(),
        VerifyFormat::Json => serde_json::to_string_pretty(&report).expect("serializable") + "\n",
    };
    Outcome::with_code(text, if report.ok() { EXIT_OK } else { EXIT_VERIFY })
}
