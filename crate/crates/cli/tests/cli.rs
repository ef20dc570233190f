use std::process::{Command, Output};

use serde_json::Value;

fn wrm(args: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wrm"))
        .args(args.split_whitespace())
        .env_remove("WRM_SEED")
        .output()
        .expect("wrm binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn out(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn err(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&out(o)).expect("valid JSON")
}

const PASCAL: &str = "--params 1,0,1 --alpha const:1 --beta const:1";

#[test]
fn gen_formats() {
    let csv = wrm(&format!("gen {PASCAL} --n 3 --out csv"));
    assert_eq!((code(&csv), out(&csv).as_str()), (0, "1,1,1\n1,2,3\n1,3,6\n"));

    let j = json(&wrm(&format!("gen {PASCAL} --n 2")));
    assert_eq!(j, serde_json::json!([["1", "1"], ["1", "2"]]));

    let tex = out(&wrm("gen --params 1/2,0,1 --alpha const:1 --beta const:1 --n 2 --out latex"));
    assert!(tex.starts_with("\\begin{pmatrix}"));
    assert!(tex.contains("\\frac{3}{2}"), "{tex}");
}

#[test]
fn factor_toeplitz_on_pascal_gives_identity() {
    let o = wrm(&format!("factor --mode toeplitz {PASCAL} --n 3"));
    assert_eq!(code(&o), 0);
    let doc = json(&o);
    assert_eq!(doc["verified"], true);
    assert_eq!(doc["middle"], serde_json::json!([["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]));
    assert_eq!(doc["mode"], "toeplitz");
    assert_eq!(doc["n"], 3);
}

#[test]
fn factor_modes_and_formats() {
    for mode in ["unifying", "toeplitz", "tan", "mp"] {
        let o = wrm(&format!("factor --mode {mode} {PASCAL} --n 4"));
        assert_eq!(code(&o), 0, "{mode}: {}", err(&o));
    }
    let o = wrm("factor --mode unifying --params 1,-1,1 --alpha list:1,2,3 --beta list:1,0,5 --n 3 --rsvw 2,1/3,-1,4");
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["verified"], true);

    let csv = out(&wrm(&format!("factor {PASCAL} --n 2 --out csv")));
    assert!(csv.contains("# middle\n1,0\n0,1\n"), "{csv}");
    assert!(csv.ends_with("# verified: true\n"));
    let tex = out(&wrm(&format!("factor {PASCAL} --n 2 --out latex")));
    assert_eq!(tex.matches("\\begin{pmatrix}").count(), 4);
}

#[test]
fn hypothesis_violations_exit_2() {
    // y + xz = 0
    let o = wrm("factor --mode toeplitz --params 1,-1,1 --alpha const:1 --beta const:1 --n 3");
    assert_eq!(code(&o), 2);
    assert!(err(&o).contains("--mode unifying"));
    // rv = 0
    let o = wrm(&format!("factor --mode unifying {PASCAL} --n 3 --rsvw 0,1,1,1"));
    assert_eq!(code(&o), 2);
    // default r,s,v,w with y + xz = 0
    let o = wrm("factor --mode unifying --params 1,-1,1 --alpha const:1 --beta const:1 --n 3");
    assert_eq!(code(&o), 2);
    assert!(err(&o).contains("--rsvw"));
    // mp needs (1,0,1)
    assert_eq!(code(&wrm("factor --mode mp --params 1,1,1 --alpha const:1 --beta const:1 --n 3")), 2);
    // tan needs xz != 0
    assert_eq!(code(&wrm("factor --mode tan --params 0,1,1 --alpha const:1 --beta const:1 --n 3")), 2);
    // alpha_0 != beta_0
    assert_eq!(code(&wrm("gen --params 1,0,1 --alpha const:1 --beta const:2 --n 3")), 2);
    // y = -1 in the (1,y,1) geometric family
    assert_eq!(code(&wrm("det --method closed --params 1,-1,1 --alpha geom:1,2 --beta geom:1,3 --n 3")), 2);
    // group element with v = 0
    assert_eq!(code(&wrm("act --side left --g 0,1 --desc 1,0,1;const:1;const:1 --n 3")), 2);
}

#[test]
fn parse_errors_exit_1() {
    for line in [
        "gen --params 1,0 --alpha const:1 --beta const:1 --n 3",
        "gen --params 1,0,1 --alpha cnst:1 --beta const:1 --n 3",
        "gen --params 1,0,1 --alpha const:1/0 --beta const:1 --n 3",
        "gen --params 1,0,1 --alpha const:1 --beta const:1 --n 0",
        "gen --params 1,0,1 --alpha list:1,2 --beta const:1 --n 3",
        "act --side left --g 1 --desc 1,0,1;const:1;const:1 --n 3",
        "act --side up --g 1,0 --desc 1,0,1;const:1;const:1 --n 3",
        "verify --trials 0",
        "frobnicate",
    ] {
        assert_eq!(code(&wrm(line)), 1, "{line}");
    }
}

#[test]
fn help_and_version_exit_0() {
    assert_eq!(code(&wrm("--help")), 0);
    assert_eq!(code(&wrm("--version")), 0);
}

#[test]
fn det_methods() {
    let o = wrm("det --method eq11 --params 1,1,1 --alpha const:1 --beta const:1 --n 4");
    assert_eq!(out(&o), "64\n");
    let o = wrm("det --params 1,1,1 --alpha const:1 --beta const:1 --n 4");
    assert_eq!(out(&o), "64\n");
    let r = json(&wrm("det --method eq11 --report json --params 1,1,1 --alpha const:1 --beta const:1 --n 4"));
    assert_eq!(r, serde_json::json!({"n": 4, "closed_form": "64", "bareiss": "64", "agrees": true, "formula_name": "eq11"}));

    // odd order (1,y,1) arithmetic: no closed form, Bareiss still answers
    let odd = "--params 1,2,1 --alpha arith:0,1 --beta arith:0,-1 --n 3";
    assert_eq!(code(&wrm(&format!("det --method closed {odd}"))), 2);
    assert_eq!(code(&wrm(&format!("det --method bareiss {odd}"))), 0);
    let even = json(&wrm("det --method closed --report json --params 1,2,1 --alpha arith:0,1 --beta arith:0,-1 --n 4"));
    assert_eq!(even["formula_name"], "k2-arithmetic");
    assert_eq!(even["agrees"], true);
}

#[test]
fn act_matches_explicit_product() {
    for side in ["left", "right"] {
        for kind in ["action", "mul"] {
            let o = wrm(&format!(
                "act --side {side} --kind {kind} --g 2/3,-5 --desc 3,-1/2,2;list:1,4,-2,7;geom:1,3 --n 4 --check"
            ));
            assert_eq!(code(&o), 0, "{side} {kind}: {}", err(&o));
            let doc = json(&o);
            assert_eq!(doc["verified"], true);
            // the printed spec round-trips through --desc
            let spec = doc["result_spec"].as_str().unwrap();
            let again = wrm(&format!("act --side left --g 1,0 --desc {spec} --n 4"));
            assert_eq!(json(&again)["result"], doc["result"]);
        }
    }
}

#[test]
fn left_action_by_identity_is_trivial() {
    let doc = json(&wrm("act --side left --g 1,0 --desc 2,3,5;const:1;const:1 --n 3"));
    assert_eq!(doc["input"], doc["result"]);
}

#[test]
fn verify_header_and_replay() {
    let o = wrm("verify --trials 3 --seed 5 --suite unifying --suite eq11");
    assert_eq!(code(&o), 0);
    let text = out(&o);
    assert!(text.contains("seed: 5 (--seed)"));
    assert!(text.contains("summary: 2/2 suites passed"));
    let default = out(&wrm("verify --trials 1 --suite eq11"));
    assert!(default.contains("(default)"));

    let o = wrm("verify --suite geometric --trial-seed 77 --trial 3");
    assert_eq!(code(&o), 0);
    assert!(out(&o).starts_with("suite=geometric trial=3 trial-seed=77"));

    let doc = json(&wrm("verify --trials 2 --seed 1 --suite sequences --out json"));
    assert_eq!(doc["suites"][0]["suite"], "sequences");
    assert_eq!(doc["suites"][0]["passed"], 2);
}
