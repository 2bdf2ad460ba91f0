use std::process::{Command, Output};

const UNIT_PLUS_FREE: &str = r#"{"n":1,"degrees":[0,0,0],"components":[{"unit":true},{"gens":[]},{"gens":[]}]}"#;
const SHIFTED_PAIR: &str = r#"{"n":2,"degrees":[-1,-1,0],"components":[{"gens":[]},{"gens":[]},{"unit":true}]}"#;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gotzmann")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim().to_string()
}

fn json(args: &[&str]) -> serde_json::Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn transforms() {
    assert_eq!(stdout(&["macaulay-transform", "4", "1"]), "10");
    assert_eq!(stdout(&["green-transform", "4", "1"]), "3");
    let rep = json(&["macaulay-rep", "10", "3"]);
    assert_eq!(rep["rep"]["terms"], serde_json::json!([[5, 3]]));
    assert_eq!(run(&["macaulay-transform", "4", "0"]).status.code(), Some(2));
}

#[test]
fn gotzmann_numbers() {
    assert_eq!(stdout(&["gotzmann-number", "--poly", r#"{"coeffs":["2","2"]}"#]), "3");
    let g = json(&["gotzmann-rep", "--poly", r#"{"coeffs":["6","5","1"]}"#]);
    assert_eq!(g["s"], 16);
    let adj = json(&["adjusted-rep", "--poly", r#"{"coeffs":["6","5","1"]}"#, "--module", SHIFTED_PAIR, "--rank", "2"]);
    assert_eq!(adj["adjusted_number"], 2);
    assert_eq!(adj["q"], serde_json::json!([1, 0]));
    // binomial-term input: 2 C(d+3, 2)
    let terms = r#"{"terms":[{"a":2,"shift":3,"mult":2}]}"#;
    assert_eq!(stdout(&["gotzmann-number", "--poly", terms]), "16");
}

#[test]
fn quot_dims_example() {
    let v = json(&[
        "quot-dims",
        "--poly",
        r#"{"coeffs":["4","3"]}"#,
        "--module-shape",
        r#"{"n":1,"degrees":[0,0,0,0,0]}"#,
        "--rank",
        "3",
        "--mode",
        "adjusted",
    ]);
    assert_eq!((v["s"].clone(), v["grass_dim"].clone()), (1.into(), 21.into()));
}

#[test]
fn module_commands() {
    let h = json(&["hilbert", "--module", UNIT_PLUS_FREE, "--function", "0", "2"]);
    assert_eq!(h["values"], serde_json::json!([[0, 2], [1, 4], [2, 6]]));
    let p = json(&["hilbert", "--module", SHIFTED_PAIR, "--polynomial"]);
    assert_eq!(p["display"], "d^2 + 5*d + 6");
    assert_eq!(stdout(&["rank", "--module", UNIT_PLUS_FREE]), "2");
    let rho = json(&["rho", "--module", SHIFTED_PAIR, "--degree", "0"]);
    assert_eq!((rho["free_part"].clone(), rho["rho"].clone()), (4.into(), 2.into()));
    assert_eq!(stdout(&["regularity", "--module", UNIT_PLUS_FREE]), "0");
    let b = json(&["betti", "--module", r#"{"n":2,"degrees":[0],"components":[{"gens":["x0^2","x0*x1"]}]}"#]);
    assert_eq!(b["betti"], serde_json::json!([[0, 0, 1], [1, 2, 2], [2, 3, 1]]));
    let l = json(&["lex-ideal", "--gotzmann", r#"{"a":[1,0]}"#, "--n", "2"]);
    assert_eq!(l["gens"], serde_json::json!(["x0^2", "x0*x1"]));
}

#[test]
fn checks_and_exit_codes() {
    let out = stdout(&["check", "macaulay", "--module", UNIT_PLUS_FREE, "--degree", "1", "--to", "3"]);
    assert_eq!(out.lines().count(), 3);
    for line in out.lines() {
        let r: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(r["verdict"], "sharp");
    }
    let out = stdout(&["check", "green", "--module", UNIT_PLUS_FREE, "--degree", "2"]);
    assert!(out.contains(r#""bound_lhs":2"#));
    let chern = json(&[
        "check",
        "chern",
        "--poly",
        r#"{"terms":[{"a":3,"shift":3,"mult":2},{"a":3,"shift":1,"mult":-1}]}"#,
        "--module-shape",
        r#"{"n":3,"degrees":[0,0]}"#,
        "--rank",
        "1",
    ]);
    assert_eq!((chern["c1"].clone(), chern["c2"].clone(), chern["sharp"].clone()), (2.into(), 4.into(), true.into()));
    // parse errors name the field
    let bad = run(&["hilbert", "--module", r#"{"n":1,"degrees":[1,0],"components":[{},{}]}"#, "--series"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("degrees"));
    let missing = run(&["saturate", "--module", "/nonexistent/module.json"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn text_and_json_agree() {
    let j = json(&["--json", "rho", "--module", SHIFTED_PAIR, "--degree", "1"]);
    let t = stdout(&["--text", "rho", "--module", SHIFTED_PAIR, "--degree", "1"]);
    for (k, v) in j.as_object().unwrap() {
        assert!(t.contains(&format!("{k}: {v}")), "{t}");
    }
    assert_eq!(stdout(&["--text", "macaulay-transform", "4", "1"]), "10");
}

#[test]
fn deterministic_given_seed() {
    let a = stdout(&["--seed", "5", "check", "sweep", "--instances", "3", "--width", "3"]);
    let b = stdout(&["--seed", "5", "check", "sweep", "--instances", "3", "--width", "3"]);
    assert_eq!(a, b);
}
