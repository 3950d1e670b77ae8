use std::path::PathBuf;
use std::process::{Command, Output};

use scf_hopf::io::{parse_element, parse_square, Base};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scf-hopf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn c4_file() -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../theories/c4.json");
    p.to_str().unwrap().to_string()
}

const EMPTY_WORD: &str = r#"{"degree":1,"terms":[{"word":[],"coeff":"1"}]}"#;

#[test]
fn axioms_pass_in_the_trivial_context() {
    let out = run(&[
        "--base",
        "twodim",
        "--q",
        "3",
        "--iota",
        "one",
        "--alpha",
        "one",
        "--beta",
        "one",
        "verify",
        "--suite",
        "axioms",
        "--max-degree",
        "5",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let report = json(&out);
    let checks = report["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 6);
    assert!(checks.iter().all(|c| c["passed"] == true));
}

#[test]
fn invalid_triple_exits_3() {
    let out = run(&["--iota", "reg", "--alpha", "reg", "--beta", "one", "verify"]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("⟨ι,α⟩ = 3 ≠ 1"));
}

#[test]
fn antipode_equivalence_reports_summand_counts() {
    let out = run(&["verify", "--suite", "antipode_equiv", "--max-degree", "4"]);
    assert_eq!(code(&out), 0);
    let report = json(&out);
    let agree = &report["checks"][0];
    assert_eq!(agree["name"], "antipode_formulas_agree");
    for n in 1..=4u32 {
        assert_eq!(
            agree["details"]["toggle_free_summands"][n.to_string()],
            3u64.pow(n - 1)
        );
    }
}

#[test]
fn enumerations() {
    let out = run(&["enumerate", "toggle_free", "--n", "3"]);
    assert_eq!(json(&out).as_array().unwrap().len(), 9);
    let out = run(&["enumerate", "compositions", "--n", "4"]);
    assert_eq!(json(&out).as_array().unwrap().len(), 8);
    let out = run(&["enumerate", "descent_class", "--mu", "2,1"]);
    assert_eq!(json(&out), serde_json::json!([[1, 3, 2], [3, 1, 2]]));
    let out = run(&["enumerate", "descent_class", "--mu", "4,4"]);
    assert_eq!(code(&out), 2);
    let out = run(&["enumerate", "toggle_free", "--n", "40"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn compute_examples() {
    // ι = 𝟙: the product of two degree-2 words is a single word (a, 𝟙, b)
    let a = r#"{"degree":2,"terms":[{"word":["regm1"],"coeff":"1"}]}"#;
    let b = r#"{"degree":2,"terms":[{"word":["one"],"coeff":"1"}]}"#;
    let out = run(&["compute", "multiply", a, b]);
    assert_eq!(code(&out), 0);
    let base = Base::two_dim(3).unwrap();
    let x = parse_element(&base, &stdout(&out)).unwrap();
    assert_eq!(x.terms().len(), 1);
    assert_eq!(x.coeff(&[1, 0, 0]), scf_hopf::scalar::int(1));

    let out = run(&["compute", "antipode", EMPTY_WORD, "--cross-check"]);
    assert_eq!(code(&out), 0);
    let s = parse_element(&base, &stdout(&out)).unwrap();
    assert_eq!(s.coeff(&[]), scf_hopf::scalar::int(-1));

    let out = run(&["compute", "coproduct", b]);
    let d = parse_square(&base, &stdout(&out)).unwrap();
    // four subsets of {1, 2}; the two singletons collect into 2 χ^() ⊗ χ^()
    let total: scf_hopf::Scalar = d.terms().values().cloned().sum();
    assert_eq!(total, scf_hopf::scalar::int(4));
}

#[test]
fn output_is_deterministic_and_round_trips() {
    let args = [
        "--iota",
        "reg",
        "--beta",
        "beta_star",
        "compute",
        "antipode",
        r#"{"degree":3,"terms":[{"word":["one","regm1"],"coeff":"2/3"}]}"#,
    ];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
    let base = Base::two_dim(3).unwrap();
    let x = parse_element(&base, &stdout(&first)).unwrap();
    let again = scf_hopf::io::element_to_json(&base, &x);
    assert_eq!(again, json(&first));
}

#[test]
fn parse_errors_exit_2() {
    assert_eq!(code(&run(&["compute", "antipode", "not json"])), 2);
    assert_eq!(code(&run(&["--iota", "one * reg", "verify"])), 2);
    assert_eq!(
        code(&run(&[
            "--q",
            "4",
            "compute",
            "antipode",
            r#"{"q":3,"degree":1,"terms":[]}"#
        ])),
        2
    );
    assert_eq!(code(&run(&["verify", "--suite", "bogus"])), 2);
}

#[test]
fn theory_file_and_out() {
    let dir = std::env::temp_dir().join(format!("scf-hopf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = run(&[
        "--theory-file",
        &c4_file(),
        "--iota",
        "reg",
        "--beta",
        "(reg - one)/3",
        "--max-degree",
        "3",
        "--seed",
        "11",
        "--out",
        path.to_str().unwrap(),
        "verify",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let names: Vec<&str> = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(names.contains(&"random_spot_checks"));
    assert!(
        !names.contains(&"h_coproduct"),
        "NSym checks need a two-dimensional base"
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn characters() {
    let out = run(&["characters", "check", "--constant", "2*one"]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["checks"][0]["passed"], false);
    let out = run(&["characters", "check", "--constant", "reg"]);
    assert_eq!(code(&out), 0);
    let inv = run(&[
        "characters",
        "invert",
        "--constant",
        "one",
        "--max-degree",
        "3",
    ]);
    assert_eq!(code(&inv), 0);
    let inv_text = stdout(&inv);
    let out = run(&[
        "characters",
        "convolve",
        "--constant",
        "one",
        "--max-degree",
        "3",
        &inv_text,
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let comps = json(&out)["components"].as_array().unwrap().clone();
    assert_eq!(comps.len(), 4);
    assert!(comps[1..]
        .iter()
        .all(|c| c["terms"].as_array().unwrap().is_empty()));
    assert_eq!(
        code(&run(&["characters", "invert", "--constant", "2*one"])),
        2
    );
}
