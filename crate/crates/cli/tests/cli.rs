use std::process::Command;

use cherednik_cli::parse::{parse_element, parse_word, print_word};
use cherednik_cli::{exit, run};
use cherednik_core::rep::{act_word, Gen, PolyRepElement, Word};
use cherednik_core::Setting;
use proptest::prelude::*;

fn cli(args: &[&str]) -> cherednik_cli::Outcome {
    run(std::iter::once("cherednik").chain(args.iter().copied()))
}

fn eval(args: &[&str]) -> String {
    let out = cli(&[&["eval"], args].concat());
    assert_eq!(out.code, exit::PASS, "{}", out.stderr);
    out.stdout.trim_end().to_string()
}

#[test]
fn eval_examples() {
    assert_eq!(eval(&["tau", "U1"]), "U2 - h");
    assert_eq!(eval(&["u1*u2", "1"]), "U1*U2");
    // στ·1 = U_1 - p(ζ^{-1}T_1) + ħ, with p expanded into T-monomials
    let st = Setting::new(2, 1, 2).unwrap();
    let got = parse_element(&eval(&["sig*tau", "1"]), &st).unwrap();
    let word = Word::of(&[Gen::Sigma, Gen::Tau]);
    assert_eq!(got, act_word(&st, &word, &PolyRepElement::one(st.field)).unwrap());
    assert!(eval(&["sig*tau", "1"]).starts_with("U1 + "));
}

#[test]
fn usage_errors_exit_2() {
    let out = cli(&["eval", "s5", "U1"]);
    assert_eq!(out.code, exit::USAGE);
    assert!(out.stderr.contains("line 1, column 1"), "{}", out.stderr);
    assert_eq!(cli(&["verify", "relations", "--l", "2", "--p", "3"]).code, exit::USAGE);
    assert_eq!(cli(&["verify", "nonsense"]).code, exit::USAGE);
    assert_eq!(cli(&["verify", "psph", "--mutation", "no-such-rule"]).code, exit::USAGE);
    // T_1 alone is outside the p = 2 subring
    assert_eq!(cli(&["eval", "u1", "T1", "--p", "2"]).code, exit::USAGE);
}

#[test]
fn failing_suite_exits_1() {
    let out = cli(&["verify", "relations", "--l", "2", "--p", "2", "--degree", "1", "--mutation", "tau-wrong-sign"]);
    assert_eq!(out.code, exit::FAILURE, "{}", out.stdout);
    assert!(out.stdout.contains("FAIL"));
    assert!(out.stdout.contains("input:"));
}

#[test]
fn clifford_reports_four_simples() {
    let out = cli(&["verify", "clifford", "--l", "2", "--p", "2", "--n", "2"]);
    assert_eq!(out.code, exit::PASS, "{}", out.stdout);
    let line = out.stdout.lines().find(|l| l.contains("clifford.g222.category_o")).unwrap();
    assert!(line.contains("[4 simples"), "{line}");
}

#[test]
fn pcyclic_passes() {
    let out = cli(&["verify", "pcyclic", "--l", "4", "--p", "2"]);
    assert_eq!(out.code, exit::PASS, "{}", out.stdout);
}

fn strip_elapsed(json: &str) -> serde_json::Value {
    let mut v: serde_json::Value = serde_json::from_str(json).unwrap();
    for c in v["checks"].as_array_mut().unwrap() {
        c.as_object_mut().unwrap().remove("elapsed_ms");
    }
    v
}

#[test]
fn json_reports_are_deterministic() {
    let args = ["verify", "galois", "--l", "2", "--p", "2", "--samples", "4", "--seed", "11", "--format", "json"];
    let (a, b) = (cli(&args), cli(&args));
    assert_eq!(a.code, exit::PASS);
    assert_eq!(strip_elapsed(&a.stdout), strip_elapsed(&b.stdout));
    // byte-identical once the timings are blanked
    let blank = |s: &str| s.lines().filter(|l| !l.contains("\"elapsed_ms\"")).collect::<Vec<_>>().join("\n");
    assert_eq!(blank(&a.stdout), blank(&b.stdout));

    let v = strip_elapsed(&a.stdout);
    assert_eq!(v["tool"], "cherednik");
    assert_eq!(v["config"]["suite"], "galois");
    assert_eq!(v["config"]["seed"], 11);
    let ids: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    // field order inside each check is fixed
    let first = &a.stdout[a.stdout.find("\"checks\"").unwrap()..];
    let pos: Vec<usize> = ["\"id\"", "\"status\"", "\"counterexample\"", "\"elapsed_ms\"", "\"note\""]
        .iter()
        .map(|k| first.find(k).unwrap())
        .collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]), "{pos:?}");
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_cherednik");
    let ok = Command::new(bin).args(["eval", "tau", "U1"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout).trim(), "U2 - h");
    let bad = Command::new(bin).args(["eval", "tau", "U1 +"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let fail = Command::new(bin)
        .args(["verify", "psph", "--l", "2", "--p", "2", "--degree", "1", "--mutation", "sigma-no-hbar"])
        .output()
        .unwrap();
    assert_eq!(fail.status.code(), Some(1));
}

fn gen_strategy(n: usize) -> impl Strategy<Value = Gen> {
    prop_oneof![
        (1..=n).prop_map(Gen::T),
        (1..=n).prop_map(Gen::U),
        (1..n).prop_map(Gen::Swap),
        Just(Gen::Sigma),
        Just(Gen::Tau),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn word_print_parse_round_trip(gens in prop::collection::vec(gen_strategy(3), 0..8)) {
        let w = Word(gens);
        prop_assert_eq!(parse_word(&print_word(&w), 3).unwrap(), w);
    }

    #[test]
    fn element_text_round_trip(gens in prop::collection::vec(gen_strategy(2), 0..4), a in 0u32..3) {
        // outputs of the action print in a form the element parser reads back
        let st = Setting::new(2, 1, 2).unwrap();
        let f = PolyRepElement::from_poly(st.u(1).pow(a));
        let out = act_word(&st, &Word(gens), &f).unwrap();
        prop_assert_eq!(parse_element(&out.to_text(&st), &st).unwrap(), out);
    }
}
