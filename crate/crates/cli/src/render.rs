//! Text and JSON rendering. JSON field names and order are fixed, and
//! checks are sorted by id, so equal configurations give byte-identical
//! reports apart from `elapsed_ms`.

use std::fmt::Write as _;

use serde::Serialize;

use cherednik_core::rep::Word;
use cherednik_core::report::{CheckResult, Report};
use cherednik_core::Mutation;

use crate::{RunConfig, SuiteKind, TOOL};

#[derive(Serialize)]
struct JsonConfig<'a> {
    suite: SuiteKind,
    #[serde(flatten)]
    run: &'a RunConfig,
    mutation: Option<&'static str>,
}

#[derive(Serialize)]
struct JsonCounterexample<'a> {
    input: &'a str,
    lhs: &'a str,
    rhs: &'a str,
}

#[derive(Serialize)]
struct JsonCheck<'a> {
    id: &'a str,
    status: &'static str,
    counterexample: Option<JsonCounterexample<'a>>,
    elapsed_ms: u128,
    note: Option<&'a str>,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    tool: &'static str,
    version: &'static str,
    config: JsonConfig<'a>,
    checks: Vec<JsonCheck<'a>>,
}

fn sorted(report: &Report) -> Vec<&CheckResult> {
    let mut checks: Vec<&CheckResult> = report.checks.iter().collect();
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    checks
}

pub fn report_json(kind: SuiteKind, cfg: &RunConfig, mutation: Option<Mutation>, report: &Report) -> String {
    let doc = JsonReport {
        tool: TOOL,
        version: env!("CARGO_PKG_VERSION"),
        config: JsonConfig { suite: kind, run: cfg, mutation: mutation.map(|m| m.name()) },
        checks: sorted(report)
            .into_iter()
            .map(|c| JsonCheck {
                id: &c.id,
                status: c.status.as_str(),
                counterexample: c.counterexample.as_ref().map(|x| JsonCounterexample {
                    input: &x.input,
                    lhs: &x.lhs,
                    rhs: &x.rhs,
                }),
                elapsed_ms: c.elapsed_ms,
                note: c.note.as_deref(),
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
    s.push('\n');
    s
}

pub fn report_text(kind: SuiteKind, cfg: &RunConfig, mutation: Option<Mutation>, report: &Report) -> String {
    let suite = serde_json::to_value(kind).expect("serializes");
    let mut out = format!(
        "{TOOL} verify {} l={} p={} n={} degree={} samples={} seed={}",
        suite.as_str().unwrap_or_default(),
        cfg.l,
        cfg.p,
        cfg.n,
        cfg.degree,
        cfg.samples,
        cfg.seed
    );
    if let Some(m) = mutation {
        let _ = write!(out, " mutation={}", m.name());
    }
    out.push('\n');
    let checks = sorted(report);
    for c in &checks {
        let _ = write!(out, "{:<7} {} ({} ms)", c.status.as_str().to_uppercase(), c.id, c.elapsed_ms);
        if let Some(note) = &c.note {
            let _ = write!(out, "  [{note}]");
        }
        out.push('\n');
        if let Some(x) = &c.counterexample {
            let _ = writeln!(out, "    input: {}\n    lhs:   {}\n    rhs:   {}", x.input, x.lhs, x.rhs);
        }
    }
    let failed = report.failures().count();
    let _ = writeln!(out, "{} checks, {} failed", checks.len(), failed);
    out
}

#[derive(Serialize)]
struct JsonEval<'a> {
    tool: &'static str,
    version: &'static str,
    config: &'a RunConfig,
    word: String,
    input: &'a str,
    output: &'a str,
}

pub fn eval_json(cfg: &RunConfig, word: &Word, input: &str, output: &str) -> String {
    let doc = JsonEval { tool: TOOL, version: env!("CARGO_PKG_VERSION"), config: cfg, word: word.to_string(), input, output };
    let mut s = serde_json::to_string_pretty(&doc).expect("serializes");
    s.push('\n');
    s
}
