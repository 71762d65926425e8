//! Front end for `cherednik-core`: verification suites with text or JSON
//! reports, and evaluation of words on polynomial-representation elements.

pub mod parse;
pub mod render;

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cherednik_core::clifford::verify_clifford;
use cherednik_core::galois::{galois_ring_check, principality_check, skew_algebra_check};
use cherednik_core::pcyclic::verify_pcyclic;
use cherednik_core::psph::verify_psph;
use cherednik_core::rep::act_word;
use cherednik_core::rep::relations::verify_relations;
use cherednik_core::report::Report;
use cherednik_core::{CoreError, Mutation, Setting};

pub const TOOL: &str = "cherednik";

/// Process exit codes.
pub mod exit {
    pub const PASS: i32 = 0;
    pub const FAILURE: i32 = 1;
    pub const USAGE: i32 = 2;
}

#[derive(Parser, Debug)]
#[command(name = "cherednik", version, about = "Exact checks for rational Cherednik algebras of G(l,p,n)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run a verification suite and print its report.
    Verify {
        #[arg(value_enum)]
        kind: SuiteKind,
        #[command(flatten)]
        cfg: ConfigArgs,
        /// Run with one rule deliberately broken (to see the suites catch it).
        #[arg(long, value_parser = parse_mutation)]
        mutation: Option<Mutation>,
    },
    /// Apply a word to an element of the polynomial representation.
    Eval {
        /// Word, e.g. "sig*tau" or "x1 y2^2".
        expr: String,
        /// Element, e.g. "U1*T2 - 3/2 h".
        poly: String,
        #[command(flatten)]
        cfg: ConfigArgs,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteKind {
    Relations,
    Psph,
    Galois,
    Principal,
    Pcyclic,
    Clifford,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct ConfigArgs {
    #[arg(long = "l", default_value_t = 2)]
    pub ell: u32,
    #[arg(long, default_value_t = 1)]
    pub p: u32,
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    /// Bound on the U-degree of test inputs.
    #[arg(long, default_value_t = 2)]
    pub degree: u32,
    /// Number of random samples per check.
    #[arg(long, default_value_t = 20)]
    pub samples: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

fn parse_mutation(s: &str) -> Result<Mutation, String> {
    Mutation::ALL.into_iter().find(|m| m.name() == s).ok_or_else(|| {
        let names: Vec<&str> = Mutation::ALL.iter().map(|m| m.name()).collect();
        format!("unknown mutation '{s}' (expected one of: {})", names.join(", "))
    })
}

/// A validated run configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub l: u32,
    pub p: u32,
    pub n: usize,
    pub degree: u32,
    pub samples: usize,
    pub seed: u64,
    #[serde(skip)]
    pub format: Format,
}

impl RunConfig {
    pub fn new(a: &ConfigArgs) -> Result<RunConfig, String> {
        if a.ell == 0 || a.p == 0 || !a.ell.is_multiple_of(a.p) {
            return Err(format!("--p {} must divide --l {}", a.p, a.ell));
        }
        if a.n == 0 {
            return Err("--n must be positive".into());
        }
        Ok(RunConfig { l: a.ell, p: a.p, n: a.n, degree: a.degree, samples: a.samples, seed: a.seed, format: a.format })
    }

    pub fn setting(&self) -> Result<Setting, CoreError> {
        Setting::new(self.l, self.p, self.n)
    }
}

/// Dispatch a suite. Errors are configuration problems, not check failures.
pub fn run_suite(kind: SuiteKind, cfg: &RunConfig, mutation: Option<Mutation>) -> Result<Report, CoreError> {
    let st = || cfg.setting().map(|s| s.with_mutation(mutation));
    match kind {
        SuiteKind::Relations => verify_relations(&st()?, cfg.degree),
        SuiteKind::Psph => verify_psph(&st()?, cfg.degree),
        SuiteKind::Galois => {
            let st = st()?;
            let mut r = galois_ring_check(&st, cfg.samples, cfg.seed)?;
            r.extend(skew_algebra_check(&st, cfg.samples, cfg.seed));
            Ok(r)
        }
        SuiteKind::Principal => principality_check(&st()?, cfg.degree),
        SuiteKind::Pcyclic => verify_pcyclic(cfg.l, cfg.p),
        SuiteKind::Clifford => verify_clifford(cfg.l, cfg.p, cfg.n),
    }
}

/// Output of one invocation, kept separate from process handling for tests.
#[derive(Debug, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: impl std::fmt::Display) -> Outcome {
        Outcome { code: exit::USAGE, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::PASS };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    match cli.command {
        Command::Verify { kind, cfg, mutation } => {
            let cfg = match RunConfig::new(&cfg) {
                Ok(c) => c,
                Err(e) => return Outcome::usage(e),
            };
            match run_suite(kind, &cfg, mutation) {
                Ok(report) => {
                    let code = if report.all_pass() { exit::PASS } else { exit::FAILURE };
                    let stdout = match cfg.format {
                        Format::Text => render::report_text(kind, &cfg, mutation, &report),
                        Format::Json => render::report_json(kind, &cfg, mutation, &report),
                    };
                    Outcome { code, stdout, stderr: String::new() }
                }
                Err(e) => Outcome::usage(e),
            }
        }
        Command::Eval { expr, poly, cfg } => {
            let cfg = match RunConfig::new(&cfg) {
                Ok(c) => c,
                Err(e) => return Outcome::usage(e),
            };
            eval(&expr, &poly, &cfg)
        }
    }
}

fn eval(expr: &str, poly: &str, cfg: &RunConfig) -> Outcome {
    let st = match cfg.setting() {
        Ok(s) => s,
        Err(e) => return Outcome::usage(e),
    };
    let word = match parse::parse_word(expr, st.n) {
        Ok(w) => w,
        Err(e) => return Outcome::usage(format!("in word: {e}")),
    };
    let input = match parse::parse_element(poly, &st) {
        Ok(f) => f,
        Err(e) => return Outcome::usage(format!("in element: {e}")),
    };
    if let Err(e) = input.check_subring(&st) {
        return Outcome::usage(e);
    }
    match act_word(&st, &word, &input) {
        Ok(out) => {
            let text = out.to_text(&st);
            let stdout = match cfg.format {
                Format::Text => format!("{text}\n"),
                Format::Json => render::eval_json(cfg, &word, &input.to_text(&st), &text),
            };
            Outcome { code: exit::PASS, stdout, stderr: String::new() }
        }
        Err(e) => Outcome { code: exit::FAILURE, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}
