//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit status if
//! any criterion fails. Runs without the libtest harness so the lines are
//! always printed.

use std::time::{Duration, Instant};

use cherednik_core::clifford::verify_clifford;
use cherednik_core::galois::{galois_ring_check, principality_check, skew_algebra_check};
use cherednik_core::pcyclic::verify_pcyclic;
use cherednik_core::psph::verify_psph;
use cherednik_core::rep::relations::{verify_alternate_relations, verify_relations, verify_standard_relations};
use cherednik_core::report::Report;
use cherednik_core::{Mutation, Setting};

const GRID: [(u32, u32, usize); 5] = [(2, 1, 2), (2, 2, 2), (4, 2, 2), (3, 3, 2), (3, 1, 3)];
const RELATION_BUDGET: Duration = Duration::from_secs(60);

struct Outcome {
    ok: bool,
    detail: String,
}

fn summarize(label: &str, r: &Report) -> (bool, String) {
    let failed: Vec<&str> = r.failures().map(|c| c.id.as_str()).collect();
    let ok = failed.is_empty() && !r.checks.is_empty();
    let detail = if ok {
        format!("{label}: {} checks", r.checks.len())
    } else {
        format!("{label}: failed {failed:?}")
    };
    (ok, detail)
}

fn over_grid(mut run: impl FnMut(&Setting) -> Report) -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (l, p, n) in GRID {
        let st = Setting::new(l, p, n).expect("grid point");
        let (good, detail) = summarize(&format!("G({l},{p},{n})"), &run(&st));
        ok &= good;
        parts.push(detail);
    }
    Outcome { ok, detail: parts.join("; ") }
}

fn relations() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (l, p, n) in GRID {
        let st = Setting::new(l, p, n).expect("grid point");
        let start = Instant::now();
        let report = verify_alternate_relations(&st, 3);
        let took = start.elapsed();
        let (good, detail) = summarize(&format!("G({l},{p},{n})"), &report);
        ok &= good && took < RELATION_BUDGET;
        parts.push(format!("{detail} in {:.1}s", took.as_secs_f64()));
    }
    Outcome { ok, detail: parts.join("; ") }
}

fn standard() -> Outcome {
    over_grid(|st| verify_standard_relations(st, 3).expect("standard relations"))
}

fn psph() -> Outcome {
    over_grid(|st| verify_psph(st, 2).expect("psph"))
}

fn galois() -> Outcome {
    over_grid(|st| galois_ring_check(st, 20, 1).expect("galois"))
}

fn principal() -> Outcome {
    over_grid(|st| principality_check(st, 3).expect("principal"))
}

fn pcyclic() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (l, p) in [(2, 2), (4, 2), (6, 3), (6, 2)] {
        let (good, detail) = summarize(&format!("({l},{p})"), &verify_pcyclic(l, p).expect("pcyclic"));
        ok &= good;
        parts.push(detail);
    }
    Outcome { ok, detail: parts.join("; ") }
}

fn clifford() -> Outcome {
    let report = verify_clifford(2, 2, 2).expect("clifford");
    let (mut ok, mut detail) = summarize("G(2,2,2)", &report);
    for id in ["clifford.g222.category_o", "clifford.g222.families"] {
        match report.checks.iter().find(|c| c.id == id) {
            Some(c) => detail.push_str(&format!("; {id}: {}", c.note.as_deref().unwrap_or(""))),
            None => ok = false,
        }
    }
    Outcome { ok, detail }
}

fn skew() -> Outcome {
    over_grid(|st| skew_algebra_check(st, 100, 1))
}

/// Every suite that can see a mutation, on a small setting.
fn mutated_suites(st: &Setting) -> Vec<(&'static str, Report)> {
    vec![
        ("relations", verify_relations(st, 2).expect("relations")),
        ("psph", verify_psph(st, 2).expect("psph")),
        ("galois", galois_ring_check(st, 20, 1).expect("galois")),
        ("principal", principality_check(st, 3).expect("principal")),
    ]
}

fn mutations() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for m in Mutation::ALL {
        let st = Setting::new(2, 2, 2).expect("setting").with_mutation(Some(m));
        let caught: Vec<&str> = mutated_suites(&st)
            .iter()
            .filter(|(_, r)| r.failures().any(|c| c.counterexample.is_some()))
            .map(|(name, _)| *name)
            .collect();
        ok &= !caught.is_empty();
        parts.push(format!("{} caught by {caught:?}", m.name()));
    }
    Outcome { ok, detail: parts.join("; ") }
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        ("relation suite", relations),
        ("standard-presentation suite", standard),
        ("partially spherical action oracle", psph),
        ("Galois dictionary", galois),
        ("principality", principal),
        ("p-cyclic equivalence", pcyclic),
        ("Clifford census", clifford),
        ("skew-ring algebra", skew),
        ("mutation sensitivity", mutations),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        all &= out.ok;
        println!(
            "criterion {} {:<36} {} ({:.1}s)  {}",
            i + 1,
            name,
            if out.ok { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64(),
            out.detail
        );
    }
    if !all {
        std::process::exit(1);
    }
}
