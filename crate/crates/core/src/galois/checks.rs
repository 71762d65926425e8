//! Report-producing checks: both dictionary inclusions on seeded random
//! rational functions, polynomial preservation, and the skew-ring axioms.

use crate::arith::{ParamPoly, RatFunc, Q};
use crate::error::Result;
use crate::galois::dictionary::{from_skew, lattice_degree, to_skew, AffineGenerator};
use crate::galois::random::{random_ratfunc, random_skew, rng};
use crate::psph::{closed_form_action, u_monomials, PsphGenerator};
use crate::rep::projectors::permutation_words;
use crate::rep::Gen;
use crate::report::{CheckResult, Counterexample, Report};
use crate::setting::Setting;

fn show(st: &Setting, f: &RatFunc) -> String {
    f.fmt_with(&st.var_names())
}

fn cex(st: &Setting, input: &RatFunc, lhs: &RatFunc, rhs: &RatFunc) -> Counterexample {
    Counterexample { input: show(st, input), lhs: show(st, lhs), rhs: show(st, rhs) }
}

/// (a) every `to_skew(g)` acts like the closed form of g, and its translation
/// parts carry the degree of g; (b) every `from_skew(a)` acts like a.
pub fn galois_ring_check(st: &Setting, samples: usize, seed: u64) -> Result<Report> {
    let mut r = rng(seed);
    let inputs: Vec<RatFunc> = (0..samples).map(|_| random_ratfunc(st, &mut r)).collect();
    let mut checks = Vec::new();
    for g in PsphGenerator::all(st) {
        let image = to_skew(st, g)?;
        checks.push(CheckResult::timed(|| {
            let id = format!("galois.to_skew[{g}]");
            for f in &inputs {
                let (lhs, rhs) = (image.act(st, f), closed_form_action(st, g, f));
                match rhs {
                    Ok(rhs) if rhs == lhs => {}
                    Ok(rhs) => return CheckResult::fail(id, cex(st, f, &lhs, &rhs)),
                    Err(e) => {
                        return CheckResult::fail(
                            id,
                            Counterexample { input: show(st, f), lhs: show(st, &lhs), rhs: format!("error: {e}") },
                        )
                    }
                }
            }
            CheckResult::pass(id)
        }));
        let degrees: Vec<Option<u32>> = image.terms().map(|(a, _)| lattice_degree(st, a)).collect();
        let want = Some(g.zp_degree(st));
        checks.push(CheckResult::from_bool(format!("galois.degree[{g}]"), degrees.iter().all(|d| *d == want), || {
            Counterexample { input: format!("{image:?}"), lhs: format!("{degrees:?}"), rhs: format!("{want:?}") }
        }));
    }
    for a in AffineGenerator::all(st) {
        let op = from_skew(st, a);
        let elt = a.element(st);
        checks.push(CheckResult::timed(|| {
            let id = format!("galois.from_skew[{a}]");
            for f in &inputs {
                let rhs = elt.act(st, f);
                match op.eval(st, f) {
                    Ok(lhs) if lhs == rhs => {}
                    Ok(lhs) => return CheckResult::fail(id, cex(st, f, &lhs, &rhs)),
                    Err(e) => {
                        return CheckResult::fail(
                            id,
                            Counterexample { input: show(st, f), lhs: format!("error: {e}"), rhs: show(st, &rhs) },
                        )
                    }
                }
            }
            CheckResult::pass(id)
        }));
    }
    Ok(Report::new(checks))
}

/// Elementary symmetric polynomials `e_1..e_n` in the U variables.
pub fn elementary_symmetric(st: &Setting) -> Vec<ParamPoly> {
    // coefficients of Π_i (1 + U_i x)
    let mut e = vec![st.one()];
    for i in 1..=st.n {
        let mut next = e.clone();
        next.push(st.zero());
        for k in 1..next.len() {
            next[k] = &next[k] + &(&e[k - 1] * &st.u(i));
        }
        e = next;
    }
    e.into_iter().skip(1).collect()
}

/// The S_n average of f through the (i,i+1) action.
pub fn symmetrize(st: &Setting, f: &RatFunc) -> Result<RatFunc> {
    let words = permutation_words(st.n);
    let mut acc = RatFunc::zero(st.field);
    for w in &words {
        let mut g = f.clone();
        for gen in w.0.iter().rev() {
            if let Gen::Swap(i) = gen {
                g = closed_form_action(st, PsphGenerator::SwapGen(*i), &g)?;
            }
        }
        acc = &acc + &g;
    }
    Ok(acc.scale(&st.field.rational(Q::new(1, words.len() as i64))))
}

fn is_symmetric(st: &Setting, f: &RatFunc) -> bool {
    (1..st.n).all(|i| {
        let mut map: Vec<usize> = (0..crate::arith::poly::MAX_VARS).collect();
        map.swap(st.u_var(i), st.u_var(i + 1));
        f.rename_vars(&map) == *f
    })
}

/// Every generator sends every U-monomial of degree ≤ `degree` to a
/// polynomial. The spherical variant symmetrizes the image of each
/// elementary symmetric polynomial and asks for a symmetric polynomial.
pub fn principality_check(st: &Setting, degree: u32) -> Result<Report> {
    let monos = u_monomials(st, degree);
    let esym = elementary_symmetric(st);
    let mut checks = Vec::new();
    for g in PsphGenerator::all(st) {
        checks.push(CheckResult::timed(|| {
            let id = format!("principal[{g}]");
            for m in &monos {
                let f = RatFunc::from_poly(m.clone());
                match closed_form_action(st, g, &f) {
                    Ok(out) if out.is_polynomial() => {}
                    Ok(out) => return CheckResult::fail(id, cex(st, &f, &out, &RatFunc::from_poly(out.num().clone()))),
                    Err(e) => {
                        return CheckResult::fail(
                            id,
                            Counterexample { input: show(st, &f), lhs: format!("error: {e}"), rhs: String::new() },
                        )
                    }
                }
            }
            CheckResult::pass(id)
        }));
        checks.push(CheckResult::timed(|| {
            let id = format!("principal.spherical[{g}]");
            for e in &esym {
                let f = RatFunc::from_poly(e.clone());
                let out = closed_form_action(st, g, &f).and_then(|x| symmetrize(st, &x));
                match out {
                    Ok(out) if out.is_polynomial() && is_symmetric(st, &out) => {}
                    Ok(out) => return CheckResult::fail(id, cex(st, &f, &out, &RatFunc::zero(st.field))),
                    Err(e) => {
                        return CheckResult::fail(
                            id,
                            Counterexample { input: show(st, &f), lhs: format!("error: {e}"), rhs: String::new() },
                        )
                    }
                }
            }
            CheckResult::pass(id).with_note("partial: e-symmetrized partially spherical generators only")
        }));
    }
    Ok(Report::new(checks))
}

/// Associativity of the skew product and compatibility of the evaluation
/// action with it, on `samples` seeded random triples.
pub fn skew_algebra_check(st: &Setting, samples: usize, seed: u64) -> Report {
    let mut r = rng(seed);
    let triples: Vec<_> = (0..samples)
        .map(|_| (random_skew(st, &mut r), random_skew(st, &mut r), random_skew(st, &mut r), random_ratfunc(st, &mut r)))
        .collect();
    let assoc = CheckResult::timed(|| {
        for (x, y, z, _) in &triples {
            let lhs = x.mul(st, y).mul(st, z);
            let rhs = x.mul(st, &y.mul(st, z));
            if lhs != rhs {
                return CheckResult::fail(
                    "skew.assoc",
                    Counterexample { input: format!("{x:?} | {y:?} | {z:?}"), lhs: format!("{lhs:?}"), rhs: format!("{rhs:?}") },
                );
            }
        }
        CheckResult::pass("skew.assoc").with_note(format!("{samples} triples"))
    });
    let action = CheckResult::timed(|| {
        for (x, y, _, f) in &triples {
            let lhs = x.mul(st, y).act(st, f);
            let rhs = x.act(st, &y.act(st, f));
            if lhs != rhs {
                return CheckResult::fail(
                    "skew.action",
                    Counterexample { input: format!("{x:?} | {y:?} | {}", show(st, f)), lhs: show(st, &lhs), rhs: show(st, &rhs) },
                );
            }
        }
        CheckResult::pass("skew.action").with_note(format!("{samples} triples"))
    });
    Report::new(vec![assoc, action])
}
