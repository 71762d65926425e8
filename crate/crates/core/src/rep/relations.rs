//! Operator identities checked on a monomial basis of the polynomial
//! representation: the defining relations of the alternate presentation, the
//! group relations, and the standard presentation through the x/y words.

use std::collections::HashMap;
use std::time::Instant;

use rayon::prelude::*;

use crate::arith::{ParamPoly, Q};
use crate::error::Result;
use crate::rep::action::{act_gen, act_word};
use crate::rep::element::{reduce_texp, PolyRepElement};
use crate::rep::word::{standard_gen_word, transposition, Gen, StdKind, Word};
use crate::report::{CheckResult, Counterexample, Report};
use crate::setting::Setting;

/// A linear combination of words with parameter coefficients.
#[derive(Clone, Debug)]
pub struct OpExpr(pub Vec<(ParamPoly, Word)>);

impl OpExpr {
    pub fn word(st: &Setting, w: Word) -> OpExpr {
        OpExpr(vec![(st.one(), w)])
    }

    pub fn gens(st: &Setting, g: &[Gen]) -> OpExpr {
        OpExpr::word(st, Word::of(g))
    }

    pub fn identity(st: &Setting) -> OpExpr {
        OpExpr::word(st, Word::empty())
    }

    pub fn scalar(st: &Setting, c: ParamPoly) -> OpExpr {
        let _ = st;
        OpExpr(vec![(c, Word::empty())])
    }

    pub fn zero() -> OpExpr {
        OpExpr(Vec::new())
    }

    /// `self ∘ other` (other acts first).
    pub fn then(&self, other: &OpExpr) -> OpExpr {
        let mut out = Vec::new();
        for (a, w1) in &self.0 {
            for (b, w2) in &other.0 {
                out.push((a * b, w1.then(w2)));
            }
        }
        OpExpr(out)
    }

    pub fn plus(&self, other: &OpExpr) -> OpExpr {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        OpExpr(v)
    }

    pub fn minus(&self, other: &OpExpr) -> OpExpr {
        self.plus(&other.scale(&-ParamPoly::one(other.field_hint())))
    }

    pub fn scale(&self, c: &ParamPoly) -> OpExpr {
        OpExpr(self.0.iter().map(|(a, w)| (a * c, w.clone())).collect())
    }

    fn field_hint(&self) -> &'static crate::arith::CycloField {
        self.0.first().map(|(c, _)| c.field).unwrap_or_else(|| crate::arith::CycloField::get(1))
    }

    pub fn eval(&self, st: &Setting, f: &PolyRepElement) -> Result<PolyRepElement> {
        let mut acc = PolyRepElement::zero(st.field);
        for (c, w) in &self.0 {
            if c.is_zero() {
                continue;
            }
            acc = &acc + &act_word(st, w, f)?.scale(c);
        }
        Ok(acc)
    }
}

/// `u_i` for any integer i, via `u_i = u_{i-n} + ħ`.
pub fn u_ext(st: &Setting, i: i64) -> OpExpr {
    let n = st.n as i64;
    let (j, r) = ((i - 1).div_euclid(n), (i - 1).rem_euclid(n) + 1);
    OpExpr::gens(st, &[Gen::U(r as usize)]).plus(&OpExpr::scalar(st, st.hbar().scale_q(&Q::int(j))))
}

/// `t_i` for any integer i, via `t_i = ζ^{-1} t_{i-n}`.
pub fn t_ext(st: &Setting, i: i64) -> OpExpr {
    let n = st.n as i64;
    let (j, r) = ((i - 1).div_euclid(n), (i - 1).rem_euclid(n) + 1);
    OpExpr(vec![(ParamPoly::constant(st.zeta(-j)), Word::of(&[Gen::T(r as usize)]))])
}

/// `t_i^k` with k taken mod ℓ.
pub fn t_pow(st: &Setting, i: usize, k: i64) -> Word {
    Word(vec![Gen::T(i); k.rem_euclid(st.ell as i64) as usize])
}

/// `Σ_k coef(k) · t_i^k t_j^{-k} · tail`.
fn t_pair_sum(st: &Setting, i: usize, j: usize, tail: &Word, coef: impl Fn(i64) -> ParamPoly) -> OpExpr {
    OpExpr(
        (0..st.ell as i64)
            .map(|k| (coef(k), t_pow(st, i, k).then(&t_pow(st, j, -k)).then(tail)))
            .collect(),
    )
}

/// `p(ζ^a t_i) = Σ_k c_k ζ^{ak} t_i^k`.
pub fn p_expr(st: &Setting, a: i64, i: usize) -> OpExpr {
    OpExpr((0..st.ell as i64).map(|k| (st.c(k).scale(&st.zeta(a * k)), t_pow(st, i, k))).collect())
}

#[derive(Clone, Debug)]
pub struct Relation {
    pub id: String,
    pub lhs: OpExpr,
    pub rhs: OpExpr,
}

#[derive(Clone, Debug)]
pub enum RelationEntry {
    Check(Relation),
    Vacuous(String),
}

fn rel(id: impl Into<String>, lhs: OpExpr, rhs: OpExpr) -> RelationEntry {
    RelationEntry::Check(Relation { id: id.into(), lhs, rhs })
}

/// Defining relations of the alternate presentation.
pub fn alternate_relations(st: &Setting) -> Vec<RelationEntry> {
    let n = st.n;
    let g = |gs: &[Gen]| OpExpr::gens(st, gs);
    let sig = g(&[Gen::Sigma]);
    let tau = g(&[Gen::Tau]);
    let kl = st.kappa().scale_q(&Q::int(st.ell as i64));
    let mut out = Vec::new();

    if n == 1 {
        out.push(RelationEntry::Vacuous("alt.u_swap".into()));
    }
    for j in 1..n {
        let sj = g(&[Gen::Swap(j)]);
        let inv_l = st.rational(Q::new(1, st.ell as i64));
        let pi = t_pair_sum(st, j, j + 1, &Word::empty(), |_| inv_l.clone());
        for i in 1..=n {
            let si = if i == j { j + 1 } else if i == j + 1 { j } else { i };
            let delta = (i == j) as i64 - (i == j + 1) as i64;
            let rhs = sj.then(&g(&[Gen::U(si)])).plus(&pi.scale(&kl.scale_q(&Q::int(delta))));
            out.push(rel(format!("alt.u_swap[{i},{j}]"), g(&[Gen::U(i)]).then(&sj), rhs));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            out.push(rel(format!("alt.u_t[{i},{j}]"), g(&[Gen::U(i), Gen::T(j)]), g(&[Gen::T(j), Gen::U(i)])));
        }
    }
    if n < 3 {
        out.push(RelationEntry::Vacuous("alt.sigma_swap".into()));
        out.push(RelationEntry::Vacuous("alt.tau_swap".into()));
    }
    for j in 2..n {
        out.push(rel(
            format!("alt.sigma_swap[{j}]"),
            g(&[Gen::Sigma, Gen::Swap(j - 1)]),
            g(&[Gen::Swap(j), Gen::Sigma]),
        ));
        out.push(rel(
            format!("alt.tau_swap[{j}]"),
            g(&[Gen::Tau, Gen::Swap(j)]),
            g(&[Gen::Swap(j - 1), Gen::Tau]),
        ));
    }
    if n >= 2 {
        out.push(rel(
            "alt.sigma2",
            g(&[Gen::Sigma, Gen::Sigma, Gen::Swap(n - 1)]),
            g(&[Gen::Swap(1), Gen::Sigma, Gen::Sigma]),
        ));
        out.push(rel(
            "alt.tau2",
            g(&[Gen::Tau, Gen::Tau, Gen::Swap(1)]),
            g(&[Gen::Swap(n - 1), Gen::Tau, Gen::Tau]),
        ));
    } else {
        out.push(RelationEntry::Vacuous("alt.sigma2".into()));
        out.push(RelationEntry::Vacuous("alt.tau2".into()));
    }
    // στ = u_1 - p(ζ^{-1} t_1) + ħ
    let st_rhs = u_ext(st, 1).minus(&p_expr(st, -1, 1)).plus(&OpExpr::scalar(st, st.hbar()));
    out.push(rel("alt.sigma_tau", sig.then(&tau), st_rhs));
    // τσ = u_n - p(t_n)
    out.push(rel("alt.tau_sigma", tau.then(&sig), u_ext(st, n as i64).minus(&p_expr(st, 0, n))));

    let window: Vec<i64> = (0..=n as i64 + 1).collect();
    for &i in &window {
        for &j in &window {
            if i < j {
                out.push(rel(
                    format!("alt.u_comm[{i},{j}]"),
                    u_ext(st, i).then(&u_ext(st, j)),
                    u_ext(st, j).then(&u_ext(st, i)),
                ));
            }
        }
    }
    for &i in &window {
        out.push(rel(format!("alt.u_sigma[{i}]"), u_ext(st, i).then(&sig), sig.then(&u_ext(st, i - 1))));
        out.push(rel(format!("alt.u_tau[{i}]"), u_ext(st, i).then(&tau), tau.then(&u_ext(st, i + 1))));
        out.push(rel(format!("alt.t_sigma[{i}]"), t_ext(st, i).then(&sig), sig.then(&t_ext(st, i - 1))));
        out.push(rel(format!("alt.t_tau[{i}]"), t_ext(st, i).then(&tau), tau.then(&t_ext(st, i + 1))));
    }
    if n >= 2 {
        // τ(1,2)σ = σ(n-1,n)τ + κ Σ_m ζ^m t_n^m t_1^{-m}
        let kappa = st.kappa();
        let extra = t_pair_sum(st, n, 1, &Word::empty(), |m| kappa.scale(&st.zeta(m)));
        out.push(rel(
            "alt.tau_s1_sigma",
            g(&[Gen::Tau, Gen::Swap(1), Gen::Sigma]),
            g(&[Gen::Sigma, Gen::Swap(n - 1), Gen::Tau]).plus(&extra),
        ));
    } else {
        out.push(RelationEntry::Vacuous("alt.tau_s1_sigma".into()));
    }
    out
}

/// Relations of the group algebra, as realized through the Swap rule and
/// multiplication by `T_i`.
pub fn group_relations(st: &Setting) -> Vec<RelationEntry> {
    let n = st.n;
    let g = |gs: &[Gen]| OpExpr::gens(st, gs);
    let mut out = Vec::new();
    if n == 1 {
        out.push(RelationEntry::Vacuous("group.swap".into()));
    }
    for i in 1..n {
        out.push(rel(format!("group.swap_sq[{i}]"), g(&[Gen::Swap(i), Gen::Swap(i)]), OpExpr::identity(st)));
        if i + 1 < n {
            out.push(rel(
                format!("group.braid[{i}]"),
                g(&[Gen::Swap(i), Gen::Swap(i + 1), Gen::Swap(i)]),
                g(&[Gen::Swap(i + 1), Gen::Swap(i), Gen::Swap(i + 1)]),
            ));
        }
        for j in i + 2..n {
            out.push(rel(
                format!("group.far_commute[{i},{j}]"),
                g(&[Gen::Swap(i), Gen::Swap(j)]),
                g(&[Gen::Swap(j), Gen::Swap(i)]),
            ));
        }
        for j in 1..=n {
            let sj = if j == i { i + 1 } else if j == i + 1 { i } else { j };
            out.push(rel(
                format!("group.t_swap[{i},{j}]"),
                g(&[Gen::Swap(i), Gen::T(j)]),
                g(&[Gen::T(sj), Gen::Swap(i)]),
            ));
        }
    }
    for i in 1..=n {
        out.push(rel(
            format!("group.t_order[{i}]"),
            OpExpr::word(st, Word(vec![Gen::T(i); st.ell as usize])),
            OpExpr::identity(st),
        ));
        for j in i + 1..=n {
            out.push(rel(format!("group.t_comm[{i},{j}]"), g(&[Gen::T(i), Gen::T(j)]), g(&[Gen::T(j), Gen::T(i)])));
        }
    }
    out
}

/// The standard presentation, with `x_i, y_i` expanded into words.
pub fn standard_relations(st: &Setting) -> Result<Vec<RelationEntry>> {
    let n = st.n;
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for i in 1..=n {
        xs.push(OpExpr::word(st, standard_gen_word(StdKind::X, i, n)?));
        ys.push(OpExpr::word(st, standard_gen_word(StdKind::Y, i, n)?));
    }
    let x = |i: usize| &xs[i - 1];
    let y = |i: usize| &ys[i - 1];
    let t = |i: usize| OpExpr::gens(st, &[Gen::T(i)]);
    let comm = |a: &OpExpr, b: &OpExpr| a.then(b).minus(&b.then(a));
    let kappa = st.kappa();
    let mut out = Vec::new();
    if n == 1 {
        out.push(RelationEntry::Vacuous("std.xx".into()));
        out.push(RelationEntry::Vacuous("std.yy".into()));
        out.push(RelationEntry::Vacuous("std.com2".into()));
    }
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(rel(format!("std.xx[{i},{j}]"), x(i).then(x(j)), x(j).then(x(i))));
            out.push(rel(format!("std.yy[{i},{j}]"), y(i).then(y(j)), y(j).then(y(i))));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            let d = (i == j) as i64;
            out.push(rel(
                format!("std.refln1[{i},{j}]"),
                t(i).then(x(j)),
                x(j).then(&t(i)).scale(&ParamPoly::constant(st.zeta(d))),
            ));
            out.push(rel(
                format!("std.refln2[{i},{j}]"),
                t(i).then(y(j)),
                y(j).then(&t(i)).scale(&ParamPoly::constant(st.zeta(-d))),
            ));
        }
    }
    for i in 1..=n {
        // [x_i, y_i] = ħ + κ Σ_{j≠i} Σ_k t_i^k t_j^{-k} s_ij + p(t_i) - p(ζ^{-1} t_i)
        let mut rhs = OpExpr::scalar(st, st.hbar());
        for j in (1..=n).filter(|&j| j != i) {
            rhs = rhs.plus(&t_pair_sum(st, i, j, &transposition(i, j), |_| kappa.clone()));
        }
        rhs = rhs.plus(&p_expr(st, 0, i)).minus(&p_expr(st, -1, i));
        out.push(rel(format!("std.com1[{i}]"), comm(x(i), y(i)), rhs));
        for j in (1..=n).filter(|&j| j != i) {
            let rhs = com2_rhs(st, i, j, true);
            out.push(rel(format!("std.com2[{i},{j}]"), comm(x(i), y(j)), rhs));
        }
    }
    Ok(out)
}

/// `[x_i, y_j]` for i ≠ j: `-κ Σ_k ζ^{-k} t_i^k t_j^{-k} s_ij`. Without the
/// phase ζ^{-k} the identity is false (see the test below).
fn com2_rhs(st: &Setting, i: usize, j: usize, phase: bool) -> OpExpr {
    let kappa = st.kappa();
    t_pair_sum(st, i, j, &transposition(i, j), |k| {
        let c = -kappa.clone();
        if phase {
            c.scale(&st.zeta(-k))
        } else {
            c
        }
    })
}

/// U-monomials of total degree ≤ `degree` times T-monomials in the subring.
pub fn basis(st: &Setting, degree: u32) -> Vec<PolyRepElement> {
    let mut uexps: Vec<Vec<u8>> = vec![Vec::new()];
    for _ in 0..st.n {
        let mut next = Vec::new();
        for e in &uexps {
            let used: u32 = e.iter().map(|&x| x as u32).sum();
            for k in 0..=(degree - used) {
                let mut e2 = e.clone();
                e2.push(k as u8);
                next.push(e2);
            }
        }
        uexps = next;
    }
    uexps.sort_by_key(|e| (e.iter().map(|&x| x as u32).sum::<u32>(), std::cmp::Reverse(e.clone())));
    let texps = subring_texps(st);
    let mut out = Vec::new();
    for t in &texps {
        for e in &uexps {
            let mut f = st.one();
            for (i, &k) in e.iter().enumerate() {
                f = &f * &st.u(i + 1).pow(k as u32);
            }
            out.push(PolyRepElement::monomial(f, reduce_texp(st, t)));
        }
    }
    out
}

/// All T-exponent vectors in `(ℤ/ℓ)^n` with `Σ b_i ≡ 0 (mod p)`.
pub fn subring_texps(st: &Setting) -> Vec<Vec<i64>> {
    all_texps(st).into_iter().filter(|b| b.iter().sum::<i64>() % st.p as i64 == 0).collect()
}

pub fn all_texps(st: &Setting) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..st.n {
        out = out
            .into_iter()
            .flat_map(|b| {
                (0..st.ell as i64).map(move |k| {
                    let mut b2 = b.clone();
                    b2.push(k);
                    b2
                })
            })
            .collect();
    }
    out
}

/// Memoized word actions on one fixed input; words sharing a suffix share work.
pub struct WordCache<'a> {
    st: &'a Setting,
    input: PolyRepElement,
    memo: HashMap<Vec<Gen>, PolyRepElement>,
}

impl<'a> WordCache<'a> {
    pub fn new(st: &'a Setting, input: PolyRepElement) -> WordCache<'a> {
        WordCache { st, input, memo: HashMap::new() }
    }

    pub fn act(&mut self, w: &[Gen]) -> Result<PolyRepElement> {
        if w.is_empty() {
            return Ok(self.input.clone());
        }
        if let Some(v) = self.memo.get(w) {
            return Ok(v.clone());
        }
        let rest = self.act(&w[1..])?;
        let out = act_gen(self.st, w[0], &rest)?;
        self.memo.insert(w.to_vec(), out.clone());
        Ok(out)
    }

    pub fn eval(&mut self, e: &OpExpr) -> Result<PolyRepElement> {
        let mut acc = PolyRepElement::zero(self.st.field);
        for (c, w) in &e.0 {
            if c.is_zero() {
                continue;
            }
            acc = &acc + &self.act(&w.0)?.scale(c);
        }
        Ok(acc)
    }
}

fn show(st: &Setting, x: &Result<PolyRepElement>) -> String {
    match x {
        Ok(e) => e.to_text(st),
        Err(e) => format!("error: {e}"),
    }
}

/// Check one relation on every basis element, stopping at the first failure.
pub fn check_relation(st: &Setting, r: &Relation, basis: &[PolyRepElement]) -> CheckResult {
    CheckResult::timed(|| {
        for f in basis {
            let mut cache = WordCache::new(st, f.clone());
            let (a, b) = (cache.eval(&r.lhs), cache.eval(&r.rhs));
            if !matches!((&a, &b), (Ok(x), Ok(y)) if x == y) {
                return CheckResult::fail(
                    r.id.clone(),
                    Counterexample { input: f.to_text(st), lhs: show(st, &a), rhs: show(st, &b) },
                );
            }
        }
        CheckResult::pass(r.id.clone())
    })
}

/// Check every relation on every basis element. Word actions are shared
/// across relations for each input; the reported counterexample of a failing
/// relation is its first failing basis element.
pub fn check_entries(st: &Setting, entries: &[RelationEntry], degree: u32) -> Report {
    let basis = basis(st, degree);
    let rels: Vec<&Relation> = entries
        .iter()
        .filter_map(|e| match e {
            RelationEntry::Check(r) => Some(r),
            RelationEntry::Vacuous(_) => None,
        })
        .collect();
    let per_input: Vec<(Vec<Option<Counterexample>>, Vec<u128>)> = basis
        .par_iter()
        .map(|f| {
            let mut cache = WordCache::new(st, f.clone());
            let mut fails = Vec::with_capacity(rels.len());
            let mut times = Vec::with_capacity(rels.len());
            for r in &rels {
                let start = Instant::now();
                let (a, b) = (cache.eval(&r.lhs), cache.eval(&r.rhs));
                let ok = matches!((&a, &b), (Ok(x), Ok(y)) if x == y);
                fails.push((!ok).then(|| Counterexample { input: f.to_text(st), lhs: show(st, &a), rhs: show(st, &b) }));
                times.push(start.elapsed().as_micros());
            }
            (fails, times)
        })
        .collect();
    let mut idx = 0;
    let mut checks = Vec::with_capacity(entries.len());
    for e in entries {
        match e {
            RelationEntry::Vacuous(id) => checks.push(CheckResult::vacuous(id.clone())),
            RelationEntry::Check(r) => {
                let cex = per_input.iter().find_map(|(fails, _)| fails[idx].clone());
                let micros: u128 = per_input.iter().map(|(_, t)| t[idx]).sum();
                let mut c = match cex {
                    None => CheckResult::pass(r.id.clone()),
                    Some(x) => CheckResult::fail(r.id.clone(), x),
                };
                c.elapsed_ms = micros / 1000;
                checks.push(c);
                idx += 1;
            }
        }
    }
    Report::new(checks)
}

/// Alternate-presentation and group relations.
pub fn verify_alternate_relations(st: &Setting, degree: u32) -> Report {
    let mut entries = alternate_relations(st);
    entries.extend(group_relations(st));
    check_entries(st, &entries, degree)
}

/// Standard-presentation relations through the x/y words.
pub fn verify_standard_relations(st: &Setting, degree: u32) -> Result<Report> {
    Ok(check_entries(st, &standard_relations(st)?, degree))
}

/// Every relation: alternate presentation, group, and standard presentation.
pub fn verify_relations(st: &Setting, degree: u32) -> Result<Report> {
    let mut r = verify_alternate_relations(st, degree);
    r.extend(verify_standard_relations(st, degree)?);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn com2_check(st: &Setting, phase: bool) -> bool {
        let x1 = OpExpr::word(st, standard_gen_word(StdKind::X, 1, st.n).unwrap());
        let y2 = OpExpr::word(st, standard_gen_word(StdKind::Y, 2, st.n).unwrap());
        let r = Relation { id: "com2".into(), lhs: x1.then(&y2).minus(&y2.then(&x1)), rhs: com2_rhs(st, 1, 2, phase) };
        check_relation(st, &r, &basis(st, 1)).status == crate::report::Status::Pass
    }

    #[test]
    fn com2_needs_root_of_unity_phase() {
        let st = Setting::new(3, 1, 2).unwrap();
        assert!(com2_check(&st, true));
        assert!(!com2_check(&st, false));
    }

    #[test]
    fn small_grid_relations_hold() {
        for (l, p, n) in [(2, 1, 2), (2, 2, 2), (3, 3, 2)] {
            let st = Setting::new(l, p, n).unwrap();
            let rep = verify_relations(&st, 2).unwrap();
            let bad: Vec<_> = rep.failures().map(|c| c.id.clone()).collect();
            assert!(bad.is_empty(), "({l},{p},{n}): {bad:?}");
        }
    }
}
