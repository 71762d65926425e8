//! Generators of the partially spherical subalgebra `e'He'`, their ℤ/p
//! degrees, their closed-form actions on `Λ = ℂ[U_1..U_n]`, and the check of
//! those closed forms against the word action on `f·E'`.

use std::fmt;

use crate::arith::{ParamPoly, RatFunc, Q};
use crate::error::{CoreError, Result};
use crate::rep::projectors::{e_prime_element, project_e_prime};
use crate::rep::word::{cycle_up_to_n, standard_gen_word, Gen, StdKind, Word};
use crate::rep::{act_word, PolyRepElement};
use crate::report::{CheckResult, Counterexample, Report};
use crate::setting::{Mutation, Setting};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PsphGenerator {
    UGen(usize),
    SwapGen(usize),
    /// `x_1^{ℓ-1} σ`
    XSigma,
    /// `y_n^{ℓ-1} τ`
    YTau,
    /// `σ^{nℓ/p}`
    SigmaPower,
    /// `τ^{nℓ/p}`
    TauPower,
    /// `(x_1^{kℓ/p-1} σ)^i (y_{n-i}^{ℓ-kℓ/p-1} (n-i,…,n) τ)^{n-i}` as `Mixed(i, k)`
    Mixed(usize, u32),
}

impl PsphGenerator {
    /// The full generating set for the setting, Mixed over all valid (i, k).
    pub fn all(st: &Setting) -> Vec<PsphGenerator> {
        let mut out: Vec<PsphGenerator> = (1..=st.n).map(PsphGenerator::UGen).collect();
        out.extend((1..st.n).map(PsphGenerator::SwapGen));
        out.extend([PsphGenerator::XSigma, PsphGenerator::YTau, PsphGenerator::SigmaPower, PsphGenerator::TauPower]);
        for i in 1..st.n {
            for k in 1..st.p {
                out.push(PsphGenerator::Mixed(i, k));
            }
        }
        out
    }

    pub fn validate(&self, st: &Setting) -> Result<()> {
        let bad = |index: usize, max: usize| Err(CoreError::IndexOutOfRange { index: index as i64, max: max as i64 });
        match *self {
            PsphGenerator::UGen(i) if !(1..=st.n).contains(&i) => bad(i, st.n),
            PsphGenerator::SwapGen(i) if !(1..st.n).contains(&i) => bad(i, st.n - 1),
            PsphGenerator::Mixed(i, _) if !(1..st.n).contains(&i) => bad(i, st.n - 1),
            PsphGenerator::Mixed(_, k) if !(1..st.p).contains(&k) => bad(k as usize, st.p as usize - 1),
            _ => Ok(()),
        }
    }

    /// Degree in the ℤ/p grading, as an element of `0..p`.
    pub fn zp_degree(&self, st: &Setting) -> u32 {
        let p = st.p as i64;
        let d = match *self {
            PsphGenerator::SigmaPower => 1,
            PsphGenerator::TauPower => -1,
            PsphGenerator::Mixed(_, k) => k as i64,
            _ => 0,
        };
        d.rem_euclid(p) as u32
    }
}

impl fmt::Display for PsphGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PsphGenerator::UGen(i) => write!(f, "u{i}"),
            PsphGenerator::SwapGen(i) => write!(f, "s{i}"),
            PsphGenerator::XSigma => write!(f, "xsig"),
            PsphGenerator::YTau => write!(f, "ytau"),
            PsphGenerator::SigmaPower => write!(f, "sigpow"),
            PsphGenerator::TauPower => write!(f, "taupow"),
            PsphGenerator::Mixed(i, k) => write!(f, "mixed[{i},{k}]"),
        }
    }
}

fn hbar_times(st: &Setting, k: i64) -> ParamPoly {
    st.hbar().scale_q(&Q::int(k))
}

/// Prefactor and variable images `U_j ↦ V_j` for the generators whose action
/// is `prefactor · f(V_1, …, V_n)`.
fn shape(st: &Setting, g: PsphGenerator) -> (ParamPoly, Vec<ParamPoly>) {
    let n = st.n;
    let (ell, lp) = (st.ell as i64, (st.ell / st.p) as i64);
    let u = |j: usize| st.u(j);
    match g {
        PsphGenerator::XSigma => {
            let drop = st.is_mutated(Mutation::XSigmaDropFactor);
            let pre = st.shifted_product(1, &hbar_times(st, ell), ell, drop);
            let mut v: Vec<ParamPoly> = (2..=n).map(u).collect();
            v.push(&u(1) + &hbar_times(st, ell));
            (pre, v)
        }
        PsphGenerator::YTau => {
            let mut v = vec![&u(n) - &hbar_times(st, ell)];
            v.extend((1..n).map(u));
            (st.one(), v)
        }
        PsphGenerator::SigmaPower => {
            let mut pre = st.one();
            for i in 1..=n {
                pre = &pre * &st.shifted_product(i, &hbar_times(st, lp), lp, false);
            }
            (pre, (1..=n).map(|j| &u(j) + &hbar_times(st, lp)).collect())
        }
        PsphGenerator::TauPower => (st.one(), (1..=n).map(|j| &u(j) - &hbar_times(st, lp)).collect()),
        PsphGenerator::Mixed(i, k) => {
            let klp = k as i64 * lp;
            let mut pre = st.one();
            for j in 1..=i {
                pre = &pre * &st.shifted_product(j, &hbar_times(st, klp), klp, false);
            }
            let mut v: Vec<ParamPoly> = (i + 1..=n).map(|j| &u(j) + &hbar_times(st, klp - ell)).collect();
            v.extend((1..=i).map(|j| &u(j) + &hbar_times(st, klp)));
            (pre, v)
        }
        PsphGenerator::UGen(i) => (u(i), (1..=n).map(u).collect()),
        PsphGenerator::SwapGen(_) => unreachable!("swap has no substitution shape"),
    }
}

fn subs_for(st: &Setting, images: Vec<ParamPoly>) -> Vec<Option<ParamPoly>> {
    let mut subs = vec![None; st.u_var(st.n) + 1];
    for (j, v) in images.into_iter().enumerate() {
        subs[st.u_var(j + 1)] = Some(v);
    }
    subs
}

/// The closed-form action on a rational function of the U variables.
pub fn closed_form_action(st: &Setting, g: PsphGenerator, f: &RatFunc) -> Result<RatFunc> {
    g.validate(st)?;
    if let PsphGenerator::SwapGen(i) = g {
        // f^s + κℓ (f^s - f)/(U_{i+1} - U_i)
        let fs = f.rename_vars(&swap_map(st, i));
        let delta = RatFunc::from_poly(&st.u(i + 1) - &st.u(i));
        let kl = RatFunc::from_poly(st.kappa().scale_q(&Q::int(st.ell as i64)));
        return Ok(&fs + &(&kl * &(&(&fs - f) / &delta)));
    }
    let (pre, images) = shape(st, g);
    Ok(f.substitute(&subs_for(st, images)).mul_poly(&pre))
}

/// The closed-form action on a polynomial; the divided difference is exact.
pub fn closed_form_poly(st: &Setting, g: PsphGenerator, f: &ParamPoly) -> Result<ParamPoly> {
    g.validate(st)?;
    if let PsphGenerator::SwapGen(i) = g {
        let fs = f.rename_vars(&swap_map(st, i));
        let dd = (&fs - f).exact_divide(&(&st.u(i + 1) - &st.u(i)))?;
        return Ok(&fs + &(&dd * &st.kappa().scale_q(&Q::int(st.ell as i64))));
    }
    let (pre, images) = shape(st, g);
    Ok(&f.substitute(&subs_for(st, images)) * &pre)
}

fn swap_map(st: &Setting, i: usize) -> Vec<usize> {
    let mut map: Vec<usize> = (0..crate::arith::poly::MAX_VARS).collect();
    map.swap(st.u_var(i), st.u_var(i + 1));
    map
}

fn std_pow(kind: StdKind, i: usize, n: usize, e: i64) -> Result<Word> {
    Ok(standard_gen_word(kind, i, n)?.pow(e as usize))
}

/// The defining word in the alternate-presentation generators.
pub fn word_for(st: &Setting, g: PsphGenerator) -> Result<Word> {
    g.validate(st)?;
    let n = st.n;
    let (ell, lp) = (st.ell as i64, (st.ell / st.p) as i64);
    let sig = Word::of(&[Gen::Sigma]);
    let tau = Word::of(&[Gen::Tau]);
    Ok(match g {
        PsphGenerator::UGen(i) => Word::of(&[Gen::U(i)]),
        PsphGenerator::SwapGen(i) => Word::of(&[Gen::Swap(i)]),
        PsphGenerator::XSigma => std_pow(StdKind::X, 1, n, ell - 1)?.then(&sig),
        PsphGenerator::YTau => std_pow(StdKind::Y, n, n, ell - 1)?.then(&tau),
        PsphGenerator::SigmaPower => sig.pow(n * lp as usize),
        PsphGenerator::TauPower => tau.pow(n * lp as usize),
        PsphGenerator::Mixed(i, k) => {
            let klp = k as i64 * lp;
            let left = std_pow(StdKind::X, 1, n, klp - 1)?.then(&sig).pow(i);
            let right = std_pow(StdKind::Y, n - i, n, ell - klp - 1)?
                .then(&cycle_up_to_n(n, n - i))
                .then(&tau)
                .pow(n - i);
            left.then(&right)
        }
    })
}

/// Degree of a word read off from its T-winding: push `t_1` from the left
/// through the word using `t_iσ = σt_{i-1}`, `t_iτ = τt_{i+1}` and
/// `t_0 = ζt_n`, collecting the power of ζ. On `e'𝒫` the leftover `t_j`
/// equals `t_1`, so the word is a `ζ^e`-eigenvector of conjugation by `t_1`,
/// and its degree is `e/(ℓ/p)`. Returns `None` when e is not a multiple of
/// ℓ/p, i.e. the word is killed by `e'` on both sides.
pub fn winding_degree(st: &Setting, w: &Word) -> Option<u32> {
    let n = st.n;
    let (mut j, mut e) = (1usize, 0i64);
    for g in &w.0 {
        match *g {
            Gen::Swap(i) if j == i => j = i + 1,
            Gen::Swap(i) if j == i + 1 => j = i,
            Gen::Sigma if j == 1 => {
                j = n;
                e += 1;
            }
            Gen::Sigma => j -= 1,
            Gen::Tau if j == n => {
                j = 1;
                e -= 1;
            }
            Gen::Tau => j += 1,
            _ => {}
        }
    }
    let lp = (st.ell / st.p) as i64;
    let e = e.rem_euclid(st.ell as i64);
    (e % lp == 0).then(|| (e / lp).rem_euclid(st.p as i64) as u32)
}

/// `f·E'`.
pub fn embed(st: &Setting, f: &ParamPoly) -> PolyRepElement {
    e_prime_element(st).scale(f)
}

/// `e'(word_for(g)·(f E'))` and `closed_form(g, f)·E'`.
pub fn oracle_sides(st: &Setting, g: PsphGenerator, f: &ParamPoly) -> Result<(PolyRepElement, PolyRepElement)> {
    let lhs = project_e_prime(st, &act_word(st, &word_for(st, g)?, &embed(st, f))?);
    let rhs = embed(st, &closed_form_poly(st, g, f)?);
    Ok((lhs, rhs))
}

pub fn oracle_compare(st: &Setting, g: PsphGenerator, f: &ParamPoly) -> Result<bool> {
    let (a, b) = oracle_sides(st, g, f)?;
    Ok(a == b)
}

/// U-monomials of total degree ≤ `degree`.
pub fn u_monomials(st: &Setting, degree: u32) -> Vec<ParamPoly> {
    let mut exps: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..st.n {
        let mut next = Vec::new();
        for e in &exps {
            let used: u32 = e.iter().sum();
            for k in 0..=degree - used {
                let mut e2 = e.clone();
                e2.push(k);
                next.push(e2);
            }
        }
        exps = next;
    }
    exps.sort_by_key(|e| (e.iter().sum::<u32>(), std::cmp::Reverse(e.clone())));
    exps.iter()
        .map(|e| e.iter().enumerate().fold(st.one(), |acc, (j, &k)| &acc * &st.u(j + 1).pow(k)))
        .collect()
}

/// Oracle comparison for every generator on every U-monomial of degree ≤
/// `degree`, plus the degree table against the T-winding of each word.
pub fn verify_psph(st: &Setting, degree: u32) -> Result<Report> {
    let names = st.var_names();
    let monos = u_monomials(st, degree);
    let mut checks = Vec::new();
    for g in PsphGenerator::all(st) {
        let w = word_for(st, g)?;
        checks.push(CheckResult::timed(|| {
            let wound = winding_degree(st, &w);
            CheckResult::from_bool(format!("psph.degree[{g}]"), wound == Some(g.zp_degree(st)), || Counterexample {
                input: w.to_string(),
                lhs: format!("{wound:?}"),
                rhs: g.zp_degree(st).to_string(),
            })
        }));
        checks.push(CheckResult::timed(|| {
            for f in &monos {
                let (lhs, rhs) = match oracle_sides(st, g, f) {
                    Ok(x) => x,
                    Err(e) => {
                        return CheckResult::fail(
                            format!("psph.oracle[{g}]"),
                            Counterexample { input: f.fmt_with(&names), lhs: format!("error: {e}"), rhs: String::new() },
                        )
                    }
                };
                if lhs != rhs {
                    return CheckResult::fail(
                        format!("psph.oracle[{g}]"),
                        Counterexample { input: f.fmt_with(&names), lhs: lhs.to_text(st), rhs: rhs.to_text(st) },
                    );
                }
            }
            CheckResult::pass(format!("psph.oracle[{g}]"))
        }));
    }
    Ok(Report::new(checks))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_examples() {
        let st = Setting::new(2, 2, 2).unwrap();
        let u1 = st.u(1);
        assert_eq!(closed_form_poly(&st, PsphGenerator::TauPower, &u1).unwrap(), &u1 - &st.hbar());

        let st = Setting::new(2, 1, 2).unwrap();
        let two_h = st.hbar().scale_q(&Q::int(2));
        assert_eq!(closed_form_poly(&st, PsphGenerator::YTau, &st.u(1)).unwrap(), &st.u(2) - &two_h);
        let expect = &(&(&st.u(1) + &two_h) - &st.s(0)) * &(&(&st.u(1) + &two_h) - &st.s(1));
        assert_eq!(closed_form_poly(&st, PsphGenerator::XSigma, &st.one()).unwrap(), expect);
    }

    #[test]
    fn word_examples() {
        let st = Setting::new(2, 2, 2).unwrap();
        assert_eq!(word_for(&st, PsphGenerator::Mixed(1, 1)).unwrap(), Word::of(&[Gen::Sigma, Gen::Swap(1), Gen::Tau]));
        assert_eq!(word_for(&st, PsphGenerator::TauPower).unwrap(), Word::of(&[Gen::Tau, Gen::Tau]));
        let st = Setting::new(1, 1, 1).unwrap();
        assert_eq!(word_for(&st, PsphGenerator::XSigma).unwrap(), Word::of(&[Gen::Sigma]));
        let st = Setting::new(3, 3, 1).unwrap();
        assert_eq!(word_for(&st, PsphGenerator::TauPower).unwrap(), Word::of(&[Gen::Tau]));
    }

    #[test]
    fn degree_table() {
        let st = Setting::new(6, 3, 2).unwrap();
        assert_eq!(PsphGenerator::SigmaPower.zp_degree(&st), 1);
        assert_eq!(PsphGenerator::TauPower.zp_degree(&st), 2);
        assert_eq!(PsphGenerator::YTau.zp_degree(&st), 0);
        assert_eq!(PsphGenerator::Mixed(1, 2).zp_degree(&st), 2);
    }

    #[test]
    fn swap_closed_form_is_polynomial() {
        let st = Setting::new(2, 1, 2).unwrap();
        let f = &st.u(1).pow(2) * &st.u(2);
        let a = closed_form_poly(&st, PsphGenerator::SwapGen(1), &f).unwrap();
        let b = closed_form_action(&st, PsphGenerator::SwapGen(1), &RatFunc::from_poly(f)).unwrap();
        assert_eq!(RatFunc::from_poly(a), b);
    }
}
