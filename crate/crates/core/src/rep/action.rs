//! Action of the generators `u_i, t_i, (i,i+1), σ, τ` on the polynomial
//! representation.

use crate::arith::{ParamPoly, Q};
use crate::error::Result;
use crate::rep::element::{PolyRepElement, TExp};
use crate::rep::word::{Gen, Word};
use crate::setting::{Mutation, Setting, MAX_RANK};

/// `U_j ↦ U_{map(j)}` on the U-block, then `U_target ↦ U_target + delta`.
fn permute_and_shift(st: &Setting, f: &ParamPoly, map: &[usize], target: usize, delta: &ParamPoly) -> ParamPoly {
    let mut vars: Vec<usize> = (0..crate::arith::poly::MAX_VARS).collect();
    for (j, &t) in map.iter().enumerate() {
        vars[st.u_var(j + 1)] = st.u_var(t);
    }
    let renamed = f.rename_vars(&vars);
    let mut subs = vec![None; st.u_var(target) + 1];
    subs[st.u_var(target)] = Some(&st.u(target) + delta);
    renamed.substitute(&subs)
}

/// `π_{i,i+1} = (1/ℓ) Σ_k T_i^k T_{i+1}^{-k}`.
pub fn pi_element(st: &Setting, i: usize) -> PolyRepElement {
    let mut out = PolyRepElement::zero(st.field);
    let inv = st.rational(Q::new(1, st.ell as i64));
    for k in 0..st.ell as i64 {
        let mut b = vec![0i64; st.n];
        b[i - 1] = k;
        b[i] = -k;
        out = &out + &PolyRepElement::t_monomial(st, &b).scale(&inv);
    }
    out
}

/// `p(ζ^a T_i) = Σ_k c_k ζ^{ak} T_i^k`.
pub fn p_of_t(st: &Setting, a: i64, i: usize) -> PolyRepElement {
    let mut out = PolyRepElement::zero(st.field);
    for k in 0..st.ell as i64 {
        let mut b = vec![0i64; st.n];
        b[i - 1] = k;
        out = &out + &PolyRepElement::t_monomial(st, &b).scale(&st.c(k).scale(&st.zeta(a * k)));
    }
    out
}

/// `f^{(i,i+1)}`: exchange `U_i, U_{i+1}` and `T_i, T_{i+1}`.
pub fn swap_variables(st: &Setting, f: &PolyRepElement, i: usize) -> PolyRepElement {
    let (a, b) = (st.u_var(i), st.u_var(i + 1));
    let mut out = PolyRepElement::zero(st.field);
    for (t, g) in f.t_terms() {
        let mut t2 = *t;
        t2.swap(i - 1, i);
        out.add_term(t2, g.swap_vars(a, b));
    }
    out
}

/// `Σ_b ((f_b^{(i,i+1)} - f_b) / (U_{i+1} - U_i)) T^b`, where `f_b^{(i,i+1)}`
/// exchanges `U_i, U_{i+1}` only. Since `T^{b^{(i,i+1)}} π_{i,i+1} = T^b π_{i,i+1}`,
/// multiplying this by `π_{i,i+1}` gives the Swap correction
/// `(f^{(i,i+1)} - f) π_{i,i+1} / (U_{i+1} - U_i)`.
pub fn divided_difference(st: &Setting, f: &PolyRepElement, i: usize) -> Result<PolyRepElement> {
    let (a, b) = (st.u_var(i), st.u_var(i + 1));
    let delta = &st.u(i + 1) - &st.u(i);
    let mut out = PolyRepElement::zero(st.field);
    for (t, g) in f.t_terms() {
        let diff = &g.swap_vars(a, b) - g;
        out.add_term(*t, diff.exact_divide(&delta)?);
    }
    Ok(out)
}

fn act_swap(st: &Setting, i: usize, f: &PolyRepElement) -> Result<PolyRepElement> {
    let fs = swap_variables(st, f, i);
    let d = divided_difference(st, f, i)?;
    if d.is_zero() {
        return Ok(fs);
    }
    let corr = if st.is_mutated(Mutation::SwapNoPi) { d } else { d.mul(st, &pi_element(st, i)) };
    let kl = st.kappa().scale_q(&Q::int(st.ell as i64));
    Ok(&fs + &corr.scale(&kl))
}

fn act_sigma(st: &Setting, f: &PolyRepElement) -> PolyRepElement {
    let n = st.n;
    // slot j receives U_{j+1}; slot n receives U_1 + ħ
    let map: Vec<usize> = (1..=n).map(|j| if j < n { j + 1 } else { 1 }).collect();
    let hbar = st.hbar();
    let mut shifted = PolyRepElement::zero(st.field);
    for (b, g) in f.t_terms() {
        let mut b2: TExp = [0; MAX_RANK];
        b2[0] = b[n - 1];
        b2[1..n].copy_from_slice(&b[..n - 1]);
        let coeff = permute_and_shift(st, g, &map, 1, &hbar).scale(&st.zeta(-(b[n - 1] as i64)));
        shifted.add_term(b2, coeff);
    }
    let mut pre = PolyRepElement::from_poly(if st.is_mutated(Mutation::SigmaNoHbar) { st.u(1) } else { &st.u(1) + &hbar });
    pre = &pre - &p_of_t(st, -1, 1);
    pre.mul(st, &shifted)
}

fn act_tau(st: &Setting, f: &PolyRepElement) -> PolyRepElement {
    let n = st.n;
    // slot 1 receives U_n - ħ; slot j receives U_{j-1}
    let map: Vec<usize> = (1..=n).map(|j| if j == 1 { n } else { j - 1 }).collect();
    let delta = if st.is_mutated(Mutation::TauWrongSign) { st.hbar() } else { -st.hbar() };
    let mut out = PolyRepElement::zero(st.field);
    for (b, g) in f.t_terms() {
        let mut b2: TExp = [0; MAX_RANK];
        b2[..n - 1].copy_from_slice(&b[1..n]);
        b2[n - 1] = b[0];
        let coeff = permute_and_shift(st, g, &map, n, &delta).scale(&st.zeta(b[0] as i64));
        out.add_term(b2, coeff);
    }
    out
}

pub fn act_gen(st: &Setting, g: Gen, f: &PolyRepElement) -> Result<PolyRepElement> {
    g.validate(st.n)?;
    Ok(match g {
        Gen::U(i) => f.scale(&st.u(i)),
        Gen::T(i) => {
            let mut b: TExp = [0; MAX_RANK];
            b[i - 1] = 1;
            f.shift_t(st, &b)
        }
        Gen::Swap(i) => act_swap(st, i, f)?,
        Gen::Sigma => act_sigma(st, f),
        Gen::Tau => act_tau(st, f),
    })
}

/// Apply a word, rightmost generator first.
pub fn act_word(st: &Setting, w: &Word, f: &PolyRepElement) -> Result<PolyRepElement> {
    let mut acc = f.clone();
    for g in w.0.iter().rev() {
        acc = act_gen(st, *g, &acc)?;
    }
    Ok(acc)
}
