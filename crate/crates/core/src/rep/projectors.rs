//! The idempotents `e'` (average over the diagonal subgroup A) and `e`
//! (average over W = G(ℓ,p,n)) acting on 𝒫.
//!
//! `t_i` acts on 𝒫 by multiplication by `T_i`, so averaging over A is
//! multiplication by `E' = e'·1 = (1/|A|) Σ_{a∈A} T^a`. A T-free element is
//! therefore sent to `f·E'`, not to itself.

use std::collections::{BTreeMap, VecDeque};

use crate::arith::{ParamPoly, Q};
use crate::error::Result;
use crate::rep::action::act_word;
use crate::rep::element::{reduce_texp, PolyRepElement};
use crate::rep::relations::subring_texps;
use crate::rep::word::{Gen, Word};
use crate::setting::Setting;

/// `|A| = ℓ^n / p`.
pub fn a_order(st: &Setting) -> i64 {
    (st.ell as i64).pow(st.n as u32) / st.p as i64
}

/// `E' = (1/|A|) Σ_{a∈A} T^a`.
pub fn e_prime_element(st: &Setting) -> PolyRepElement {
    let inv = st.rational(Q::new(1, a_order(st)));
    let mut out = PolyRepElement::zero(st.field);
    for b in subring_texps(st) {
        out.add_term(reduce_texp(st, &b), inv.clone());
    }
    out
}

/// `e'·f` via the coset shortcut: `T^b E'` only depends on `Σ b mod p`, so
/// the coefficients of each coset are summed and multiplied by `T_1^r E'`.
pub fn project_e_prime(st: &Setting, f: &PolyRepElement) -> PolyRepElement {
    let mut by_coset: BTreeMap<i64, ParamPoly> = BTreeMap::new();
    for (b, g) in f.t_terms() {
        let r = PolyRepElement::t_sum(b, st.n).rem_euclid(st.p as i64);
        let slot = by_coset.entry(r).or_insert_with(|| st.zero());
        *slot = &*slot + g;
    }
    let e = e_prime_element(st);
    let mut out = PolyRepElement::zero(st.field);
    for (r, g) in by_coset {
        let mut shift = vec![0i64; st.n];
        shift[0] = r;
        let part = e.shift_t(st, &reduce_texp(st, &shift)).scale(&g);
        out = &out + &part;
    }
    out
}

/// `e'·f` as the literal average of the `t^a`-actions over A.
pub fn project_e_prime_brute(st: &Setting, f: &PolyRepElement) -> Result<PolyRepElement> {
    let mut acc = PolyRepElement::zero(st.field);
    for b in subring_texps(st) {
        acc = &acc + &act_word(st, &t_word(&b), f)?;
    }
    Ok(acc.scale(&st.rational(Q::new(1, a_order(st)))))
}

fn t_word(b: &[i64]) -> Word {
    let mut w = Vec::new();
    for (i, &k) in b.iter().enumerate() {
        w.extend(std::iter::repeat_n(Gen::T(i + 1), k as usize));
    }
    Word(w)
}

/// One word in adjacent transpositions for each permutation of `1..=n`,
/// found by breadth-first search (so each word is reduced).
pub fn permutation_words(n: usize) -> Vec<Word> {
    let start: Vec<usize> = (0..n).collect();
    let mut seen: BTreeMap<Vec<usize>, Word> = BTreeMap::new();
    seen.insert(start.clone(), Word::empty());
    let mut queue = VecDeque::from([start]);
    while let Some(perm) = queue.pop_front() {
        let w = seen[&perm].clone();
        for i in 1..n {
            let mut next = perm.clone();
            next.swap(i - 1, i);
            if !seen.contains_key(&next) {
                let mut w2 = w.clone();
                w2.0.insert(0, Gen::Swap(i));
                seen.insert(next.clone(), w2);
                queue.push_back(next);
            }
        }
    }
    seen.into_values().collect()
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

/// `e·f`: S_n average through the (i,i+1) rule, followed by `e'`.
pub fn project_e(st: &Setting, f: &PolyRepElement) -> Result<PolyRepElement> {
    let mut acc = PolyRepElement::zero(st.field);
    for w in permutation_words(st.n) {
        acc = &acc + &act_word(st, &w, f)?;
    }
    let sym = acc.scale(&st.rational(Q::new(1, factorial(st.n))));
    Ok(project_e_prime(st, &sym))
}

/// `e·f` as the literal sum over all |W| = ℓ^n n!/p elements `t^a w`.
pub fn project_e_brute(st: &Setting, f: &PolyRepElement) -> Result<PolyRepElement> {
    let mut acc = PolyRepElement::zero(st.field);
    let ts = subring_texps(st);
    for w in permutation_words(st.n) {
        for b in &ts {
            acc = &acc + &act_word(st, &t_word(b).then(&w), f)?;
        }
    }
    Ok(acc.scale(&st.rational(Q::new(1, a_order(st) * factorial(st.n)))))
}
