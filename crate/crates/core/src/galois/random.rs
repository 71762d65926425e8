//! Seeded random inputs. The generator is ChaCha8 seeded from a u64, so a
//! seed reproduces the same inputs on every machine.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{ParamPoly, RatFunc, Q};
use crate::galois::skew::SkewElement;
use crate::groups::{AffineElement, Perm};
use crate::setting::Setting;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A polynomial in the U variables (and occasionally ħ) with at most
/// `terms` terms of degree ≤ `degree` and small integer coefficients.
pub fn random_poly(st: &Setting, rng: &mut impl Rng, degree: u32, terms: usize) -> ParamPoly {
    let mut acc = st.zero();
    for _ in 0..terms {
        let mut m = st.int(rng.random_range(1..=3) * if rng.random_bool(0.5) { 1 } else { -1 });
        let d = rng.random_range(0..=degree);
        for _ in 0..d {
            let v = if rng.random_bool(0.1) { st.hbar() } else { st.u(rng.random_range(1..=st.n)) };
            m = &m * &v;
        }
        acc = &acc + &m;
    }
    acc
}

/// A rational function with numerator of degree ≤ 2 and a nonzero
/// denominator of degree ≤ 1.
pub fn random_ratfunc(st: &Setting, rng: &mut impl Rng) -> RatFunc {
    let num = random_poly(st, rng, 2, 3);
    let mut den = random_poly(st, rng, 1, 2);
    if den.is_zero() {
        den = st.one();
    }
    RatFunc::new(num, den)
}

/// A random element of `T⋊S_n` with small translation part.
pub fn random_affine(st: &Setting, rng: &mut impl Rng) -> AffineElement {
    let (ell, lp) = (st.ell as i64, (st.ell / st.p) as i64);
    let c = rng.random_range(-1..=1) * lp;
    let shift = (0..st.n).map(|_| c + ell * rng.random_range(-1..=1)).collect();
    let perms = Perm::all(st.n);
    let perm = perms[rng.random_range(0..perms.len())].clone();
    AffineElement::new(shift, perm).expect("matching lengths")
}

/// A skew element with one or two terms and small coefficients.
pub fn random_skew(st: &Setting, rng: &mut impl Rng) -> SkewElement {
    let mut out = SkewElement::zero(st.field);
    for _ in 0..rng.random_range(1..=2) {
        let num = random_poly(st, rng, 1, 2);
        let mut den = random_poly(st, rng, 1, 1);
        if den.is_zero() {
            den = st.one();
        }
        let c = RatFunc::new(num, den);
        out = out.add(&SkewElement::term(c, random_affine(st, rng)));
    }
    if out.is_zero() {
        out = SkewElement::scalar(st, RatFunc::from_poly(st.rational(Q::new(1, 2))));
    }
    out
}
