//! Multivariate gcd over ℚ(ζ_ℓ).
//!
//! Remainder sequences are avoided: on coprime inputs they end in the
//! resultant, whose degree in the other variables explodes. Instead, cheap
//! reductions come first (a variable present in only one argument, exact
//! divisibility, and a per-variable degree bound from a univariate image,
//! where a bound of zero reduces to contents). What is left goes to a dense
//! evaluation/interpolation gcd in one variable.

use std::collections::BTreeMap;

use super::cyclo::CycloScalar;
use super::poly::{Mono, ParamPoly, MAX_VARS};

/// Monic gcd (leading coefficient 1 in grlex order). `gcd(0, 0) = 0`.
pub fn gcd(a: &ParamPoly, b: &ParamPoly) -> ParamPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return ParamPoly::one(a.field);
    }
    if a.len() == 1 || b.len() == 1 {
        let (mono, other) = if a.len() == 1 { (a, b) } else { (b, a) };
        let mut g = mono.terms()[0].0;
        for (m, _) in other.terms() {
            g = g.gcd(m);
            if g.is_one() {
                break;
            }
        }
        return ParamPoly::term(g, a.field.one());
    }
    let (sa, sb) = (a.support(), b.support());
    if sa & !sb != 0 {
        return gcd_with_coeffs(b, a, (sa & !sb).trailing_zeros() as usize);
    }
    if sb & !sa != 0 {
        return gcd_with_coeffs(a, b, (sb & !sa).trailing_zeros() as usize);
    }
    if let Some(g) = divides_either(a, b) {
        return g;
    }
    let vars: Vec<usize> = (0..MAX_VARS).filter(|&v| (sa | sb) & (1 << v) != 0).collect();
    for &v in &vars {
        if degree_bound(a, b, v) == 0 {
            return gcd(&content(a, v), &content(b, v));
        }
    }
    if let [x] = vars[..] {
        return univariate_gcd(a, b, x).monic();
    }
    let y = *vars.iter().min_by_key(|&&v| (a.degree_in(v).min(b.degree_in(v)), v)).expect("nonconstant");
    interpolation_gcd(a, b, y)
}

fn divides_either(a: &ParamPoly, b: &ParamPoly) -> Option<ParamPoly> {
    let (small, big) = if a.total_degree() <= b.total_degree() { (a, b) } else { (b, a) };
    if big.exact_divide(small).is_ok() {
        return Some(small.monic());
    }
    None
}

/// gcd(g, f) where `x` occurs in `f` but not in `g`: the answer divides every
/// coefficient of `f` with respect to `x`.
fn gcd_with_coeffs(g: &ParamPoly, f: &ParamPoly, x: usize) -> ParamPoly {
    let mut acc = g.monic();
    for c in f.coeffs_in(x) {
        if c.is_zero() {
            continue;
        }
        acc = gcd(&acc, &c);
        if acc.is_one() {
            break;
        }
    }
    acc
}

/// An upper bound for the degree of `gcd(a, b)` in `x`, from the gcd of the
/// images under evaluating every other variable at a fixed integer point.
/// The bound is valid whenever the evaluation keeps the `x`-degree of `a`.
fn degree_bound(a: &ParamPoly, b: &ParamPoly, x: usize) -> u8 {
    let trivial = a.degree_in(x).min(b.degree_in(x));
    for attempt in 0..3i64 {
        let subs: Vec<Option<ParamPoly>> = (0..MAX_VARS)
            .map(|v| (v != x).then(|| ParamPoly::int(a.field, 3 + 7 * v as i64 + 11 * attempt)))
            .collect();
        let (ia, ib) = (a.substitute(&subs), b.substitute(&subs));
        if ia.degree_in(x) != a.degree_in(x) || ib.is_zero() {
            continue;
        }
        return univariate_gcd(&ia, &ib, x).degree_in(x).min(trivial);
    }
    trivial
}

/// Euclid's algorithm for polynomials in `x` alone.
fn univariate_gcd(a: &ParamPoly, b: &ParamPoly, x: usize) -> ParamPoly {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    while !r1.is_zero() {
        let db = r1.degree_in(x);
        let lb_inv = lc_in(&r1, x).constant_value().expect("univariate").inv();
        let mut r = r0;
        while !r.is_zero() && r.degree_in(x) >= db {
            let c = &lc_in(&r, x).constant_value().expect("univariate") * &lb_inv;
            let shift = Mono::var(x).with_exp(x, r.degree_in(x) - db);
            r = &r - &r1.mul_mono(&shift, &c);
        }
        (r0, r1) = (r1, r);
    }
    r0
}

/// Monic gcd of the coefficients with respect to `x`.
pub fn content(f: &ParamPoly, x: usize) -> ParamPoly {
    let mut acc = ParamPoly::zero(f.field);
    for c in f.coeffs_in(x) {
        if c.is_zero() {
            continue;
        }
        acc = gcd(&acc, &c);
        if acc.is_one() {
            break;
        }
    }
    acc
}

fn lc_in(f: &ParamPoly, x: usize) -> ParamPoly {
    f.coeffs_in(x).pop().unwrap_or_else(|| ParamPoly::zero(f.field))
}

/// Coefficients of `f` as polynomials in `y` alone, keyed by the monomial in
/// the other variables (ascending, so the last entry leads).
fn y_coeffs(f: &ParamPoly, y: usize) -> Vec<ParamPoly> {
    let mut by_rest: BTreeMap<Mono, Vec<(Mono, CycloScalar)>> = BTreeMap::new();
    for (m, c) in f.terms() {
        let ypart = Mono::ONE.with_exp(y, m.exp(y));
        by_rest.entry(m.with_exp(y, 0)).or_default().push((ypart, c.clone()));
    }
    by_rest.into_values().map(|t| ParamPoly::from_terms(f.field, t)).collect()
}

/// Monic gcd in `K[y]` of the `y`-coefficients.
fn y_content(f: &ParamPoly, y: usize) -> ParamPoly {
    let mut acc = ParamPoly::zero(f.field);
    for c in y_coeffs(f, y) {
        acc = univariate_gcd(&acc, &c, y).monic();
        if acc.is_one() {
            break;
        }
    }
    acc
}

fn eval_at(f: &ParamPoly, y: usize, v: i64) -> ParamPoly {
    let mut subs: Vec<Option<ParamPoly>> = vec![None; MAX_VARS];
    subs[y] = Some(ParamPoly::int(f.field, v));
    f.substitute(&subs)
}

/// Brown's dense gcd: evaluate `y` at integer points, take gcds of the
/// images (with one variable fewer), scale them to the gcd `γ` of the leading
/// coefficients, and Newton-interpolate in `y` until the candidate divides.
fn interpolation_gcd(a: &ParamPoly, b: &ParamPoly, y: usize) -> ParamPoly {
    let field = a.field;
    let (ca, cb) = (y_content(a, y), y_content(b, y));
    let pa = a.exact_divide(&ca).expect("content divides");
    let pb = b.exact_divide(&cb).expect("content divides");
    let c = univariate_gcd(&ca, &cb, y).monic();
    let la = y_coeffs(&pa, y).pop().expect("nonzero");
    let lb = y_coeffs(&pb, y).pop().expect("nonzero");
    let gamma = univariate_gcd(&la, &lb, y).monic();
    let bound = (gamma.degree_in(y) + pa.degree_in(y).min(pb.degree_in(y))) as usize + 1;
    let yvar = ParamPoly::var(field, y);

    let mut lead: Option<Mono> = None;
    let (mut h, mut newton, mut points) = (ParamPoly::zero(field), ParamPoly::one(field), 0usize);
    for y0 in 1i64.. {
        if eval_at(&la, y, y0).is_zero() || eval_at(&lb, y, y0).is_zero() {
            continue;
        }
        let g0 = gcd(&eval_at(&pa, y, y0), &eval_at(&pb, y, y0));
        if g0.is_one() {
            return c;
        }
        let scale = eval_at(&gamma, y, y0).constant_value().expect("univariate");
        let g0 = g0.scale(&scale);
        let m0 = g0.leading().expect("nonzero").0;
        let shift = &yvar - &ParamPoly::int(field, y0);
        match lead {
            Some(m) if m0 > m => continue,
            Some(m) if m0 == m => {
                let nv = eval_at(&newton, y, y0).constant_value().expect("univariate");
                let delta = &g0 - &eval_at(&h, y, y0);
                let stable = delta.is_zero();
                h = &h + &(&delta * &newton).scale(&nv.inv());
                newton = &newton * &shift;
                points += 1;
                if stable || points >= bound {
                    let cand = h.exact_divide(&y_content(&h, y)).expect("content divides");
                    if pa.exact_divide(&cand).is_ok() && pb.exact_divide(&cand).is_ok() {
                        return (&c * &cand).monic();
                    }
                    if points >= bound {
                        lead = None;
                    }
                }
            }
            _ => {
                lead = Some(m0);
                (h, newton, points) = (g0, shift, 1);
            }
        }
    }
    unreachable!("integer points are unbounded")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::cyclo::CycloField;

    fn v(i: usize) -> ParamPoly {
        ParamPoly::var(CycloField::get(4), i)
    }

    #[test]
    fn recovers_common_factor() {
        let (x, y, z) = (v(0), v(1), v(2));
        let one = ParamPoly::one(x.field);
        let common = &(&x + &y) * &(&z - &one);
        let a = &common * &(&x - &(&y * &y));
        let b = &common * &(&(&x * &z) + &one);
        assert_eq!(gcd(&a, &b), common.monic());
    }

    #[test]
    fn dense_coprime_inputs_are_fast() {
        // a remainder sequence on these runs into a huge resultant
        let (x, y, z) = (v(0), v(1), v(2));
        let one = ParamPoly::one(x.field);
        let f = &(&(&x * &x) - &(&y * &z)) + &(&z * &z);
        let g = &(&(&y * &y) + &(&x * &z)) - &one;
        let a = &(&f.pow(3) * &(&x - &y)) + &z;
        let b = &(&g.pow(3) * &(&y + &z)) - &x;
        assert!(gcd(&a, &b).is_one());
        let common = &(&x + &y) - &(&z * &z);
        assert_eq!(gcd(&(&a * &common), &(&b * &common)), common.monic());
    }

    #[test]
    fn coprime_gives_one() {
        let (x, y) = (v(0), v(1));
        assert!(gcd(&(&x + &y), &(&x - &y)).is_one());
    }

    #[test]
    fn cyclotomic_coefficients() {
        let (x, y) = (v(0), v(1));
        let i = ParamPoly::constant(x.field.zeta_pow(1));
        let f1 = &x - &(&i * &y);
        let a = &f1 * &(&x + &y);
        let b = &f1 * &(&x + &(&i * &i));
        assert_eq!(gcd(&a, &b), f1.monic());
    }
}
