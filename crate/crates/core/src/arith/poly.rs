//! Sparse multivariate polynomials over ℚ(ζ_ℓ).
//!
//! Exponent vectors are packed one byte per variable into a `u128`, with
//! variable 0 in the most significant byte. Ordering `(total degree, packed)`
//! is therefore graded lexicographic with variable 0 largest. Terms are kept
//! in a vector sorted ascending, so the leading term is the last one.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::cyclo::{CycloField, CycloScalar};
use super::rational::Q;
use crate::error::{CoreError, Result};

pub const MAX_VARS: usize = 16;
const HIGH_BITS: u128 = 0x8080_8080_8080_8080_8080_8080_8080_8080;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Mono {
    deg: u16,
    packed: u128,
}

#[inline]
fn shift_of(var: usize) -> u32 {
    debug_assert!(var < MAX_VARS);
    8 * (MAX_VARS - 1 - var) as u32
}

impl Mono {
    pub const ONE: Mono = Mono { deg: 0, packed: 0 };

    pub fn var(i: usize) -> Mono {
        Mono::ONE.with_exp(i, 1)
    }

    pub fn from_exps(exps: &[u8]) -> Mono {
        assert!(exps.len() <= MAX_VARS);
        let mut m = Mono::ONE;
        for (i, &e) in exps.iter().enumerate() {
            m = m.with_exp(i, e);
        }
        m
    }

    #[inline]
    pub fn exp(&self, var: usize) -> u8 {
        ((self.packed >> shift_of(var)) & 0xff) as u8
    }

    pub fn with_exp(&self, var: usize, e: u8) -> Mono {
        assert!(e < 128, "exponent overflow");
        let old = self.exp(var);
        let packed = (self.packed & !(0xffu128 << shift_of(var))) | ((e as u128) << shift_of(var));
        Mono { deg: self.deg - old as u16 + e as u16, packed }
    }

    pub fn degree(&self) -> u16 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    #[inline]
    pub fn mul(&self, other: &Mono) -> Mono {
        let packed = self.packed + other.packed;
        assert!(packed & HIGH_BITS == 0, "exponent overflow");
        Mono { deg: self.deg + other.deg, packed }
    }

    pub fn divides(&self, other: &Mono) -> bool {
        (0..MAX_VARS).all(|i| self.exp(i) <= other.exp(i))
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Mono) -> Mono {
        debug_assert!(self.divides(other));
        Mono { deg: other.deg - self.deg, packed: other.packed - self.packed }
    }

    pub fn gcd(&self, other: &Mono) -> Mono {
        let mut m = Mono::ONE;
        for i in 0..MAX_VARS {
            let e = self.exp(i).min(other.exp(i));
            if e > 0 {
                m = m.with_exp(i, e);
            }
        }
        m
    }

    /// Bit set of variables with nonzero exponent.
    pub fn support(&self) -> u16 {
        let mut s = 0u16;
        for i in 0..MAX_VARS {
            if self.exp(i) > 0 {
                s |= 1 << i;
            }
        }
        s
    }

    pub fn exps(&self) -> [u8; MAX_VARS] {
        let mut out = [0u8; MAX_VARS];
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.exp(i);
        }
        out
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.exps();
        let last = e.iter().rposition(|&x| x > 0).map_or(0, |i| i + 1);
        write!(f, "{:?}", &e[..last])
    }
}

#[derive(Clone)]
pub struct ParamPoly {
    pub field: &'static CycloField,
    terms: Vec<(Mono, CycloScalar)>,
}

impl PartialEq for ParamPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}
impl Eq for ParamPoly {}

impl ParamPoly {
    pub fn zero(field: &'static CycloField) -> ParamPoly {
        ParamPoly { field, terms: Vec::new() }
    }

    pub fn one(field: &'static CycloField) -> ParamPoly {
        ParamPoly::constant(field.one())
    }

    pub fn constant(c: CycloScalar) -> ParamPoly {
        let field = c.field;
        if c.is_zero() {
            return ParamPoly::zero(field);
        }
        ParamPoly { field, terms: vec![(Mono::ONE, c)] }
    }

    pub fn rational(field: &'static CycloField, q: Q) -> ParamPoly {
        ParamPoly::constant(field.rational(q))
    }

    pub fn int(field: &'static CycloField, v: i64) -> ParamPoly {
        ParamPoly::constant(field.int(v))
    }

    pub fn var(field: &'static CycloField, i: usize) -> ParamPoly {
        ParamPoly::term(Mono::var(i), field.one())
    }

    pub fn term(m: Mono, c: CycloScalar) -> ParamPoly {
        let field = c.field;
        if c.is_zero() {
            return ParamPoly::zero(field);
        }
        ParamPoly { field, terms: vec![(m, c)] }
    }

    /// Build from unsorted terms, combining duplicates and dropping zeros.
    pub fn from_terms(field: &'static CycloField, mut raw: Vec<(Mono, CycloScalar)>) -> ParamPoly {
        raw.sort_unstable_by_key(|a| a.0);
        let mut terms: Vec<(Mono, CycloScalar)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            match terms.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = &*lc + &c,
                _ => {
                    if let Some((_, lc)) = terms.last() {
                        if lc.is_zero() {
                            terms.pop();
                        }
                    }
                    terms.push((m, c));
                }
            }
        }
        if terms.last().is_some_and(|(_, c)| c.is_zero()) {
            terms.pop();
        }
        ParamPoly { field, terms }
    }

    pub fn terms(&self) -> &[(Mono, CycloScalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn constant_value(&self) -> Option<CycloScalar> {
        if self.terms.is_empty() {
            Some(self.field.zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Mono, CycloScalar)> {
        self.terms.last()
    }

    pub fn total_degree(&self) -> Option<u16> {
        self.terms.last().map(|(m, _)| m.degree())
    }

    pub fn degree_in(&self, var: usize) -> u8 {
        self.terms.iter().map(|(m, _)| m.exp(var)).max().unwrap_or(0)
    }

    pub fn support(&self) -> u16 {
        self.terms.iter().fold(0, |s, (m, _)| s | m.support())
    }

    pub fn scale(&self, c: &CycloScalar) -> ParamPoly {
        if c.is_zero() {
            return ParamPoly::zero(self.field);
        }
        ParamPoly { field: self.field, terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    pub fn scale_q(&self, q: &Q) -> ParamPoly {
        if q.is_zero() {
            return ParamPoly::zero(self.field);
        }
        ParamPoly { field: self.field, terms: self.terms.iter().map(|(m, x)| (*m, x.scale(q))).collect() }
    }

    pub fn mul_mono(&self, m: &Mono, c: &CycloScalar) -> ParamPoly {
        if c.is_zero() {
            return ParamPoly::zero(self.field);
        }
        // multiplying by a monomial preserves the order
        ParamPoly { field: self.field, terms: self.terms.iter().map(|(t, x)| (t.mul(m), x * c)).collect() }
    }

    pub fn pow(&self, mut e: u32) -> ParamPoly {
        let mut base = self.clone();
        let mut acc = ParamPoly::one(self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Rename variables: variable `i` becomes `map[i]`. `map` must be injective
    /// on the support.
    pub fn rename_vars(&self, map: &[usize]) -> ParamPoly {
        let raw = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut out = Mono::ONE;
                for (i, &target) in map.iter().enumerate() {
                    let e = m.exp(i);
                    if e > 0 {
                        out = out.with_exp(target, out.exp(target) + e);
                    }
                }
                (out, c.clone())
            })
            .collect();
        ParamPoly::from_terms(self.field, raw)
    }

    pub fn swap_vars(&self, a: usize, b: usize) -> ParamPoly {
        let mut map: Vec<usize> = (0..MAX_VARS).collect();
        map.swap(a, b);
        self.rename_vars(&map)
    }

    /// Simultaneous substitution: variable `i` is replaced by `subs[i]` when
    /// present, and left alone otherwise.
    pub fn substitute(&self, subs: &[Option<ParamPoly>]) -> ParamPoly {
        let mut power_cache: Vec<Vec<ParamPoly>> = vec![Vec::new(); subs.len()];
        let mut acc: Vec<(Mono, CycloScalar)> = Vec::new();
        for (m, c) in &self.terms {
            let mut kept = Mono::ONE;
            let mut prod = ParamPoly::constant(c.clone());
            #[allow(clippy::needless_range_loop)]
            for i in 0..MAX_VARS {
                let e = m.exp(i);
                if e == 0 {
                    continue;
                }
                match subs.get(i).and_then(|s| s.as_ref()) {
                    Some(s) => {
                        let cache = &mut power_cache[i];
                        if cache.is_empty() {
                            cache.push(ParamPoly::one(self.field));
                        }
                        while cache.len() <= e as usize {
                            let next = &cache[cache.len() - 1] * s;
                            cache.push(next);
                        }
                        prod = &prod * &cache[e as usize];
                    }
                    None => kept = kept.with_exp(i, e),
                }
            }
            for (pm, pc) in prod.terms {
                acc.push((pm.mul(&kept), pc));
            }
        }
        ParamPoly::from_terms(self.field, acc)
    }

    /// Coefficients with respect to `var`: `self = Σ_k out[k]·var^k`, where the
    /// entries no longer involve `var`.
    pub fn coeffs_in(&self, var: usize) -> Vec<ParamPoly> {
        let d = self.degree_in(var) as usize;
        let mut buckets: Vec<Vec<(Mono, CycloScalar)>> = vec![Vec::new(); d + 1];
        for (m, c) in &self.terms {
            let e = m.exp(var);
            buckets[e as usize].push((m.with_exp(var, 0), c.clone()));
        }
        buckets.into_iter().map(|b| ParamPoly::from_terms(self.field, b)).collect()
    }

    pub fn from_coeffs_in(field: &'static CycloField, var: usize, coeffs: &[ParamPoly]) -> ParamPoly {
        let mut raw = Vec::new();
        for (k, c) in coeffs.iter().enumerate() {
            for (m, x) in &c.terms {
                raw.push((m.with_exp(var, m.exp(var) + k as u8), x.clone()));
            }
        }
        ParamPoly::from_terms(field, raw)
    }

    /// Exact quotient `self / g`; fails with `NonDivisible` when `g ∤ self`.
    pub fn exact_divide(&self, g: &ParamPoly) -> Result<ParamPoly> {
        let (lm, lc) = g.leading().ok_or(CoreError::NonDivisible)?.clone();
        if self.is_zero() {
            return Ok(ParamPoly::zero(self.field));
        }
        if g.terms.len() == 1 {
            let inv = lc.inv();
            let mut out = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                if !lm.divides(m) {
                    return Err(CoreError::NonDivisible);
                }
                out.push((lm.quotient_of(m), c * &inv));
            }
            return Ok(ParamPoly { field: self.field, terms: out });
        }
        let inv = lc.inv();
        let lower: Vec<(Mono, CycloScalar)> = g.terms[..g.terms.len() - 1].to_vec();
        let mut rem: BTreeMap<Mono, CycloScalar> = self.terms.iter().cloned().collect();
        let mut quot: Vec<(Mono, CycloScalar)> = Vec::new();
        while let Some((rm, rc)) = rem.pop_last() {
            if !lm.divides(&rm) {
                return Err(CoreError::NonDivisible);
            }
            let qm = lm.quotient_of(&rm);
            let qc = &rc * &inv;
            for (gm, gc) in &lower {
                let m = gm.mul(&qm);
                let delta = gc * &qc;
                match rem.entry(m) {
                    Entry::Occupied(mut e) => {
                        let v = e.get() - &delta;
                        if v.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = v;
                        }
                    }
                    Entry::Vacant(e) => {
                        e.insert(-&delta);
                    }
                }
            }
            quot.push((qm, qc));
        }
        quot.reverse();
        Ok(ParamPoly { field: self.field, terms: quot })
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> ParamPoly {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let mono = fmt_mono(m, names);
            let (neg, coeff) = match c.as_rational() {
                Some(q) => (q.is_negative(), q.abs().to_string()),
                None => (false, format!("({c})")),
            };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mono.is_empty() {
                out.push_str(&coeff);
            } else if coeff == "1" {
                out.push_str(&mono);
            } else {
                out.push_str(&coeff);
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }
}

fn fmt_mono(m: &Mono, names: &[String]) -> String {
    let mut parts = Vec::new();
    for i in 0..MAX_VARS {
        let e = m.exp(i);
        if e == 0 {
            continue;
        }
        let name = names.get(i).cloned().unwrap_or_else(|| format!("v{i}"));
        if e == 1 {
            parts.push(name);
        } else {
            parts.push(format!("{name}^{e}"));
        }
    }
    parts.join("*")
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_with(&[]))
    }
}

fn merge(a: &ParamPoly, b: &ParamPoly, negate_b: bool) -> ParamPoly {
    let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
    let (mut i, mut j) = (0, 0);
    while i < a.terms.len() || j < b.terms.len() {
        let take_a = j >= b.terms.len() || (i < a.terms.len() && a.terms[i].0 < b.terms[j].0);
        let take_b = i >= a.terms.len() || (j < b.terms.len() && b.terms[j].0 < a.terms[i].0);
        if take_a {
            out.push(a.terms[i].clone());
            i += 1;
        } else if take_b {
            let (m, c) = &b.terms[j];
            out.push((*m, if negate_b { -c } else { c.clone() }));
            j += 1;
        } else {
            let c = if negate_b { &a.terms[i].1 - &b.terms[j].1 } else { &a.terms[i].1 + &b.terms[j].1 };
            if !c.is_zero() {
                out.push((a.terms[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    ParamPoly { field: a.field, terms: out }
}

impl<'a> Add<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        merge(self, rhs, false)
    }
}

impl<'a> Sub<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        merge(self, rhs, true)
    }
}

impl<'a> Mul<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        if self.is_zero() || rhs.is_zero() {
            return ParamPoly::zero(self.field);
        }
        if rhs.terms.len() == 1 {
            return self.mul_mono(&rhs.terms[0].0, &rhs.terms[0].1);
        }
        if self.terms.len() == 1 {
            return rhs.mul_mono(&self.terms[0].0, &self.terms[0].1);
        }
        let mut raw = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                raw.push((ma.mul(mb), ca * cb));
            }
        }
        ParamPoly::from_terms(self.field, raw)
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly { field: self.field, terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<ParamPoly> for ParamPoly {
            type Output = ParamPoly;
            fn $m(self, rhs: ParamPoly) -> ParamPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a ParamPoly> for ParamPoly {
            type Output = ParamPoly;
            fn $m(self, rhs: &ParamPoly) -> ParamPoly {
                (&self).$m(rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> &'static CycloField {
        CycloField::get(3)
    }

    fn v(i: usize) -> ParamPoly {
        ParamPoly::var(f(), i)
    }

    #[test]
    fn grlex_order_puts_first_variable_highest() {
        let a = Mono::var(0);
        let b = Mono::var(1);
        assert!(a > b);
        assert!(Mono::var(5).mul(&Mono::var(5)) > a);
        assert!(Mono::from_exps(&[1, 1]) > Mono::from_exps(&[0, 2]));
    }

    #[test]
    fn difference_of_squares_divides() {
        let (u1, u2) = (v(0), v(1));
        let num = &(&u2 * &u2) - &(&u1 * &u1);
        let q = num.exact_divide(&(&u2 - &u1)).unwrap();
        assert_eq!(q, &u2 + &u1);
        assert!(ParamPoly::zero(f()).exact_divide(&u1).unwrap().is_zero());
        assert_eq!((&u1 + &ParamPoly::int(f(), 1)).exact_divide(&u2), Err(CoreError::NonDivisible));
    }

    #[test]
    fn parameter_divided_difference() {
        let (u1, u2, h, s0) = (v(0), v(1), v(2), v(4));
        let g = |u: &ParamPoly| &(u + &h) * &(u - &s0);
        let num = &g(&u1) - &g(&u2);
        let q = num.exact_divide(&(&u1 - &u2)).unwrap();
        assert_eq!(q, &(&(&u1 + &u2) + &h) - &s0);
    }

    #[test]
    fn substitution_is_a_homomorphism() {
        let (u1, u2, h) = (v(0), v(1), v(2));
        let a = &(&u1 * &u2) + &h;
        let b = &u1 - &(&u2 * &u2);
        let mut subs = vec![None; 3];
        subs[0] = Some(&u1 + &h.scale_q(&Q::int(2)));
        let lhs = (&a * &b).substitute(&subs);
        let rhs = &a.substitute(&subs) * &b.substitute(&subs);
        assert_eq!(lhs, rhs);
        assert_eq!((&a * &b).swap_vars(0, 1), &a.swap_vars(0, 1) * &b.swap_vars(0, 1));
    }

    #[test]
    fn coefficient_view_round_trips() {
        let (u1, u2, h) = (v(0), v(1), v(2));
        let a = &(&(&u1 * &u1) * &u2) + &(&h * &u1);
        let cs = a.coeffs_in(0);
        assert_eq!(cs.len(), 3);
        assert_eq!(ParamPoly::from_coeffs_in(f(), 0, &cs), a);
    }
}
