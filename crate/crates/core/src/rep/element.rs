//! Elements of the polynomial representation: finite sums `Σ_b f_b(U)·T^b`
//! with `T`-exponents taken mod ℓ.
//!
//! Internally the full `T`-lattice is allowed; the subring condition
//! `Σ b_i ≡ 0 (mod p)` is checked only where callers ask for it.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::poly::Mono;
use crate::arith::{CycloField, CycloScalar, ParamPoly};
use crate::error::{CoreError, Result};
use crate::setting::{Setting, MAX_RANK};

pub type TExp = [u8; MAX_RANK];

#[derive(Clone, PartialEq, Eq)]
pub struct PolyRepElement {
    pub(crate) field: &'static CycloField,
    pub(crate) terms: BTreeMap<TExp, ParamPoly>,
}

impl PolyRepElement {
    pub fn zero(field: &'static CycloField) -> PolyRepElement {
        PolyRepElement { field, terms: BTreeMap::new() }
    }

    pub fn one(field: &'static CycloField) -> PolyRepElement {
        PolyRepElement::from_poly(ParamPoly::one(field))
    }

    /// A `T`-free element.
    pub fn from_poly(f: ParamPoly) -> PolyRepElement {
        PolyRepElement::monomial(f, [0; MAX_RANK])
    }

    pub fn monomial(f: ParamPoly, texp: TExp) -> PolyRepElement {
        let field = f.field;
        let mut terms = BTreeMap::new();
        if !f.is_zero() {
            terms.insert(texp, f);
        }
        PolyRepElement { field, terms }
    }

    /// `T^b` with b reduced mod ℓ.
    pub fn t_monomial(st: &Setting, b: &[i64]) -> PolyRepElement {
        PolyRepElement::monomial(st.one(), reduce_texp(st, b))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(texp, coefficient)` pairs, coefficients may involve the U variables.
    pub fn t_terms(&self) -> impl Iterator<Item = (&TExp, &ParamPoly)> {
        self.terms.iter()
    }

    /// Fully expanded terms `(uexp, texp, coefficient free of U)`.
    pub fn terms(&self, st: &Setting) -> Vec<(Vec<u8>, TExp, ParamPoly)> {
        let mut out = Vec::new();
        for (b, f) in &self.terms {
            let mut by_u: BTreeMap<Vec<u8>, Vec<(Mono, CycloScalar)>> = BTreeMap::new();
            for (m, c) in f.terms() {
                let mut rest = *m;
                let mut uexp = Vec::with_capacity(st.n);
                for i in 1..=st.n {
                    let v = st.u_var(i);
                    uexp.push(m.exp(v));
                    rest = rest.with_exp(v, 0);
                }
                by_u.entry(uexp).or_default().push((rest, c.clone()));
            }
            for (uexp, raw) in by_u {
                out.push((uexp, *b, ParamPoly::from_terms(self.field, raw)));
            }
        }
        out
    }

    pub fn coeff(&self, texp: &TExp) -> ParamPoly {
        self.terms.get(texp).cloned().unwrap_or_else(|| ParamPoly::zero(self.field))
    }

    pub(crate) fn add_term(&mut self, texp: TExp, f: ParamPoly) {
        if f.is_zero() {
            return;
        }
        match self.terms.get_mut(&texp) {
            Some(old) => {
                let sum = &*old + &f;
                if sum.is_zero() {
                    self.terms.remove(&texp);
                } else {
                    *old = sum;
                }
            }
            None => {
                self.terms.insert(texp, f);
            }
        }
    }

    pub fn scale(&self, c: &ParamPoly) -> PolyRepElement {
        let mut out = PolyRepElement::zero(self.field);
        if c.is_zero() {
            return out;
        }
        for (b, f) in &self.terms {
            out.add_term(*b, f * c);
        }
        out
    }

    pub fn scale_scalar(&self, c: &CycloScalar) -> PolyRepElement {
        let mut out = PolyRepElement::zero(self.field);
        for (b, f) in &self.terms {
            out.add_term(*b, f.scale(c));
        }
        out
    }

    /// Multiply by `T^b`.
    pub fn shift_t(&self, st: &Setting, b: &TExp) -> PolyRepElement {
        let ell = st.ell as u8;
        let mut out = PolyRepElement::zero(self.field);
        for (a, f) in &self.terms {
            let mut c = *a;
            for i in 0..st.n {
                c[i] = ((a[i] as u16 + b[i] as u16) % ell as u16) as u8;
            }
            out.add_term(c, f.clone());
        }
        out
    }

    /// Ring product in 𝒫.
    pub fn mul(&self, st: &Setting, other: &PolyRepElement) -> PolyRepElement {
        let mut acc: BTreeMap<TExp, Vec<(Mono, CycloScalar)>> = BTreeMap::new();
        for (b, g) in &other.terms {
            for (a, f) in &self.terms {
                let mut c = *a;
                for i in 0..st.n {
                    c[i] = ((a[i] as u16 + b[i] as u16) % st.ell as u16) as u8;
                }
                let bucket = acc.entry(c).or_default();
                for (ma, ca) in f.terms() {
                    for (mb, cb) in g.terms() {
                        bucket.push((ma.mul(mb), ca * cb));
                    }
                }
            }
        }
        let mut out = PolyRepElement::zero(self.field);
        for (c, raw) in acc {
            let p = ParamPoly::from_terms(self.field, raw);
            if !p.is_zero() {
                out.terms.insert(c, p);
            }
        }
        out
    }

    /// Apply a map to every coefficient polynomial.
    pub fn map_coeffs(&self, mut f: impl FnMut(&ParamPoly) -> ParamPoly) -> PolyRepElement {
        let mut out = PolyRepElement::zero(self.field);
        for (b, g) in &self.terms {
            out.add_term(*b, f(g));
        }
        out
    }

    pub fn t_sum(texp: &TExp, n: usize) -> i64 {
        texp[..n].iter().map(|&x| x as i64).sum()
    }

    /// Every stored T-exponent satisfies `Σ b_i ≡ 0 (mod p)`.
    pub fn in_subring(&self, st: &Setting) -> bool {
        self.terms.keys().all(|b| PolyRepElement::t_sum(b, st.n) % st.p as i64 == 0)
    }

    pub fn check_subring(&self, st: &Setting) -> Result<()> {
        for b in self.terms.keys() {
            let sum = PolyRepElement::t_sum(b, st.n);
            if sum % st.p as i64 != 0 {
                return Err(CoreError::SubringViolation { sum, p: st.p });
            }
        }
        Ok(())
    }

    /// Maximal total U-degree.
    pub fn u_degree(&self, st: &Setting) -> u32 {
        self.terms
            .values()
            .flat_map(|f| f.terms().iter().map(|(m, _)| (1..=st.n).map(|i| m.exp(st.u_var(i)) as u32).sum::<u32>()))
            .max()
            .unwrap_or(0)
    }

    /// Canonical text: T-groups in ascending exponent order, each coefficient in
    /// descending grlex order.
    pub fn to_text(&self, st: &Setting) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let names = st.var_names();
        let mut parts: Vec<String> = Vec::new();
        for (b, f) in &self.terms {
            let tmono: Vec<String> = (0..st.n)
                .filter(|&i| b[i] > 0)
                .map(|i| if b[i] == 1 { format!("T{}", i + 1) } else { format!("T{}^{}", i + 1, b[i]) })
                .collect();
            let body = f.fmt_with(&names);
            if tmono.is_empty() {
                parts.push(body);
            } else if f.len() == 1 && body == "1" {
                parts.push(tmono.join("*"));
            } else {
                parts.push(format!("({body})*{}", tmono.join("*")));
            }
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            if let Some(rest) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        out
    }
}

pub fn reduce_texp(st: &Setting, b: &[i64]) -> TExp {
    let mut out = [0u8; MAX_RANK];
    for (i, &x) in b.iter().enumerate().take(st.n) {
        out[i] = x.rem_euclid(st.ell as i64) as u8;
    }
    out
}

impl fmt::Debug for PolyRepElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (b, g) in &self.terms {
            m.entry(b, g);
        }
        m.finish()
    }
}

impl<'a> Add<&'a PolyRepElement> for &'a PolyRepElement {
    type Output = PolyRepElement;
    fn add(self, rhs: &PolyRepElement) -> PolyRepElement {
        let mut out = self.clone();
        for (b, f) in &rhs.terms {
            out.add_term(*b, f.clone());
        }
        out
    }
}

impl<'a> Sub<&'a PolyRepElement> for &'a PolyRepElement {
    type Output = PolyRepElement;
    fn sub(self, rhs: &PolyRepElement) -> PolyRepElement {
        let mut out = self.clone();
        for (b, f) in &rhs.terms {
            out.add_term(*b, -f);
        }
        out
    }
}

impl Neg for &PolyRepElement {
    type Output = PolyRepElement;
    fn neg(self) -> PolyRepElement {
        self.map_coeffs(|f| -f)
    }
}

/// Multiplication by a coefficient polynomial (commutes with everything in 𝒫).
impl<'a> Mul<&'a ParamPoly> for &'a PolyRepElement {
    type Output = PolyRepElement;
    fn mul(self, rhs: &ParamPoly) -> PolyRepElement {
        self.scale(rhs)
    }
}
