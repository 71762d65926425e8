//! Finite sums `Σ a_g·g` with `a_g ∈ ℂ(U)` and `g ∈ ℤ^n⋊S_n`, multiplied by
//! `a_1μ_1 · a_2μ_2 = (a_1 μ_1(a_2)) μ_1μ_2`.

use std::collections::BTreeMap;
use std::fmt;

use crate::arith::{CycloField, ParamPoly, RatFunc};
use crate::groups::AffineElement;
use crate::setting::Setting;

#[derive(Clone, PartialEq, Eq)]
pub struct SkewElement {
    field: &'static CycloField,
    terms: BTreeMap<AffineElement, RatFunc>,
}

impl SkewElement {
    pub fn zero(field: &'static CycloField) -> SkewElement {
        SkewElement { field, terms: BTreeMap::new() }
    }

    pub fn one(st: &Setting) -> SkewElement {
        SkewElement::term(RatFunc::one(st.field), AffineElement::identity(st.n))
    }

    pub fn term(coeff: RatFunc, g: AffineElement) -> SkewElement {
        let mut out = SkewElement::zero(coeff.field());
        out.add_term(g, coeff);
        out
    }

    /// `a·id`.
    pub fn scalar(st: &Setting, a: RatFunc) -> SkewElement {
        SkewElement::term(a, AffineElement::identity(st.n))
    }

    pub fn group(st: &Setting, g: AffineElement) -> SkewElement {
        SkewElement::term(RatFunc::one(st.field), g)
    }

    pub fn poly_times(st: &Setting, a: ParamPoly, g: AffineElement) -> SkewElement {
        let _ = st;
        SkewElement::term(RatFunc::from_poly(a), g)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AffineElement, &RatFunc)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, g: AffineElement, a: RatFunc) {
        if a.is_zero() {
            return;
        }
        match self.terms.remove(&g) {
            Some(old) => {
                let sum = &old + &a;
                if !sum.is_zero() {
                    self.terms.insert(g, sum);
                }
            }
            None => {
                self.terms.insert(g, a);
            }
        }
    }

    pub fn add(&self, other: &SkewElement) -> SkewElement {
        let mut out = self.clone();
        for (g, a) in &other.terms {
            out.add_term(g.clone(), a.clone());
        }
        out
    }

    pub fn sub(&self, other: &SkewElement) -> SkewElement {
        let mut out = self.clone();
        for (g, a) in &other.terms {
            out.add_term(g.clone(), -a);
        }
        out
    }

    /// Left multiplication by a coefficient.
    pub fn scale_left(&self, a: &RatFunc) -> SkewElement {
        let mut out = SkewElement::zero(self.field);
        for (g, b) in &self.terms {
            out.add_term(g.clone(), a * b);
        }
        out
    }

    pub fn mul(&self, st: &Setting, other: &SkewElement) -> SkewElement {
        let mut out = SkewElement::zero(self.field);
        for (g1, a1) in &self.terms {
            for (g2, a2) in &other.terms {
                out.add_term(g1.mul(g2), a1 * &g1.act(st, a2));
            }
        }
        out
    }

    /// Evaluation action on ℂ(U).
    pub fn act(&self, st: &Setting, f: &RatFunc) -> RatFunc {
        let mut acc = RatFunc::zero(self.field);
        for (g, a) in &self.terms {
            acc = &acc + &(a * &g.act(st, f));
        }
        acc
    }
}

impl fmt::Debug for SkewElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Q;
    use crate::groups::Perm;

    #[test]
    fn multiplication_examples() {
        let st = Setting::new(2, 1, 2).unwrap();
        let mu = SkewElement::group(&st, AffineElement::mu(2, 1, 2));
        let u1 = SkewElement::poly_times(&st, st.u(1), AffineElement::identity(2));
        let expect =
            SkewElement::poly_times(&st, &st.u(1) + &st.hbar().scale_q(&Q::int(2)), AffineElement::mu(2, 1, 2));
        assert_eq!(mu.mul(&st, &u1), expect);

        let s = AffineElement::swap(2, 1);
        let f = SkewElement::poly_times(&st, st.u(1), s.clone());
        let g = SkewElement::poly_times(&st, &st.u(1) * &st.u(1), s);
        let expect = SkewElement::poly_times(&st, &st.u(1) * &(&st.u(2) * &st.u(2)), AffineElement::identity(2));
        assert_eq!(f.mul(&st, &g), expect);
        assert_eq!(SkewElement::one(&st).mul(&st, &f), f);
        assert_eq!(SkewElement::group(&st, Perm::identity(2).into_affine()), SkewElement::one(&st));
    }

    #[test]
    fn action_examples() {
        let st = Setting::new(2, 1, 2).unwrap();
        let u1 = RatFunc::from_poly(st.u(1));
        let back = SkewElement::group(&st, AffineElement::mu(2, 1, -2));
        assert_eq!(back.act(&st, &u1), RatFunc::from_poly(&st.u(1) - &st.hbar().scale_q(&Q::int(2))));
        let kl = RatFunc::new(st.kappa().scale_q(&Q::int(2)), &st.u(2) - &st.u(1));
        let op = SkewElement::scalar(&st, kl.clone());
        assert_eq!(op.act(&st, &RatFunc::one(st.field)), kl);
    }
}
