//! Both directions of the dictionary between `e'He'` and `ℂ(U)⋆(T⋊S_n)`.
//!
//! Both directions are compared as actions on ℂ(U), never as formal
//! expressions.

use std::fmt;

use crate::arith::{ParamPoly, RatFunc, Q};
use crate::error::Result;
use crate::galois::skew::SkewElement;
use crate::groups::{AffineElement, Perm};
use crate::psph::{closed_form_action, PsphGenerator};
use crate::setting::{Mutation, Setting};

fn kl(st: &Setting) -> ParamPoly {
    st.kappa().scale_q(&Q::int(st.ell as i64))
}

fn h(st: &Setting, k: i64) -> ParamPoly {
    st.hbar().scale_q(&Q::int(k))
}

/// The image of a partially spherical generator in the skew ring.
///
/// For `(i,i+1)` the coefficient of `s_{i,i+1}` is `1 + κℓ/(U_{i+1}-U_i)`;
/// with a minus sign the image would not reproduce the (i,i+1) rule (see
/// the test `literal_swap_sign_is_wrong`).
pub fn to_skew(st: &Setting, g: PsphGenerator) -> Result<SkewElement> {
    g.validate(st)?;
    let n = st.n;
    let (ell, lp) = (st.ell as i64, (st.ell / st.p) as i64);
    let id = AffineElement::identity(n);
    let swaps = |range: Vec<usize>| {
        range.into_iter().fold(AffineElement::identity(n), |acc, i| acc.mul(&AffineElement::swap(n, i)))
    };
    Ok(match g {
        PsphGenerator::UGen(i) => SkewElement::poly_times(st, st.u(i), id),
        PsphGenerator::SwapGen(i) => {
            let c = RatFunc::new(kl(st), &st.u(i + 1) - &st.u(i));
            SkewElement::term(&RatFunc::one(st.field) + &c, AffineElement::swap(n, i))
                .sub(&SkewElement::scalar(st, c))
        }
        PsphGenerator::XSigma => {
            // Π_m (U_1 + ℓħ - s_m) · μ_1^ℓ s_{1,2} s_{2,3} ⋯ s_{n-1,n}
            let pre = st.shifted_product(1, &h(st, ell), ell, false);
            SkewElement::poly_times(st, pre, AffineElement::mu(n, 1, ell).mul(&swaps((1..n).collect())))
        }
        PsphGenerator::YTau => {
            // μ_n^{-ℓ} s_{n-1,n} ⋯ s_{1,2}
            SkewElement::group(st, AffineElement::mu(n, n, -ell).mul(&swaps((1..n).rev().collect())))
        }
        PsphGenerator::SigmaPower => {
            let mut pre = st.one();
            for i in 1..=n {
                pre = &pre * &st.shifted_product(i, &h(st, lp), lp, false);
            }
            SkewElement::poly_times(st, pre, AffineElement::diagonal(n, lp))
        }
        PsphGenerator::TauPower => SkewElement::group(st, AffineElement::diagonal(n, -lp)),
        PsphGenerator::Mixed(i, k) => {
            let klp = k as i64 * lp;
            let mut pre = st.one();
            for j in 1..=i {
                pre = &pre * &st.shifted_product(j, &h(st, klp), klp, false);
            }
            let mut g = AffineElement::diagonal(n, klp);
            for j in i + 1..=n {
                g = g.mul(&AffineElement::mu(n, j, -ell));
            }
            // s̃_i sends U_1, …, U_n to U_{i+1}, …, U_n, U_1, …, U_i
            let images: Vec<usize> = (0..n).map(|j| (j + i) % n + 1).collect();
            let rot = Perm::from_images(&images).expect("rotation");
            SkewElement::poly_times(st, pre, g.mul(&AffineElement::from_perm(rot)))
        }
    })
}

/// Generators of `T⋊S_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum AffineGenerator {
    /// `s_{i,i+1}`
    Swap(usize),
    /// `μ_i^ℓ`
    MuPos(usize),
    /// `μ_i^{-ℓ}`
    MuNeg(usize),
    /// `(μ_1⋯μ_n)^{ℓ/p}`
    DiagPos,
    /// `(μ_1⋯μ_n)^{-ℓ/p}`
    DiagNeg,
}

impl AffineGenerator {
    pub fn all(st: &Setting) -> Vec<AffineGenerator> {
        let mut out: Vec<AffineGenerator> = (1..st.n).map(AffineGenerator::Swap).collect();
        out.extend((1..=st.n).map(AffineGenerator::MuPos));
        out.extend((1..=st.n).map(AffineGenerator::MuNeg));
        out.extend([AffineGenerator::DiagPos, AffineGenerator::DiagNeg]);
        out
    }

    pub fn element(&self, st: &Setting) -> AffineElement {
        let (n, ell, lp) = (st.n, st.ell as i64, (st.ell / st.p) as i64);
        match *self {
            AffineGenerator::Swap(i) => AffineElement::swap(n, i),
            AffineGenerator::MuPos(i) => AffineElement::mu(n, i, ell),
            AffineGenerator::MuNeg(i) => AffineElement::mu(n, i, -ell),
            AffineGenerator::DiagPos => AffineElement::diagonal(n, lp),
            AffineGenerator::DiagNeg => AffineElement::diagonal(n, -lp),
        }
    }
}

impl fmt::Display for AffineGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AffineGenerator::Swap(i) => write!(f, "s{i}"),
            AffineGenerator::MuPos(i) => write!(f, "mu{i}^l"),
            AffineGenerator::MuNeg(i) => write!(f, "mu{i}^-l"),
            AffineGenerator::DiagPos => write!(f, "diag^l/p"),
            AffineGenerator::DiagNeg => write!(f, "diag^-l/p"),
        }
    }
}

/// An operator on ℂ(U) built from closed-form generator actions.
#[derive(Clone, Debug)]
pub enum DictOp {
    Gen(PsphGenerator),
    /// Multiplication by a rational function.
    Coef(RatFunc),
    /// Composition; the last entry acts first.
    Compose(Vec<DictOp>),
    Sum(Vec<DictOp>),
}

impl DictOp {
    pub fn eval(&self, st: &Setting, f: &RatFunc) -> Result<RatFunc> {
        Ok(match self {
            DictOp::Gen(g) => closed_form_action(st, *g, f)?,
            DictOp::Coef(c) => c * f,
            DictOp::Compose(ops) => {
                let mut acc = f.clone();
                for op in ops.iter().rev() {
                    acc = op.eval(st, &acc)?;
                }
                acc
            }
            DictOp::Sum(ops) => {
                let mut acc = RatFunc::zero(st.field);
                for op in ops {
                    acc = &acc + &op.eval(st, f)?;
                }
                acc
            }
        })
    }
}

/// `s_{i,i+1} = (Δ/(Δ+κℓ))·(i,i+1) + κℓ/(Δ+κℓ)` with `Δ = U_{i+1} - U_i`.
fn swap_op(st: &Setting, i: usize) -> DictOp {
    let delta = &st.u(i + 1) - &st.u(i);
    let denom = &delta + &kl(st);
    let main = DictOp::Compose(vec![DictOp::Coef(RatFunc::new(delta, denom.clone())), DictOp::Gen(PsphGenerator::SwapGen(i))]);
    if st.is_mutated(Mutation::DictSwapNoCorrection) {
        main
    } else {
        DictOp::Sum(vec![main, DictOp::Coef(RatFunc::new(kl(st), denom))])
    }
}

fn swap_chain(st: &Setting, idx: impl Iterator<Item = usize>) -> Vec<DictOp> {
    idx.map(|i| swap_op(st, i)).collect()
}

/// An expression in the closed-form generators that acts like `a`.
pub fn from_skew(st: &Setting, a: AffineGenerator) -> DictOp {
    let n = st.n;
    let (ell, lp) = (st.ell as i64, (st.ell / st.p) as i64);
    match a {
        AffineGenerator::Swap(i) => swap_op(st, i),
        AffineGenerator::MuPos(i) => {
            // (1/Π_m(U_i + ℓħ - s_m)) s_{i,…,1} x_1^{ℓ-1}σ s_{n,…,i}
            let pre = st.shifted_product(i, &h(st, ell), ell, false);
            let mut ops = vec![DictOp::Coef(RatFunc::new(st.one(), pre))];
            ops.extend(swap_chain(st, (1..i).rev()));
            ops.push(DictOp::Gen(PsphGenerator::XSigma));
            ops.extend(swap_chain(st, (i..n).rev()));
            DictOp::Compose(ops)
        }
        AffineGenerator::MuNeg(i) => {
            // s_{i,…,n} y_n^{ℓ-1}τ s_{1,…,i}
            let mut ops = swap_chain(st, i..n);
            ops.push(DictOp::Gen(PsphGenerator::YTau));
            ops.extend(swap_chain(st, 1..i));
            DictOp::Compose(ops)
        }
        AffineGenerator::DiagPos => {
            let mut pre = st.one();
            for i in 1..=n {
                pre = &pre * &st.shifted_product(i, &h(st, lp), lp, false);
            }
            DictOp::Compose(vec![DictOp::Coef(RatFunc::new(st.one(), pre)), DictOp::Gen(PsphGenerator::SigmaPower)])
        }
        AffineGenerator::DiagNeg => DictOp::Gen(PsphGenerator::TauPower),
    }
}

/// ℤ/p degree carried by a translation in T: every coordinate is congruent
/// to `d·ℓ/p` mod ℓ.
pub fn lattice_degree(st: &Setting, g: &AffineElement) -> Option<u32> {
    if !g.in_lattice(st.ell, st.p) {
        return None;
    }
    let lp = (st.ell / st.p) as i64;
    Some((g.shift[0].rem_euclid(st.ell as i64) / lp) as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn to_skew_examples() {
        let st = Setting::new(2, 1, 2).unwrap();
        let tp = to_skew(&st, PsphGenerator::TauPower).unwrap();
        assert_eq!(tp, SkewElement::group(&st, AffineElement::diagonal(2, -2)));
        let u = to_skew(&st, PsphGenerator::UGen(2)).unwrap();
        assert_eq!(u, SkewElement::poly_times(&st, st.u(2), AffineElement::identity(2)));
    }

    #[test]
    fn literal_swap_sign_is_wrong() {
        let st = Setting::new(2, 1, 2).unwrap();
        let f = RatFunc::from_poly(st.u(1));
        let c = RatFunc::new(kl(&st), &st.u(2) - &st.u(1));
        let literal = SkewElement::term(&RatFunc::one(st.field) - &c, AffineElement::swap(2, 1))
            .sub(&SkewElement::scalar(&st, c));
        let expect = closed_form_action(&st, PsphGenerator::SwapGen(1), &f).unwrap();
        assert_ne!(literal.act(&st, &f), expect);
        assert_eq!(to_skew(&st, PsphGenerator::SwapGen(1)).unwrap().act(&st, &f), expect);
    }

    #[test]
    fn literal_swap_inverse_is_wrong() {
        // coefficient κℓ/Δ on the identity in place of κℓ/(Δ+κℓ)
        let st = Setting::new(2, 1, 2).unwrap();
        let delta = &st.u(2) - &st.u(1);
        let literal = DictOp::Sum(vec![
            DictOp::Compose(vec![
                DictOp::Coef(RatFunc::new(delta.clone(), &delta + &kl(&st))),
                DictOp::Gen(PsphGenerator::SwapGen(1)),
            ]),
            DictOp::Coef(RatFunc::new(kl(&st), delta)),
        ]);
        let f = RatFunc::from_poly(st.u(1));
        assert_ne!(literal.eval(&st, &f).unwrap(), RatFunc::from_poly(st.u(2)));
        assert_eq!(from_skew(&st, AffineGenerator::Swap(1)).eval(&st, &f).unwrap(), RatFunc::from_poly(st.u(2)));
    }

    #[test]
    fn from_skew_diag_neg_is_tau_power() {
        let st = Setting::new(4, 2, 2).unwrap();
        assert!(matches!(from_skew(&st, AffineGenerator::DiagNeg), DictOp::Gen(PsphGenerator::TauPower)));
    }
}
