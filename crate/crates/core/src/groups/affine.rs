//! Elements `μ^v·w` of ℤ^n⋊S_n acting on ℂ(U) by
//! `μ_i^{±1}(U_j) = U_j ± ħδ_ij` and `w(U_j) = U_{w(j)}`.

use std::fmt;

use crate::arith::{ParamPoly, RatFunc, Q};
use crate::error::{CoreError, Result};
use crate::groups::perm::Perm;
use crate::setting::Setting;

/// `μ^shift · perm`; the translation is stored in units of ħ.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineElement {
    pub shift: Vec<i64>,
    pub perm: Perm,
}

impl AffineElement {
    pub fn identity(n: usize) -> AffineElement {
        AffineElement { shift: vec![0; n], perm: Perm::identity(n) }
    }

    pub fn new(shift: Vec<i64>, perm: Perm) -> Result<AffineElement> {
        if shift.len() != perm.len() {
            return Err(CoreError::InconsistentLength { expected: perm.len(), got: shift.len() });
        }
        Ok(AffineElement { shift, perm })
    }

    /// `μ_i^k`.
    pub fn mu(n: usize, i: usize, k: i64) -> AffineElement {
        let mut shift = vec![0; n];
        shift[i - 1] = k;
        AffineElement { shift, perm: Perm::identity(n) }
    }

    /// `(μ_1⋯μ_n)^k`.
    pub fn diagonal(n: usize, k: i64) -> AffineElement {
        AffineElement { shift: vec![k; n], perm: Perm::identity(n) }
    }

    /// `s_{i,i+1}`.
    pub fn swap(n: usize, i: usize) -> AffineElement {
        AffineElement::from_perm(Perm::transposition(n, i, i + 1))
    }

    pub fn from_perm(perm: Perm) -> AffineElement {
        AffineElement { shift: vec![0; perm.len()], perm }
    }

    pub fn n(&self) -> usize {
        self.shift.len()
    }

    /// `μ^a w · μ^b v = μ^{a + w(b)} wv`.
    pub fn mul(&self, other: &AffineElement) -> AffineElement {
        let moved = self.perm.permute_vec(&other.shift);
        let shift = self.shift.iter().zip(&moved).map(|(a, b)| a + b).collect();
        AffineElement { shift, perm: self.perm.compose(&other.perm) }
    }

    pub fn inverse(&self) -> AffineElement {
        let winv = self.perm.inverse();
        let shift = winv.permute_vec(&self.shift).into_iter().map(|a| -a).collect();
        AffineElement { shift, perm: winv }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && self.shift.iter().all(|&a| a == 0)
    }

    /// Translation part lies in `T = ⟨ℓe_i, (ℓ/p)(1,…,1)⟩`.
    pub fn in_lattice(&self, ell: u32, p: u32) -> bool {
        lattice_member(&self.shift, ell, p)
    }

    /// `g(U_j) = U_{w(j)} + shift_{w(j)}·ħ`, one entry per U variable.
    fn images(&self, st: &Setting) -> Vec<Option<ParamPoly>> {
        let mut subs = vec![None; st.u_var(self.n()) + 1];
        for j in 1..=self.n() {
            let wj = self.perm.apply(j);
            subs[st.u_var(j)] = Some(&st.u(wj) + &st.hbar().scale_q(&Q::int(self.shift[wj - 1])));
        }
        subs
    }

    pub fn act_poly(&self, st: &Setting, f: &ParamPoly) -> ParamPoly {
        f.substitute(&self.images(st))
    }

    /// The ring automorphism of ℂ(U) applied to `f`.
    pub fn act(&self, st: &Setting, f: &RatFunc) -> RatFunc {
        f.substitute(&self.images(st))
    }
}

impl Perm {
    pub fn into_affine(self) -> AffineElement {
        AffineElement::from_perm(self)
    }
}

/// `v ∈ ⟨ℓe_i, (ℓ/p)(1,…,1)⟩`: all entries congruent mod ℓ, and the common
/// residue a multiple of ℓ/p.
pub fn lattice_member(v: &[i64], ell: u32, p: u32) -> bool {
    let (ell, step) = (ell as i64, (ell / p) as i64);
    match v.first() {
        None => true,
        Some(&v0) => v0.rem_euclid(step) == 0 && v.iter().all(|&x| (x - v0).rem_euclid(ell) == 0),
    }
}

impl fmt::Debug for AffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "mu^{:?}·{:?}", self.shift, self.perm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn action_examples() {
        let st = Setting::new(2, 1, 2).unwrap();
        let u1 = RatFunc::from_poly(st.u(1));
        let g = AffineElement::mu(2, 1, 2);
        assert_eq!(g.act(&st, &u1), RatFunc::from_poly(&st.u(1) + &st.hbar().scale_q(&Q::int(2))));
        let d = RatFunc::from_poly(&st.u(1) - &st.u(2));
        assert_eq!(AffineElement::swap(2, 1).act(&st, &d), -&d);
        assert_eq!(AffineElement::identity(2).act(&st, &d), d);
    }

    #[test]
    fn composition_matches_action() {
        let st = Setting::new(3, 1, 3).unwrap();
        let f = RatFunc::from_poly(&(&st.u(1) * &st.u(2)) + &st.u(3).pow(2));
        let a = AffineElement::new(vec![1, -2, 0], Perm::from_images(&[2, 3, 1]).unwrap()).unwrap();
        let b = AffineElement::new(vec![0, 3, 1], Perm::from_images(&[2, 1, 3]).unwrap()).unwrap();
        assert_eq!(a.mul(&b).act(&st, &f), a.act(&st, &b.act(&st, &f)));
        assert!(a.mul(&a.inverse()).is_identity());
    }

    #[test]
    fn lattice_examples() {
        assert!(lattice_member(&[0, 0], 4, 2));
        assert!(lattice_member(&[2, 2], 4, 2));
        assert!(!lattice_member(&[2, 0], 4, 2));
        assert!(lattice_member(&[4, -4], 4, 2));
    }
}
