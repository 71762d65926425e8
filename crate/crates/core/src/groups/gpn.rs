//! Elements `t^a·w` of G(ℓ,p,n): a diagonal of ℓ-th roots of unity times a
//! permutation matrix, with `Σ a_i ≡ 0 (mod p)`.

use std::fmt;

use crate::arith::cyclo::rank;
use crate::arith::{CycloField, CycloScalar};
use crate::error::{CoreError, Result};
use crate::groups::perm::Perm;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GPNElement {
    pub ell: u32,
    pub p: u32,
    pub texp: Vec<u32>,
    pub perm: Perm,
}

impl GPNElement {
    pub fn identity(ell: u32, p: u32, n: usize) -> GPNElement {
        GPNElement { ell, p, texp: vec![0; n], perm: Perm::identity(n) }
    }

    /// `t^texp · perm`, exponents reduced mod ℓ. Membership is not enforced
    /// here so that elements of G(ℓ,1,n) can be built too.
    pub fn new(ell: u32, p: u32, texp: &[i64], perm: Perm) -> Result<GPNElement> {
        if ell == 0 || p == 0 || !ell.is_multiple_of(p) {
            return Err(CoreError::InvalidParameters(format!("p={p} must divide l={ell}")));
        }
        if texp.len() != perm.len() {
            return Err(CoreError::InconsistentLength { expected: perm.len(), got: texp.len() });
        }
        let texp = texp.iter().map(|&a| a.rem_euclid(ell as i64) as u32).collect();
        Ok(GPNElement { ell, p, texp, perm })
    }

    /// `t_i^k`.
    pub fn t_power(ell: u32, p: u32, n: usize, i: usize, k: i64) -> GPNElement {
        let mut a = vec![0i64; n];
        a[i - 1] = k;
        GPNElement::new(ell, p, &a, Perm::identity(n)).expect("valid t power")
    }

    pub fn n(&self) -> usize {
        self.texp.len()
    }

    /// Product of the nonzero entries is an (ℓ/p)-th root of unity.
    pub fn is_member(&self) -> bool {
        self.texp.iter().map(|&a| a as u64).sum::<u64>() % self.p as u64 == 0
    }

    /// `t^a w · t^b v = t^{a + w(b)} wv`.
    pub fn mul(&self, other: &GPNElement) -> Result<GPNElement> {
        if self.ell != other.ell || self.p != other.p || self.n() != other.n() {
            return Err(CoreError::Mismatched);
        }
        let moved = self.perm.permute_vec(&other.texp);
        let texp = self.texp.iter().zip(&moved).map(|(a, b)| (a + b) % self.ell).collect();
        Ok(GPNElement { ell: self.ell, p: self.p, texp, perm: self.perm.compose(&other.perm) })
    }

    pub fn inverse(&self) -> GPNElement {
        // (t^a w)^{-1} = w^{-1} t^{-a} = t^{-w^{-1}(a)} w^{-1}
        let winv = self.perm.inverse();
        let moved = winv.permute_vec(&self.texp);
        let texp = moved.iter().map(|&a| (self.ell - a) % self.ell).collect();
        GPNElement { ell: self.ell, p: self.p, texp, perm: winv }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && self.texp.iter().all(|&a| a == 0)
    }

    /// The monomial matrix: column j has `ζ^{a_{w(j)}}` in row `w(j)`.
    pub fn matrix(&self) -> Vec<Vec<CycloScalar>> {
        let field = CycloField::get(self.ell);
        let n = self.n();
        let mut m = vec![vec![field.zero(); n]; n];
        for j in 1..=n {
            let i = self.perm.apply(j);
            m[i - 1][j - 1] = field.zeta_pow(self.texp[i - 1] as i64);
        }
        m
    }

    /// `rank(M - I)`: the codimension of the fixed space. Reflections are
    /// exactly the elements where this is 1.
    pub fn fixed_codim(&self) -> usize {
        let field = CycloField::get(self.ell);
        let mut m = self.matrix();
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = &row[i] - &field.one();
        }
        rank(m)
    }

    pub fn is_reflection(&self) -> bool {
        self.fixed_codim() == 1
    }

    /// Every element of G(ℓ,p,n).
    pub fn all(ell: u32, p: u32, n: usize) -> Vec<GPNElement> {
        let mut texps: Vec<Vec<i64>> = vec![Vec::new()];
        for _ in 0..n {
            texps = texps
                .into_iter()
                .flat_map(|a| {
                    (0..ell as i64).map(move |k| {
                        let mut b = a.clone();
                        b.push(k);
                        b
                    })
                })
                .collect();
        }
        let mut out = Vec::new();
        for w in Perm::all(n) {
            for a in &texps {
                let g = GPNElement::new(ell, p, a, w.clone()).expect("valid");
                if g.is_member() {
                    out.push(g);
                }
            }
        }
        out
    }
}

/// The reflections `t_i^k t_j^{-k}(i,j)` and `t_i^{kp}` (0 < k < ℓ/p).
pub fn enumerate_reflections(ell: u32, p: u32, n: usize) -> Result<Vec<GPNElement>> {
    if ell == 0 || p == 0 || !ell.is_multiple_of(p) {
        return Err(CoreError::InvalidParameters(format!("p={p} must divide l={ell}")));
    }
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in 0..ell as i64 {
                let mut a = vec![0i64; n];
                a[i - 1] = k;
                a[j - 1] = -k;
                out.push(GPNElement::new(ell, p, &a, Perm::transposition(n, i, j))?);
            }
        }
    }
    for i in 1..=n {
        for k in 1..(ell / p) as i64 {
            out.push(GPNElement::t_power(ell, p, n, i, k * p as i64));
        }
    }
    Ok(out)
}

impl fmt::Debug for GPNElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t^{:?}·{:?}", self.texp, self.perm)
    }
}
