//! Parameter context for one group G(ℓ,p,n): the variable layout shared by all
//! polynomials, the structural parameters `s_m`, and the coefficients `c_k` of
//! `p(u)`.
//!
//! Variables are laid out as `U_1..U_n, ħ, κ, s_0..s_{S-1}, g_0, g_1, …` where
//! `S = ℓ/p` (or `ℓ` in generic mode) and the `g_j` are spare generic symbols
//! for tests and random sampling.

use crate::arith::fourier::fourier_h_to_c;
use crate::arith::{CycloField, CycloScalar, ParamPoly, Q};
use crate::error::{CoreError, Result};

pub const MAX_RANK: usize = 8;

/// Single-rule perturbations used to check that the verifiers can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mutation {
    /// σ prefactor `U_1 - p(ζ^{-1}T_1)` without `+ħ`.
    SigmaNoHbar,
    /// τ substitutes `U_0 = U_n + ħ` instead of `U_n - ħ`.
    TauWrongSign,
    /// Swap correction term without the averaging factor π.
    SwapNoPi,
    /// Closed form for `x_1^{ℓ-1}σ` loses the `m = 0` factor of its prefactor.
    XSigmaDropFactor,
    /// Dictionary image of `s_{i,i+1}` without the `κℓ/Δ` correction.
    DictSwapNoCorrection,
}

impl Mutation {
    pub const ALL: [Mutation; 5] = [
        Mutation::SigmaNoHbar,
        Mutation::XSigmaDropFactor,
        Mutation::TauWrongSign,
        Mutation::SwapNoPi,
        Mutation::DictSwapNoCorrection,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Mutation::SigmaNoHbar => "sigma-no-hbar",
            Mutation::TauWrongSign => "tau-wrong-sign",
            Mutation::SwapNoPi => "swap-no-pi",
            Mutation::XSigmaDropFactor => "xsigma-drop-factor",
            Mutation::DictSwapNoCorrection => "dict-swap-no-correction",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Setting {
    pub ell: u32,
    pub p: u32,
    pub n: usize,
    pub field: &'static CycloField,
    /// ℓ independent `s_m` instead of the p-cyclic ℓ/p.
    pub generic: bool,
    pub mutation: Option<Mutation>,
    s_count: usize,
    extra: usize,
    c: Vec<ParamPoly>,
}

impl Setting {
    pub fn new(ell: u32, p: u32, n: usize) -> Result<Setting> {
        Setting::build(ell, p, n, false)
    }

    /// Parameters with ℓ independent `s_m` (not p-cyclic unless p = 1).
    pub fn generic(ell: u32, p: u32, n: usize) -> Result<Setting> {
        Setting::build(ell, p, n, true)
    }

    fn build(ell: u32, p: u32, n: usize, generic: bool) -> Result<Setting> {
        if ell == 0 || p == 0 || !ell.is_multiple_of(p) {
            return Err(CoreError::InvalidParameters(format!("p={p} must divide ℓ={ell}")));
        }
        if n == 0 || n > MAX_RANK {
            return Err(CoreError::InvalidParameters(format!("n={n} must lie in 1..={MAX_RANK}")));
        }
        let s_count = if generic { ell as usize } else { (ell / p) as usize };
        let used = n + 2 + s_count;
        if used > crate::arith::poly::MAX_VARS {
            return Err(CoreError::InvalidParameters(format!("too many variables ({used}) for ℓ={ell}, n={n}")));
        }
        let field = CycloField::get(ell);
        let mut st = Setting {
            ell,
            p,
            n,
            field,
            generic,
            mutation: None,
            s_count,
            extra: crate::arith::poly::MAX_VARS - used,
            c: Vec::new(),
        };
        let h: Vec<ParamPoly> = (0..ell as i64).map(|r| st.h(r)).collect();
        st.c = fourier_h_to_c(&h, field)?;
        Ok(st)
    }

    pub fn with_mutation(&self, m: Option<Mutation>) -> Setting {
        Setting { mutation: m, ..self.clone() }
    }

    pub fn is_mutated(&self, m: Mutation) -> bool {
        self.mutation == Some(m)
    }

    /// ℓ/p
    pub fn period(&self) -> u32 {
        self.ell / self.p
    }

    pub fn s_count(&self) -> usize {
        self.s_count
    }

    pub fn extra_count(&self) -> usize {
        self.extra
    }

    pub fn u_var(&self, i: usize) -> usize {
        assert!((1..=self.n).contains(&i), "U index {i} out of range");
        i - 1
    }

    pub fn hbar_var(&self) -> usize {
        self.n
    }

    pub fn kappa_var(&self) -> usize {
        self.n + 1
    }

    pub fn s_var(&self, m: usize) -> usize {
        assert!(m < self.s_count);
        self.n + 2 + m
    }

    pub fn extra_var(&self, j: usize) -> usize {
        assert!(j < self.extra, "out of spare symbols");
        self.n + 2 + self.s_count + j
    }

    pub fn u(&self, i: usize) -> ParamPoly {
        ParamPoly::var(self.field, self.u_var(i))
    }

    pub fn hbar(&self) -> ParamPoly {
        ParamPoly::var(self.field, self.hbar_var())
    }

    pub fn kappa(&self) -> ParamPoly {
        ParamPoly::var(self.field, self.kappa_var())
    }

    pub fn extra(&self, j: usize) -> ParamPoly {
        ParamPoly::var(self.field, self.extra_var(j))
    }

    pub fn int(&self, v: i64) -> ParamPoly {
        ParamPoly::int(self.field, v)
    }

    pub fn rational(&self, q: Q) -> ParamPoly {
        ParamPoly::rational(self.field, q)
    }

    pub fn zeta(&self, k: i64) -> CycloScalar {
        self.field.zeta_pow(k)
    }

    pub fn one(&self) -> ParamPoly {
        ParamPoly::one(self.field)
    }

    pub fn zero(&self) -> ParamPoly {
        ParamPoly::zero(self.field)
    }

    /// `s_m` for any integer m, with `s_{m+S} = s_m + Sħ` (S = ℓ/p, or ℓ in
    /// generic mode). In the p-cyclic case `Sħ = ℓħ/p`.
    pub fn s(&self, m: i64) -> ParamPoly {
        let big_s = self.s_count as i64;
        let (q, r) = (m.div_euclid(big_s), m.rem_euclid(big_s));
        &ParamPoly::var(self.field, self.s_var(r as usize)) + &self.hbar().scale_q(&Q::int(q * big_s))
    }

    /// `h_r = s_r - rħ`.
    pub fn h(&self, r: i64) -> ParamPoly {
        &self.s(r) - &self.hbar().scale_q(&Q::int(r))
    }

    /// `c_k` for k in 0..ℓ (index taken mod ℓ).
    pub fn c(&self, k: i64) -> &ParamPoly {
        &self.c[k.rem_euclid(self.ell as i64) as usize]
    }

    pub fn c_vector(&self) -> &[ParamPoly] {
        &self.c
    }

    /// `Π_{m=0}^{count-1} (U_i + shift - s_m)`, the recurring product in the
    /// closed-form actions.
    pub fn shifted_product(&self, i: usize, shift: &ParamPoly, count: i64, skip_first: bool) -> ParamPoly {
        let mut acc = self.one();
        let base = &self.u(i) + shift;
        for m in 0..count {
            if skip_first && m == 0 {
                continue;
            }
            acc = &acc * &(&base - &self.s(m));
        }
        acc
    }

    pub fn var_names(&self) -> Vec<String> {
        let mut names: Vec<String> = (1..=self.n).map(|i| format!("U{i}")).collect();
        names.push("h".into());
        names.push("k".into());
        for m in 0..self.s_count {
            names.push(format!("s{m}"));
        }
        for j in 0..self.extra {
            names.push(format!("g{j}"));
        }
        names
    }

    /// Number of variables of the U-block plus parameters (excluding spares).
    pub fn base_var_count(&self) -> usize {
        self.n + 2 + self.s_count
    }
}
