//! Discrete Fourier transform between the coefficients `c_k` of
//! `p(u) = Σ c_k u^k` and its values `h_r = p(ζ^r)`, plus the shifted values
//! `s_m = h_m + mħ`.
//!
//! Vectors of `c` carry all ℓ entries `c_0..c_{ℓ-1}`; a vector of length ℓ-1 is
//! read as `c_1..c_{ℓ-1}` with `c_0 = 0`.

use super::cyclo::CycloField;
use super::poly::ParamPoly;
use super::rational::Q;
use crate::error::{CoreError, Result};

fn full_c(c: &[ParamPoly], field: &'static CycloField) -> Result<Vec<ParamPoly>> {
    let ell = field.ell as usize;
    if c.len() == ell {
        Ok(c.to_vec())
    } else if c.len() + 1 == ell {
        let mut out = vec![ParamPoly::zero(field)];
        out.extend_from_slice(c);
        Ok(out)
    } else {
        Err(CoreError::InconsistentLength { expected: ell - 1, got: c.len() })
    }
}

/// `h_r = Σ_s c_s ζ^{rs}` for r in 0..ℓ.
pub fn fourier_c_to_h(c: &[ParamPoly], field: &'static CycloField) -> Result<Vec<ParamPoly>> {
    let c = full_c(c, field)?;
    let ell = field.ell as i64;
    Ok((0..ell)
        .map(|r| {
            c.iter()
                .enumerate()
                .fold(ParamPoly::zero(field), |acc, (s, cs)| &acc + &cs.scale(&field.zeta_pow(r * s as i64)))
        })
        .collect())
}

/// `c_s = (1/ℓ) Σ_r h_r ζ^{-rs}` for s in 0..ℓ.
pub fn fourier_h_to_c(h: &[ParamPoly], field: &'static CycloField) -> Result<Vec<ParamPoly>> {
    let ell = field.ell as usize;
    if h.len() != ell {
        return Err(CoreError::InconsistentLength { expected: ell, got: h.len() });
    }
    let inv = Q::new(1, ell as i64);
    Ok((0..ell as i64)
        .map(|s| {
            h.iter()
                .enumerate()
                .fold(ParamPoly::zero(field), |acc, (r, hr)| &acc + &hr.scale(&field.zeta_pow(-(r as i64) * s)))
                .scale_q(&inv)
        })
        .collect())
}

/// Parameters supplied in any one of the three coordinate systems.
#[derive(Clone, Debug)]
pub enum ParamVector {
    C(Vec<ParamPoly>),
    H(Vec<ParamPoly>),
    S(Vec<ParamPoly>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PCyclicReport {
    /// `c_k = 0` whenever `p ∤ k`.
    pub c_condition: bool,
    /// `h_r = h_{r+ℓ/p}` for all r.
    pub h_condition: bool,
    /// `s_m + ℓħ/p = s_{m+ℓ/p}` for all m.
    pub s_condition: bool,
}

impl PCyclicReport {
    pub fn equivalent(&self) -> bool {
        self.c_condition == self.h_condition && self.h_condition == self.s_condition
    }
}

/// Evaluate the three p-cyclicity conditions as exact polynomial identities.
pub fn p_cyclic_check(params: &ParamVector, hbar: &ParamPoly, ell: u32, p: u32) -> Result<PCyclicReport> {
    if p == 0 || !ell.is_multiple_of(p) {
        return Err(CoreError::InvalidParameters(format!("p={p} must divide ℓ={ell}")));
    }
    let field = CycloField::get(ell);
    let ell_us = ell as usize;
    let (c, h) = match params {
        ParamVector::C(c) => {
            let c = full_c(c, field)?;
            let h = fourier_c_to_h(&c, field)?;
            (c, h)
        }
        ParamVector::H(h) => (fourier_h_to_c(h, field)?, h.clone()),
        ParamVector::S(s) => {
            if s.len() != ell_us {
                return Err(CoreError::InconsistentLength { expected: ell_us, got: s.len() });
            }
            let h: Vec<ParamPoly> =
                s.iter().enumerate().map(|(m, sm)| sm - &hbar.scale_q(&Q::int(m as i64))).collect();
            (fourier_h_to_c(&h, field)?, h)
        }
    };
    // s_m = h_{m mod ℓ} + mħ for any m ≥ 0
    let s_at = |m: usize| &h[m % ell_us] + &hbar.scale_q(&Q::int(m as i64));
    let period = ell_us / p as usize;
    let shift = hbar.scale_q(&Q::new(ell as i64, p as i64));
    // c_0 does not enter any condition
    let c_condition = (1..ell_us).filter(|k| k % p as usize != 0).all(|k| c[k].is_zero());
    let h_condition = (0..ell_us).all(|r| h[r] == h[(r + period) % ell_us]);
    let s_condition = (0..ell_us).all(|m| &s_at(m) + &shift == s_at(m + period));
    Ok(PCyclicReport { c_condition, h_condition, s_condition })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(field: &'static CycloField, i: usize) -> ParamPoly {
        ParamPoly::var(field, i)
    }

    #[test]
    fn two_point_transform() {
        let f = CycloField::get(2);
        let h = fourier_c_to_h(&[g(f, 0)], f).unwrap();
        assert_eq!(h, vec![g(f, 0), -g(f, 0)]);
    }

    #[test]
    fn ell_four_even_coefficient_is_periodic() {
        let f = CycloField::get(4);
        let z = ParamPoly::zero(f);
        let h = fourier_c_to_h(&[z.clone(), g(f, 0), z], f).unwrap();
        assert_eq!(h[0], h[2]);
        assert_eq!(h[1], h[3]);
        assert_eq!(h[1], -g(f, 0));
    }

    #[test]
    fn round_trip() {
        for ell in [2u32, 3, 4, 6] {
            let f = CycloField::get(ell);
            let c: Vec<ParamPoly> = (0..ell as usize).map(|i| g(f, i)).collect();
            let back = fourier_h_to_c(&fourier_c_to_h(&c, f).unwrap(), f).unwrap();
            assert_eq!(back, c);
        }
    }

    #[test]
    fn cyclic_conditions() {
        let f = CycloField::get(4);
        let hbar = g(f, 5);
        let z = ParamPoly::zero(f);
        let good = ParamVector::C(vec![z.clone(), g(f, 0), z.clone()]);
        let r = p_cyclic_check(&good, &hbar, 4, 2).unwrap();
        assert_eq!(r, PCyclicReport { c_condition: true, h_condition: true, s_condition: true });
        let bad = ParamVector::C(vec![g(f, 0), z.clone(), z]);
        let r = p_cyclic_check(&bad, &hbar, 4, 2).unwrap();
        assert_eq!(r, PCyclicReport { c_condition: false, h_condition: false, s_condition: false });
        assert!(p_cyclic_check(&ParamVector::C(vec![g(f, 0)]), &hbar, 4, 2).is_err());
    }
}
