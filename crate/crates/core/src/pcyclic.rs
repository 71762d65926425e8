//! The three forms of p-cyclicity are linear conditions on `(c_0..c_{ℓ-1}, ħ)`,
//! so they are equivalent exactly when their linear forms span the same
//! space. That is checked by ranks over ℚ(ζ_ℓ), together with the boolean
//! triples of `p_cyclic_check` on generic inputs from each coordinate system.

use crate::arith::cyclo::rank;
use crate::arith::fourier::{fourier_c_to_h, p_cyclic_check, ParamVector};
use crate::arith::{CycloField, CycloScalar, ParamPoly, Q};
use crate::error::{CoreError, Result};
use crate::report::{CheckResult, Counterexample, Report};

/// Coefficient row of a linear form in variables `0..nvars`.
fn linear_row(f: &ParamPoly, nvars: usize) -> Result<Vec<CycloScalar>> {
    let mut row = vec![f.field.zero(); nvars];
    for (m, c) in f.terms() {
        let v = (0..nvars).find(|&v| m.exp(v) == 1).filter(|_| m.degree() == 1);
        match v {
            Some(v) => row[v] = c.clone(),
            None => return Err(CoreError::InvalidParameters(format!("not a linear form: {f:?}"))),
        }
    }
    Ok(row)
}

fn span_rank(forms: &[&[ParamPoly]], nvars: usize) -> Result<usize> {
    let rows = forms.iter().flat_map(|fs| fs.iter()).map(|f| linear_row(f, nvars)).collect::<Result<Vec<_>>>()?;
    Ok(if rows.is_empty() { 0 } else { rank(rows) })
}

/// Linear forms whose common zero set is each condition, in generic `c`
/// (variables `0..ℓ`) and ħ (variable `ℓ`).
pub struct ConditionForms {
    pub c_forms: Vec<ParamPoly>,
    pub h_forms: Vec<ParamPoly>,
    pub s_forms: Vec<ParamPoly>,
}

pub fn condition_forms(ell: u32, p: u32) -> Result<ConditionForms> {
    if p == 0 || !ell.is_multiple_of(p) {
        return Err(CoreError::InvalidParameters(format!("p={p} must divide l={ell}")));
    }
    let field = CycloField::get(ell);
    let l = ell as usize;
    let period = l / p as usize;
    let c: Vec<ParamPoly> = (0..l).map(|k| ParamPoly::var(field, k)).collect();
    let hbar = ParamPoly::var(field, l);
    let h = fourier_c_to_h(&c, field)?;
    let s_at = |m: usize| &h[m % l] + &hbar.scale_q(&Q::int(m as i64));
    let shift = hbar.scale_q(&Q::new(ell as i64, p as i64));
    let nonzero = |f: &ParamPoly| !f.is_zero();
    Ok(ConditionForms {
        c_forms: (1..l).filter(|k| k % p as usize != 0).map(|k| c[k].clone()).collect(),
        h_forms: (0..l).map(|r| &h[r] - &h[(r + period) % l]).filter(nonzero).collect(),
        s_forms: (0..l).map(|m| &(&s_at(m) + &shift) - &s_at(m + period)).filter(nonzero).collect(),
    })
}

/// Pairwise equivalence of the three conditions for (ℓ, p), plus generic
/// witnesses that satisfy or violate all three together.
pub fn verify_pcyclic(ell: u32, p: u32) -> Result<Report> {
    let forms = condition_forms(ell, p)?;
    let nvars = ell as usize + 1;
    let named = [("c", &forms.c_forms), ("h", &forms.h_forms), ("s", &forms.s_forms)];
    let mut checks = Vec::new();
    for (i, j) in [(0, 1), (1, 2), (0, 2)] {
        let (na, a) = named[i];
        let (nb, b) = named[j];
        let id = format!("pcyclic.{na}_iff_{nb}");
        let (ra, rb, rab) = (span_rank(&[a], nvars)?, span_rank(&[b], nvars)?, span_rank(&[a, b], nvars)?);
        let check = if ra == 0 && rb == 0 {
            CheckResult::vacuous(id)
        } else {
            CheckResult::from_bool(id, ra == rab && rb == rab, || Counterexample {
                input: format!("l={ell} p={p}"),
                lhs: format!("rank {na}={ra}, rank {nb}={rb}"),
                rhs: format!("rank of union={rab}"),
            })
        };
        checks.push(check.with_note(format!("codimension {rab}")));
    }

    // generic p-cyclic inputs in each coordinate system, and one violation
    let field = CycloField::get(ell);
    let l = ell as usize;
    let period = l / p as usize;
    let hbar = ParamPoly::var(field, l);
    let var = |k: usize| ParamPoly::var(field, k);
    let zero = ParamPoly::zero(field);
    let good_c: Vec<ParamPoly> = (0..l).map(|k| if k % p as usize == 0 { var(k) } else { zero.clone() }).collect();
    let good_h: Vec<ParamPoly> = (0..l).map(|r| var(r % period)).collect();
    let good_s: Vec<ParamPoly> = (0..l)
        .map(|m| &var(m % period) + &hbar.scale_q(&Q::new((m / period) as i64 * ell as i64, p as i64)))
        .collect();
    let mut witnesses = vec![
        ("pcyclic.generic_c", ParamVector::C(good_c), true),
        ("pcyclic.generic_h", ParamVector::H(good_h), true),
        ("pcyclic.generic_s", ParamVector::S(good_s), true),
    ];
    if p > 1 {
        let bad: Vec<ParamPoly> = (0..l).map(|k| if k == 1 { var(1) } else { zero.clone() }).collect();
        witnesses.push(("pcyclic.violation_c1", ParamVector::C(bad), false));
    }
    for (id, params, want) in witnesses {
        let r = p_cyclic_check(&params, &hbar, ell, p)?;
        let triple = (r.c_condition, r.h_condition, r.s_condition);
        checks.push(CheckResult::from_bool(id, triple == (want, want, want), || Counterexample {
            input: format!("{params:?}"),
            lhs: format!("{triple:?}"),
            rhs: format!("{:?}", (want, want, want)),
        }));
    }
    Ok(Report::new(checks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn equivalence_on_grid() {
        for (l, p) in [(2, 2), (4, 2), (6, 3), (6, 2)] {
            let r = verify_pcyclic(l, p).unwrap();
            assert!(r.all_pass(), "{l} {p}: {:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn codimension_is_count_of_non_multiples() {
        // ℓ - ℓ/p of the c_k with k ≥ 1 are forced to vanish
        let f = condition_forms(6, 2).unwrap();
        assert_eq!(span_rank(&[&f.h_forms], 7).unwrap(), 3);
        assert_eq!(span_rank(&[&f.c_forms], 7).unwrap(), 3);
    }

    #[test]
    fn p_one_is_vacuous() {
        let r = verify_pcyclic(3, 1).unwrap();
        assert_eq!(r.get("pcyclic.c_iff_h").unwrap().status, Status::Vacuous);
        assert!(r.all_pass());
    }
}
