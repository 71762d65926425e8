use std::str::FromStr;

use cherednik_core::arith::fourier::{fourier_c_to_h, fourier_h_to_c};
use cherednik_core::arith::gcd::gcd;
use cherednik_core::arith::{CycloField, Mono, ParamPoly, RatFunc, Q};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn big(q: &Q) -> BigRational {
    let (n, d) = q.numer_denom_strings();
    BigRational::new(BigInt::from_str(&n).unwrap(), BigInt::from_str(&d).unwrap())
}

fn q_strategy() -> impl Strategy<Value = Q> {
    prop_oneof![
        (-50i64..50, 1i64..50).prop_map(|(n, d)| Q::new(n, d)),
        // near the i64 boundary, to exercise promotion to big rationals
        (any::<i64>(), 1i64..i64::MAX).prop_map(|(n, d)| Q::new(n, d)),
    ]
}

/// A polynomial in variables 0..3 with small cyclotomic coefficients.
fn poly_strategy(ell: u32) -> impl Strategy<Value = ParamPoly> {
    let field = CycloField::get(ell);
    prop::collection::vec(((0u8..3, 0u8..3, 0u8..2), -4i64..5, 0..ell as i64), 0..5).prop_map(move |terms| {
        let raw = terms
            .into_iter()
            .map(|((a, b, c), k, z)| (Mono::from_exps(&[a, b, c]), &field.int(k) * &field.zeta_pow(z)))
            .collect();
        ParamPoly::from_terms(field, raw)
    })
}

fn nonzero_poly(ell: u32) -> impl Strategy<Value = ParamPoly> {
    poly_strategy(ell).prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn rationals_agree_with_bigrational(a in q_strategy(), b in q_strategy()) {
        prop_assert_eq!(big(&(&a + &b)), big(&a) + big(&b));
        prop_assert_eq!(big(&(&a - &b)), big(&a) - big(&b));
        prop_assert_eq!(big(&(&a * &b)), big(&a) * big(&b));
        if !b.is_zero() {
            prop_assert_eq!(big(&b.inv()), big(&b).recip());
        }
        prop_assert_eq!(a.cmp(&b), big(&a).cmp(&big(&b)));
    }

    #[test]
    fn polynomial_ring_axioms(a in poly_strategy(3), b in poly_strategy(3), c in poly_strategy(3)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &ParamPoly::one(a.field), a.clone());
    }

    #[test]
    fn exact_divide_inverts_multiplication(a in poly_strategy(4), b in nonzero_poly(4)) {
        let prod = &a * &b;
        prop_assert_eq!(prod.exact_divide(&b).unwrap(), a.clone());
        // adding a nonzero remainder of lower degree breaks divisibility
        if b.total_degree().unwrap_or(0) > 0 {
            let off = &prod + &ParamPoly::one(b.field);
            prop_assert!(off.exact_divide(&b).is_err());
        }
    }

    #[test]
    fn gcd_recovers_planted_factor(a in nonzero_poly(3), b in nonzero_poly(3), c in nonzero_poly(3)) {
        let g = gcd(&(&a * &c), &(&b * &c));
        // c divides the gcd, and the gcd divides both products
        prop_assert!(g.exact_divide(&c.monic()).is_ok());
        prop_assert!((&a * &c).exact_divide(&g).is_ok());
        prop_assert!((&b * &c).exact_divide(&g).is_ok());
        prop_assert!(g.leading().unwrap().1.is_one());
    }

    #[test]
    fn fourier_round_trip(ell in prop::sample::select(vec![2u32, 3, 4, 5, 6]), seed in prop::collection::vec(-9i64..10, 6)) {
        let field = CycloField::get(ell);
        let c: Vec<ParamPoly> = (0..ell as usize)
            .map(|k| &ParamPoly::int(field, seed[k]) * &ParamPoly::var(field, k))
            .collect();
        let h = fourier_c_to_h(&c, field).unwrap();
        prop_assert_eq!(fourier_h_to_c(&h, field).unwrap(), c);
    }

    #[test]
    fn ratfunc_is_canonical(a in poly_strategy(3), b in nonzero_poly(3), c in nonzero_poly(3), k in 1i64..5) {
        let direct = RatFunc::new(a.clone(), b.clone());
        let kq = Q::int(k);
        let padded = RatFunc::new((&a * &c).scale_q(&kq), (&b * &c).scale_q(&kq));
        prop_assert_eq!(&direct, &padded);
        prop_assert!(direct.den().leading().unwrap().1.is_one());
        prop_assert!(gcd(direct.num(), direct.den()).is_one() || direct.num().is_zero());
        // field operations agree with the cross-multiplied form
        let e = RatFunc::new(c.clone(), b.clone());
        let sum = &direct + &e;
        prop_assert_eq!(sum, RatFunc::new(&(&a * &b) + &(&c * &b), &b * &b));
        let back = &(&direct * &e) / &e;
        prop_assert_eq!(back, direct);
    }
}

#[test]
fn cyclotomic_examples() {
    let f2 = CycloField::get(2);
    assert!((&f2.zeta_pow(1) * &f2.zeta_pow(1)).is_one());
    let f3 = CycloField::get(3);
    let one_plus = |k| &f3.one() + &f3.zeta_pow(k);
    assert!((&one_plus(1) * &one_plus(2)).is_one());
}
