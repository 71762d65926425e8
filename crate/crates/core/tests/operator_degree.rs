//! The ℤ/p degree of each partially spherical generator, read off from the
//! operator itself: a word W of degree d satisfies `W(t_1 F) = ζ^k t_j W(F)`
//! for a single (j, k), and d is determined by k. This is independent of
//! both the degree table and the symbolic T-winding of the word.

use cherednik_core::psph::{winding_degree, word_for, PsphGenerator};
use cherednik_core::rep::{act_word, PolyRepElement};
use cherednik_core::Setting;

fn t(st: &Setting, j: usize) -> PolyRepElement {
    let mut b = vec![0i64; st.n];
    b[j - 1] = 1;
    PolyRepElement::t_monomial(st, &b)
}

/// The unique (j, k) with `a = ζ^k t_j b`.
fn phase(st: &Setting, a: &PolyRepElement, b: &PolyRepElement) -> Option<(usize, i64)> {
    let mut found = Vec::new();
    for j in 1..=st.n {
        let tb = t(st, j).mul(st, b);
        for k in 0..st.ell as i64 {
            if tb.scale_scalar(&st.zeta(k)) == *a {
                found.push((j, k));
            }
        }
    }
    (found.len() == 1).then(|| found[0])
}

#[test]
fn operator_degree_matches_table_and_winding() {
    for (l, p, n) in [(2, 2, 2), (4, 2, 2), (3, 3, 2), (3, 1, 3), (2, 1, 2)] {
        let st = Setting::new(l, p, n).unwrap();
        // F has a U-part and a T-part, so no generator fixes it by accident
        let f = &t(&st, n).scale(&st.u(1).pow(2)) + &PolyRepElement::from_poly(st.u(n));
        let t1f = t(&st, 1).mul(&st, &f);
        for g in PsphGenerator::all(&st) {
            let w = word_for(&st, g).unwrap();
            let a = act_word(&st, &w, &t1f).unwrap();
            let b = act_word(&st, &w, &f).unwrap();
            let (_, k) = phase(&st, &a, &b).unwrap_or_else(|| panic!("{g} on G({l},{p},{n}) is not a t-eigenoperator"));
            let lp = (l / p) as i64;
            let neg = (-k).rem_euclid(l as i64);
            assert_eq!(neg % lp, 0, "{g}: phase ζ^{k} is not a ζ_p power");
            let degree = ((neg / lp) % p as i64) as u32;
            assert_eq!(degree, g.zp_degree(&st), "{g} on G({l},{p},{n})");
            assert_eq!(Some(degree), winding_degree(&st, &w), "{g} on G({l},{p},{n})");
        }
    }
}
