//! Composing the two dictionary directions inside the skew ring: replacing
//! every generator in `from_skew(a)` by `to_skew` must give exactly the
//! group element a, as a formal skew-ring element (no evaluation involved).

use cherednik_core::galois::dictionary::{from_skew, to_skew, AffineGenerator, DictOp};
use cherednik_core::galois::random::{random_ratfunc, rng};
use cherednik_core::galois::skew::SkewElement;
use cherednik_core::psph::{closed_form_action, PsphGenerator};
use cherednik_core::{Mutation, Setting};

fn to_ring(st: &Setting, op: &DictOp) -> SkewElement {
    match op {
        DictOp::Gen(g) => to_skew(st, *g).unwrap(),
        DictOp::Coef(c) => SkewElement::scalar(st, c.clone()),
        DictOp::Compose(ops) => ops.iter().fold(SkewElement::one(st), |acc, o| acc.mul(st, &to_ring(st, o))),
        DictOp::Sum(ops) => ops.iter().fold(SkewElement::zero(st.field), |acc, o| acc.add(&to_ring(st, o))),
    }
}

#[test]
fn from_skew_then_to_skew_is_identity() {
    for (l, p, n) in [(2, 1, 2), (2, 2, 2), (4, 2, 2), (3, 3, 2), (2, 1, 3)] {
        let st = Setting::new(l, p, n).unwrap();
        for a in AffineGenerator::all(&st) {
            let back = to_ring(&st, &from_skew(&st, a));
            assert_eq!(back, SkewElement::group(&st, a.element(&st)), "{a} on G({l},{p},{n})");
        }
    }
}

#[test]
fn round_trip_detects_missing_swap_correction() {
    let st = Setting::new(2, 2, 2).unwrap().with_mutation(Some(Mutation::DictSwapNoCorrection));
    let a = AffineGenerator::Swap(1);
    assert_ne!(to_ring(&st, &from_skew(&st, a)), SkewElement::group(&st, a.element(&st)));
}

#[test]
fn to_skew_images_act_like_closed_forms() {
    let st = Setting::new(4, 2, 2).unwrap();
    let mut r = rng(7);
    for _ in 0..5 {
        let f = random_ratfunc(&st, &mut r);
        for g in PsphGenerator::all(&st) {
            assert_eq!(to_skew(&st, g).unwrap().act(&st, &f), closed_form_action(&st, g, &f).unwrap(), "{g}");
        }
    }
}
