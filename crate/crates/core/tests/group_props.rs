use std::collections::{BTreeSet, HashSet, VecDeque};

use cherednik_core::arith::{CycloScalar, ParamPoly};
use cherednik_core::groups::{enumerate_reflections, lattice_member, AffineElement, GPNElement, Perm};
use cherednik_core::Setting;
use proptest::prelude::*;

const GROUPS: [(u32, u32, usize); 5] = [(2, 1, 2), (2, 2, 2), (4, 2, 2), (3, 3, 2), (2, 2, 3)];

fn matmul(a: &[Vec<CycloScalar>], b: &[Vec<CycloScalar>]) -> Vec<Vec<CycloScalar>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(a[0][0].field.zero(), |acc, k| &acc + &(&a[i][k] * &b[k][j])))
                .collect()
        })
        .collect()
}

fn element() -> impl Strategy<Value = GPNElement> {
    prop::sample::select(GROUPS.to_vec()).prop_flat_map(|(l, p, n)| {
        let all = GPNElement::all(l, p, n);
        prop::sample::select(all)
    })
}

fn triple() -> impl Strategy<Value = (GPNElement, GPNElement, GPNElement)> {
    prop::sample::select(GROUPS.to_vec()).prop_flat_map(|(l, p, n)| {
        let all = GPNElement::all(l, p, n);
        (prop::sample::select(all.clone()), prop::sample::select(all.clone()), prop::sample::select(all))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn gpn_group_axioms((a, b, c) in triple()) {
        let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
        let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(&ab_c, &a_bc);
        prop_assert!(a.mul(&a.inverse()).unwrap().is_identity());
        prop_assert!(a.inverse().mul(&a).unwrap().is_identity());
        prop_assert!(a.mul(&b).unwrap().is_member());
        // the matrix representation is a homomorphism
        prop_assert_eq!(a.mul(&b).unwrap().matrix(), matmul(&a.matrix(), &b.matrix()));
    }

    #[test]
    fn reflections_are_closed_under_conjugation(g in element()) {
        let refl = enumerate_reflections(g.ell, g.p, g.n()).unwrap();
        let set: HashSet<_> = refl.iter().cloned().collect();
        for r in &refl {
            let conj = g.mul(r).unwrap().mul(&g.inverse()).unwrap();
            prop_assert!(set.contains(&conj), "{:?}", conj);
        }
    }

    #[test]
    fn perm_axioms(images in Just((1..=4).collect::<Vec<usize>>()).prop_shuffle(),
                   other in Just((1..=4).collect::<Vec<usize>>()).prop_shuffle()) {
        let (w, v) = (Perm::from_images(&images).unwrap(), Perm::from_images(&other).unwrap());
        prop_assert!(w.compose(&w.inverse()).is_identity());
        for j in 1..=4 {
            prop_assert_eq!(w.compose(&v).apply(j), w.apply(v.apply(j)));
        }
    }

    #[test]
    fn affine_action_is_a_left_action(
        s1 in prop::collection::vec(-6i64..7, 3), s2 in prop::collection::vec(-6i64..7, 3),
        w1 in Just(vec![1usize, 2, 3]).prop_shuffle(), w2 in Just(vec![1usize, 2, 3]).prop_shuffle(),
    ) {
        let st = Setting::new(3, 1, 3).unwrap();
        let g = AffineElement::new(s1, Perm::from_images(&w1).unwrap()).unwrap();
        let h = AffineElement::new(s2, Perm::from_images(&w2).unwrap()).unwrap();
        let f: ParamPoly = &(&st.u(1) * &st.u(2)) + &(&st.u(3) * &st.hbar());
        prop_assert_eq!(g.mul(&h).act_poly(&st, &f), g.act_poly(&st, &h.act_poly(&st, &f)));
        prop_assert!(g.mul(&g.inverse()).is_identity());
    }
}

#[test]
fn reflections_match_brute_force() {
    for (l, p, n) in GROUPS {
        let listed: BTreeSet<String> = enumerate_reflections(l, p, n).unwrap().iter().map(|g| format!("{g:?}")).collect();
        let brute: BTreeSet<String> =
            GPNElement::all(l, p, n).iter().filter(|g| g.is_reflection()).map(|g| format!("{g:?}")).collect();
        assert_eq!(listed, brute, "G({l},{p},{n})");
    }
}

#[test]
fn group_orders() {
    for (l, p, n) in GROUPS {
        let fact: usize = (1..=n).product();
        assert_eq!(GPNElement::all(l, p, n).len(), (l as usize).pow(n as u32) * fact / p as usize);
    }
}

/// All points reachable from 0 by the lattice generators inside the box
/// `[-2ℓ, 2ℓ]^n`.
fn bfs_lattice(ell: i64, p: i64, n: usize) -> HashSet<Vec<i64>> {
    let bound = 2 * ell;
    let mut steps: Vec<Vec<i64>> = Vec::new();
    for i in 0..n {
        for sign in [-1, 1] {
            let mut v = vec![0; n];
            v[i] = sign * ell;
            steps.push(v);
        }
    }
    steps.push(vec![ell / p; n]);
    steps.push(vec![-ell / p; n]);
    let mut seen = HashSet::from([vec![0; n]]);
    let mut queue = VecDeque::from([vec![0; n]]);
    while let Some(v) = queue.pop_front() {
        for s in &steps {
            let w: Vec<i64> = v.iter().zip(s).map(|(a, b)| a + b).collect();
            if w.iter().all(|x| x.abs() <= bound) && seen.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    seen
}

#[test]
fn lattice_membership_matches_bfs() {
    for (l, p) in [(2i64, 1i64), (2, 2), (4, 2), (3, 3)] {
        for n in [2usize, 3] {
            let reach = bfs_lattice(l, p, n);
            let box_pts = (0..n).fold(vec![Vec::new()], |acc, _| {
                acc.into_iter()
                    .flat_map(|v| (-2 * l..=2 * l).map(move |x| [v.clone(), vec![x]].concat()))
                    .collect::<Vec<_>>()
            });
            for v in box_pts {
                assert_eq!(lattice_member(&v, l as u32, p as u32), reach.contains(&v), "{v:?} for ({l},{p})");
            }
        }
    }
}
