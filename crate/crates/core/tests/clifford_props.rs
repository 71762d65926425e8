use std::collections::HashSet;

use cherednik_core::clifford::{
    alpha_act, count_simples, default_universe, g22n_restriction, index_pairs, multipartitions, orbit_and_stabilizer,
    partitions, verify_clifford, Restriction,
};
use cherednik_core::groups::GPNElement;

/// Number of conjugacy classes, by brute force over the whole group.
fn class_count(ell: u32, p: u32, n: usize) -> usize {
    let all = GPNElement::all(ell, p, n);
    let mut seen: HashSet<GPNElement> = HashSet::new();
    let mut classes = 0;
    for g in &all {
        if seen.contains(g) {
            continue;
        }
        classes += 1;
        for h in &all {
            seen.insert(h.mul(g).unwrap().mul(&h.inverse()).unwrap());
        }
    }
    classes
}

#[test]
fn partition_counts() {
    let expected = [1usize, 1, 2, 3, 5, 7, 11, 15, 22, 30];
    for (m, &want) in expected.iter().enumerate() {
        assert_eq!(partitions(m as u32).len(), want, "p({m})");
    }
    // ℓ-multipartitions of m: coefficient of q^m in P(q)^ℓ
    for ell in 1..=4u32 {
        let mut series = vec![1usize; 1];
        series.resize(7, 0);
        for _ in 0..ell {
            series = (0..7).map(|m| (0..=m).map(|k| series[k] * expected[m - k]).sum()).collect();
        }
        for (m, &want) in series.iter().enumerate() {
            assert_eq!(multipartitions(m as u32, ell).len(), want, "ell={ell} m={m}");
        }
    }
}

#[test]
fn category_o_counts_match_conjugacy_classes() {
    for (l, p, n) in [(2, 1, 2), (2, 2, 2), (2, 2, 3), (3, 3, 2), (4, 2, 2), (4, 4, 2), (6, 3, 2), (4, 2, 3)] {
        let census = count_simples(n, l, p, None).unwrap();
        assert_eq!(census.total as usize, class_count(l, p, n), "G({l},{p},{n})");
    }
}

#[test]
fn alpha_has_order_dividing_p() {
    for (l, p, n) in [(2, 2, 2), (4, 2, 2), (6, 3, 2), (4, 4, 1)] {
        let uni = default_universe(l, p);
        for chi in index_pairs(n, l, Some(&uni)) {
            let (orbit, p_chi) = orbit_and_stabilizer(&chi, l, p).unwrap();
            assert_eq!(p % p_chi, 0);
            assert_eq!(orbit.len(), p_chi as usize);
            let mut cur = chi.clone();
            for _ in 0..p {
                cur = alpha_act(&cur, l, p).unwrap();
            }
            assert_eq!(cur, chi);
        }
    }
}

#[test]
fn trivial_p_gives_one_simple_per_pair() {
    for (l, n) in [(1, 3), (2, 2), (3, 2)] {
        let uni = default_universe(l, 1);
        let census = count_simples(n, l, 1, Some(&uni)).unwrap();
        assert_eq!(census.total as usize, index_pairs(n, l, Some(&uni)).len());
    }
}

#[test]
fn g222_counts() {
    let uni = default_universe(2, 2);
    let census = count_simples(2, 2, 2, Some(&uni)).unwrap();
    // free orbits give one simple, fixed pairs give two
    let pairs = index_pairs(2, 2, Some(&uni));
    let fixed = pairs.iter().filter(|chi| alpha_act(chi, 2, 2).unwrap() == **chi).count();
    let free = pairs.len() - fixed;
    assert_eq!(census.total as usize, free / 2 + 2 * fixed);
    assert_eq!(count_simples(2, 2, 2, None).unwrap().total, 4);
}

#[test]
fn g22n_splitting_matches_stabilizer() {
    for n in 1..=3 {
        let uni = default_universe(2, 2);
        for chi in index_pairs(n, 2, Some(&uni)) {
            let (_, p_chi) = orbit_and_stabilizer(&chi, 2, 2).unwrap();
            let splits = g22n_restriction(&chi).unwrap() == Restriction::SplitsInTwo;
            assert_eq!(splits, p_chi == 1, "{chi:?}");
        }
    }
}

#[test]
fn clifford_suite_passes_on_small_cases() {
    for (l, p, n) in [(2, 2, 2), (4, 2, 2), (3, 3, 2), (2, 1, 3)] {
        let report = verify_clifford(l, p, n).unwrap();
        assert!(report.all_pass(), "G({l},{p},{n}): {report:?}");
    }
}
