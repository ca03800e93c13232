mod common;

use circdom::oracle::{exact_gamma_k, exact_gamma_k_with, OracleConfig, DEFAULT_BUDGET};
use circdom::CirculantGraph;
use common::*;

/// Minimum weight over all labelings in `{0..=k}^n` by plain enumeration.
fn gamma_by_enumeration(g: &CirculantGraph, k: u64) -> u64 {
    let n = g.order();
    let nbhds: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            (0..n)
                .filter(|&u| u == v || g.diffs().contains(&g.distance(u, v)))
                .collect()
        })
        .collect();
    let mut labels = vec![0u64; n];
    let mut best = u64::MAX;
    loop {
        let ok = nbhds
            .iter()
            .all(|nb| nb.iter().map(|&u| labels[u]).sum::<u64>() >= k);
        if ok {
            best = best.min(labels.iter().sum());
        }
        // odometer increment
        let mut i = 0;
        while i < n && labels[i] == k {
            labels[i] = 0;
            i += 1;
        }
        if i == n {
            return best;
        }
        labels[i] += 1;
    }
}

#[test]
fn branch_and_bound_matches_enumeration_on_cycle_powers() {
    let cold = OracleConfig {
        seeded: false,
        ..OracleConfig::default()
    };
    for n in 3..=9 {
        for t in 1..=(n - 1) / 2 {
            let g = CirculantGraph::power_of_cycle(n, t).unwrap();
            for k in 0..=2 {
                let want = gamma_by_enumeration(&g, k);
                assert_eq!(want, ceil_ref(k * n as u64, 2 * t as u64 + 1));
                assert_eq!(exact_gamma_k(&g, k, DEFAULT_BUDGET).unwrap().gamma_k, want);
                assert_eq!(exact_gamma_k_with(&g, k, &cold).unwrap().gamma_k, want);
            }
        }
    }
}

#[test]
fn branch_and_bound_matches_enumeration_on_general_diffs() {
    let cases: &[(usize, &[usize])] = &[
        (6, &[1, 3]),
        (7, &[2]),
        (7, &[1, 3]),
        (8, &[2, 4]),
        (8, &[3]),
        (9, &[1, 4]),
        (9, &[3]),
        (8, &[4]),
    ];
    for &(n, d) in cases {
        let g = CirculantGraph::new(n, d.iter().copied()).unwrap();
        for k in 0..=2 {
            let r = exact_gamma_k(&g, k, DEFAULT_BUDGET).unwrap();
            assert_eq!(
                r.gamma_k,
                gamma_by_enumeration(&g, k),
                "n={n} D={d:?} k={k}"
            );
            assert!(g.is_k_dominating(&r.witness, k).unwrap());
        }
    }
}

#[test]
fn oracle_never_beats_the_lower_bound() {
    for n in 3..=14 {
        for t in 1..=(n - 1) / 2 {
            let g = CirculantGraph::power_of_cycle(n, t).unwrap();
            for k in 0..=4 {
                let r = exact_gamma_k(&g, k, DEFAULT_BUDGET).unwrap();
                assert!(r.gamma_k >= g.lower_bound(k).unwrap());
            }
        }
    }
}
