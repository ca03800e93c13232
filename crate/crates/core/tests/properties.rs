mod common;

use std::collections::BTreeSet;

use circdom::construction::{build_distribution, build_labeling, code_c1, code_c2, instance_shape};
use circdom::numtheory::ceil_decomposition;
use circdom::sequences::{extension_sequence, is_nice, seq_leq, sorted, Permutation};
use circdom::CirculantGraph;
use common::*;

#[test]
fn extension_matches_counting_reference() {
    for a in 1..=6 {
        for p in permutations(a) {
            let perm = Permutation::new(p.clone()).unwrap();
            for b in a..=3 * a + 2 {
                assert_eq!(
                    extension_sequence(&perm, b).unwrap().as_slice(),
                    extension_ref(&p, b)
                );
            }
        }
    }
}

#[test]
fn c2_matches_counting_reference() {
    for b in 2..=80 {
        for a in 1..b {
            let pair = code_c2(a, b).unwrap();
            assert_eq!(pair.c2.as_slice(), extension_ref(pair.c1.as_slice(), b));
        }
    }
}

#[test]
fn offset_lists_are_unique_up_to_60() {
    for b in 2..=60u64 {
        for a in 1..b {
            let found = offset_lists_satisfying(a, b);
            let canonical = ceil_decomposition(a, b).unwrap().offsets;
            assert_eq!(found, vec![canonical], "a={a} b={b}");
        }
    }
}

#[test]
fn uniqueness_search_sees_a_eq_b() {
    // sanity for the reference search itself: at a = b the unique list is [0, …, b-1]
    for b in 1..=8u64 {
        assert_eq!(
            offset_lists_satisfying(b, b),
            vec![(0..b).collect::<Vec<_>>()]
        );
    }
}

/// Niceness propagates through complement-then-extend for every nice
/// permutation of a small `[r]`, not only along construction chains.
#[test]
fn nice_permutations_propagate_exhaustively() {
    let mut checked = 0;
    for r in 1..=6 {
        for rp in permutations(r) {
            let rperm = Permutation::new(rp).unwrap();
            for a in r + 1..=30 {
                if a % r == 0 || !is_nice(&rperm, a).unwrap() {
                    continue;
                }
                let ext = extension_sequence(&rperm.complement(), a).unwrap();
                for b in [a + r, 2 * a + r, 5 * a + r] {
                    assert!(is_nice(&ext, b).unwrap(), "R={rperm} a={a} b={b}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 1000);
}

#[test]
fn construction_chain_is_nice_and_c1_base_is_nice() {
    for b in 2..=200 {
        for a in 1..b {
            if b % a != 0 {
                let c1 = code_c1(a, b).unwrap();
                assert!(is_nice(&c1, b).unwrap());
                assert!(is_nice(&c1, b + a).unwrap());
            }
        }
    }
}

#[test]
fn substring_bound() {
    for n in 3..=150 {
        for t in 1..=(n - 1) / 2 {
            let (b, _, a) = instance_shape(n, t).unwrap();
            if a == 0 {
                continue;
            }
            let d = build_distribution(n, t).unwrap();
            let block = sorted(code_c2(a, b).unwrap().latter_block());
            for i in 0..n {
                let w = sorted(&d.window(i, a));
                assert!(seq_leq(&w, &block).unwrap(), "n={n} t={t} i={i}");
            }
        }
    }
}

#[test]
fn window_dominance_all_circular_windows() {
    for n in 3..=150 {
        for t in 1..=(n - 1) / 2 {
            let d = build_distribution(n, t).unwrap();
            let id: Vec<usize> = (0..d.b).collect();
            for i in 0..n {
                assert!(
                    seq_leq(&id, &sorted(&d.window(i, d.b))).unwrap(),
                    "n={n} t={t} i={i}"
                );
            }
        }
    }
}

#[test]
fn latter_block_floor_sum() {
    for b in 2..=200u64 {
        for a in 1..b {
            let pair = code_c2(a as usize, b as usize).unwrap();
            let set: BTreeSet<u64> = pair.latter_block().iter().map(|&x| x as u64).collect();
            let want: BTreeSet<u64> = (1..=a).map(|i| ceil_ref(i * b, a) - 1).collect();
            assert_eq!(set, want);
            for k in 0..=2 * b {
                let s: u64 = set.iter().map(|&x| (k + x) / b).sum();
                assert_eq!(s, ceil_ref(a * k, b));
            }
        }
    }
}

#[test]
fn labelings_dominate_with_exact_weight() {
    for n in 3..=120 {
        for t in 1..=(n - 1) / 2 {
            let b = 2 * t as u64 + 1;
            let g = CirculantGraph::power_of_cycle(n, t).unwrap();
            for k in 0..=(2 * b).max(10) {
                let f = build_labeling(n, t, k).unwrap();
                assert_eq!(f.weight(), ceil_ref(k * n as u64, b));
                assert!(window_sums_ref(f.labels(), t).iter().all(|&s| s >= k));
                assert!(g.is_k_dominating(&f, k).unwrap());
            }
        }
    }
}

#[test]
fn generic_label_types_agree() {
    for n in 3..=40 {
        for t in 1..=(n - 1) / 2 {
            for k in 0..=12u8 {
                let small = build_labeling(n, t, k).unwrap();
                let wide = build_labeling(n, t, k as u64).unwrap();
                let signed = build_labeling(n, t, k as i32).unwrap();
                assert_eq!(small.weight() as u64, wide.weight());
                assert_eq!(signed.weight() as u64, wide.weight());
            }
        }
    }
}
