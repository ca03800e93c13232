//! Independent reference computations shared by the integration suites.
//! Nothing here calls into the code paths it is used to check.
#![allow(dead_code)]

/// `⌈num / den⌉` by the textbook formula.
pub fn ceil_ref(num: u64, den: u64) -> u64 {
    num.div_ceil(den)
}

/// Sum of labels over the `2t+1` circularly consecutive vertices centred at
/// each vertex, by direct summation.
pub fn window_sums_ref(labels: &[u64], t: usize) -> Vec<u64> {
    let n = labels.len();
    (0..n)
        .map(|v| (0..=2 * t).map(|j| labels[(v + n - t + j) % n]).sum())
        .collect()
}

/// All nondecreasing lists `0 ≤ s_0 ≤ … ≤ s_{a-1} < b` with
/// `Σ ⌊(k + s_i)/b⌋ = ⌈ak/b⌉` for every `k` in `0..=a·b`.
///
/// Depth-first over values chosen from the top down. A branch is cut only
/// when, for some `k`, the target lies outside the interval of sums still
/// reachable given the remaining slots (each contributing between
/// `⌊k/b⌋` and `⌊(k + cap)/b⌋`).
pub fn offset_lists_satisfying(a: u64, b: u64) -> Vec<Vec<u64>> {
    let ks: Vec<u64> = (0..=a * b).collect();
    let targets: Vec<u64> = ks.iter().map(|&k| ceil_ref(a * k, b)).collect();
    let mut partial = vec![0u64; ks.len()];
    let mut chosen = Vec::new();
    let mut out = Vec::new();
    search(
        a,
        b,
        b - 1,
        &ks,
        &targets,
        &mut partial,
        &mut chosen,
        &mut out,
    );
    out
}

#[allow(clippy::too_many_arguments)]
fn search(
    a: u64,
    b: u64,
    cap: u64,
    ks: &[u64],
    targets: &[u64],
    partial: &mut [u64],
    chosen: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
) {
    let left = a - chosen.len() as u64;
    let feasible = ks
        .iter()
        .zip(targets)
        .zip(partial.iter())
        .all(|((&k, &tg), &p)| {
            let lo = p + left * (k / b);
            let hi = p + left * ((k + cap) / b);
            lo <= tg && tg <= hi
        });
    if !feasible {
        return;
    }
    if left == 0 {
        let mut list = chosen.clone();
        list.reverse();
        out.push(list);
        return;
    }
    for v in (0..=cap).rev() {
        for (p, &k) in partial.iter_mut().zip(ks) {
            *p += (k + v) / b;
        }
        chosen.push(v);
        search(a, b, v, ks, targets, partial, chosen, out);
        chosen.pop();
        for (p, &k) in partial.iter_mut().zip(ks) {
            *p -= (k + v) / b;
        }
    }
}

/// Ranks of the cyclic tiling of `p` to length `b`, computed by counting
/// how many positions precede each one under `(value, position)` order.
pub fn extension_ref(p: &[usize], b: usize) -> Vec<usize> {
    let a = p.len();
    (0..b)
        .map(|i| (0..b).filter(|&j| (p[j % a], j) < (p[i % a], i)).count())
        .collect()
}

/// All permutations of `[m]` in lexicographic order.
pub fn permutations(m: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (0..m).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..m).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..m).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}
