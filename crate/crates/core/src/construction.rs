//! Recursive construction of the codes `C₁(a, b)`, `C₂(a, b)` along the
//! Euclidean remainder chain, and of the optimal distribution for
//! `G(n; {1, …, t})`.
//!
//! With `b = 2t + 1`, `n = qb + a` and `B = C₂(a, b)`, the distribution is
//! `B[b-a..b] ∘ B ∘ … ∘ B` (`q` copies of `B`), and vertex `i` receives the
//! label `⌊(k + C(i)) / b⌋`.

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::graph::DominationFunction;
use crate::scalar::Scalar;
use crate::sequences::{extension_sequence, seq_leq, sorted, Permutation};

/// `C₁(a, b)` together with its extension `C₂(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodePair {
    pub a: usize,
    pub b: usize,
    pub c1: Permutation,
    pub c2: Permutation,
}

impl CodePair {
    /// `C₂[b-a..b]`, the block prepended to the distribution.
    pub fn latter_block(&self) -> &[usize] {
        &self.c2.as_slice()[self.b - self.a..]
    }
}

/// One level of the `C₁` recursion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub a: usize,
    pub b: usize,
    /// `b mod a`; zero marks the divisible base case.
    pub r: usize,
    /// `C₁(r, a)` before complementing; `None` at the base case.
    pub inner: Option<Permutation>,
    /// Complement of `inner`.
    pub complemented: Option<Permutation>,
    /// `C₁(a, b)`.
    pub c1: Permutation,
}

/// Every recursion level of `C₁(a, b)`, innermost (base case) first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionTrace {
    pub steps: Vec<TraceStep>,
}

impl ConstructionTrace {
    pub fn c1(&self) -> &Permutation {
        &self.steps.last().expect("trace is never empty").c1
    }

    pub fn code_pair(&self) -> CodePair {
        let top = self.steps.last().expect("trace is never empty");
        let c2 = extension_sequence(&top.c1, top.b).expect("a < b along the chain");
        CodePair {
            a: top.a,
            b: top.b,
            c1: top.c1.clone(),
            c2,
        }
    }
}

fn check_pair(a: usize, b: usize) -> Result<()> {
    if a < 1 || a >= b {
        return Err(invalid(format!(
            "requires 1 <= a < b, got a = {a}, b = {b}"
        )));
    }
    Ok(())
}

/// Pairs visited by Euclid's algorithm from `(a, b)` down to the first pair
/// with `a | b`, innermost first.
fn euclid_chain(a: usize, b: usize) -> Vec<(usize, usize)> {
    let mut chain = vec![(a, b)];
    let (mut x, mut y) = (a, b);
    while y % x != 0 {
        (x, y) = (y % x, x);
        chain.push((x, y));
    }
    chain.reverse();
    chain
}

pub fn trace_construction(a: usize, b: usize) -> Result<ConstructionTrace> {
    check_pair(a, b)?;
    let mut steps: Vec<TraceStep> = Vec::new();
    for (a, b) in euclid_chain(a, b) {
        let r = b % a;
        let step = match steps.last() {
            None => {
                debug_assert_eq!(r, 0);
                TraceStep {
                    a,
                    b,
                    r,
                    inner: None,
                    complemented: None,
                    c1: Permutation::identity(a),
                }
            }
            Some(prev) => {
                debug_assert_eq!((prev.a, prev.b), (r, a));
                let inner = prev.c1.clone();
                let complemented = inner.complement();
                let c1 = extension_sequence(&complemented, a)?;
                TraceStep {
                    a,
                    b,
                    r,
                    inner: Some(inner),
                    complemented: Some(complemented),
                    c1,
                }
            }
        };
        steps.push(step);
    }
    Ok(ConstructionTrace { steps })
}

/// `C₁(a, b)`: the identity when `a | b`, otherwise the extension of the
/// complement of `C₁(b mod a, a)` to length `a`.
pub fn code_c1(a: usize, b: usize) -> Result<Permutation> {
    check_pair(a, b)?;
    let mut c1 = Permutation::identity(0);
    for (x, y) in euclid_chain(a, b) {
        c1 = if y % x == 0 {
            Permutation::identity(x)
        } else {
            extension_sequence(&c1.complement(), x)?
        };
    }
    Ok(c1)
}

pub fn code_c2(a: usize, b: usize) -> Result<CodePair> {
    let c1 = code_c1(a, b)?;
    let c2 = extension_sequence(&c1, b)?;
    Ok(CodePair { a, b, c1, c2 })
}

/// Circular sequence of residues in `[b]`, one per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Distribution {
    pub n: usize,
    pub b: usize,
    pub entries: Vec<usize>,
}

impl Distribution {
    /// `⌊(k + entry) / b⌋` per vertex.
    pub fn labels<W: Scalar>(&self, k: W) -> Vec<W> {
        let b = W::of(self.b);
        self.entries.iter().map(|&e| (k + W::of(e)) / b).collect()
    }

    /// Circular window of `len` entries starting at `start`.
    pub fn window(&self, start: usize, len: usize) -> Vec<usize> {
        (0..len)
            .map(|j| self.entries[(start + j) % self.n])
            .collect()
    }

    /// Every circular window of `b` entries, sorted, dominates `[0, 1, …, b-1]`
    /// pointwise. This is the k-independent form of the domination condition.
    pub fn windows_dominate_identity(&self) -> bool {
        let id: Vec<usize> = (0..self.b).collect();
        (0..self.n).all(|i| seq_leq(&id, &sorted(&self.window(i, self.b))).unwrap_or(false))
    }
}

/// `(b, q, a)` with `b = 2t + 1`, `n = qb + a`, after validating the instance.
pub fn instance_shape(n: usize, t: usize) -> Result<(usize, usize, usize)> {
    if n < 3 {
        return Err(invalid(format!(
            "graph order must be at least 3, got n = {n}"
        )));
    }
    if t < 1 || 2 * t + 1 > n {
        return Err(invalid(format!(
            "t must satisfy 1 <= t <= (n-1)/2 = {}, got t = {t}",
            (n - 1) / 2
        )));
    }
    let b = 2 * t + 1;
    Ok((b, n / b, n % b))
}

pub fn build_distribution(n: usize, t: usize) -> Result<Distribution> {
    let (b, q, a) = instance_shape(n, t)?;
    let block: Vec<usize> = if a == 0 {
        (0..b).collect()
    } else {
        code_c2(a, b)?.c2.into_vec()
    };
    let mut entries = Vec::with_capacity(n);
    entries.extend_from_slice(&block[b - a..]);
    for _ in 0..q {
        entries.extend_from_slice(&block);
    }
    debug_assert_eq!(entries.len(), n);
    Ok(Distribution { n, b, entries })
}

/// The `{k}`-domination function of weight `⌈kn/(2t+1)⌉` on `G(n; {1, …, t})`.
pub fn build_labeling<W: Scalar>(n: usize, t: usize, k: W) -> Result<DominationFunction<W>> {
    if k < W::zero() {
        return Err(invalid(format!("k must be nonnegative, got {k}")));
    }
    let dist = build_distribution(n, t)?;
    Ok(DominationFunction::new(dist.labels(k)))
}
