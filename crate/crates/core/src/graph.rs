//! Circulant graphs `G(n; D)` and `{k}`-domination checks.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::scalar::{ceil_div, Scalar};

/// Graph on `ℤ_n` where `i ~ j` iff `min(|i-j|, n-|i-j|) ∈ D`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CirculantGraph {
    n: usize,
    diffs: BTreeSet<usize>,
}

impl CirculantGraph {
    pub fn new(n: usize, diffs: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n == 0 {
            return Err(invalid("graph order must be positive"));
        }
        let diffs: BTreeSet<usize> = diffs.into_iter().collect();
        if let Some(&d) = diffs.iter().find(|&&d| d < 1 || d > n / 2) {
            return Err(invalid(format!(
                "difference {d} outside 1..={} for n = {n}",
                n / 2
            )));
        }
        Ok(Self { n, diffs })
    }

    /// `G(n; {1, …, t})`, the `t`-th power of the `n`-cycle.
    pub fn power_of_cycle(n: usize, t: usize) -> Result<Self> {
        Self::new(n, 1..=t)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn diffs(&self) -> &BTreeSet<usize> {
        &self.diffs
    }

    /// Circular distance `min(|i-j|, n-|i-j|)`.
    pub fn distance(&self, i: usize, j: usize) -> usize {
        let d = i.abs_diff(j) % self.n;
        d.min(self.n - d)
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.diffs.contains(&self.distance(i, j))
    }

    /// `Some(t)` when `D = {1, …, t}` with `1 ≤ t ≤ (n-1)/2`, so that every
    /// closed neighbourhood is a circular interval of `2t + 1` vertices.
    pub fn contiguous_t(&self) -> Option<usize> {
        let t = self.diffs.len();
        let prefix = t >= 1 && self.diffs.iter().copied().eq(1..=t);
        (prefix && 2 * t < self.n).then_some(t)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            });
        }
        Ok(())
    }

    /// `N[v] = {v} ∪ {u : d(u, v) ∈ D}`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<BTreeSet<usize>> {
        self.check_vertex(v)?;
        let mut out = BTreeSet::from([v]);
        for &d in &self.diffs {
            out.insert((v + d) % self.n);
            out.insert((v + self.n - d) % self.n);
        }
        Ok(out)
    }

    /// Sum of labels over `N[v]` for every vertex `v`.
    pub fn neighborhood_sums<W: Scalar>(&self, f: &DominationFunction<W>) -> Result<Vec<W>> {
        if f.graph_order() != self.n {
            return Err(Error::OrderMismatch {
                expected: self.n,
                found: f.graph_order(),
            });
        }
        let labels = f.labels();
        if let Some(t) = self.contiguous_t() {
            // sliding window of 2t+1 over the circle
            let n = self.n;
            let mut sum: W = (0..=2 * t).map(|j| labels[(n - t + j) % n]).sum();
            let mut out = Vec::with_capacity(n);
            for v in 0..n {
                out.push(sum);
                sum = sum - labels[(v + n - t) % n] + labels[(v + t + 1) % n];
            }
            return Ok(out);
        }
        (0..self.n)
            .map(|v| {
                Ok(self
                    .closed_neighborhood(v)?
                    .into_iter()
                    .map(|u| labels[u])
                    .sum())
            })
            .collect()
    }

    /// Whether every closed neighbourhood carries total label at least `k`.
    pub fn is_k_dominating<W: Scalar>(&self, f: &DominationFunction<W>, k: W) -> Result<bool> {
        Ok(self.neighborhood_sums(f)?.into_iter().all(|s| s >= k))
    }

    /// `⌈kn / (2t+1)⌉`, defined for `D = {1, …, t}` only.
    pub fn lower_bound<W: Scalar>(&self, k: W) -> Result<W> {
        let t = self
            .contiguous_t()
            .ok_or_else(|| Error::NonContiguousDiffs(self.diffs.iter().copied().collect()))?;
        if k < W::zero() {
            return Err(invalid(format!("k must be nonnegative, got {k}")));
        }
        Ok(ceil_div(k * W::of(self.n), W::of(2 * t + 1)))
    }

    /// Undirected edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for &d in &self.diffs {
                let v = (u + d) % self.n;
                out.push((u.min(v), u.max(v)));
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Graphviz rendering, one node and edge per line in sorted order.
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let diffs: Vec<String> = self.diffs.iter().map(usize::to_string).collect();
        let _ = writeln!(s, "graph \"G({};{{{}}})\" {{", self.n, diffs.join(","));
        for v in 0..self.n {
            let _ = writeln!(s, "  {v};");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(s, "  {u} -- {v};");
        }
        s.push_str("}\n");
        s
    }
}

/// Vertex labeling `f : V → ℕ ∪ {0}` with its cached weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominationFunction<W> {
    labels: Vec<W>,
    weight: W,
}

impl<W: Scalar> DominationFunction<W> {
    /// Panics on negative labels.
    pub fn new(labels: Vec<W>) -> Self {
        Self::try_new(labels).expect("labels must be nonnegative")
    }

    pub fn try_new(labels: Vec<W>) -> Result<Self> {
        if let Some(l) = labels.iter().find(|&&l| l < W::zero()) {
            return Err(invalid(format!("negative label {l}")));
        }
        let weight = labels.iter().copied().sum();
        Ok(Self { labels, weight })
    }

    pub fn zeros(n: usize) -> Self {
        Self::new(vec![W::zero(); n])
    }

    pub fn graph_order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[W] {
        &self.labels
    }

    pub fn weight(&self) -> W {
        self.weight
    }

    /// Pointwise sum; the sum of a `k₁`- and a `k₂`-dominating function is
    /// `(k₁ + k₂)`-dominating.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.labels.len() != other.labels.len() {
            return Err(Error::OrderMismatch {
                expected: self.labels.len(),
                found: other.labels.len(),
            });
        }
        Ok(Self::new(
            self.labels
                .iter()
                .zip(&other.labels)
                .map(|(&x, &y)| x + y)
                .collect(),
        ))
    }
}
