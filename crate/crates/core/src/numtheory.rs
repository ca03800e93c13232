//! Floor/ceiling identities and the balanced partition of `[b]` into `a`
//! contiguous blocks.
//!
//! The central fact used by the construction is
//!
//! ```text
//! ⌈ak/b⌉ = Σ_{i=0}^{a-1} ⌊(k + s_i)/b⌋,   s_i = ⌈(i+1)b/a⌉ - 1,
//! ```
//!
//! valid for every `k ≥ 0`. The offsets `s_i` are exactly the maximal
//! elements of the blocks `S_i = {⌈bi/a⌉, …, ⌈b(i+1)/a⌉ - 1}`.

use std::collections::BTreeSet;
use std::ops::Range;

use num_rational::Ratio;

use crate::error::{invalid, Result};
use crate::scalar::{ceil_div, floor_div, Scalar};

/// Offsets `s_0 < … < s_{a-1}` realising `⌈ak/b⌉` as a sum of floors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FloorSumDecomposition<T> {
    pub a: T,
    pub b: T,
    /// `offsets[i] = ⌈(i+1)b/a⌉ - 1`.
    pub offsets: Vec<T>,
}

impl<T: Scalar> FloorSumDecomposition<T> {
    /// `Σ_i ⌊(k + offsets[i]) / b⌋`.
    pub fn floor_sum(&self, k: T) -> T {
        self.offsets.iter().map(|&s| floor_div(k + s, self.b)).sum()
    }

    /// The value the floor sum must equal, `⌈ak/b⌉`.
    pub fn target(&self, k: T) -> T {
        ceil_div(self.a * k, self.b)
    }
}

/// Partition of `[b]` into `a` contiguous blocks whose sizes differ by at
/// most one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalPartition<T> {
    pub a: T,
    pub b: T,
    /// Half-open ranges; block `i` is `⌈bi/a⌉ .. ⌈b(i+1)/a⌉`.
    pub subsets: Vec<Range<T>>,
}

impl<T: Scalar> IntervalPartition<T> {
    pub fn sizes(&self) -> Vec<T> {
        self.subsets.iter().map(|r| r.end - r.start).collect()
    }

    /// Largest element of each block.
    pub fn maxima(&self) -> Vec<T> {
        self.subsets.iter().map(|r| r.end - T::one()).collect()
    }

    /// Index of the block containing `x`, if any.
    pub fn block_of(&self, x: T) -> Option<usize> {
        self.subsets.iter().position(|r| r.start <= x && x < r.end)
    }
}

fn check_a_le_b<T: Scalar>(a: T, b: T) -> Result<()> {
    if a < T::one() {
        return Err(invalid(format!("a must be positive, got {a}")));
    }
    if a > b {
        return Err(invalid(format!("requires a <= b, got a = {a}, b = {b}")));
    }
    Ok(())
}

/// Checks `⌊(k + ⌊x⌋)/a⌋ = ⌊(k + x)/a⌋` for a rational `x`.
///
/// Always true; kept as an executable statement of the identity.
pub fn floor_shift_identity_holds<T: Scalar>(k: T, a: T, x: Ratio<T>) -> bool {
    let k_r = Ratio::from_integer(k);
    let a_r = Ratio::from_integer(a);
    let lhs = floor_div(k + x.floor().to_integer(), a);
    let rhs = ((k_r + x) / a_r).floor().to_integer();
    lhs == rhs
}

/// Checks `Σ_{i=0}^{a-1} ⌊(k+i)/a⌋ = k`.
pub fn floor_sum_equals_k<T: Scalar>(k: T, a: T) -> bool {
    let mut sum = T::zero();
    let mut i = T::zero();
    while i < a {
        sum = sum + floor_div(k + i, a);
        i = i + T::one();
    }
    sum == k
}

/// Offsets `⌈(i+1)b/a⌉ - 1`, `i = 0..a`, for `1 ≤ a ≤ b`.
pub fn ceil_decomposition<T: Scalar>(a: T, b: T) -> Result<FloorSumDecomposition<T>> {
    check_a_le_b(a, b)?;
    let offsets = (1..=a.idx())
        .map(|i| ceil_div(T::of(i) * b, a) - T::one())
        .collect();
    Ok(FloorSumDecomposition { a, b, offsets })
}

/// Blocks `S_i = {⌈bi/a⌉, …, ⌈b(i+1)/a⌉ - 1}` for `1 ≤ a ≤ b`.
pub fn interval_partition<T: Scalar>(a: T, b: T) -> Result<IntervalPartition<T>> {
    check_a_le_b(a, b)?;
    let subsets = (0..a.idx())
        .map(|i| ceil_div(b * T::of(i), a)..ceil_div(b * T::of(i + 1), a))
        .collect();
    Ok(IntervalPartition { a, b, subsets })
}

/// Indices of the blocks of size `q + 1`, where `b = qa + r`: the values
/// `⌊aj/r⌋` for `j = 0..r`. Empty when `a | b`.
pub fn large_subset_indices<T: Scalar>(a: T, b: T) -> Result<BTreeSet<T>> {
    check_a_le_b(a, b)?;
    let r = b % a;
    let mut out = BTreeSet::new();
    let mut j = T::zero();
    while j < r {
        out.insert(floor_div(a * j, r));
        j = j + T::one();
    }
    Ok(out)
}
