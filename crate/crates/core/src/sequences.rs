//! Permutation machinery: complements, extension sequences, the niceness
//! predicate and pointwise comparison of nondecreasing sequences.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// A permutation of `[a] = {0, …, a-1}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let len = entries.len();
        let mut seen = vec![false; len];
        for &e in &entries {
            if e >= len {
                return Err(Error::NotAPermutation {
                    len,
                    detail: format!("entry {e} out of range"),
                });
            }
            if std::mem::replace(&mut seen[e], true) {
                return Err(Error::NotAPermutation {
                    len,
                    detail: format!("entry {e} repeated"),
                });
            }
        }
        Ok(Self(entries))
    }

    pub fn identity(len: usize) -> Self {
        Self((0..len).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Entrywise `x ↦ a - 1 - x`.
    pub fn complement(&self) -> Self {
        complement(self)
    }

    pub fn extend_to(&self, b: usize) -> Result<Self> {
        extension_sequence(self, b)
    }

    pub fn is_nice(&self, b: usize) -> Result<bool> {
        is_nice(self, b)
    }
}

impl std::ops::Index<usize> for Permutation {
    type Output = usize;

    fn index(&self, i: usize) -> &usize {
        &self.0[i]
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

pub fn complement(p: &Permutation) -> Permutation {
    let a = p.len();
    Permutation(p.0.iter().map(|&x| a - 1 - x).collect())
}

/// The extension sequence of `(p, b)`: tile `p` cyclically to length `b`
/// and replace every entry by its rank under `(value, position)` order.
///
/// For `b == p.len()` this returns `p` unchanged.
pub fn extension_sequence(p: &Permutation, b: usize) -> Result<Permutation> {
    let a = p.len();
    if a == 0 {
        return Err(invalid("cannot extend the empty permutation"));
    }
    if a > b {
        return Err(invalid(format!(
            "extension target {b} is shorter than the permutation length {a}"
        )));
    }
    let mut order: Vec<usize> = (0..b).collect();
    // stable sort keeps equal values in position order
    order.sort_by_key(|&i| p.0[i % a]);
    let mut out = vec![0; b];
    for (rank, &pos) in order.iter().enumerate() {
        out[pos] = rank;
    }
    Ok(Permutation(out))
}

/// Whether `p` (a permutation of `[a]`) is nice corresponding to `b`:
///
/// * `p(i) < p(i + r)` for `0 ≤ i ≤ a - r - 1`, and
/// * `p(j) < p(j - a + r)` for `a - r ≤ j ≤ a - d - 1`,
///
/// with `r = b mod a` and `d = gcd(a, b)`. The second family is empty when
/// `r = d`.
pub fn is_nice(p: &Permutation, b: usize) -> Result<bool> {
    let a = p.len();
    if a == 0 || b <= a || b.is_multiple_of(a) {
        return Err(Error::NicenessUndefined { a, b });
    }
    let r = b % a;
    let d = a.gcd(&b);
    let first = (0..a - r).all(|i| p[i] < p[i + r]);
    let second = (a - r..a - d).all(|j| p[j] < p[j + r - a]);
    Ok(first && second)
}

/// Pointwise `x(i) ≤ y(i)`.
pub fn seq_leq<T: PartialOrd>(x: &[T], y: &[T]) -> Result<bool> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(x.iter().zip(y).all(|(u, v)| u <= v))
}

pub fn concat<T: Clone>(x: &[T], y: &[T]) -> Vec<T> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    out.extend_from_slice(x);
    out.extend_from_slice(y);
    out
}

/// `x` sorted ascending.
pub fn sorted<T: Ord + Clone>(x: &[T]) -> Vec<T> {
    let mut v = x.to_vec();
    v.sort();
    v
}

/// Splits `b_seq` into the subsequence at `idx` and the remainder.
fn select_and_remove<T: Clone>(b_seq: &[T], idx: &[usize]) -> Result<(Vec<T>, Vec<T>)> {
    let mut picked = vec![false; b_seq.len()];
    for &i in idx {
        if i >= b_seq.len() {
            return Err(invalid(format!("index {i} out of range")));
        }
        if std::mem::replace(&mut picked[i], true) {
            return Err(invalid(format!("index {i} selected twice")));
        }
    }
    let (mut sel, mut rest) = (Vec::new(), Vec::new());
    for (v, &p) in b_seq.iter().zip(&picked) {
        if p {
            sel.push(v.clone());
        } else {
            rest.push(v.clone());
        }
    }
    Ok((sel, rest))
}

/// For a nondecreasing `b_seq` and two equal-size position sets selecting
/// `A` and `A'`, checks `[A ≤ A'] == [B∖A' ≤ B∖A]`.
///
/// Always true for valid inputs; kept as an executable statement of the
/// subsequence comparison property.
pub fn subseq_complement_leq_holds<T: Ord + Clone>(
    b_seq: &[T],
    idx_a: &[usize],
    idx_a2: &[usize],
) -> Result<bool> {
    if idx_a.len() != idx_a2.len() {
        return Err(Error::LengthMismatch {
            left: idx_a.len(),
            right: idx_a2.len(),
        });
    }
    if idx_a.is_empty() || idx_a.len() >= b_seq.len() {
        return Err(invalid(format!(
            "selection size {} must lie strictly between 0 and {}",
            idx_a.len(),
            b_seq.len()
        )));
    }
    if b_seq.windows(2).any(|w| w[0] > w[1]) {
        return Err(invalid("base sequence must be nondecreasing"));
    }
    let (a, rest_a) = select_and_remove(b_seq, idx_a)?;
    let (a2, rest_a2) = select_and_remove(b_seq, idx_a2)?;
    Ok(seq_leq(&a, &a2)? == seq_leq(&rest_a2, &rest_a)?)
}
