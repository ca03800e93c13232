//! Integer scalar abstraction.
//!
//! Everything that carries a label, a weight, a demand `k` or a modulus in
//! the floor/ceiling identities is generic over [`Scalar`]. Positions,
//! vertex indices and permutation entries stay `usize`.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::iter::Sum;

use num_integer::Integer;
use num_traits::{FromPrimitive, PrimInt, ToPrimitive};

/// Exact primitive integer usable as a label, weight or modulus.
///
/// Floating point types are deliberately not admitted: every identity in
/// this crate is an exact floor/ceiling statement.
pub trait Scalar:
    PrimInt
    + Integer
    + FromPrimitive
    + ToPrimitive
    + Hash
    + Debug
    + Display
    + Sum
    + Send
    + Sync
    + 'static
{
    /// Converts a position or count into the scalar type.
    ///
    /// Panics if the value does not fit, which only happens for inputs far
    /// outside anything this crate can enumerate.
    fn of(v: usize) -> Self {
        Self::from_usize(v).unwrap_or_else(|| panic!("{v} does not fit in scalar type"))
    }

    /// Converts back to `usize`, panicking on negative or oversized values.
    fn idx(self) -> usize {
        self.to_usize()
            .unwrap_or_else(|| panic!("{self} is not a valid index"))
    }
}

impl<T> Scalar for T where
    T: PrimInt
        + Integer
        + FromPrimitive
        + ToPrimitive
        + Hash
        + Debug
        + Display
        + Sum
        + Send
        + Sync
        + 'static
{
}

/// `⌈num / den⌉` for nonnegative `num` and positive `den`.
pub fn ceil_div<T: Scalar>(num: T, den: T) -> T {
    num.div_ceil(&den)
}

/// `⌊num / den⌋`, rounding toward negative infinity.
pub fn floor_div<T: Scalar>(num: T, den: T) -> T {
    num.div_floor(&den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_helpers() {
        assert_eq!(ceil_div(7u32, 3), 3);
        assert_eq!(ceil_div(6u64, 3), 2);
        assert_eq!(ceil_div(0i64, 5), 0);
        assert_eq!(floor_div(-1i64, 5), -1);
        assert_eq!(floor_div(9u8, 4), 2);
    }

    #[test]
    fn conversions() {
        assert_eq!(u16::of(300), 300);
        assert_eq!(17i64.idx(), 17);
    }

    #[test]
    #[should_panic]
    fn negative_index_panics() {
        let _ = (-1i32).idx();
    }
}
