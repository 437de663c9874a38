//! The integer scalar the ring and matrix arithmetic is generic over.
//!
//! Anything that behaves like a signed integer with by-reference
//! arithmetic and arithmetic shifts qualifies: `BigInt` for exact
//! results at any size, or `i64`/`i128` for small indices.

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Shl, Shr, Sub};

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed};

/// Signed integer usable as a pair or matrix component.
pub trait Scalar: Clone + Debug + Display + Integer + Signed + FromPrimitive {
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn shl_bits(&self, bits: usize) -> Self;
    fn shr_bits(&self, bits: usize) -> Self;

    fn square(&self) -> Self {
        self.mul_ref(self)
    }

    /// `self / 2` for a value known to be even.
    ///
    /// Odd input means a parity invariant was broken upstream; debug
    /// builds panic, release builds shift.
    fn half_exact(&self) -> Self {
        debug_assert!(self.is_even(), "inexact halving of {self}");
        self.shr_bits(1)
    }

    /// `5 * self` as `(self << 2) + self`.
    fn times_five(&self) -> Self {
        self.shl_bits(2).add_ref(self)
    }
}

impl<T> Scalar for T
where
    T: Clone + Debug + Display + Integer + Signed + FromPrimitive,
    T: Shl<usize, Output = T> + Shr<usize, Output = T>,
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T>,
{
    #[inline]
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    #[inline]
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }

    #[inline]
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    #[inline]
    fn shl_bits(&self, bits: usize) -> Self {
        self.clone() << bits
    }

    #[inline]
    fn shr_bits(&self, bits: usize) -> Self {
        self.clone() >> bits
    }
}

/// Small integer constant in any scalar type.
pub(crate) fn lit<T: Scalar>(v: i64) -> T {
    T::from_i64(v).expect("small constant fits every scalar")
}
