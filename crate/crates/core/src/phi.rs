//! Arithmetic on `(a + b√5)/2` with integer `a ≡ b (mod 2)`.
//!
//! A [`PhiPair`] stores the two numerators. φ is `(1, 1)`, ψ is `(1, -1)`
//! and 1 is `(2, 0)`. The n-th power of φ is `(Lₙ, Fₙ)`, so Fibonacci and
//! Lucas numbers fall out of a plain square-and-multiply over this ring.

use std::fmt;
use std::ops::Mul;

use crate::error::{FibError, Result};
use crate::instrumentation::OpCounters;
use crate::scalar::{lit, Scalar};

/// The element `(a + b√5)/2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PhiPair<T> {
    a: T,
    b: T,
}

impl<T: Scalar> PhiPair<T> {
    /// Builds a pair, rejecting components of different parity.
    pub fn new(a: T, b: T) -> Result<Self> {
        if a.is_even() != b.is_even() {
            return Err(FibError::ParityMismatch {
                a: a.to_string(),
                b: b.to_string(),
            });
        }
        Ok(Self { a, b })
    }

    fn raw(a: T, b: T) -> Self {
        debug_assert!(a.is_even() == b.is_even(), "parity broken: ({a}, {b})");
        Self { a, b }
    }

    /// `(2, 0)`, the element 1.
    pub fn one() -> Self {
        Self::raw(lit(2), T::zero())
    }

    pub fn phi() -> Self {
        Self::raw(T::one(), T::one())
    }

    pub fn psi() -> Self {
        Self::raw(T::one(), -T::one())
    }

    /// The real-part numerator.
    pub fn a(&self) -> &T {
        &self.a
    }

    /// The algebraic-part numerator (coefficient of √5).
    pub fn b(&self) -> &T {
        &self.b
    }

    pub fn into_parts(self) -> (T, T) {
        (self.a, self.b)
    }

    /// `(a + b√5)/2 · (c + d√5)/2 = ((ac + 5bd)/2 + (ad + bc)/2·√5)/2`.
    pub fn mul_counted(&self, other: &Self, ops: &mut OpCounters) -> Self {
        let ac = self.a.mul_ref(&other.a);
        let bd = self.b.mul_ref(&other.b);
        let ad = self.a.mul_ref(&other.b);
        let bc = self.b.mul_ref(&other.a);
        ops.mult(4);
        let a = ac.add_ref(&bd.times_five()).half_exact();
        let b = ad.add_ref(&bc).half_exact();
        ops.shift(3);
        ops.add(3);
        Self::raw(a, b)
    }

    /// `((a² + 5b²)/2, ab)`: two squarings and one multiplication.
    pub fn square_counted(&self, ops: &mut OpCounters) -> Self {
        let aa = self.a.square();
        let bb = self.b.square();
        ops.square(2);
        let ab = self.a.mul_ref(&self.b);
        ops.mult(1);
        let a = aa.add_ref(&bb.times_five()).half_exact();
        ops.shift(2);
        ops.add(2);
        ops.squaring_step();
        Self::raw(a, ab)
    }

    /// `((a + 5b)/2, (a + b)/2)`, using only shifts and additions.
    pub fn mul_phi_counted(&self, ops: &mut OpCounters) -> Self {
        let a = self.a.add_ref(&self.b.times_five()).half_exact();
        let b = self.a.add_ref(&self.b).half_exact();
        ops.shift(3);
        ops.add(3);
        ops.multiply_step();
        Self::raw(a, b)
    }

    /// `((a - 5b)/2, (b - a)/2)`, using only shifts and subtractions.
    pub fn mul_psi_counted(&self, ops: &mut OpCounters) -> Self {
        let a = self.a.sub_ref(&self.b.times_five()).half_exact();
        let b = self.b.sub_ref(&self.a).half_exact();
        ops.shift(3);
        ops.add(3);
        ops.multiply_step();
        Self::raw(a, b)
    }

    pub fn square(&self) -> Self {
        self.square_counted(&mut OpCounters::new())
    }

    pub fn mul_phi(&self) -> Self {
        self.mul_phi_counted(&mut OpCounters::new())
    }

    pub fn mul_psi(&self) -> Self {
        self.mul_psi_counted(&mut OpCounters::new())
    }

    /// The norm `(a² - 5b²)/4`, i.e. the element times its conjugate.
    pub fn norm(&self) -> T {
        let d = self.a.square().sub_ref(&self.b.square().times_five());
        debug_assert!(d.is_multiple_of(&lit(4)), "norm numerator {d} not divisible by 4");
        d.shr_bits(2)
    }

    /// The conjugate `(a - b√5)/2`.
    pub fn conj(&self) -> Self {
        Self::raw(self.a.clone(), -self.b.clone())
    }
}

impl<T: Scalar> Mul for &PhiPair<T> {
    type Output = PhiPair<T>;

    fn mul(self, rhs: Self) -> PhiPair<T> {
        self.mul_counted(rhs, &mut OpCounters::new())
    }
}

impl<T: Scalar> Mul for PhiPair<T> {
    type Output = PhiPair<T>;

    fn mul(self, rhs: Self) -> PhiPair<T> {
        &self * &rhs
    }
}

impl<T: fmt::Display> fmt::Display for PhiPair<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

pub fn pair_one<T: Scalar>() -> PhiPair<T> {
    PhiPair::one()
}

pub fn pair_phi<T: Scalar>() -> PhiPair<T> {
    PhiPair::phi()
}

pub fn pair_psi<T: Scalar>() -> PhiPair<T> {
    PhiPair::psi()
}

pub fn pair_mul<T: Scalar>(x: &PhiPair<T>, y: &PhiPair<T>) -> PhiPair<T> {
    x * y
}

pub fn pair_square<T: Scalar>(x: &PhiPair<T>) -> PhiPair<T> {
    x.square()
}

pub fn pair_mul_phi<T: Scalar>(x: &PhiPair<T>) -> PhiPair<T> {
    x.mul_phi()
}

pub fn pair_mul_psi<T: Scalar>(x: &PhiPair<T>) -> PhiPair<T> {
    x.mul_psi()
}

pub fn pair_norm<T: Scalar>(x: &PhiPair<T>) -> T {
    x.norm()
}

/// φⁿ as `(Lₙ, Fₙ)` by a most-significant-bit-first scan.
///
/// The state starts at 1 and every bit of `n`, the leading one included,
/// costs one pair squaring; each 1-bit adds one multiply by φ. Index 0 is
/// scanned as the single bit `0`. The squaring of the initial identity is
/// wasted work but keeps the counts at exactly `bitlen(n)` squarings and
/// `popcount(n)` φ-multiplies.
pub fn pair_pow_phi<T: Scalar>(n: u64, counters: Option<&mut OpCounters>) -> PhiPair<T> {
    let mut scratch = OpCounters::new();
    let ops = counters.unwrap_or(&mut scratch);
    let bits = crate::instrumentation::bit_length(n);
    let mut x = PhiPair::one();
    for i in (0..bits).rev() {
        x = x.square_counted(ops);
        if (n >> i) & 1 == 1 {
            x = x.mul_phi_counted(ops);
        }
    }
    x
}
