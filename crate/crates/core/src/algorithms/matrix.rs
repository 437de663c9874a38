use std::fmt;

use crate::instrumentation::{bit_length, OpCounters};
use crate::scalar::Scalar;

/// The symmetric matrix `[[a, b], [b, c]]`.
///
/// Powers of `M = [[1, 1], [1, 0]]` have this shape with `a = b + c`;
/// `Mⁿ = [[Fₙ₊₁, Fₙ], [Fₙ, Fₙ₋₁]]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymFibMatrix<T> {
    pub a: T,
    pub b: T,
    pub c: T,
}

impl<T: Scalar> SymFibMatrix<T> {
    pub fn new(a: T, b: T, c: T) -> Self {
        Self { a, b, c }
    }

    pub fn identity() -> Self {
        Self::new(T::one(), T::zero(), T::one())
    }

    /// `M = [[1, 1], [1, 0]]`.
    pub fn m() -> Self {
        Self::new(T::one(), T::one(), T::zero())
    }

    /// Whether `a = b + c`, which holds for every power of `M`.
    pub fn is_fib_power(&self) -> bool {
        self.a == self.b.add_ref(&self.c)
    }

    /// `self · M = [[a + b, a], [a, b]]`, valid only when `a = b + c`.
    pub fn mul_m_counted(&self, ops: &mut OpCounters) -> Self {
        debug_assert!(self.is_fib_power(), "mul_m on a non-power of M: {self}");
        ops.add(1);
        ops.multiply_step();
        Self::new(self.a.add_ref(&self.b), self.a.clone(), self.b.clone())
    }

    /// `[[a² + b², ab + bc], [ab + bc, b² + c²]]`: three squarings, two multiplications.
    pub fn square_counted(&self, ops: &mut OpCounters) -> Self {
        let aa = self.a.square();
        let bb = self.b.square();
        let cc = self.c.square();
        ops.square(3);
        let ab = self.a.mul_ref(&self.b);
        let bc = self.b.mul_ref(&self.c);
        ops.mult(2);
        ops.add(3);
        ops.squaring_step();
        Self::new(aa.add_ref(&bb), ab.add_ref(&bc), bb.add_ref(&cc))
    }

    pub fn mul_m(&self) -> Self {
        self.mul_m_counted(&mut OpCounters::new())
    }

    pub fn square(&self) -> Self {
        self.square_counted(&mut OpCounters::new())
    }
}

impl<T: fmt::Display> fmt::Display for SymFibMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.b, self.c)
    }
}

pub fn mat_mul_m<T: Scalar>(x: &SymFibMatrix<T>) -> SymFibMatrix<T> {
    x.mul_m()
}

pub fn mat_square<T: Scalar>(x: &SymFibMatrix<T>, counters: Option<&mut OpCounters>) -> SymFibMatrix<T> {
    match counters {
        Some(ops) => x.square_counted(ops),
        None => x.square(),
    }
}

/// `Mⁿ` by most-significant-bit-first square-and-multiply from the identity.
pub fn mat_pow_m<T: Scalar>(n: u64, counters: Option<&mut OpCounters>) -> SymFibMatrix<T> {
    let mut scratch = OpCounters::new();
    let ops = counters.unwrap_or(&mut scratch);
    let mut x = SymFibMatrix::identity();
    for i in (0..bit_length(n)).rev() {
        x = x.square_counted(ops);
        if (n >> i) & 1 == 1 {
            x = x.mul_m_counted(ops);
        }
    }
    x
}

/// Fₙ as the off-diagonal entry of `Mⁿ`.
pub fn fib_matrix<T: Scalar>(n: u64, counters: Option<&mut OpCounters>) -> T {
    mat_pow_m::<T>(n, counters).b
}
