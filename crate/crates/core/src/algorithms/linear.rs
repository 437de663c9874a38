//! O(n) reference algorithms.

use crate::instrumentation::OpCounters;
use crate::phi::PhiPair;
use crate::scalar::Scalar;

/// Fₙ by stepping `Fₖ₊₁ = Fₖ + Fₖ₋₁` from `F₀ = 0, F₁ = 1`.
///
/// This is the ground truth every other algorithm is checked against.
pub fn fib_iterative<T: Scalar>(n: u64) -> T {
    fib_iterative_counted(n, &mut OpCounters::new())
}

pub(crate) fn fib_iterative_counted<T: Scalar>(n: u64, ops: &mut OpCounters) -> T {
    if n == 0 {
        return T::zero();
    }
    // (Fₖ₋₁, Fₖ), stopping at k = n so no term past Fₙ is formed
    let (mut prev, mut cur) = (T::zero(), T::one());
    for _ in 1..n {
        let sum = prev.add_ref(&cur);
        prev = std::mem::replace(&mut cur, sum);
    }
    ops.add(n - 1);
    cur
}

/// `(Fₙ, Lₙ)` from the halving recurrence
/// `eₖ = (eₖ₋₁ + 5fₖ₋₁)/2`, `fₖ = (eₖ₋₁ + fₖ₋₁)/2`, seeded with `e₀ = 2, f₀ = 0`.
///
/// One step is exactly a multiply by φ on the pair `(e, f)`.
pub fn fib_lucas_linear<T: Scalar>(n: u64) -> (T, T) {
    fib_lucas_linear_counted(n, &mut OpCounters::new())
}

pub(crate) fn fib_lucas_linear_counted<T: Scalar>(n: u64, ops: &mut OpCounters) -> (T, T) {
    let mut x = PhiPair::<T>::one();
    for _ in 0..n {
        x = x.mul_phi_counted(ops);
    }
    let (e, f) = x.into_parts();
    (f, e)
}
