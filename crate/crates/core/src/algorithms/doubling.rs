use crate::instrumentation::{bit_length, OpCounters};
use crate::scalar::Scalar;

/// Fₙ by iterative fast doubling.
///
/// The state is the adjacent pair `(Fₖ, Fₖ₊₁)`, scanned from the most
/// significant bit of `n`. Each step applies
/// `F₂ₘ₋₁ = Fₘ² + Fₘ₋₁²` and `F₂ₘ = (2Fₘ₋₁ + Fₘ)·Fₘ` with `m = k + 1`,
/// giving `F₂ₖ₊₁` and `F₂ₖ₊₂` for two squarings and one multiplication;
/// `F₂ₖ` is their difference. No recursion, so nothing to memoize.
pub fn fib_fast_doubling<T: Scalar>(n: u64, counters: Option<&mut OpCounters>) -> T {
    let mut scratch = OpCounters::new();
    let ops = counters.unwrap_or(&mut scratch);
    let (mut fk, mut fk1) = (T::zero(), T::one());
    for i in (0..bit_length(n)).rev() {
        let odd = fk.square().add_ref(&fk1.square());
        ops.square(2);
        let even_next = fk.shl_bits(1).add_ref(&fk1).mul_ref(&fk1);
        ops.mult(1);
        ops.shift(1);
        ops.add(2);
        ops.squaring_step();
        if (n >> i) & 1 == 1 {
            (fk, fk1) = (odd, even_next);
        } else {
            let even = even_next.sub_ref(&odd);
            ops.add(1);
            (fk, fk1) = (even, odd);
        }
    }
    fk
}
