//! The rounding estimate `Fₙ = [φⁿ/√5]` in machine floating point, and
//! the index where it first stops being exact.

use num_bigint::BigInt;
use num_traits::{Float, FromPrimitive};

use super::linear::fib_iterative;
use crate::error::{FibError, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct FloatEstimate<F> {
    pub n: u64,
    /// φⁿ/√5 as computed in `F`.
    pub g: F,
    /// `g` rounded to the nearest integer, halves away from zero.
    pub rounded: BigInt,
    /// Whether `rounded` equals the true Fₙ.
    pub exact: bool,
}

/// φ from the platform square root of 5.
fn golden<F: Float>() -> F {
    let two = F::one() + F::one();
    let five = two + two + F::one();
    (F::one() + five.sqrt()) / two
}

/// `base^n` by square-and-multiply, most significant bit first.
fn powf_binary<F: Float>(base: F, n: u64) -> F {
    let mut acc = F::one();
    for i in (0..crate::instrumentation::bit_length(n)).rev() {
        acc = acc * acc;
        if (n >> i) & 1 == 1 {
            acc = acc * base;
        }
    }
    acc
}

/// Largest `n` for which φⁿ is finite in `F` (1474 for `f64`).
pub fn max_float_index<F: Float>() -> u64 {
    let phi = golden::<F>();
    let guess = (F::max_value().ln() / phi.ln()).floor().to_u64().unwrap_or(0);
    let mut n = guess;
    while n > 0 && !powf_binary(phi, n).is_finite() {
        n -= 1;
    }
    while powf_binary(phi, n + 1).is_finite() {
        n += 1;
    }
    n
}

/// The estimate in an arbitrary float type.
pub fn float_estimate<F: Float>(n: u64) -> Result<FloatEstimate<F>> {
    let max = max_float_index::<F>();
    if n > max {
        return Err(FibError::FloatRange { n, max });
    }
    let phi = golden::<F>();
    let sqrt5 = phi + phi - F::one();
    let g = powf_binary(phi, n) / sqrt5;
    let rounded = g
        .round()
        .to_f64()
        .and_then(BigInt::from_f64)
        .expect("finite value converts to an integer");
    let exact = rounded == fib_iterative::<BigInt>(n);
    Ok(FloatEstimate { n, g, rounded, exact })
}

/// The estimate in binary64.
pub fn fib_float(n: u64) -> Result<FloatEstimate<f64>> {
    float_estimate::<f64>(n)
}

/// Smallest `n ≤ limit` where the binary64 estimate is wrong, if any.
pub fn float_breakdown(limit: u64) -> Result<Option<u64>> {
    float_breakdown_in::<f64>(limit)
}

pub fn float_breakdown_in<F: Float>(limit: u64) -> Result<Option<u64>> {
    for n in 0..=limit {
        if !float_estimate::<F>(n)?.exact {
            return Ok(Some(n));
        }
    }
    Ok(None)
}
