//! Operation counting, benchmarking and report emission.
//!
//! Counts are semantic: they are recorded by the pair and matrix
//! operations themselves, not by the big-integer library, so a Karatsuba
//! split inside `num-bigint` still counts as one multiplication.

mod bench;
mod report;

pub use bench::{run_bench, BenchRecord};
pub use report::{emit_report, ReportFormat, ReportRow};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

/// Tallies of big-integer operations performed during one computation.
///
/// `squarings` and `mults` are kept apart: squaring a value is never
/// counted as a general multiplication. `squaring_steps` and
/// `multiply_steps` count the structure-level steps of a square-and-multiply
/// scan (one pair or matrix squaring, one multiply by the generator).
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct OpCounters {
    pub squarings: u64,
    pub mults: u64,
    pub adds: u64,
    pub shifts: u64,
    pub squaring_steps: u64,
    pub multiply_steps: u64,
}

impl OpCounters {
    pub fn new() -> Self {
        Self::default()
    }

    pub(crate) fn square(&mut self, k: u64) {
        self.squarings += k;
    }

    pub(crate) fn mult(&mut self, k: u64) {
        self.mults += k;
    }

    pub(crate) fn add(&mut self, k: u64) {
        self.adds += k;
    }

    pub(crate) fn shift(&mut self, k: u64) {
        self.shifts += k;
    }

    pub(crate) fn squaring_step(&mut self) {
        self.squaring_steps += 1;
    }

    pub(crate) fn multiply_step(&mut self) {
        self.multiply_steps += 1;
    }
}

/// Number of binary digits of `n`, with `bit_length(0) == 1`.
pub fn bit_length(n: u64) -> u32 {
    (u64::BITS - n.leading_zeros()).max(1)
}

/// Squaring and φ-multiply steps the square-and-multiply scan must take
/// for index `n`: `(bitlen(n), popcount(n))`.
pub fn expected_counts(n: u64) -> (u32, u32) {
    (bit_length(n), n.count_ones())
}

/// Exact number of decimal digits of `|x|` (1 for zero).
///
/// The bit length gives a first guess which is then settled by exact
/// comparison against a power of ten, so no decimal conversion of `x`
/// is needed.
pub fn digit_count(x: &BigInt) -> u64 {
    let x = x.abs();
    if x.is_zero() {
        return 1;
    }
    let bits = x.bits();
    let mut digits = (((bits - 1) as f64) * std::f64::consts::LOG10_2).floor() as u64 + 1;
    let ten = BigInt::from(10u8);
    let mut lower = num_traits::pow(ten.clone(), (digits - 1) as usize);
    while digits > 1 && x < lower {
        digits -= 1;
        lower /= &ten;
    }
    loop {
        let upper = &lower * &ten;
        if x < upper {
            return digits;
        }
        digits += 1;
        lower = upper;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expected_counts_examples() {
        assert_eq!(expected_counts(49), (6, 3));
        assert_eq!(expected_counts(0), (1, 0));
        // 1000 = 0b1111101000
        assert_eq!(format!("{:b}", 1000), "1111101000");
        assert_eq!(expected_counts(1000), (10, 6));
    }

    #[test]
    fn digit_count_examples() {
        assert_eq!(digit_count(&BigInt::from(0)), 1);
        assert_eq!(digit_count(&BigInt::from(55)), 2);
        assert_eq!(digit_count(&BigInt::from(-55)), 2);
        // F(100) = 354224848179261915075
        let f100: BigInt = "354224848179261915075".parse().unwrap();
        assert_eq!(digit_count(&f100), 21);
    }

    #[test]
    fn digit_count_at_powers_of_ten() {
        for k in 0..60usize {
            let p = num_traits::pow(BigInt::from(10), k);
            assert_eq!(digit_count(&p), k as u64 + 1, "10^{k}");
            assert_eq!(digit_count(&(&p - 1)), (k as u64).max(1), "10^{k} - 1");
        }
    }
}
