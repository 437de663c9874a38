//! Exact Fibonacci and Lucas numbers for very large indices.
//!
//! The core idea: represent `(a + b√5)/2` as an integer pair `(a, b)`.
//! Then φ = `(1, 1)`, φⁿ = `(Lₙ, Fₙ)`, and square-and-multiply over pairs
//! computes both in `bitlen(n)` pair squarings (two integer squarings and
//! one multiplication each) plus `popcount(n)` multiplies by φ, which need
//! only shifts and additions.
//!
//! ```
//! use phifib::{fib_pair_fast, Int};
//!
//! let (f, l) = fib_pair_fast::<Int>(100, None);
//! assert_eq!(f.to_string(), "354224848179261915075");
//! assert_eq!(l.to_string(), "792070839848372253127");
//! ```
//!
//! All ring and matrix code is generic over [`Scalar`]; [`Int`] (`BigInt`)
//! is exact at any size, `i64`/`i128` work for small indices.

pub mod algorithms;
pub mod error;
pub mod instrumentation;
pub mod phi;
pub mod scalar;

pub use algorithms::{
    fib_fast_doubling, fib_float, fib_iterative, fib_lucas_linear, fib_matrix, fib_pair_fast,
    float_breakdown, lucas, mat_mul_m, mat_square, Algorithm, FloatEstimate, SymFibMatrix,
};
pub use error::{FibError, Result};
pub use instrumentation::{
    digit_count, emit_report, expected_counts, run_bench, BenchRecord, OpCounters, ReportFormat,
};
pub use phi::{
    pair_mul, pair_mul_phi, pair_mul_psi, pair_norm, pair_one, pair_phi, pair_pow_phi, pair_psi,
    pair_square, PhiPair,
};
pub use scalar::Scalar;

/// Arbitrary-precision signed integer used for exact results.
pub type Int = num_bigint::BigInt;

pub type BigPhiPair = PhiPair<Int>;
pub type BigSymFibMatrix = SymFibMatrix<Int>;
pub type PhiPair64 = PhiPair<i64>;
pub type PhiPair128 = PhiPair<i128>;

/// The binary64 rounding estimate.
pub type FloatEstimate64 = FloatEstimate<f64>;
