//! Fibonacci and Lucas algorithms: the square-and-multiply pair method
//! and its competitors.

mod doubling;
mod float;
mod linear;
mod matrix;
mod pair;

pub use doubling::fib_fast_doubling;
pub use float::{
    fib_float, float_breakdown, float_breakdown_in, float_estimate, max_float_index, FloatEstimate,
};
pub use linear::{fib_iterative, fib_lucas_linear};
pub use matrix::{fib_matrix, mat_mul_m, mat_pow_m, mat_square, SymFibMatrix};
pub use pair::{fib_pair_fast, lucas};

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{FibError, Result};
use crate::instrumentation::OpCounters;

/// Selectable algorithm, by its command-line identifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Iterative,
    LucasLinear,
    PairFast,
    Doubling,
    Matrix,
    Float,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::Iterative,
        Algorithm::LucasLinear,
        Algorithm::PairFast,
        Algorithm::Doubling,
        Algorithm::Matrix,
        Algorithm::Float,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Algorithm::Iterative => "iterative",
            Algorithm::LucasLinear => "lucas-linear",
            Algorithm::PairFast => "pair-fast",
            Algorithm::Doubling => "doubling",
            Algorithm::Matrix => "matrix",
            Algorithm::Float => "float",
        }
    }

    pub fn is_exact(self) -> bool {
        self != Algorithm::Float
    }

    /// Checks that `n` is in range without computing anything.
    pub fn check(self, n: u64) -> Result<()> {
        if self == Algorithm::Float {
            let max = max_float_index::<f64>();
            if n > max {
                return Err(FibError::FloatRange { n, max });
            }
        }
        Ok(())
    }

    /// Fₙ, with operation counts recorded into `ops`.
    ///
    /// For `Float` this is the rounded estimate, which may be wrong for
    /// large `n`.
    pub fn fib(self, n: u64, ops: &mut OpCounters) -> Result<BigInt> {
        Ok(match self {
            Algorithm::Iterative => linear::fib_iterative_counted(n, ops),
            Algorithm::LucasLinear => linear::fib_lucas_linear_counted(n, ops).0,
            Algorithm::PairFast => fib_pair_fast(n, Some(ops)).0,
            Algorithm::Doubling => fib_fast_doubling(n, Some(ops)),
            Algorithm::Matrix => fib_matrix(n, Some(ops)),
            Algorithm::Float => fib_float(n)?.rounded,
        })
    }

    /// Lₙ. The pair algorithms produce it directly; the other exact
    /// algorithms use `Lₙ = 2Fₙ₊₁ - Fₙ`.
    pub fn lucas(self, n: u64) -> Result<BigInt> {
        let mut ops = OpCounters::new();
        match self {
            Algorithm::PairFast => Ok(fib_pair_fast(n, None).1),
            Algorithm::LucasLinear => Ok(fib_lucas_linear(n).1),
            Algorithm::Float => Err(FibError::LucasUnsupported(self.id().to_string())),
            _ => {
                let f = self.fib(n, &mut ops)?;
                let f1 = self.fib(n + 1, &mut ops)?;
                Ok((f1 << 1usize) - f)
            }
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Algorithm {
    type Err = FibError;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.id() == s)
            .ok_or_else(|| FibError::UnknownAlgorithm(s.to_string()))
    }
}
