use std::time::Instant;

use crate::algorithms::Algorithm;
use crate::error::{FibError, Result};

use super::{digit_count, OpCounters};

/// One benchmark observation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRecord {
    pub algo: Algorithm,
    pub n: u64,
    /// Median over `repeats` runs, at least 1.
    pub wall_time_ns: u64,
    pub repeats: u32,
    pub counters: OpCounters,
    /// Decimal digits of the computed Fₙ.
    pub digits: u64,
}

/// Runs `algo` at `n` `repeats` times on a monotonic clock.
///
/// Every run is instrumented; results and counts must agree across runs.
pub fn run_bench(algo: Algorithm, n: u64, repeats: u32) -> Result<BenchRecord> {
    if repeats == 0 {
        return Err(FibError::ZeroRepeats);
    }
    algo.check(n)?;
    let mut times = Vec::with_capacity(repeats as usize);
    let mut first = None;
    for _ in 0..repeats {
        let mut ops = OpCounters::new();
        let start = Instant::now();
        let value = algo.fib(n, &mut ops)?;
        let elapsed = start.elapsed();
        times.push(u64::try_from(elapsed.as_nanos()).unwrap_or(u64::MAX));
        match &first {
            None => first = Some((value, ops)),
            Some(seen) if *seen != (value, ops) => {
                return Err(FibError::InconsistentRepeats { algo: algo.id().to_string(), n });
            }
            Some(_) => {}
        }
    }
    let (value, counters) = first.expect("at least one repeat");
    Ok(BenchRecord {
        algo,
        n,
        wall_time_ns: median(&mut times).max(1),
        repeats,
        counters,
        digits: digit_count(&value),
    })
}

fn median(xs: &mut [u64]) -> u64 {
    xs.sort_unstable();
    let mid = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[mid]
    } else {
        xs[mid - 1] + (xs[mid] - xs[mid - 1]) / 2
    }
}
