//! Command implementations behind the `phifib` binary.

mod format;
mod selftest;
mod table;

pub use format::OutputFormat;
pub use selftest::{run_selftest, CheckOutcome};
pub use table::render_table;

use phifib::{emit_report, run_bench, Algorithm, OpCounters, ReportFormat, Result};

/// The value `compute` prints: Fₙ, or Lₙ when `lucas` is set.
pub fn compute(n: u64, algo: Algorithm, format: OutputFormat, lucas: bool) -> Result<String> {
    algo.check(n)?;
    let value = if lucas { algo.lucas(n)? } else { algo.fib(n, &mut OpCounters::new())? };
    Ok(format.render(&value))
}

/// Benchmarks every `(algo, n)` pair, algorithm-major.
///
/// All combinations are validated before anything runs.
pub fn bench(ns: &[u64], algos: &[Algorithm], repeats: u32, format: ReportFormat) -> Result<String> {
    for &algo in algos {
        for &n in ns {
            algo.check(n)?;
        }
    }
    let mut records = Vec::with_capacity(ns.len() * algos.len());
    for &algo in algos {
        for &n in ns {
            records.push(run_bench(algo, n, repeats)?);
        }
    }
    emit_report(&records, format)
}
