use num_bigint::BigInt;
use phifib::{fib_float, fib_iterative, Result};

/// Rows `n  gₙ  fₙ` for `n = 0..=max_n`, preceded by a header line.
///
/// `gₙ` is the binary64 value of φⁿ/√5 printed to four decimals;
/// `fₙ` is the exact Fibonacci number.
pub fn render_table(max_n: u64) -> Result<String> {
    let mut out = String::from("n  g_n  f_n\n");
    for n in 0..=max_n {
        let est = fib_float(n)?;
        out.push_str(&format!("{n}  {:.4}  {}\n", est.g, fib_iterative::<BigInt>(n)));
    }
    Ok(out)
}
