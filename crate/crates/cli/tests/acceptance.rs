//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fail.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use rand::{Rng, SeedableRng};

use phifib::{
    emit_report, expected_counts, fib_fast_doubling, fib_float, fib_iterative, fib_lucas_linear,
    fib_matrix, fib_pair_fast, float_breakdown, lucas, pair_norm, pair_pow_phi, run_bench,
    Algorithm, OpCounters, ReportFormat,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

/// The nine rows of the original table: n, g_n to four places, f_n.
const TABLE: [(u64, &str, u64); 9] = [
    (0, "0.4472", 0),
    (1, "0.7236", 1),
    (2, "1.1708", 1),
    (3, "1.8944", 2),
    (4, "3.0652", 3),
    (5, "4.9597", 5),
    (6, "8.0249", 8),
    (7, "12.9846", 13),
    (8, "21.0095", 21),
];

fn table_reproduction() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_phifib"))
        .args(["table", "--max-n", "8"])
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(out.status.success(), || format!("exit status {:?}", out.status.code()))?;
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    let rows: Vec<Vec<&str>> = text.lines().skip(1).map(|l| l.split_whitespace().collect()).collect();
    ensure(rows.len() == TABLE.len(), || format!("{} rows", rows.len()))?;
    for (row, (n, g, f)) in rows.iter().zip(TABLE) {
        let want = [n.to_string(), g.to_string(), f.to_string()];
        ensure(row.iter().copied().eq(want.iter().map(String::as_str)), || format!("row {n}: {row:?}"))?;
    }
    within(elapsed, Duration::from_secs(1))?;
    Ok(format!("9 rows match in {elapsed:?}"))
}

fn lucas_list() -> Outcome {
    let start = Instant::now();
    let got: Vec<BigInt> = (0..8).map(lucas).collect();
    let want: Vec<BigInt> = [2, 1, 3, 4, 7, 11, 18, 29].into_iter().map(BigInt::from).collect();
    ensure(got == want, || format!("got {got:?}"))?;
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok("2, 1, 3, 4, 7, 11, 18, 29".into())
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    for n in 0..=2000u64 {
        let oracle = fib_iterative::<BigInt>(n);
        ensure(fib_pair_fast::<BigInt>(n, None).0 == oracle, || format!("pair-fast at n = {n}"))?;
        ensure(fib_fast_doubling::<BigInt>(n, None) == oracle, || format!("doubling at n = {n}"))?;
        ensure(fib_matrix::<BigInt>(n, None) == oracle, || format!("matrix at n = {n}"))?;
        ensure(fib_lucas_linear::<BigInt>(n).0 == oracle, || format!("lucas-linear at n = {n}"))?;
    }
    let mut rng = rand::rngs::StdRng::seed_from_u64(1_000_000);
    for _ in 0..100 {
        let n = rng.gen_range(2001..=1_000_000u64);
        let pair = fib_pair_fast::<BigInt>(n, None).0;
        ensure(fib_fast_doubling::<BigInt>(n, None) == pair, || format!("doubling at n = {n}"))?;
        ensure(fib_matrix::<BigInt>(n, None) == pair, || format!("matrix at n = {n}"))?;
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(60))?;
    Ok(format!("n <= 2000 and 100 random n <= 10^6 in {elapsed:?}"))
}

fn counter_exactness() -> Outcome {
    let start = Instant::now();
    for n in 1..=4096u64 {
        let (bits, pop) = expected_counts(n);
        let (bits, pop) = (u64::from(bits), u64::from(pop));
        let mut pair = OpCounters::new();
        fib_pair_fast::<BigInt>(n, Some(&mut pair));
        ensure(pair.squaring_steps == bits && pair.multiply_steps == pop, || {
            format!("pair-fast n = {n}: {pair:?}")
        })?;
        ensure(pair.squarings == 2 * bits && pair.mults == bits, || format!("pair-fast n = {n}: {pair:?}"))?;
        let mut matrix = OpCounters::new();
        fib_matrix::<BigInt>(n, Some(&mut matrix));
        ensure(matrix.squarings == 3 * bits && matrix.mults == 2 * bits, || {
            format!("matrix n = {n}: {matrix:?}")
        })?;
        if n >= 2 {
            ensure(pair.mults < matrix.mults, || format!("n = {n}: {} !< {}", pair.mults, matrix.mults))?;
        }
    }
    let mut spot = OpCounters::new();
    pair_pow_phi::<BigInt>(49, Some(&mut spot));
    ensure((spot.squaring_steps, spot.multiply_steps) == (6, 3), || format!("n = 49: {spot:?}"))?;
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(30))?;
    Ok(format!("1..=4096, n = 49 -> (6, 3), in {elapsed:?}"))
}

fn last_nine_digits(n: u64) -> u64 {
    const M: u64 = 1_000_000_000;
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..n {
        (a, b) = (b, (a + b) % M);
    }
    a
}

fn million_index() -> Outcome {
    let n = 1_000_000u64;
    let record = run_bench(Algorithm::PairFast, n, 1).map_err(|e| e.to_string())?;
    let log_phi = ((1.0 + 5f64.sqrt()) / 2.0).log10();
    let want_digits = (n as f64 * log_phi - 5f64.sqrt().log10()).floor() as u64 + 1;
    ensure(record.digits == want_digits, || format!("{} digits, expected {want_digits}", record.digits))?;
    let f = fib_pair_fast::<BigInt>(n, None).0;
    let tail = f.mod_floor(&BigInt::from(1_000_000_000u64));
    let oracle = BigInt::from(last_nine_digits(n));
    ensure(tail == oracle, || format!("last nine digits {tail}, expected {oracle}"))?;
    let wall = Duration::from_nanos(record.wall_time_ns);
    within(wall, Duration::from_secs(5))?;
    let report = emit_report(&[record], ReportFormat::Csv).map_err(|e| e.to_string())?;
    print!("{report}");
    Ok(format!("{want_digits} digits, ends ...{oracle:09}, {wall:?}"))
}

fn norm_and_parity() -> Outcome {
    let start = Instant::now();
    for n in 0..=2000u64 {
        let x = pair_pow_phi::<BigInt>(n, None);
        ensure(x.a().is_even() == x.b().is_even(), || format!("parity at n = {n}"))?;
        let want = BigInt::from(if n % 2 == 0 { 1 } else { -1 });
        ensure(pair_norm(&x) == want, || format!("norm at n = {n}"))?;
    }
    within(start.elapsed(), Duration::from_secs(10))?;
    Ok("n <= 2000".into())
}

fn float_breakdown_criterion() -> Outcome {
    for n in 0..=70 {
        let est = fib_float(n).map_err(|e| e.to_string())?;
        ensure(est.rounded == fib_iterative::<BigInt>(n), || format!("wrong at n = {n}"))?;
    }
    match float_breakdown(200).map_err(|e| e.to_string())? {
        Some(n) if (71..=200).contains(&n) => Ok(format!("exact through 70, first wrong at n = {n}")),
        other => Err(format!("breakdown {other:?}")),
    }
}

fn doubling_identities() -> Outcome {
    let start = Instant::now();
    let f: Vec<BigInt> = (0..=2000).map(fib_iterative::<BigInt>).collect();
    for n in 1..=1000usize {
        ensure(&f[n] * &f[n] + &f[n - 1] * &f[n - 1] == f[2 * n - 1], || format!("odd identity at n = {n}"))?;
        ensure((2 * &f[n - 1] + &f[n]) * &f[n] == f[2 * n], || format!("even identity at n = {n}"))?;
    }
    within(start.elapsed(), Duration::from_secs(5))?;
    Ok("1 <= n <= 1000".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("table reproduction", table_reproduction),
        ("lucas list", lucas_list),
        ("oracle equivalence", oracle_equivalence),
        ("counter exactness", counter_exactness),
        ("million-index run", million_index),
        ("norm and parity invariants", norm_and_parity),
        ("float breakdown", float_breakdown_criterion),
        ("doubling-formula property", doubling_identities),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
