//! Oracle-equivalence and invariant checks runnable from the command line.

use num_bigint::BigInt;
use num_integer::Integer;
use phifib::{
    expected_counts, fib_fast_doubling, fib_float, fib_iterative, fib_lucas_linear, fib_matrix,
    fib_pair_fast, float_breakdown, pair_norm, pair_pow_phi, OpCounters,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    /// First failing case, if any.
    pub failure: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

type Check = Result<(), String>;
type NamedCheck = (&'static str, Box<dyn Fn() -> Check>);

fn ensure(cond: bool, case: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(case())
    }
}

fn equivalence(depth: u64) -> Check {
    for n in 0..=depth {
        let oracle = fib_iterative::<BigInt>(n);
        let others = [
            ("pair-fast", fib_pair_fast::<BigInt>(n, None).0),
            ("doubling", fib_fast_doubling(n, None)),
            ("matrix", fib_matrix(n, None)),
            ("lucas-linear", fib_lucas_linear::<BigInt>(n).0),
        ];
        for (algo, got) in others {
            ensure(got == oracle, || format!("{algo} disagrees with iterative at n = {n}"))?;
        }
    }
    Ok(())
}

fn norm_and_parity(depth: u64) -> Check {
    for n in 0..=depth {
        let x = pair_pow_phi::<BigInt>(n, None);
        ensure(x.a().is_even() == x.b().is_even(), || format!("parity broken at n = {n}: {x}"))?;
        let want = BigInt::from(if n % 2 == 0 { 1 } else { -1 });
        ensure(pair_norm(&x) == want, || format!("norm of phi^{n} is {}", pair_norm(&x)))?;
    }
    Ok(())
}

fn counters(depth: u64) -> Check {
    for n in 1..=depth.min(4096) {
        let (bits, pop) = expected_counts(n);
        let (bits, pop) = (u64::from(bits), u64::from(pop));
        let mut pair = OpCounters::new();
        fib_pair_fast::<BigInt>(n, Some(&mut pair));
        ensure(
            pair.squaring_steps == bits && pair.multiply_steps == pop,
            || format!("pair-fast at n = {n}: {} squarings, {} phi-multiplies", pair.squaring_steps, pair.multiply_steps),
        )?;
        ensure(pair.squarings == 2 * bits && pair.mults == bits, || {
            format!("pair-fast at n = {n}: {} integer squarings, {} mults", pair.squarings, pair.mults)
        })?;
        let mut matrix = OpCounters::new();
        fib_matrix::<BigInt>(n, Some(&mut matrix));
        ensure(matrix.squarings == 3 * bits && matrix.mults == 2 * bits, || {
            format!("matrix at n = {n}: {} squarings, {} mults", matrix.squarings, matrix.mults)
        })?;
    }
    Ok(())
}

fn float_agreement() -> Check {
    for n in 0..=70 {
        let est = fib_float(n).map_err(|e| e.to_string())?;
        ensure(est.exact, || format!("float estimate {} wrong at n = {n}", est.rounded))?;
    }
    Ok(())
}

fn float_breaks_down() -> Check {
    match float_breakdown(200).map_err(|e| e.to_string())? {
        Some(n) if (71..=200).contains(&n) => Ok(()),
        Some(n) => Err(format!("float estimate failed early, at n = {n}")),
        None => Err("float estimate never failed up to n = 200".into()),
    }
}

/// Runs every check; `depth` bounds the exhaustive index ranges.
pub fn run_selftest(depth: u64) -> Vec<CheckOutcome> {
    let checks: [NamedCheck; 5] = [
        ("oracle equivalence", Box::new(move || equivalence(depth))),
        ("norm and parity", Box::new(move || norm_and_parity(depth))),
        ("operation counts", Box::new(move || counters(depth))),
        ("float agreement to 70", Box::new(float_agreement)),
        ("float breakdown by 200", Box::new(float_breaks_down)),
    ];
    checks
        .into_iter()
        .map(|(name, check)| CheckOutcome { name, failure: check().err() })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shallow_selftest_passes() {
        let outcomes = run_selftest(8);
        assert_eq!(outcomes.len(), 5);
        assert!(outcomes.iter().all(CheckOutcome::passed), "{outcomes:?}");
    }
}
