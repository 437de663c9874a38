use crate::instrumentation::OpCounters;
use crate::phi::pair_pow_phi;
use crate::scalar::Scalar;

/// `(Fₙ, Lₙ)` read off φⁿ = `(Lₙ, Fₙ)` computed by square-and-multiply.
pub fn fib_pair_fast<T: Scalar>(n: u64, counters: Option<&mut OpCounters>) -> (T, T) {
    let (l, f) = pair_pow_phi::<T>(n, counters).into_parts();
    (f, l)
}

/// The Lucas number Lₙ.
pub fn lucas<T: Scalar>(n: u64) -> T {
    fib_pair_fast::<T>(n, None).1
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn examples() {
        assert_eq!(fib_pair_fast::<i64>(7, None), (13, 29));
        assert_eq!(fib_pair_fast::<i64>(0, None), (0, 2));
    }

    #[test]
    fn lucas_list() {
        let got: Vec<BigInt> = (0..8).map(lucas).collect();
        let want: Vec<BigInt> = [2, 1, 3, 4, 7, 11, 18, 29].into_iter().map(BigInt::from).collect();
        assert_eq!(got, want);
    }
}
