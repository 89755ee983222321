//! Exact integers and rationals, plus memoized factorials and binomials.
//!
//! Every classical matrix entry is a signed quotient of factorials, so the
//! factorial table is the hot path. It grows monotonically and is shared
//! across threads behind an `RwLock`; once warmed up, lookups only take the
//! read lock.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Arbitrary-precision signed integer.
pub type ExactInteger = BigInt;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type ExactRational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("factorial of negative integer {0}")]
    NegativeFactorial(i64),
    #[error("zero denominator")]
    ZeroDenominator,
}

fn factorial_table() -> &'static RwLock<Vec<BigInt>> {
    static TABLE: OnceLock<RwLock<Vec<BigInt>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![BigInt::one()]))
}

/// `n!`, memoized.
pub fn factorial(n: usize) -> ExactInteger {
    {
        let table = factorial_table().read().expect("factorial table poisoned");
        if let Some(v) = table.get(n) {
            return v.clone();
        }
    }
    let mut table = factorial_table().write().expect("factorial table poisoned");
    while table.len() <= n {
        let k = table.len();
        let next = &table[k - 1] * BigInt::from(k);
        table.push(next);
    }
    table[n].clone()
}

/// Signed-argument factorial; negative arguments are rejected rather than
/// interpreted.
pub fn checked_factorial(n: i64) -> Result<ExactInteger, ScalarError> {
    usize::try_from(n)
        .map(factorial)
        .map_err(|_| ScalarError::NegativeFactorial(n))
}

/// `C(n, k)`, zero when `k` lies outside `0..=n`.
pub fn binomial(n: usize, k: i64) -> ExactInteger {
    if k < 0 || k as u64 > n as u64 {
        return BigInt::zero();
    }
    let k = k as usize;
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Builds `p/q` in canonical form.
pub fn rational(p: ExactInteger, q: ExactInteger) -> Result<ExactRational, ScalarError> {
    if q.is_zero() {
        return Err(ScalarError::ZeroDenominator);
    }
    Ok(BigRational::new(p, q))
}

pub fn int(v: i64) -> ExactRational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn frac(p: i64, q: i64) -> ExactRational {
    rational(BigInt::from(p), BigInt::from(q)).expect("zero denominator in literal")
}

/// `(-1)^e` from the parity of `e`.
pub fn parity_sign(e: i64) -> i32 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Renders `p/q`, or just `p` for integers.
pub fn render_rational(r: &ExactRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn is_integral(r: &ExactRational) -> bool {
    r.denom().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn loop_factorial(n: u64) -> BigInt {
        let mut acc = BigInt::one();
        for m in 2..=n {
            acc *= m;
        }
        acc
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(factorial(12), BigInt::from(479_001_600u64));
    }

    #[test]
    fn factorial_matches_product_loop() {
        for n in 0..=40u64 {
            assert_eq!(factorial(n as usize), loop_factorial(n), "n = {n}");
        }
    }

    #[test]
    fn factorial_reaches_2n_at_64() {
        // (128)! has 216 decimal digits
        assert_eq!(factorial(128).to_string().len(), 216);
    }

    #[test]
    fn negative_factorial_rejected() {
        assert_eq!(
            checked_factorial(-1),
            Err(ScalarError::NegativeFactorial(-1))
        );
        assert_eq!(checked_factorial(4), Ok(BigInt::from(24)));
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(4, 5), BigInt::zero());
        assert_eq!(binomial(4, -1), BigInt::zero());
        assert_eq!(binomial(6, 3), factorial(6) / (factorial(3) * factorial(3)));
        assert_eq!(binomial(6, 3), BigInt::from(20));
    }

    #[test]
    fn binomial_pascal_recurrence() {
        for n in 1..=20usize {
            for k in -2..=(n as i64 + 2) {
                assert_eq!(
                    binomial(n, k),
                    binomial(n - 1, k - 1) + binomial(n - 1, k),
                    "C({n},{k})"
                );
            }
        }
    }

    #[test]
    fn rational_canonical_forms() {
        assert_eq!(rational(2.into(), 4.into()).unwrap(), frac(1, 2));
        let r = rational(3.into(), (-6).into()).unwrap();
        assert_eq!(r.numer(), &BigInt::from(-1));
        assert_eq!(r.denom(), &BigInt::from(2));
        let z = rational(0.into(), 7.into()).unwrap();
        assert_eq!(render_rational(&z), "0");
        assert!(z.denom().is_one());
        assert_eq!(
            rational(1.into(), 0.into()),
            Err(ScalarError::ZeroDenominator)
        );
    }

    #[test]
    fn rendering() {
        assert_eq!(render_rational(&frac(-1, 2)), "-1/2");
        assert_eq!(render_rational(&int(7)), "7");
    }

    #[test]
    fn concurrent_reads_after_warmup() {
        factorial(60);
        let handles: Vec<_> = (0..8)
            .map(|t| std::thread::spawn(move || factorial(50 + t)))
            .collect();
        for (t, h) in handles.into_iter().enumerate() {
            assert_eq!(h.join().unwrap(), loop_factorial(50 + t as u64));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn addition_is_exact(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
            let sum = frac(a, b) + frac(c, d);
            let scaled = sum * int(b * d);
            prop_assert!(scaled.is_integer());
            prop_assert_eq!(scaled.to_integer(), BigInt::from(a * d + c * b));
        }
    }
}
