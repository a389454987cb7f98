//! Exact scalars and the small amount of number theory the rest of the crate
//! leans on: Bernoulli numbers, binomials, factorials.

mod poly;
mod series;

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use poly::MultiPoly;
pub use series::TruncatedQSeries;

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Shorthand for `n/d` as a [`Rational`]. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as a [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Binomial coefficient with the usual conventions: `0` when `k < 0`, or when
/// `k > n >= 0`. Negative `n` uses the generalized falling-factorial form.
pub fn binomial(n: i64, k: i64) -> Rational {
    Rational::from_integer(binomial_int(n, k))
}

pub fn binomial_int(n: i64, k: i64) -> BigInt {
    if k < 0 || (n >= 0 && k > n) {
        return BigInt::zero();
    }
    let k = if n >= 0 && 2 * k > n { n - k } else { k };
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

fn bernoulli_cache() -> &'static RwLock<Vec<Rational>> {
    static CACHE: OnceLock<RwLock<Vec<Rational>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(vec![Rational::one()]))
}

/// Bernoulli number `B_k` for the generating function `X/(e^X - 1)`, so
/// `B_1 = -1/2`.
///
/// Values are computed with the recurrence `sum_{j<=k} C(k+1, j) B_j = 0`
/// and memoized process-wide.
pub fn bernoulli(k: usize) -> Rational {
    {
        let cache = bernoulli_cache().read().unwrap();
        if let Some(b) = cache.get(k) {
            return b.clone();
        }
    }
    let mut cache = bernoulli_cache().write().unwrap();
    while cache.len() <= k {
        let m = cache.len();
        let mut acc = Rational::zero();
        for (j, b) in cache.iter().enumerate() {
            acc += b * binomial(m as i64 + 1, j as i64);
        }
        let b = -acc / int(m as i64 + 1);
        cache.push(b);
    }
    cache[k].clone()
}

/// `B_k / k!`, the coefficient of `X^k` in `X/(e^X - 1)`.
pub fn bernoulli_over_factorial(k: usize) -> Rational {
    bernoulli(k) / Rational::from_integer(factorial(k as u32))
}

/// Minimal interface needed by code that is generic over the target algebra
/// of a homomorphism (series, scalars).
pub trait CommutativeAlgebra: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
}

impl CommutativeAlgebra for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Akiyama-Tanigawa produces `B_n` with `B_1 = +1/2`; used as an
    /// independent oracle.
    fn akiyama_tanigawa(n: usize) -> Rational {
        let mut a: Vec<Rational> = Vec::with_capacity(n + 1);
        for m in 0..=n {
            a.push(rat(1, m as i64 + 1));
            for j in (1..=m).rev() {
                a[j - 1] = int(j as i64) * (&a[j - 1] - &a[j]);
            }
        }
        a[0].clone()
    }

    #[test]
    fn bernoulli_small_values() {
        assert_eq!(bernoulli(0), int(1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(12), rat(-691, 2730));
    }

    #[test]
    fn bernoulli_matches_akiyama_tanigawa() {
        for n in 0..30 {
            let expected = if n == 1 {
                rat(-1, 2)
            } else {
                akiyama_tanigawa(n)
            };
            assert_eq!(bernoulli(n), expected, "B_{n}");
        }
    }

    #[test]
    fn odd_bernoulli_vanish() {
        for k in (3..40).step_by(2) {
            assert!(bernoulli(k).is_zero());
        }
    }

    #[test]
    fn bernoulli_is_thread_safe() {
        let handles: Vec<_> = (0..8)
            .map(|t| std::thread::spawn(move || bernoulli(20 + t)))
            .collect();
        let got: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for (t, b) in got.into_iter().enumerate() {
            assert_eq!(b, akiyama_tanigawa(20 + t));
        }
    }

    #[test]
    fn binomial_conventions() {
        assert_eq!(binomial(4, 2), int(6));
        for n in 0..10 {
            assert_eq!(binomial(n, 0), int(1));
        }
        assert_eq!(binomial(3, 5), int(0));
        assert_eq!(binomial(5, -1), int(0));
        assert_eq!(binomial(-1, 3), int(-1));
    }

    #[test]
    fn rational_normalization() {
        let a = rat(6, -4);
        assert_eq!(a.numer(), &BigInt::from(-3));
        assert_eq!(a.denom(), &BigInt::from(2));
        let inv = rat(-2, 3);
        assert_eq!(&a * &inv, int(1));
    }
}
