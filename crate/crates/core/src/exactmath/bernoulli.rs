use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rational;

/// Binomial coefficient `C(n, k)`; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn table() -> &'static Mutex<Vec<Rational>> {
    static TABLE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(vec![Rational::one()]))
}

/// The k-th Bernoulli number with `B_1 = -1/2`, from the recurrence
/// `sum_{j<=k} C(k+1, j) B_j = 0`. Memoized.
pub fn bernoulli_number(k: usize) -> Rational {
    let mut cache = table().lock().expect("bernoulli cache poisoned");
    while cache.len() <= k {
        let m = cache.len();
        let mut acc = Rational::zero();
        for (j, b) in cache.iter().enumerate() {
            acc += Rational::from_integer(binomial(m as i64 + 1, j as i64)) * b;
        }
        let next = -acc / Rational::from_integer(BigInt::from(m + 1));
        cache.push(next);
    }
    cache[k].clone()
}

/// `B_k(x) = sum_j C(k, j) B_j x^(k-j)`.
pub fn bernoulli_poly(k: usize, x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    let mut xpow = Rational::one();
    // accumulate from j = k down to 0 so x^(k-j) grows alongside
    for j in (0..=k).rev() {
        acc += Rational::from_integer(binomial(k as i64, j as i64)) * bernoulli_number(j) * &xpow;
        xpow *= x;
    }
    acc
}
