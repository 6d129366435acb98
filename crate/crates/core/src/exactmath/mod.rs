//! Exact arithmetic substrate.
//!
//! Everything here is immutable and pure; values can be shared freely
//! between threads.

mod arith;
mod bernoulli;
mod cyclotomic;
pub mod linalg;

pub use arith::{chi_minus3, divisors, is_prime, jacobi_symbol, p_valuation, prime_factors};
pub use bernoulli::{bernoulli_number, bernoulli_poly, binomial};
pub use cyclotomic::{gauss_sum, Cyclotomic, DEFAULT_ORDER};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Arbitrary precision rational, always in lowest terms with positive
/// denominator.
pub type Rational = BigRational;

/// Shorthand for the rational `num/den`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an integral rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}
