use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactmath::Rational;

/// Heegner index of the discriminant `d` for the order-3 form of `-W`:
/// `n = -d/6` on the coset `(d/2) gamma_1`. Coset labels are `[0, g, 2g]`;
/// `gamma` and `-gamma` carry the same divisor.
pub fn heegner_index(d: u64) -> Result<(Rational, usize)> {
    if !d.is_multiple_of(6) && d % 6 != 2 {
        return Err(Error::invalid(format!("discriminant {d} is not 0 or 2 mod 6")));
    }
    let n = Rational::new(BigInt::from(-(d as i64)), BigInt::from(6));
    Ok((n, ((d / 2) % 3) as usize))
}
