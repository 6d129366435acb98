use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::exactmath::{Cyclotomic, Rational, DEFAULT_ORDER};
use crate::fqm::{DiscriminantForm, EvenLattice, WeilRep};

/// Dimension of weight `k` forms of type `rho^*` for the form of `-W`
/// (odd `k >= 3`), by the Riemann–Roch formula
///
/// `5/6 + k/6 - Re[e((k-1)/4) G(2)] / (4 sqrt3) - Re[e((k+2)/6) (G(1) + G(-3))] / 9 - 1/3`
///
/// evaluated exactly in the cyclotomic field; the result must be a
/// nonnegative integer.
pub fn dim_formula(k: u32) -> Result<u64> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(Error::invalid(format!("dimension formula needs odd k >= 3, got {k}")));
    }
    let form = DiscriminantForm::new(&EvenLattice::w_prime())?;
    let rep = WeilRep::new(std::sync::Arc::new(form), true);
    let n = DEFAULT_ORDER;
    let r = |num: i64, den: i64| Rational::new(BigInt::from(num), BigInt::from(den));
    let k = k as i64;
    let g1 = rep.gauss_sum(1)?;
    let g2 = rep.gauss_sum(2)?;
    let gm3 = rep.gauss_sum(-3)?;
    let inv_root3 = Cyclotomic::sqrt_int(n, 3)?.inverse()?;
    let t1 = (&(&Cyclotomic::e(n, &r(k - 1, 4))? * &g2) * &inv_root3).re().scale(&r(1, 4));
    let t2 = (&Cyclotomic::e(n, &r(k + 2, 6))? * &(&g1 + &gm3)).re().scale(&r(1, 9));
    let base = Cyclotomic::from_rational(n, r(5, 6) + r(k, 6) - r(1, 3));
    let total = &(&base - &t1) - &t2;
    let value = total
        .as_rational()
        .ok_or_else(|| Error::NonIntegral(format!("dimension is not rational: {total}")))?;
    if !value.is_integer() || value.is_negative() {
        return Err(Error::NonIntegral(format!("dimension evaluates to {value}")));
    }
    Ok(value.to_integer().to_u64().expect("small dimension"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values() {
        assert_eq!(dim_formula(3).unwrap(), 1);
        assert_eq!(dim_formula(5).unwrap(), 1);
        assert_eq!(dim_formula(7).unwrap(), 2);
        assert_eq!(dim_formula(9).unwrap(), 2);
        assert_eq!(dim_formula(11).unwrap(), 2);
        assert_eq!(dim_formula(13).unwrap(), 3);
        assert!(dim_formula(4).is_err());
    }
}
