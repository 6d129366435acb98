use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{bernoulli_number, chi_minus3, divisors, jacobi_symbol, Rational};
use crate::qseries::QSeries;

/// Where the character sits in the divisor sum of `E_k(tau, chi)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CharacterConvention {
    /// `sum_{d|n} d^(k-1) chi(n/d)`.
    #[default]
    Cofactor,
    /// `sum_{d|n} (n/d)^(k-1) (d/3)` with the Legendre symbol.
    Divisor,
}

/// `E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n` for even `k >= 4`.
pub fn eisenstein_level1(k: u32, prec: i64) -> Result<QSeries> {
    if k < 4 || k % 2 == 1 {
        return Err(Error::invalid(format!("level one Eisenstein series needs even k >= 4, got {k}")));
    }
    let factor = -Rational::from_integer(BigInt::from(2 * k)) / bernoulli_number(k as usize);
    let mut coeffs = vec![Rational::one()];
    for n in 1..prec.max(0) {
        let sigma: BigInt = divisors(n as u64).into_iter().map(|d| BigInt::from(d).pow(k - 1)).sum();
        coeffs.push(&factor * Rational::from_integer(sigma));
    }
    Ok(series_from(coeffs, prec))
}

/// `E_k(tau, chi)` for odd `k`: `alpha` at `k = 1` (with its `1 + 6 sum`
/// normalisation) and the plain divisor sum for `k >= 3`.
pub fn eisenstein_chi(k: u32, prec: i64) -> Result<QSeries> {
    eisenstein_chi_with(k, prec, CharacterConvention::default())
}

pub fn eisenstein_chi_with(k: u32, prec: i64, convention: CharacterConvention) -> Result<QSeries> {
    if k.is_multiple_of(2) {
        return Err(Error::invalid(format!("character Eisenstein series needs odd k, got {k}")));
    }
    let mut coeffs = vec![if k == 1 { Rational::one() } else { Rational::zero() }];
    for n in 1..prec.max(0) {
        let n = n as u64;
        let s: BigInt = divisors(n)
            .into_iter()
            .map(|d| {
                let (base, chi) = match convention {
                    CharacterConvention::Cofactor => (d, chi_minus3((n / d) as i64) as i64),
                    CharacterConvention::Divisor => (n / d, jacobi_symbol(d as i64, 3).expect("3 is odd") as i64),
                };
                BigInt::from(base).pow(k - 1) * chi
            })
            .sum();
        let c = if k == 1 { s * 6 } else { s };
        coeffs.push(Rational::from_integer(c));
    }
    Ok(series_from(coeffs, prec))
}

/// `E_k(tau/3, chi)`.
pub fn eisenstein_chi_rescaled(k: u32, prec: i64) -> Result<QSeries> {
    eisenstein_chi(k, prec)?.rescale_exponent(&Rational::new(BigInt::one(), BigInt::from(3)))
}

fn series_from(coeffs: Vec<Rational>, prec: i64) -> QSeries {
    QSeries::from_terms(
        1,
        &Rational::from_integer(BigInt::from(prec)),
        coeffs.into_iter().enumerate().map(|(e, c)| (Rational::from_integer(BigInt::from(e)), c)),
    )
    .expect("integer exponents")
}
