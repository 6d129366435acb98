use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::VectorForm;
use crate::eisenstein::{eisenstein_level1, vv_eisenstein};
use crate::error::{Error, Result};
use crate::exactmath::{binomial, linalg, Rational};
use crate::fqm::{DiscriminantForm, EvenLattice, WeilRep};
use crate::qseries::QSeries;

/// The dual Weil representation of the discriminant form of `-W`.
pub fn w_prime_rep() -> WeilRep {
    let form = DiscriminantForm::new(&EvenLattice::w_prime()).expect("-W is even and nondegenerate");
    WeilRep::new(Arc::new(form), true)
}

/// Scalar bracket `sum_r (-1)^r C(n+k1-1, n-r) C(n+k2-1, r) D^r f D^(n-r) g`
/// with `D = q d/dq`.
pub fn rankin_cohen_scalar(f: &QSeries, k1: i64, g: &QSeries, k2: i64, n: u32) -> QSeries {
    let n_i = n as i64;
    (0..=n)
        .map(|r| {
            let ri = r as i64;
            let c = binomial(n_i + k1 - 1, n_i - ri) * binomial(n_i + k2 - 1, ri);
            let c = if r % 2 == 1 { -c } else { c };
            (&f.derivative(r) * &g.derivative(n - r)).scale(&Rational::from_integer(c))
        })
        .reduce(|a, b| &a + &b)
        .expect("at least one term")
}

/// Componentwise bracket `[F, g]_n` of a vector-valued form with a level one
/// scalar form of weight `k2`; the result has weight `k1 + k2 + 2n`.
pub fn rankin_cohen(f: &VectorForm, g: &QSeries, k2: i64, n: u32) -> Result<VectorForm> {
    if g.terms().any(|(e, _)| !e.is_integer()) {
        return Err(Error::invalid("scalar form must have integer exponents"));
    }
    let k1 = f.weight();
    if !k1.is_integer() {
        return Err(Error::invalid("brackets are implemented for integral weights"));
    }
    let k1 = k1.to_integer().to_i64().expect("small weight");
    let weight = Rational::from_integer(BigInt::from(k1 + k2 + 2 * n as i64));
    f.map(weight, |c| rankin_cohen_scalar(c, k1, g, k2, n))
}

/// `F_n = [E_5, E_{6-2n}]_n` for `n = 0, 1`, a basis of weight 11 forms of
/// type `rho^*` for `-W`, at `prec` integer q-steps.
pub fn basis_weight11(prec: i64) -> Result<(VectorForm, VectorForm)> {
    if prec < 2 {
        return Err(Error::invalid("basis needs prec >= 2"));
    }
    let rep = w_prime_rep();
    let e5 = vv_eisenstein(&rep, 5, prec)?;
    let f0 = rankin_cohen(&e5, &eisenstein_level1(6, prec)?, 6, 0)?;
    let f1 = rankin_cohen(&e5, &eisenstein_level1(4, prec)?, 4, 1)?;
    let m = leading_minor(&[&f0, &f1])?;
    if linalg::rank(&m) < 2 {
        return Err(Error::Verification("weight 11 brackets are linearly dependent".into()));
    }
    Ok((f0, f1))
}

/// Rows: coefficients of `q^0 v_0` and `q^(1/3) v_1`; columns: the forms.
pub(crate) fn leading_minor(forms: &[&VectorForm]) -> Result<Vec<Vec<Rational>>> {
    let slots = [(0usize, Rational::zero()), (1, Rational::new(1.into(), 3.into()))];
    slots
        .iter()
        .map(|(gamma, e)| forms.iter().map(|f| f.coefficient(*gamma, e)).collect::<Result<Vec<_>>>())
        .collect()
}
