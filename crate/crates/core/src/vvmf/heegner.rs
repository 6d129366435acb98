use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::bracket::{basis_weight11, leading_minor};
use super::VectorForm;
use crate::error::{Error, Result};
use crate::exactmath::{linalg, Rational};
use crate::fqm::heegner_index;
use crate::qseries::QSeries;

/// The generating series `Theta(q) = -2 + sum_{d > 2} deg(C_d) q^(d/6)` with
/// the degrees read off at `d = 0, 2 mod 6`.
#[derive(Debug, Clone, PartialEq)]
pub struct HeegnerSeries {
    pub theta: QSeries,
    /// `d -> N_d`; `N_2 = 0` by convention.
    pub degrees: BTreeMap<u64, BigInt>,
    /// Raw coefficient of `q^(1/3)` in `Theta` (0 by construction).
    pub raw_one_third: Rational,
}

impl HeegnerSeries {
    pub fn degree(&self, d: u64) -> Option<&BigInt> {
        self.degrees.get(&d)
    }

    pub fn constant_term(&self) -> Rational {
        self.theta.coefficient(&Rational::zero()).expect("prec > 0")
    }
}

/// `Psi = c0 F0 + c1 F1` fixed by the constant term `-2` on `v_0` and a
/// vanishing `q^(1/3) v_1` coefficient. Returns `Psi` and `(c0, c1)`.
pub fn solve_psi_with_coefficients(prec: i64) -> Result<(VectorForm, [Rational; 2])> {
    let (f0, f1) = basis_weight11(prec)?;
    let m = leading_minor(&[&f0, &f1])?;
    let rhs = [Rational::from_integer(BigInt::from(-2)), Rational::zero()];
    let c = linalg::solve(&m, &rhs)?;
    let psi = VectorForm::linear_combination(&c, &[f0, f1])?;
    Ok((psi, [c[0].clone(), c[1].clone()]))
}

pub fn solve_psi(prec: i64) -> Result<VectorForm> {
    Ok(solve_psi_with_coefficients(prec)?.0)
}

/// `Theta' = Psi_0 + Psi_1 + Psi_2`.
pub fn theta_prime(psi: &VectorForm) -> QSeries {
    psi.components().iter().cloned().reduce(|a, b| &a + &b).expect("nonempty")
}

/// `Theta = Psi_0 + (Psi_1 + Psi_2)/2`, with `N_d` read at `q^(d/6)`.
pub fn assemble_theta(psi: &VectorForm) -> Result<HeegnerSeries> {
    psi.check_support()?;
    psi.check_symmetry()?;
    if psi.form().order() != 3 {
        return Err(Error::invalid("assembly expects the order 3 form of -W"));
    }
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let theta = psi.component(0) + &(psi.component(1) + psi.component(2)).scale(&half);
    let prec = theta.prec();
    let mut degrees = BTreeMap::new();
    let mut d = 2u64;
    while Rational::new(BigInt::from(d), BigInt::from(6)) < prec {
        if let Ok((n, gamma)) = heegner_index(d) {
            let e = -n;
            let c = theta.coefficient(&e)?;
            if !c.is_integer() {
                return Err(Error::NonIntegral(format!("deg(C_{d}) = {c}")));
            }
            // Psi_1 = Psi_2, so Theta agrees with the component the index names
            if c != psi.coefficient(gamma, &e)? {
                return Err(Error::Verification(format!("coefficient at d = {d} disagrees with Psi_{gamma}")));
            }
            degrees.insert(d, if d == 2 { BigInt::zero() } else { c.to_integer() });
        }
        d += 1;
    }
    let raw_one_third = theta.coefficient(&Rational::new(BigInt::one(), BigInt::from(3)))?;
    Ok(HeegnerSeries { theta, degrees, raw_one_third })
}
