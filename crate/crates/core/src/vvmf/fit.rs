use num_bigint::BigInt;
use num_traits::Zero;

use crate::eisenstein::eisenstein_chi;
use crate::error::{Error, Result};
use crate::exactmath::{linalg, Rational};
use crate::qseries::{solve_linear_combination, QSeries};

/// Exact fit of a series against monomials in `alpha = E_1(., chi)` and
/// `beta = E_3(., chi)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaBetaFit {
    /// Coefficients in the order of [`AlphaBetaFit::monomials`].
    pub coefficients: Vec<Rational>,
    /// `(a, b, rescaled)` for `alpha^a beta^b`, evaluated at `q^(1/3)` when
    /// `rescaled`.
    pub monomials: Vec<(u32, u32, bool)>,
    /// Exponents used to solve.
    pub solved_on: Vec<Rational>,
    /// Number of further exponents on which the identity was checked.
    pub verified_on: usize,
}

/// `(a, b)` with `a + 3b = w`, ordered by increasing `b`.
pub fn weight_monomials(w: u32) -> Vec<(u32, u32)> {
    (0..=w / 3).map(|b| (w - 3 * b, b)).collect()
}

fn monomial(alpha: &QSeries, beta: &QSeries, a: u32, b: u32) -> QSeries {
    &alpha.pow(a) * &beta.pow(b)
}

/// Monomial series for the requested `(a, b, rescaled)` list, all known
/// below `prec` (in units of `q`).
pub fn monomial_basis(monomials: &[(u32, u32, bool)], prec: i64) -> Result<Vec<QSeries>> {
    let third = Rational::new(BigInt::from(1), BigInt::from(3));
    let plain = (eisenstein_chi(1, prec)?, eisenstein_chi(3, prec)?);
    let scaled = (eisenstein_chi(1, 3 * prec)?, eisenstein_chi(3, 3 * prec)?);
    monomials
        .iter()
        .map(|&(a, b, rescaled)| {
            if rescaled {
                monomial(&scaled.0, &scaled.1, a, b).rescale_exponent(&third)
            } else {
                Ok(monomial(&plain.0, &plain.1, a, b))
            }
        })
        .collect()
}

/// Solves `f = sum c_i m_i` on the first `monomials.len()` exponents where
/// the basis is informative, then verifies on every remaining exponent
/// below the common precision.
pub fn fit_monomials(f: &QSeries, monomials: &[(u32, u32, bool)]) -> Result<AlphaBetaFit> {
    let prec = f.prec();
    let prec_int = prec.ceil().to_integer();
    let prec_int: i64 = prec_int.try_into().map_err(|_| Error::invalid("precision too large"))?;
    let basis: Vec<QSeries> =
        monomial_basis(monomials, prec_int)?.into_iter().map(|m| m.truncate(&prec)).collect::<Result<_>>()?;
    let den = basis.iter().map(QSeries::den).chain([f.den()]).fold(1i64, num_integer::lcm);
    let step = Rational::new(BigInt::from(1), BigInt::from(den));
    let mut exps = Vec::new();
    let mut e = Rational::zero();
    while e < prec {
        exps.push(e.clone());
        e += &step;
    }
    // pick the first exponents that raise the rank of the basis matrix
    let row = |e: &Rational| basis.iter().map(|b| b.coefficient(e)).collect::<Result<Vec<_>>>();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut solved_on = Vec::new();
    for e in &exps {
        if solved_on.len() == basis.len() {
            break;
        }
        rows.push(row(e)?);
        if linalg::rank(&rows) == rows.len() {
            solved_on.push(e.clone());
        } else {
            rows.pop();
        }
    }
    if solved_on.len() < basis.len() {
        return Err(Error::Singular { rank: solved_on.len(), unknowns: basis.len() });
    }
    let targets: Vec<(Rational, Rational)> =
        solved_on.iter().map(|e| Ok((e.clone(), f.coefficient(e)?))).collect::<Result<_>>()?;
    let coefficients = solve_linear_combination(&basis, &targets)?;
    let mut verified_on = 0;
    for e in exps.iter().filter(|e| !solved_on.contains(e)) {
        let lhs = f.coefficient(e)?;
        let rhs: Rational = basis.iter().zip(&coefficients).map(|(m, c)| m.coefficient(e).map(|x| x * c)).sum::<Result<_>>()?;
        if lhs != rhs {
            return Err(Error::Verification(format!("fit fails at q^{e}: {lhs} vs {rhs}")));
        }
        verified_on += 1;
    }
    Ok(AlphaBetaFit { coefficients, monomials: monomials.to_vec(), solved_on, verified_on })
}

/// Fit of a weight `w` series against `alpha^a beta^b` (`a + 3b = w`), in
/// `q` or in `q^(1/3)`.
pub fn fit_alpha_beta(f: &QSeries, w: u32, rescaled: bool) -> Result<AlphaBetaFit> {
    let monomials: Vec<(u32, u32, bool)> = weight_monomials(w).into_iter().map(|(a, b)| (a, b, rescaled)).collect();
    fit_monomials(f, &monomials)
}

/// Simultaneous fit against both the plain and the rescaled monomials.
pub fn fit_alpha_beta_both(f: &QSeries, w: u32) -> Result<AlphaBetaFit> {
    let monomials: Vec<(u32, u32, bool)> = [false, true]
        .into_iter()
        .flat_map(|r| weight_monomials(w).into_iter().map(move |(a, b)| (a, b, r)))
        .collect();
    fit_monomials(f, &monomials)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat};

    #[test]
    fn monomials_of_weight_eleven() {
        assert_eq!(weight_monomials(11), vec![(11, 0), (8, 1), (5, 2), (2, 3)]);
    }

    #[test]
    fn beta_against_alpha_cubed() {
        // E_3 is in the span of alpha^3 and beta: trivially beta itself
        let beta = eisenstein_chi(3, 20).unwrap();
        let fit = fit_alpha_beta(&beta, 3, false).unwrap();
        assert_eq!(fit.coefficients, vec![int(0), int(1)]);
        assert!(fit.verified_on >= 17);
    }

    #[test]
    fn alpha_cubed_combination() {
        let alpha = eisenstein_chi(1, 15).unwrap();
        let beta = eisenstein_chi(3, 15).unwrap();
        let f = &alpha.pow(3).scale(&rat(2, 3)) - &beta.scale(&int(5));
        let fit = fit_alpha_beta(&f, 3, false).unwrap();
        assert_eq!(fit.coefficients, vec![rat(2, 3), int(-5)]);
    }

    #[test]
    fn non_modular_input_fails_verification() {
        let mut coeffs = vec![1i64; 12];
        coeffs[7] = 5;
        let f = QSeries::from_integer_coeffs(coeffs, 12);
        assert!(matches!(fit_alpha_beta(&f, 3, false), Err(Error::Verification(_))));
    }
}
