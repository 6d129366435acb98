use num_complex::Complex64;
use num_traits::ToPrimitive;

use super::form::max_abs_coefficient;
use super::VectorForm;
use crate::error::{Error, Result};
use crate::exactmath::Cyclotomic;
use crate::fqm::{Mp2Element, WeilRep};
use crate::qseries::QSeries;

/// Bound on `sum_{n >= prec} |c_n| |q|^n` assuming coefficients grow at most
/// geometrically with the largest ratio seen among the known coefficients.
fn tail_bound(f: &QSeries, tau: Complex64) -> f64 {
    let x = (-2.0 * std::f64::consts::PI * tau.im).exp();
    let terms: Vec<(f64, f64)> = f
        .terms()
        .map(|(e, c)| (e.to_f64().unwrap_or(f64::INFINITY), c.to_f64().unwrap_or(f64::INFINITY).abs()))
        .collect();
    if terms.is_empty() {
        return 0.0;
    }
    let prec = f.prec().to_f64().unwrap_or(f64::INFINITY);
    // per unit exponent growth over the upper half of the known terms
    let start = terms.len() / 2;
    let mut ratio: f64 = 1.0;
    for w in terms[start..].windows(2) {
        let (e0, c0) = w[0];
        let (e1, c1) = w[1];
        if c0 > 0.0 && e1 > e0 {
            ratio = ratio.max((c1 / c0).powf(1.0 / (e1 - e0)));
        }
    }
    let cmax = max_abs_coefficient(f);
    let rx = ratio * x;
    if rx >= 1.0 {
        return f64::INFINITY;
    }
    let (elast, _) = *terms.last().expect("nonempty");
    cmax * ratio.powf((prec - elast).max(0.0)) * x.powf(prec) / (1.0 - rx)
}

/// Max-norm of `F(g tau0) - phi(tau0)^(2k) rho(g) F(tau0)`, computed from the
/// truncated expansions in floating point. `rep` must be the representation
/// `F` transforms with (here `rho^*`).
///
/// Rejects `tau0` when the estimated truncation error at `tau0` or `g tau0`
/// exceeds `tol / 10`.
pub fn numeric_modularity_check(f: &VectorForm, rep: &WeilRep, g: &Mp2Element, tau0: Complex64, tol: f64) -> Result<f64> {
    if tau0.im <= 0.0 {
        return Err(Error::invalid("tau0 must lie in the upper half plane"));
    }
    if rep.form().order() != f.form().order() {
        return Err(Error::invalid("representation and form have different types"));
    }
    let gtau = g.act(tau0);
    for c in f.components() {
        let bound = tail_bound(c, tau0).max(tail_bound(c, gtau));
        if !(bound < tol / 10.0) {
            return Err(Error::invalid(format!("truncation bound {bound:e} too large for tolerance {tol:e}")));
        }
    }
    let two_k = (f.weight() * num_bigint::BigInt::from(2)).to_integer().to_i32().ok_or_else(|| Error::invalid("weight"))?;
    let phi = g.phi(tau0);
    let factor = phi.powi(two_k);
    let lhs = f.evaluate(gtau);
    let rhs_raw = f.evaluate(tau0);
    let m = rep.matrix(g).to_complex();
    let residual = (0..lhs.len())
        .map(|i| {
            let rhs: Complex64 = (0..lhs.len()).map(|j| m[i][j] * rhs_raw[j]).sum::<Complex64>() * factor;
            (lhs[i] - rhs).norm()
        })
        .fold(0.0, f64::max);
    Ok(residual)
}

/// For `g` with `u^T rho(g) = lambda u^T`, `u = sum v_gamma`, returns
/// `lambda`; then `sum_gamma F_gamma` transforms like a scalar form with
/// multiplier `lambda` under `g`.
pub fn scalar_multiplier(rep: &WeilRep, g: &Mp2Element) -> Result<Cyclotomic> {
    let m = rep.matrix(g);
    let n = m.dim();
    let col_sums: Vec<Cyclotomic> = (0..n)
        .map(|j| (0..n).fold(Cyclotomic::zero(rep.field_order()), |acc, i| &acc + m.get(i, j)))
        .collect();
    let lambda = col_sums[0].clone();
    if col_sums.iter().any(|c| *c != lambda) {
        return Err(Error::Verification(format!("{g} does not fix the sum of all cosets")));
    }
    Ok(lambda)
}

/// Residual of `f(g tau0) = lambda phi(tau0)^(2k) f(tau0)` for a scalar
/// series `f` of weight `k`.
pub fn scalar_modularity_residual(f: &QSeries, weight: i32, lambda: Complex64, g: &Mp2Element, tau0: Complex64, tol: f64) -> Result<f64> {
    let gtau = g.act(tau0);
    let bound = tail_bound(f, tau0).max(tail_bound(f, gtau));
    if !(bound < tol / 10.0) {
        return Err(Error::invalid(format!("truncation bound {bound:e} too large for tolerance {tol:e}")));
    }
    let lhs = super::evaluate_series(f, gtau);
    let rhs = lambda * g.phi(tau0).powi(2 * weight) * super::evaluate_series(f, tau0);
    Ok((lhs - rhs).norm())
}
