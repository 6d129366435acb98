use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{linalg, Rational};
use crate::fqm::{DiscriminantForm, EvenLattice};
use crate::qseries::QSeries;
use crate::vvmf::VectorForm;

/// `A = D G^{-1}` with `D` the least common denominator.
fn scaled_inverse(gram: &[Vec<i64>]) -> Result<(Vec<Vec<i64>>, i64)> {
    let n = gram.len();
    let g: Vec<Vec<Rational>> =
        gram.iter().map(|r| r.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect()).collect();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let e: Vec<Rational> = (0..n).map(|i| if i == j { Rational::from_integer(1.into()) } else { Rational::zero() }).collect();
        cols.push(linalg::solve(&g, &e)?);
    }
    let d = cols.iter().flatten().fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
    let scale = Rational::from_integer(d.clone());
    let a = (0..n)
        .map(|i| (0..n).map(|j| (&cols[j][i] * &scale).to_integer().to_i64().expect("small adjugate")).collect())
        .collect();
    Ok((a, d.to_i64().expect("small determinant")))
}

/// All integral `y` with `y^T A y <= bound` for positive definite `A`
/// (Fincke–Pohst), each visited once.
fn short_vectors(a: &[Vec<i64>], bound: i64, mut visit: impl FnMut(&[i64], i64)) {
    let n = a.len();
    // q_ii and q_ij (i < j) with y^T A y = sum_i q_ii (y_i + sum_{j>i} q_ij y_j)^2
    let mut q: Vec<Vec<f64>> = a.iter().map(|r| r.iter().map(|&x| x as f64).collect()).collect();
    for i in 0..n {
        for j in i + 1..n {
            q[j][i] = q[i][j];
            q[i][j] /= q[i][i];
        }
        for k in i + 1..n {
            for l in k..n {
                q[k][l] -= q[k][i] * q[i][l];
            }
        }
    }
    let exact = |y: &[i64]| -> i64 { (0..n).map(|i| (0..n).map(|j| y[i] * a[i][j] * y[j]).sum::<i64>()).sum() };
    let mut y = vec![0i64; n];
    fn rec(
        i: usize,
        rest: f64,
        q: &[Vec<f64>],
        y: &mut Vec<i64>,
        bound: i64,
        exact: &dyn Fn(&[i64]) -> i64,
        visit: &mut dyn FnMut(&[i64], i64),
    ) {
        let n = y.len();
        let center: f64 = -(i + 1..n).map(|j| q[i][j] * y[j] as f64).sum::<f64>();
        let radius = (rest.max(0.0) / q[i][i]).sqrt() + 1e-7;
        let lo = (center - radius).ceil() as i64;
        let hi = (center + radius).floor() as i64;
        for x in lo..=hi {
            y[i] = x;
            let t = x as f64 - center;
            let left = rest - q[i][i] * t * t;
            if left < -1e-6 {
                continue;
            }
            if i == 0 {
                let norm = exact(y);
                if norm <= bound {
                    visit(y, norm);
                }
            } else {
                rec(i - 1, left, q, y, bound, exact, visit);
            }
        }
        y[i] = 0;
    }
    if n == 0 {
        visit(&y, 0);
        return;
    }
    rec(n - 1, bound as f64 + 1e-6, &q, &mut y, bound, &exact, &mut visit);
}

/// Theta series `sum_gamma sum_{r in M + gamma} q^(r^2/2) v_gamma` of a
/// positive definite even lattice, to exponents below `prec`, bucketed by
/// the cosets of its own discriminant form.
pub fn lattice_theta_series(lat: &EvenLattice, prec: i64) -> Result<(DiscriminantForm, Vec<QSeries>)> {
    let (bp, bm) = lat.signature();
    if bm != 0 || bp != lat.rank() {
        return Err(Error::invalid("theta series needs a positive definite lattice"));
    }
    let form = DiscriminantForm::new(lat)?;
    let (a, d) = scaled_inverse(lat.gram())?;
    // r^2 = y^T G^{-1} y = y^T A y / d; keep r^2/2 < prec
    let bound = 2 * prec * d - 1;
    let mut counts: BTreeMap<(usize, i64), u64> = BTreeMap::new();
    short_vectors(&a, bound, |y, norm| {
        *counts.entry((form.class_of_dual(y), norm)).or_default() += 1;
    });
    let den = 2 * d ;
    let prec_q = Rational::from_integer(BigInt::from(prec));
    let mut comps = Vec::with_capacity(form.order());
    for gamma in 0..form.order() {
        let terms = counts
            .range((gamma, i64::MIN)..=(gamma, i64::MAX))
            .map(|(&(_, norm), &c)| (Rational::new(BigInt::from(norm), BigInt::from(den)), Rational::from_integer(BigInt::from(c))));
        comps.push(QSeries::from_terms(den, &prec_q, terms)?);
    }
    Ok((form, comps))
}

/// Theta series of `W + E8`, transported to the cosets of `form` (a form
/// isomorphic to the dual of the discriminant form of `W + E8`, e.g. that of
/// `-W`), matching cosets by their order in the cyclic group.
pub fn theta_series_rank10(form: Arc<DiscriminantForm>, prec: i64) -> Result<VectorForm> {
    let lat = EvenLattice::direct_sum(&[EvenLattice::w(), EvenLattice::e8()]);
    let (own, comps) = lattice_theta_series(&lat, prec)?;
    if own.order() != form.order() || own.invariants() != form.invariants() {
        return Err(Error::invalid("target form is not the group of W + E8"));
    }
    // Smith coordinates index both groups the same way; q-values must be negatives.
    for i in 0..own.order() {
        if !(own.qvalue(i) + form.qvalue(i)).is_integer() {
            return Err(Error::invalid("target form is not anti-isometric to that of W + E8"));
        }
    }
    VectorForm::new(Rational::from_integer(BigInt::from(lat.rank() as i64 / 2)), form, comps)
}
