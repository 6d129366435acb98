use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{bernoulli_poly, chi_minus3, p_valuation, prime_factors, Rational};
use crate::fqm::{DiscriminantForm, WeilRep};
use crate::qseries::QSeries;
use crate::vvmf::VectorForm;

/// Everything the local Euler factors of one coefficient `(gamma, n)` need.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalEulerData {
    pub gamma: usize,
    pub n: Rational,
    /// Order of `gamma` in the discriminant group.
    pub d_gamma: u64,
    /// `omega_p = 1 + 2 v_p(2 d_gamma n)` for each prime `p | 18n`.
    pub omega_p: BTreeMap<u64, u32>,
    /// `N_{gamma,n}(p^v)` for `0 <= v <= omega_p`.
    pub counts: BTreeMap<(u64, u32), u64>,
}

fn check_index(form: &DiscriminantForm, gamma: usize, n: &Rational) -> Result<()> {
    if gamma >= form.order() {
        return Err(Error::invalid(format!("coset {gamma} out of range")));
    }
    if !(form.qvalue(gamma) + n).is_integer() {
        return Err(Error::invalid(format!("q(gamma_{gamma}) + {n} is not integral")));
    }
    Ok(())
}

/// Integer model of `(r - gamma)^2/2 + n`: with `D` the denominator of the
/// representative of `gamma` and `g = D gamma`, the value is
/// `((D r - g)^T G (D r - g) + 2 D^2 n) / (2 D^2)`.
struct CountingProblem {
    gram: Vec<Vec<i128>>,
    d: i128,
    g: Vec<i128>,
    shift: i128,
}

impl CountingProblem {
    fn new(form: &DiscriminantForm, gamma: usize, n: &Rational) -> Result<Self> {
        check_index(form, gamma, n)?;
        let rep = form.representative(gamma);
        let d: BigInt = rep.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let d = d.to_i128().ok_or_else(|| Error::invalid("representative denominator too large"))?;
        let g: Vec<i128> = rep
            .iter()
            .map(|x| (x * Rational::from_integer(BigInt::from(d))).to_integer().to_i128().expect("small"))
            .collect();
        let shift = n * Rational::from_integer(BigInt::from(2 * d * d));
        if !shift.is_integer() {
            return Err(Error::NonIntegral(format!("2 D^2 n = {shift}")));
        }
        let shift = shift.to_integer().to_i128().ok_or_else(|| Error::invalid("n too large"))?;
        let gram = form.gram().iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
        let prob = CountingProblem { gram, d, g, shift };
        // the value is integral for every r once it is for r = 0, since
        // <r, gamma> and r^2/2 are integers
        let zero = vec![0; prob.g.len()];
        if prob.scaled_value(&zero).rem_euclid(prob.base()) != 0 {
            return Err(Error::NonIntegral(format!("(r - gamma)^2/2 + n for coset {gamma}, n = {n}")));
        }
        Ok(prob)
    }

    fn base(&self) -> i128 {
        2 * self.d * self.d
    }

    fn scaled_value(&self, r: &[i128]) -> i128 {
        let rank = self.g.len();
        let mut total = self.shift;
        for i in 0..rank {
            let vi = self.d * r[i] - self.g[i];
            let mut row = 0;
            for j in 0..rank {
                row += self.gram[i][j] * (self.d * r[j] - self.g[j]);
            }
            total += vi * row;
        }
        total
    }

    fn vanishes_mod(&self, r: &[i128], a: i128) -> bool {
        self.scaled_value(r).rem_euclid(self.base() * a) == 0
    }
}

/// `N_{gamma,n}(a) = #{ r in (Z/aZ)^rank : (r - gamma)^2/2 + n = 0 mod a }`,
/// by enumerating all `a^rank` residues.
///
/// Errors unless `q(gamma) + n` is integral; the integrality of the value
/// for every `r` is checked as well.
pub fn rep_count(form: &DiscriminantForm, gamma: usize, n: &Rational, a: u64) -> Result<u64> {
    if a == 0 {
        return Err(Error::invalid("modulus must be positive"));
    }
    let prob = CountingProblem::new(form, gamma, n)?;
    let rank = prob.g.len();
    let a = a as i128;
    let mut r = vec![0i128; rank];
    let mut count = 0u64;
    loop {
        if prob.vanishes_mod(&r, a) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == rank {
                return Ok(count);
            }
            r[i] += 1;
            if r[i] < a {
                break;
            }
            r[i] = 0;
            i += 1;
        }
    }
}

/// `[N_{gamma,n}(p^0), ..., N_{gamma,n}(p^vmax)]`.
///
/// Same enumeration as [`rep_count`], organised by lifting: every solution
/// mod `p^v` reduces to one mod `p^(v-1)`. For `v >= 2` and a lift
/// `r = s + p^(v-1) t`,
/// `val(r) = val(s) + p^(v-1) <s - gamma, t> + p^(2v-2) t^2/2`,
/// and the last term vanishes mod `p^v`; so the lifts of `s` that survive are
/// the solutions of one linear congruence in `t` mod `p`.
pub fn rep_counts_prime_power(form: &DiscriminantForm, gamma: usize, n: &Rational, p: u64, vmax: u32) -> Result<Vec<u64>> {
    let prob = CountingProblem::new(form, gamma, n)?;
    let rank = prob.g.len();
    let p = p as i128;
    let mut counts = vec![1u64];
    if vmax == 0 {
        return Ok(counts);
    }
    // level 1 by brute force; solutions stored flat with stride `rank`
    let mut solutions: Vec<i128> = Vec::new();
    let mut r = vec![0i128; rank];
    for mut k in 0..p.pow(rank as u32) {
        for ri in r.iter_mut() {
            *ri = k % p;
            k /= p;
        }
        if prob.vanishes_mod(&r, p) {
            solutions.extend_from_slice(&r);
        }
    }
    counts.push((solutions.len() / rank.max(1)) as u64);

    let mut step = p;
    let mut lin = vec![0i128; rank];
    for v in 2..=vmax {
        let need_list = v < vmax;
        let mut count = 0u64;
        let mut next = Vec::new();
        for s in solutions.chunks_exact(rank) {
            let val = prob.scaled_value(s) / prob.base();
            let c = (val / step).rem_euclid(p);
            for (j, l) in lin.iter_mut().enumerate() {
                let t: i128 = (0..rank).map(|i| prob.gram[j][i] * (prob.d * s[i] - prob.g[i])).sum();
                *l = (t / prob.d).rem_euclid(p);
            }
            match lin.iter().position(|&l| l != 0) {
                None => {
                    if c == 0 {
                        count += p.pow(rank as u32) as u64;
                        if need_list {
                            for mut k in 0..p.pow(rank as u32) {
                                for (ri, si) in r.iter_mut().zip(s) {
                                    *ri = si + step * (k % p);
                                    k /= p;
                                }
                                next.extend_from_slice(&r);
                            }
                        }
                    }
                }
                Some(j0) => {
                    count += p.pow(rank as u32 - 1) as u64;
                    if need_list {
                        let inv = mod_inverse(lin[j0], p);
                        for mut k in 0..p.pow(rank as u32 - 1) {
                            let mut acc = c;
                            for j in (0..rank).filter(|&j| j != j0) {
                                let t = k % p;
                                k /= p;
                                acc += lin[j] * t;
                                r[j] = s[j] + step * t;
                            }
                            let t0 = (-acc * inv).rem_euclid(p);
                            r[j0] = s[j0] + step * t0;
                            debug_assert!(prob.vanishes_mod(&r, step * p));
                            next.extend_from_slice(&r);
                        }
                    }
                }
            }
        }
        counts.push(count);
        solutions = next;
        step *= p;
    }
    Ok(counts)
}

fn mod_inverse(a: i128, p: i128) -> i128 {
    (1..p).find(|&x| (a * x).rem_euclid(p) == 1).expect("p is prime and a is a unit")
}

/// Primes dividing the numerator of `18 n`.
fn bad_primes(n: &Rational) -> Vec<u64> {
    let m = n * Rational::from_integer(BigInt::from(18));
    let num = m.numer().abs().to_u64().expect("small index");
    prime_factors(num)
}

fn omega(form: &DiscriminantForm, gamma: usize, n: &Rational, p: u64) -> Result<u32> {
    let d_gamma = form.element_order(gamma);
    let x = n * Rational::from_integer(BigInt::from(2 * d_gamma));
    let v = p_valuation(&x, p)?;
    if v < 0 {
        return Err(Error::NonIntegral(format!("2 d_gamma n = {x}")));
    }
    Ok(1 + 2 * v as u32)
}

/// Collects `d_gamma`, `omega_p` and all counts for the coefficient `(gamma, n)`.
pub fn local_euler_data(form: &DiscriminantForm, gamma: usize, n: &Rational) -> Result<LocalEulerData> {
    check_index(form, gamma, n)?;
    if !n.is_positive() {
        return Err(Error::invalid("index n must be positive"));
    }
    let mut omega_p = BTreeMap::new();
    let mut counts = BTreeMap::new();
    for p in bad_primes(n) {
        let w = omega(form, gamma, n, p)?;
        omega_p.insert(p, w);
        for (v, c) in rep_counts_prime_power(form, gamma, n, p, w)?.into_iter().enumerate() {
            counts.insert((p, v as u32), c);
        }
    }
    Ok(LocalEulerData { gamma, n: n.clone(), d_gamma: form.element_order(gamma), omega_p, counts })
}

fn prime_power(p: u64, e: i64) -> Rational {
    let b = Rational::from_integer(BigInt::from(p));
    b.pow(e as i32)
}

/// `L_{gamma,n}(k,p) = (1 - p^(1-k)) sum_{v < omega} N(p^v) p^(-kv) + N(p^omega) p^(-k omega)`.
pub fn local_euler_factor(form: &DiscriminantForm, k: u32, gamma: usize, n: &Rational, p: u64) -> Result<Rational> {
    check_index(form, gamma, n)?;
    let w = omega(form, gamma, n, p)?;
    let k = k as i64;
    let counts = rep_counts_prime_power(form, gamma, n, p, w)?;
    let count = |v: u32| Rational::from_integer(BigInt::from(counts[v as usize]));
    let mut head = Rational::zero();
    for v in 0..w {
        head += count(v) * prime_power(p, -k * v as i64);
    }
    Ok((Rational::one() - prime_power(p, 1 - k)) * head + count(w) * prime_power(p, -k * w as i64))
}

/// `sum_{m=1}^{3} chi(m) B_k(1 - m/3)`.
pub fn l_value_bernoulli_sum(k: u32) -> Rational {
    (1..=3i64)
        .map(|m| {
            let x = Rational::one() - Rational::new(BigInt::from(m), BigInt::from(3));
            bernoulli_poly(k as usize, &x) * Rational::from_integer(BigInt::from(chi_minus3(m)))
        })
        .sum()
}

/// The rational prefactor `c_k` with
/// `2^(k+1) pi^k (-1)^((k-1)/2) / (sqrt3 Gamma(k) L(k, chi))  = c_k`.
///
/// Uses `L(k, chi) = (-1)^((k-1)/2) 2^(k-1) pi^k / (k! sqrt3) * S_k` with
/// `S_k` the Bernoulli sum, so `c_k = 4k / S_k`.
pub fn l_value_ratio(k: u32) -> Result<Rational> {
    if k.is_multiple_of(2) || k < 3 {
        return Err(Error::invalid(format!("prefactor needs odd k >= 3, got {k}")));
    }
    Ok(Rational::from_integer(BigInt::from(4 * k)) / l_value_bernoulli_sum(k))
}

/// One Fourier coefficient of the vector-valued Eisenstein series.
pub fn vv_eisenstein_coefficient(form: &DiscriminantForm, k: u32, gamma: usize, n: &Rational) -> Result<Rational> {
    let ratio = l_value_ratio(k)?;
    let mut c = ratio * n.pow(k as i32 - 1);
    for p in bad_primes(n) {
        let local = local_euler_factor(form, k, gamma, n, p)?;
        let chi = Rational::from_integer(BigInt::from(chi_minus3(p as i64)));
        c = c * local / (Rational::one() - chi * prime_power(p, -(k as i64)));
    }
    Ok(c)
}

fn check_rep(rep: &WeilRep) -> Result<()> {
    let f = rep.form();
    if f.order() != 3 || f.level() != 3 || f.signature_index().rem_euclid(8) != 6 {
        return Err(Error::invalid("Euler products are implemented for the discriminant form of -W only"));
    }
    if !rep.is_dual() {
        return Err(Error::invalid("the Eisenstein series has type rho^*"));
    }
    Ok(())
}

/// The Bruinier–Kuss Eisenstein series of weight `k` and type `rho^*` for
/// the form of `-W`, to `prec` integer q-steps:
/// `2 v_0 + sum c_k n^(k-1) prod_{p | 18n} L_{gamma,n}(k,p) / (1 - chi(p) p^-k) q^n v_gamma`.
///
/// Every coefficient times the denominator of [`l_value_ratio`] is checked to
/// be an integer; for `k = 3, 5` the ratio is integral, so the series is.
pub fn vv_eisenstein(rep: &WeilRep, k: u32, prec: i64) -> Result<VectorForm> {
    check_rep(rep)?;
    if k.is_multiple_of(2) || k < 3 {
        return Err(Error::invalid(format!("vector-valued Eisenstein series needs odd k >= 3, got {k}")));
    }
    let form = rep.form();
    let den = form.level() as i64;
    let prec_q = Rational::from_integer(BigInt::from(prec));
    let clear = Rational::from_integer(l_value_ratio(k)?.denom().clone());
    let mut components: Vec<QSeries> = Vec::with_capacity(form.order());
    for gamma in 0..form.order() {
        let j = form.neg(gamma);
        if j < gamma {
            let c = components[j].clone();
            components.push(c);
            continue;
        }
        let offset = -form.qvalue(gamma).clone();
        let offset = &offset - offset.floor();
        let mut terms = Vec::new();
        if gamma == 0 {
            terms.push((Rational::zero(), Rational::from_integer(BigInt::from(2))));
        }
        let mut n = if offset.is_zero() { Rational::one() } else { offset };
        while n < prec_q {
            let c = vv_eisenstein_coefficient(form, k, gamma, &n)?;
            if !(&c * &clear).is_integer() {
                return Err(Error::NonIntegral(format!("coefficient {c} at q^{n} v_{gamma}")));
            }
            terms.push((n.clone(), c));
            n += Rational::one();
        }
        components.push(QSeries::from_terms(den, &prec_q, terms)?);
    }
    VectorForm::new(Rational::from_integer(BigInt::from(k)), rep.form_arc(), components)
}
