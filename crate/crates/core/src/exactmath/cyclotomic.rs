use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{linalg, Rational};
use crate::error::{Error, Result};

/// Order of the default field: contains `i`, `sqrt(3)`, `sqrt(2)` and the
/// eighth roots of unity.
pub const DEFAULT_ORDER: u32 = 24;

#[derive(Debug)]
struct Field {
    order: u32,
    /// Monic cyclotomic polynomial, low degree first, length `phi + 1`.
    modulus: Vec<i64>,
    /// `zeta^m` in the power basis, for `0 <= m < order`.
    powers: Vec<Vec<i64>>,
}

impl Field {
    fn degree(&self) -> usize {
        self.modulus.len() - 1
    }
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let mut quot = vec![0; num.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn] / den[dn];
        quot[i] = c;
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    quot
}

fn cyclotomic_poly(n: u32) -> Vec<i64> {
    // x^n - 1 divided by Phi_d for every proper divisor d
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = poly_div_exact(&p, &cyclotomic_poly(d));
        }
    }
    p
}

fn reduce_int(mut p: Vec<i64>, modulus: &[i64]) -> Vec<i64> {
    let phi = modulus.len() - 1;
    for i in (phi..p.len()).rev() {
        let c = p[i];
        if c != 0 {
            for j in 0..=phi {
                p[i - phi + j] -= c * modulus[j];
            }
        }
    }
    p.truncate(phi);
    p.resize(phi, 0);
    p
}

fn field(order: u32) -> Arc<Field> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Field>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("cyclotomic cache poisoned");
    guard
        .entry(order)
        .or_insert_with(|| {
            let modulus = cyclotomic_poly(order);
            let powers = (0..order as usize)
                .map(|m| {
                    let mut mono = vec![0i64; m + 1];
                    mono[m] = 1;
                    reduce_int(mono, &modulus)
                })
                .collect();
            Arc::new(Field { order, modulus, powers })
        })
        .clone()
}

/// Element of the cyclotomic field `Q(zeta_N)` in the power basis of a
/// primitive N-th root of unity `zeta = e(1/N)`.
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<Field>,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero(order: u32) -> Self {
        let field = field(order);
        let coeffs = vec![Rational::zero(); field.degree()];
        Cyclotomic { field, coeffs }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, Rational::one())
    }

    pub fn from_rational(order: u32, x: Rational) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = x;
        z
    }

    pub fn from_i64(order: u32, x: i64) -> Self {
        Self::from_rational(order, Rational::from_integer(BigInt::from(x)))
    }

    /// `zeta^k`, any integer `k`.
    pub fn zeta_pow(order: u32, k: i64) -> Self {
        let field = field(order);
        let m = k.rem_euclid(order as i64) as usize;
        let coeffs = field.powers[m]
            .iter()
            .map(|&c| Rational::from_integer(BigInt::from(c)))
            .collect();
        Cyclotomic { field, coeffs }
    }

    /// `e(x) = exp(2 pi i x)`; `x * order` must be an integer.
    pub fn e(order: u32, x: &Rational) -> Result<Self> {
        let scaled = x * Rational::from_integer(BigInt::from(order));
        if !scaled.is_integer() {
            return Err(Error::invalid(format!("e({x}) is not an {order}-th root of unity")));
        }
        let k = scaled
            .to_integer()
            .mod_floor(&BigInt::from(order))
            .to_i64()
            .expect("reduced exponent fits");
        Ok(Self::zeta_pow(order, k))
    }

    /// `sqrt(n)` for `n = m^2 * s` with squarefree part `s` in `{1, 2, 3, 6}`
    /// (the square roots available in the 24th cyclotomic field).
    pub fn sqrt_int(order: u32, n: u64) -> Result<Self> {
        if n == 0 {
            return Ok(Self::zero(order));
        }
        let mut m = 1u64;
        let mut s = n;
        let mut d = 2;
        while d * d <= s {
            while s.is_multiple_of(d * d) {
                s /= d * d;
                m *= d;
            }
            d += 1;
        }
        // sqrt2 = e(1/8) + e(-1/8), sqrt3 = e(1/12) + e(-1/12)
        let two_cos = |den: i64| -> Result<Self> {
            if order as i64 % den != 0 {
                return Err(Error::invalid(format!("sqrt({n}) not in Q(zeta_{order})")));
            }
            let k = order as i64 / den;
            Ok(Self::zeta_pow(order, k) + Self::zeta_pow(order, -k))
        };
        let root = match s {
            1 => Self::one(order),
            2 => two_cos(8)?,
            3 => two_cos(12)?,
            6 => two_cos(8)? * two_cos(12)?,
            _ => return Err(Error::invalid(format!("sqrt({n}) not supported"))),
        };
        Ok(root.scale(&Rational::from_integer(BigInt::from(m))))
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Complex conjugation, `zeta -> zeta^(N-1)`.
    pub fn conj(&self) -> Self {
        let n = self.order() as i64;
        let mut out = Self::zero(self.order());
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out = out + Self::zeta_pow(self.order(), n - j as i64).scale(c);
            }
        }
        out
    }

    /// Real part `(x + conj(x)) / 2`.
    pub fn re(&self) -> Self {
        (self.clone() + self.conj()).scale(&Rational::new(BigInt::one(), BigInt::from(2)))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse, via the multiplication-by-`self` matrix.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::invalid("inverse of zero"));
        }
        let phi = self.field.degree();
        let order = self.order();
        // column j = self * zeta^j
        let cols: Vec<Cyclotomic> = (0..phi).map(|j| self * &Self::zeta_pow(order, j as i64)).collect();
        let matrix: Vec<Vec<Rational>> =
            (0..phi).map(|i| cols.iter().map(|c| c.coeffs[i].clone()).collect()).collect();
        let mut rhs = vec![Rational::zero(); phi];
        rhs[0] = Rational::one();
        let coeffs = linalg::solve(&matrix, &rhs)?;
        Ok(Cyclotomic { field: self.field.clone(), coeffs })
    }

    /// Embedding into `C` with `zeta -> exp(2 pi i / N)`.
    pub fn to_complex(&self) -> Complex64 {
        let n = self.order() as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| {
                let theta = 2.0 * std::f64::consts::PI * j as f64 / n;
                Complex64::from_polar(1.0, theta) * c.to_f64().unwrap_or(f64::NAN)
            })
            .sum()
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(self.order(), other.order(), "mixing cyclotomic fields of different order");
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.order() == other.order() && self.coeffs == other.coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| match j {
                0 => format!("{c}"),
                1 => format!("({c})z"),
                _ => format!("({c})z^{j}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_same(rhs);
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_same(rhs);
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_same(rhs);
        let phi = self.field.degree();
        let mut prod = vec![Rational::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let m = &self.field.modulus;
        for i in (phi..prod.len()).rev() {
            let c = std::mem::take(&mut prod[i]);
            if c.is_zero() {
                continue;
            }
            for j in 0..phi {
                if m[j] != 0 {
                    prod[i - phi + j] -= &c * Rational::from_integer(BigInt::from(m[j]));
                }
            }
        }
        prod.truncate(phi);
        Cyclotomic { field: self.field.clone(), coeffs: prod }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

/// Quadratic Gauss sum `sum_gamma e(a * q(gamma))` over the values `q(gamma)`
/// of a finite quadratic form. For the order-3 form with values
/// `{0, -1/3, -4/3}` this is `sum_{n=0}^{2} e(-a n^2 / 3)`; negative `a` is
/// allowed.
pub fn gauss_sum(a: i64, qvalues: &[Rational]) -> Result<Cyclotomic> {
    let scale = Rational::from_integer(BigInt::from(a));
    qvalues.iter().try_fold(Cyclotomic::zero(DEFAULT_ORDER), |acc, q| {
        Ok(acc + Cyclotomic::e(DEFAULT_ORDER, &(q * &scale))?)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat};
    use rand::{Rng, SeedableRng};

    const N: u32 = DEFAULT_ORDER;

    fn i_unit() -> Cyclotomic {
        Cyclotomic::e(N, &rat(1, 4)).unwrap()
    }

    #[test]
    fn cyclotomic_polynomial_24() {
        // Phi_24 = x^8 - x^4 + 1
        assert_eq!(cyclotomic_poly(24), vec![1, 0, 0, 0, -1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn zeta_has_order_n() {
        let z = Cyclotomic::zeta_pow(N, 1);
        assert_eq!(z.pow(N), Cyclotomic::one(N));
        assert_ne!(z.pow(N / 2), Cyclotomic::one(N));
        assert_eq!(&i_unit() * &i_unit(), Cyclotomic::from_i64(N, -1));
    }

    #[test]
    fn square_roots() {
        for n in [2u64, 3, 6, 12, 27] {
            let r = Cyclotomic::sqrt_int(N, n).unwrap();
            assert_eq!(&r * &r, Cyclotomic::from_i64(N, n as i64), "sqrt {n}");
            assert!((r.to_complex().re - (n as f64).sqrt()).abs() < 1e-12);
        }
        assert!(Cyclotomic::sqrt_int(N, 5).is_err());
    }

    #[test]
    fn inverse_and_conjugation() {
        let s3 = Cyclotomic::sqrt_int(N, 3).unwrap();
        let inv = s3.inverse().unwrap();
        assert_eq!(&inv * &s3, Cyclotomic::one(N));
        assert_eq!(i_unit().conj(), -i_unit());
        assert_eq!(s3.conj(), s3);
        assert_eq!(i_unit().re(), Cyclotomic::zero(N));
        assert!(Cyclotomic::zero(N).inverse().is_err());
    }

    #[test]
    fn gauss_sums_of_the_order_three_form() {
        let q = vec![int(0), rat(-1, 3), rat(-4, 3)];
        let s3 = Cyclotomic::sqrt_int(N, 3).unwrap();
        assert_eq!(gauss_sum(-3, &q).unwrap(), Cyclotomic::from_i64(N, 3));
        let g1 = gauss_sum(1, &q).unwrap();
        // 1 + 2 e(-1/3) = -i sqrt3
        assert_eq!(g1, -(&i_unit() * &s3));
        assert_eq!(gauss_sum(2, &q).unwrap(), g1.conj());
        for a in [1, 2, 4, 5, -1, -2, 7] {
            let g = gauss_sum(a, &q).unwrap();
            assert_eq!(&g * &g.conj(), Cyclotomic::from_i64(N, 3), "a = {a}");
        }
    }

    #[test]
    fn embedding_is_multiplicative() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let random = |rng: &mut rand_chacha::ChaCha8Rng| {
            let coeffs: Vec<Rational> =
                (0..8).map(|_| rat(rng.gen_range(-1000..=1000), rng.gen_range(1..=9))).collect();
            Cyclotomic { field: field(N), coeffs }
        };
        for _ in 0..1000 {
            let x = random(&mut rng);
            let y = random(&mut rng);
            let lhs = (&x * &y).to_complex();
            let rhs = x.to_complex() * y.to_complex();
            let scale = rhs.norm().max(1.0);
            assert!((lhs - rhs).norm() / scale < 1e-10);
        }
    }

    #[test]
    fn embedding_of_products_of_eight_factors() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let mut exact = Cyclotomic::one(N);
            let mut float = Complex64::new(1.0, 0.0);
            for _ in 0..8 {
                let k = rng.gen_range(0..24);
                let c = rng.gen_range(-1_000_000..=1_000_000);
                let f = Cyclotomic::zeta_pow(N, k).scale(&int(c));
                float *= f.to_complex();
                exact = &exact * &f;
            }
            let got = exact.to_complex();
            assert!((got - float).norm() <= 1e-12 * float.norm().max(1.0));
        }
    }
}
