//! Truncated q-expansions with exponents in `(1/den) Z` and exact rational
//! coefficients.
//!
//! A series always carries its truncation order `prec`: coefficients at
//! exponents `>= prec` are unknown, and asking for one is an error rather
//! than a silent zero.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{linalg, Rational};

#[derive(Clone)]
pub struct QSeries {
    den: i64,
    /// Truncation order in units of `1/den`.
    prec: i64,
    /// Exponent `e` stands for `q^(e/den)`; zero coefficients are not stored.
    coeffs: BTreeMap<i64, Rational>,
}

fn to_units(x: &Rational, den: i64) -> Result<i64> {
    let scaled = x * Rational::from_integer(BigInt::from(den));
    if !scaled.is_integer() {
        return Err(Error::invalid(format!("{x} is not a multiple of 1/{den}")));
    }
    i64::try_from(scaled.to_integer()).map_err(|_| Error::invalid("exponent out of range"))
}

impl QSeries {
    /// The zero series known below `prec`.
    pub fn zero(den: i64, prec: &Rational) -> Result<Self> {
        if den <= 0 {
            return Err(Error::invalid("exponent denominator must be positive"));
        }
        Ok(QSeries { den, prec: to_units(prec, den)?, coeffs: BTreeMap::new() })
    }

    /// Builds a series from `(exponent, coefficient)` pairs; terms at or past
    /// `prec` are dropped.
    pub fn from_terms<I>(den: i64, prec: &Rational, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Rational, Rational)>,
    {
        let mut s = Self::zero(den, prec)?;
        for (e, c) in terms {
            let u = to_units(&e, den)?;
            if u < s.prec {
                s.add_term(u, c);
            }
        }
        Ok(s)
    }

    /// Integer-exponent series from a coefficient list `c_0 + c_1 q + ...`,
    /// known below `prec`.
    pub fn from_integer_coeffs<I, T>(coeffs: I, prec: i64) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut s = QSeries { den: 1, prec, coeffs: BTreeMap::new() };
        for (e, c) in coeffs.into_iter().enumerate() {
            if (e as i64) < prec {
                s.add_term(e as i64, Rational::from_integer(c.into()));
            }
        }
        s
    }

    pub fn constant(c: Rational, prec: &Rational) -> Result<Self> {
        Self::from_terms(1, prec, [(Rational::zero(), c)])
    }

    pub fn one(prec: &Rational) -> Result<Self> {
        Self::constant(Rational::one(), prec)
    }

    fn add_term(&mut self, e: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn prec(&self) -> Rational {
        Rational::new(BigInt::from(self.prec), BigInt::from(self.den))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Nonzero terms as `(exponent, coefficient)`, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (Rational, &Rational)> + '_ {
        let den = BigInt::from(self.den);
        self.coeffs.iter().map(move |(&e, c)| (Rational::new(BigInt::from(e), den.clone()), c))
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<Rational> {
        self.coeffs.keys().next().map(|&e| Rational::new(BigInt::from(e), BigInt::from(self.den)))
    }

    fn valuation_units(&self) -> i64 {
        self.coeffs.keys().next().copied().unwrap_or(self.prec)
    }

    /// Coefficient of `q^n`. Fails for `n >= prec`: beyond the truncation the
    /// value is unknown, not zero.
    pub fn coefficient(&self, n: &Rational) -> Result<Rational> {
        if *n >= self.prec() {
            return Err(Error::BeyondPrecision { exponent: n.to_string(), prec: self.prec().to_string() });
        }
        let scaled = n * Rational::from_integer(BigInt::from(self.den));
        if !scaled.is_integer() {
            return Ok(Rational::zero());
        }
        let Ok(u) = i64::try_from(scaled.to_integer()) else {
            return Ok(Rational::zero());
        };
        Ok(self.coeffs.get(&u).cloned().unwrap_or_else(Rational::zero))
    }

    /// Same series with exponent denominator `den`, a multiple of the
    /// current one.
    pub fn with_den(&self, den: i64) -> Self {
        assert!(den > 0 && den % self.den == 0, "denominator {den} is not a multiple of {}", self.den);
        let f = den / self.den;
        QSeries {
            den,
            prec: self.prec * f,
            coeffs: self.coeffs.iter().map(|(&e, c)| (e * f, c.clone())).collect(),
        }
    }

    fn aligned(a: &Self, b: &Self) -> (Self, Self) {
        let den = a.den.lcm(&b.den);
        (a.with_den(den), b.with_den(den))
    }

    /// Drops everything at or past `prec` (and lowers the precision to it).
    pub fn truncate(&self, prec: &Rational) -> Result<Self> {
        let p = to_units(prec, self.den)?;
        let p = p.min(self.prec);
        Ok(QSeries { den: self.den, prec: p, coeffs: self.coeffs.range(..p).map(|(&e, c)| (e, c.clone())).collect() })
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return QSeries { den: self.den, prec: self.prec, coeffs: BTreeMap::new() };
        }
        QSeries { den: self.den, prec: self.prec, coeffs: self.coeffs.iter().map(|(&e, c)| (e, c * s)).collect() }
    }

    /// `f^m` by repeated squaring. `f^0` is the unit series at the
    /// precision of `f`.
    pub fn pow(&self, mut m: u32) -> Self {
        if m == 0 {
            return QSeries { den: self.den, prec: self.prec, coeffs: BTreeMap::from([(0, Rational::one())]) };
        }
        let mut base = self.clone();
        let mut acc: Option<QSeries> = None;
        while m > 0 {
            if m & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => &a * &base,
                });
            }
            m >>= 1;
            if m > 0 {
                base = &base * &base;
            }
        }
        acc.expect("m > 0")
    }

    /// Substitution `q -> q^r` for positive rational `r`.
    pub fn rescale_exponent(&self, r: &Rational) -> Result<Self> {
        if !r.is_positive() {
            return Err(Error::invalid("rescaling factor must be positive"));
        }
        let num = i64::try_from(r.numer()).map_err(|_| Error::invalid("rescale numerator too large"))?;
        let rden = i64::try_from(r.denom()).map_err(|_| Error::invalid("rescale denominator too large"))?;
        Ok(QSeries {
            den: self.den * rden,
            prec: self.prec * num,
            coeffs: self.coeffs.iter().map(|(&e, c)| (e * num, c.clone())).collect(),
        })
    }

    /// `D^r f` with `D = q d/dq`: the coefficient of `q^n` is multiplied by
    /// `n^r`, including fractional `n`.
    pub fn derivative(&self, r: u32) -> Self {
        if r == 0 {
            return self.clone();
        }
        let den = BigInt::from(self.den);
        let mut out = QSeries { den: self.den, prec: self.prec, coeffs: BTreeMap::new() };
        for (&e, c) in &self.coeffs {
            let n = Rational::new(BigInt::from(e), den.clone());
            out.add_term(e, c * n.pow(r as i32));
        }
        out
    }

    /// True when both series agree below the smaller of the two precisions.
    /// Precision bookkeeping may legitimately differ between two routes to
    /// the same series; this compares only what both routes know.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let (a, b) = QSeries::aligned(self, other);
        let p = a.prec.min(b.prec);
        a.coeffs.range(..p).eq(b.coeffs.range(..p))
    }

    /// Exact JSON form `{den, prec_num, prec_den, terms: [{e, num, den}]}`,
    /// all integers as decimal strings.
    pub fn to_json(&self) -> QSeriesJson {
        let prec = self.prec();
        QSeriesJson {
            den: self.den.to_string(),
            prec_num: prec.numer().to_string(),
            prec_den: prec.denom().to_string(),
            terms: self
                .coeffs
                .iter()
                .map(|(&e, c)| TermJson { e: e.to_string(), num: c.numer().to_string(), den: c.denom().to_string() })
                .collect(),
        }
    }

    pub fn from_json(j: &QSeriesJson) -> Result<Self> {
        let parse = |s: &str| s.parse::<BigInt>().map_err(|e| Error::Serialization(format!("{s:?}: {e}")));
        let parse_i64 = |s: &str| s.parse::<i64>().map_err(|e| Error::Serialization(format!("{s:?}: {e}")));
        let den = parse_i64(&j.den)?;
        let prec = Rational::new(parse(&j.prec_num)?, parse(&j.prec_den)?);
        let mut s = Self::zero(den, &prec)?;
        for t in &j.terms {
            let e = parse_i64(&t.e)?;
            if e >= s.prec {
                return Err(Error::Serialization(format!("term exponent {e} at or past precision")));
            }
            s.add_term(e, Rational::new(parse(&t.num)?, parse(&t.den)?));
        }
        Ok(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub e: String,
    pub num: String,
    pub den: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QSeriesJson {
    pub den: String,
    pub prec_num: String,
    pub prec_den: String,
    pub terms: Vec<TermJson>,
}

impl PartialEq for QSeries {
    /// Equality of the underlying truncated series, independent of the
    /// exponent denominator used to store it.
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = QSeries::aligned(self, other);
        a.prec == b.prec && a.coeffs == b.coeffs
    }
}

impl<'a> Add<&'a QSeries> for &'a QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        let (a, b) = QSeries::aligned(self, rhs);
        let prec = a.prec.min(b.prec);
        let mut out = QSeries { den: a.den, prec, coeffs: a.coeffs.range(..prec).map(|(&e, c)| (e, c.clone())).collect() };
        for (&e, c) in b.coeffs.range(..prec) {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries { den: self.den, prec: self.prec, coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

impl<'a> Sub<&'a QSeries> for &'a QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a QSeries> for &'a QSeries {
    type Output = QSeries;
    /// Cauchy product. The result is known below
    /// `min(prec_a + val_b, prec_b + val_a)`.
    fn mul(self, rhs: &QSeries) -> QSeries {
        let (a, b) = QSeries::aligned(self, rhs);
        let prec = (a.prec + b.valuation_units()).min(b.prec + a.valuation_units());
        let mut acc: BTreeMap<i64, Rational> = BTreeMap::new();
        for (&ea, ca) in &a.coeffs {
            for (&eb, cb) in &b.coeffs {
                let e = ea + eb;
                if e >= prec {
                    break;
                }
                *acc.entry(e).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        QSeries { den: a.den, prec, coeffs: acc }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QSeries> for QSeries {
            type Output = QSeries;
            fn $m(self, rhs: QSeries) -> QSeries {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mono = if e.is_zero() {
                String::new()
            } else if e.is_one() {
                "q".to_string()
            } else if e.is_integer() {
                format!("q^{e}")
            } else {
                format!("q^({e})")
            };
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}{mono}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        let p = self.prec();
        if p.is_integer() {
            write!(f, " + O(q^{p})")
        } else {
            write!(f, " + O(q^({p}))")
        }
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSeries[den={}] {}", self.den, self)
    }
}

/// Finds the unique rational combination `sum c_i basis_i` that matches
/// every `(exponent, value)` target. Needs at least as many targets as basis
/// elements; a rank-deficient system is `Error::Singular`, an unsatisfiable
/// one `Error::Inconsistent`.
pub fn solve_linear_combination(basis: &[QSeries], targets: &[(Rational, Rational)]) -> Result<Vec<Rational>> {
    if targets.len() < basis.len() {
        return Err(Error::invalid(format!("{} constraints for {} unknowns", targets.len(), basis.len())));
    }
    let matrix = targets
        .iter()
        .map(|(e, _)| basis.iter().map(|b| b.coefficient(e)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let rhs: Vec<Rational> = targets.iter().map(|(_, v)| v.clone()).collect();
    linalg::solve(&matrix, &rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat};

    fn poly(coeffs: &[i64], prec: i64) -> QSeries {
        QSeries::from_integer_coeffs(coeffs.iter().copied(), prec)
    }

    // alpha = 1 + 6 q + 6 q^3 + 6 q^4 + 12 q^7 to q^8
    fn alpha8() -> QSeries {
        poly(&[1, 6, 0, 6, 6, 0, 0, 12], 8)
    }

    #[test]
    fn annihilator_and_difference_of_squares() {
        let f = poly(&[1, 6], 10);
        let zero = QSeries::zero(1, &int(10)).unwrap();
        assert!((&f * &zero).is_zero());
        let p = &poly(&[1, 1], 10) * &poly(&[1, -1], 10);
        assert_eq!(p, poly(&[1, 0, -1], 10));
    }

    #[test]
    fn alpha_squared() {
        let a2 = (&alpha8() * &alpha8()).truncate(&int(5)).unwrap();
        // q^4: a0a4 + a1a3 + a2a2 + a3a1 + a4a0 = 6 + 36 + 0 + 36 + 6
        assert_eq!(a2, poly(&[1, 12, 36, 12, 84], 5));
        assert_eq!(alpha8().pow(2), &alpha8() * &alpha8());
    }

    #[test]
    fn powers() {
        let f = alpha8();
        assert_eq!(f.pow(0).coefficient(&int(0)).unwrap(), int(1));
        assert_eq!(f.pow(0).coefficient(&int(3)).unwrap(), int(0));
        let a11 = f.pow(11);
        assert_eq!(a11.coefficient(&int(0)).unwrap(), int(1));
        assert_eq!(a11.coefficient(&int(1)).unwrap(), int(66));
        let mut naive = f.clone();
        for _ in 1..11 {
            naive = &naive * &f;
        }
        assert_eq!(a11, naive);
    }

    #[test]
    fn multiplication_precision_uses_valuations() {
        // q^2 * (1 + q) known below 10: (q^2 + O(q^10)) (1 + q + O(q^10)) = ... + O(q^10)
        let a = poly(&[0, 0, 1], 10);
        let b = poly(&[1, 1], 5);
        let p = &a * &b;
        assert_eq!(p.prec(), int(7));
        assert_eq!(p, poly(&[0, 0, 1, 1], 7));
    }

    #[test]
    fn rescaling() {
        let f = poly(&[1, 6], 10);
        let g = f.rescale_exponent(&rat(1, 3)).unwrap();
        let expected = QSeries::from_terms(3, &rat(10, 3), [(int(0), int(1)), (rat(1, 3), int(6))]).unwrap();
        assert_eq!(g, expected);
        assert_eq!(f.rescale_exponent(&int(1)).unwrap(), f);
        let beta = poly(&[0, 1, 3, 9, 13, 24], 6);
        assert_eq!(beta.rescale_exponent(&rat(1, 3)).unwrap().valuation(), Some(rat(1, 3)));
        let twice = g.rescale_exponent(&rat(1, 3)).unwrap();
        assert_eq!(twice, f.rescale_exponent(&rat(1, 9)).unwrap());
        assert!(f.rescale_exponent(&int(-1)).is_err());
    }

    #[test]
    fn derivatives() {
        let f = poly(&[1, 6, 0, 6], 10);
        assert_eq!(f.derivative(0), f);
        assert_eq!(f.derivative(1), poly(&[0, 6, 0, 18], 10));
        let g = QSeries::from_terms(3, &int(3), [(rat(4, 3), int(1))]).unwrap();
        assert_eq!(g.derivative(1).coefficient(&rat(4, 3)).unwrap(), rat(4, 3));
    }

    #[test]
    fn coefficients_and_precision_errors() {
        let a = alpha8();
        assert_eq!(a.coefficient(&int(0)).unwrap(), int(1));
        assert_eq!(a.coefficient(&int(2)).unwrap(), int(0));
        let beta = poly(&[0, 1, 3, 9, 13, 24], 6);
        assert_eq!(beta.coefficient(&int(4)).unwrap(), int(13));
        assert!(matches!(a.coefficient(&int(8)), Err(Error::BeyondPrecision { .. })));
        assert_eq!(a.coefficient(&rat(1, 2)).unwrap(), int(0));
    }

    #[test]
    fn linear_combinations() {
        let basis = vec![poly(&[1, 1], 5), poly(&[0, 1], 5)];
        let c = solve_linear_combination(&basis, &[(int(0), int(1)), (int(1), int(0))]).unwrap();
        assert_eq!(c, vec![int(1), int(-1)]);
        let bad = solve_linear_combination(&basis, &[(int(0), int(1)), (int(1), int(0)), (int(2), int(1))]);
        assert_eq!(bad, Err(Error::Inconsistent));
        let dup = vec![poly(&[1, 1], 5), poly(&[2, 2], 5)];
        assert!(matches!(
            solve_linear_combination(&dup, &[(int(0), int(1)), (int(1), int(1))]),
            Err(Error::Singular { .. })
        ));
        assert!(solve_linear_combination(&basis, &[(int(0), int(1))]).is_err());
    }

    #[test]
    fn mixed_denominators_merge() {
        let a = poly(&[1, 1], 3);
        let b = QSeries::from_terms(3, &int(3), [(rat(1, 3), int(2))]).unwrap();
        let s = &a + &b;
        assert_eq!(s.den(), 3);
        assert_eq!(s.coefficient(&rat(1, 3)).unwrap(), int(2));
        assert_eq!(s.coefficient(&int(1)).unwrap(), int(1));
    }

    #[test]
    fn json_round_trip() {
        let s = QSeries::from_terms(3, &rat(10, 3), [(int(0), rat(-2, 1)), (rat(4, 3), rat(3402, 7))]).unwrap();
        let j = s.to_json();
        assert_eq!(j.den, "3");
        assert_eq!(j.prec_num, "10");
        assert_eq!(j.prec_den, "3");
        let text = serde_json::to_string(&j).unwrap();
        let back: QSeriesJson = serde_json::from_str(&text).unwrap();
        assert_eq!(QSeries::from_json(&back).unwrap(), s);
    }

    #[test]
    fn display() {
        let s = QSeries::from_terms(3, &int(2), [(int(0), int(-2)), (int(1), int(192)), (rat(4, 3), int(3402))]).unwrap();
        assert_eq!(s.to_string(), "-2 + 192q + 3402q^(4/3) + O(q^2)");
    }
}
