use std::collections::BTreeMap;
use std::fmt;

use super::ring::RingClass;

/// Integer polynomial in `N` variables with per-variable weights, truncated
/// above a fixed weighted degree.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly<const N: usize> {
    weights: [u32; N],
    max_degree: u32,
    terms: BTreeMap<[u32; N], i128>,
}

impl<const N: usize> Poly<N> {
    pub fn zero(weights: [u32; N], max_degree: u32) -> Self {
        Poly { weights, max_degree, terms: BTreeMap::new() }
    }

    pub fn constant(weights: [u32; N], max_degree: u32, c: i128) -> Self {
        let mut p = Self::zero(weights, max_degree);
        p.add_term([0; N], c);
        p
    }

    pub fn variable(weights: [u32; N], max_degree: u32, i: usize) -> Self {
        let mut e = [0; N];
        e[i] = 1;
        let mut p = Self::zero(weights, max_degree);
        p.add_term(e, 1);
        p
    }

    /// Builds a polynomial from `(coefficient, exponents)` pairs.
    pub fn from_terms(weights: [u32; N], max_degree: u32, terms: &[(i128, [u32; N])]) -> Self {
        let mut p = Self::zero(weights, max_degree);
        for &(c, e) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn weighted_degree(&self, e: &[u32; N]) -> u32 {
        e.iter().zip(&self.weights).map(|(a, w)| a * w).sum()
    }

    pub fn add_term(&mut self, e: [u32; N], c: i128) {
        if c == 0 || self.weighted_degree(&e) > self.max_degree {
            return;
        }
        let slot = self.terms.entry(e).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> &BTreeMap<[u32; N], i128> {
        &self.terms
    }

    pub fn coefficient(&self, e: &[u32; N]) -> i128 {
        self.terms.get(e).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Part of weighted degree exactly `d`.
    pub fn homogeneous(&self, d: u32) -> Self {
        let mut p = Self::zero(self.weights, self.max_degree);
        for (e, &c) in &self.terms {
            if self.weighted_degree(e) == d {
                p.add_term(*e, c);
            }
        }
        p
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut p = self.clone();
        for (e, &c) in &other.terms {
            p.add_term(*e, c);
        }
        p
    }

    pub fn scale(&self, s: i128) -> Self {
        let mut p = Self::zero(self.weights, self.max_degree);
        for (e, &c) in &self.terms {
            p.add_term(*e, c * s);
        }
        p
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut p = Self::zero(self.weights, self.max_degree);
        for (a, &x) in &self.terms {
            for (b, &y) in &other.terms {
                let mut e = *a;
                for i in 0..N {
                    e[i] += b[i];
                }
                p.add_term(e, x * y);
            }
        }
        p
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::constant(self.weights, self.max_degree, 1), |acc, _| acc.mul(self))
    }

    /// Inverse of a series with constant term 1.
    pub fn invert_unit(&self) -> Self {
        assert_eq!(self.coefficient(&[0; N]), 1, "constant term must be 1");
        let one = Self::constant(self.weights, self.max_degree, 1);
        let tail = self.add(&one.scale(-1));
        // 1/(1+t) = sum (-t)^k; t has positive degree so this terminates
        let mut out = one.clone();
        let mut power = one;
        for _ in 0..self.max_degree {
            power = power.mul(&tail).scale(-1);
            out = out.add(&power);
        }
        out
    }

    /// Evaluates at ring classes, one per variable.
    pub fn evaluate(&self, values: &[RingClass; N]) -> RingClass {
        let ring = values[0].ring();
        let mut out = RingClass::zero(ring);
        for (e, &c) in &self.terms {
            let mut m = RingClass::integer(ring, c);
            for i in 0..N {
                m = &m * &values[i].pow(e[i]);
            }
            out = &out + &m;
        }
        out
    }
}

impl<const N: usize> fmt::Debug for Poly<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(|(e, c)| format!("{c}{e:?}")).collect();
        write!(f, "{}", if parts.is_empty() { "0".into() } else { parts.join(" + ") })
    }
}

/// Rewrites a symmetric polynomial in `x1, x2, x3` (unit weights) as a
/// polynomial in `e1, e2, e3` (weights 1, 2, 3) by repeatedly cancelling the
/// lexicographically leading monomial.
pub fn to_elementary(f: &Poly<3>) -> Poly<3> {
    let d = f.max_degree;
    let x: Vec<Poly<3>> = (0..3).map(|i| Poly::variable([1; 3], d, i)).collect();
    let e = [
        x[0].add(&x[1]).add(&x[2]),
        x[0].mul(&x[1]).add(&x[0].mul(&x[2])).add(&x[1].mul(&x[2])),
        x[0].mul(&x[1]).mul(&x[2]),
    ];
    let mut rest = f.clone();
    let mut out = Poly::zero([1, 2, 3], d);
    while let Some((&lead, &c)) = rest.terms.iter().next_back() {
        let [a, b, cc] = lead;
        assert!(a >= b && b >= cc, "polynomial is not symmetric");
        let exps = [a - b, b - cc, cc];
        out.add_term(exps, c);
        let m = e[0].pow(exps[0]).mul(&e[1].pow(exps[1])).mul(&e[2].pow(exps[2]));
        rest = rest.add(&m.scale(-c));
    }
    out
}

/// Total Chern class of `Sym^3 E` for a rank-3 bundle `E`, written in the
/// Chern classes `e1, e2, e3` of `E`, through degree `max_degree`.
pub fn sym3_chern_polynomial(max_degree: u32) -> Poly<3> {
    let d = max_degree;
    let x = |i: usize| Poly::variable([1; 3], d, i);
    let one = Poly::constant([1; 3], d, 1);
    let mut roots = Vec::new();
    for i in 0..3 {
        roots.push(x(i).scale(3));
        for j in 0..3 {
            if i != j {
                roots.push(x(i).scale(2).add(&x(j)));
            }
        }
    }
    roots.push(x(0).add(&x(1)).add(&x(2)));
    let total = roots.iter().fold(one.clone(), |acc, r| acc.mul(&one.add(r)));
    to_elementary(&total)
}

/// The class `s_k` in the Chern classes `c1..c9` (weights 1..9) such that
/// `xi^(r-1+k) = s_k * xi^(r-1)` on a projective bundle with relation
/// `xi^r + c1 xi^(r-1) + ... = 0`.
pub fn reduction_polynomial(k: u32) -> Poly<9> {
    let w = [1, 2, 3, 4, 5, 6, 7, 8, 9];
    let mut s = vec![Poly::constant(w, k, 1)];
    for n in 1..=k {
        let mut acc = Poly::zero(w, k);
        for i in 1..=n.min(9) {
            acc = acc.add(&Poly::variable(w, k, i as usize - 1).mul(&s[(n - i) as usize]));
        }
        s.push(acc.scale(-1));
    }
    s.pop().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_sum_in_elementary() {
        // p2 = e1^2 - 2 e2
        let d = 2;
        let x = |i| Poly::<3>::variable([1; 3], d, i);
        let p2 = x(0).pow(2).add(&x(1).pow(2)).add(&x(2).pow(2));
        let e = to_elementary(&p2);
        assert_eq!(e, Poly::from_terms([1, 2, 3], d, &[(1, [2, 0, 0]), (-2, [0, 1, 0])]));
    }

    #[test]
    fn sym3_first_class() {
        let c = sym3_chern_polynomial(3);
        assert_eq!(c.coefficient(&[1, 0, 0]), 10);
    }

    #[test]
    fn reduction_low_degree() {
        let s2 = reduction_polynomial(2);
        let w = [1, 2, 3, 4, 5, 6, 7, 8, 9];
        let mut a = [0; 9];
        a[0] = 2;
        let mut b = [0; 9];
        b[1] = 1;
        assert_eq!(s2, Poly::from_terms(w, 2, &[(1, a), (-1, b)]));
    }

    #[test]
    fn invert_unit_roundtrip() {
        let w = [1, 2, 3];
        let p = Poly::from_terms(w, 6, &[(1, [0, 0, 0]), (3, [1, 0, 0]), (-2, [0, 1, 0]), (5, [0, 0, 1])]);
        let prod = p.mul(&p.invert_unit());
        assert_eq!(prod, Poly::constant(w, 6, 1));
    }
}
