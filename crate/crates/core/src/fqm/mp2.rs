use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Element `(A, phi)` of the metaplectic double cover of `SL2(Z)`, where
/// `phi(tau) = sign * sqrt(c tau + d)` with the principal square root.
///
/// Branch bookkeeping is done numerically at `tau = i`, where `c i + d` is
/// never zero, and the resulting sign is extracted exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mp2Element {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub sign: i8,
}

/// A letter in a word in the generators: `T^k` or `S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    T(i64),
    S,
}

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

impl Mp2Element {
    pub fn new(a: i64, b: i64, c: i64, d: i64, sign: i8) -> Result<Self> {
        if a * d - b * c != 1 {
            return Err(Error::invalid(format!("det of ({a},{b};{c},{d}) is not 1")));
        }
        if sign != 1 && sign != -1 {
            return Err(Error::invalid("branch sign must be +1 or -1"));
        }
        Ok(Mp2Element { a, b, c, d, sign })
    }

    /// The principal lift of an `SL2(Z)` matrix.
    pub fn from_matrix(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Self::new(a, b, c, d, 1)
    }

    pub fn identity() -> Self {
        Mp2Element { a: 1, b: 0, c: 0, d: 1, sign: 1 }
    }

    pub fn t() -> Self {
        Mp2Element { a: 1, b: 1, c: 0, d: 1, sign: 1 }
    }

    pub fn t_pow(k: i64) -> Self {
        Mp2Element { a: 1, b: k, c: 0, d: 1, sign: 1 }
    }

    /// `S = ((0,-1;1,0), sqrt(tau))`.
    pub fn s() -> Self {
        Mp2Element { a: 0, b: -1, c: 1, d: 0, sign: 1 }
    }

    pub fn letter(l: Letter) -> Self {
        match l {
            Letter::T(k) => Self::t_pow(k),
            Letter::S => Self::s(),
        }
    }

    pub fn matrix(&self) -> [[i64; 2]; 2] {
        [[self.a, self.b], [self.c, self.d]]
    }

    /// Mobius action on the upper half plane.
    pub fn act(&self, tau: Complex64) -> Complex64 {
        (tau * self.a as f64 + self.b as f64) / (tau * self.c as f64 + self.d as f64)
    }

    /// `phi(tau)`.
    pub fn phi(&self, tau: Complex64) -> Complex64 {
        (tau * self.c as f64 + self.d as f64).sqrt() * self.sign as f64
    }

    fn sign_of(c: i64, d: i64, value_at_i: Complex64) -> i8 {
        let principal = (I * c as f64 + d as f64).sqrt();
        let ratio = value_at_i / principal;
        debug_assert!((ratio.norm() - 1.0).abs() < 1e-9 && ratio.im.abs() < 1e-9, "cocycle is not a sign");
        if ratio.re > 0.0 {
            1
        } else {
            -1
        }
    }

    /// `(A, phi1) (B, phi2) = (AB, phi1(B tau) phi2(tau))`.
    pub fn compose(&self, rhs: &Self) -> Self {
        let a = self.a * rhs.a + self.b * rhs.c;
        let b = self.a * rhs.b + self.b * rhs.d;
        let c = self.c * rhs.a + self.d * rhs.c;
        let d = self.c * rhs.b + self.d * rhs.d;
        let value = self.phi(rhs.act(I)) * rhs.phi(I);
        Mp2Element { a, b, c, d, sign: Self::sign_of(c, d, value) }
    }

    pub fn inverse(&self) -> Self {
        let (a, b, c, d) = (self.d, -self.b, -self.c, self.a);
        let candidate = Mp2Element { a, b, c, d, sign: 1 };
        if self.compose(&candidate) == Self::identity() {
            candidate
        } else {
            Mp2Element { sign: -1, ..candidate }
        }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { *self };
        (0..k.unsigned_abs()).fold(Self::identity(), |acc, _| acc.compose(&base))
    }

    pub fn from_word(word: &[Letter]) -> Self {
        word.iter().fold(Self::identity(), |acc, &l| acc.compose(&Self::letter(l)))
    }

    /// Deterministic word in `S` and `T^k` equal to `self` in `Mp2(Z)`.
    ///
    /// Euclid on the bottom row: `T^{-k}` brings `a` into `[0, |c|)`, then
    /// `S^{-1}` swaps rows. The remainder is `T^m` times a central element,
    /// which is matched against `S^0, S^2, S^4, S^6`.
    pub fn word(&self) -> Vec<Letter> {
        let mut cur = *self;
        let mut word = Vec::new();
        let s_inv = Self::s().inverse();
        while cur.c != 0 {
            let r = cur.a.rem_euclid(cur.c.abs());
            let k = (cur.a - r) / cur.c;
            if k != 0 {
                cur = Self::t_pow(-k).compose(&cur);
                word.push(Letter::T(k));
            }
            cur = s_inv.compose(&cur);
            word.push(Letter::S);
        }
        // cur = (+-1, b; 0, +-1) = T^m * (+-I, branch)
        let m = cur.a * cur.b;
        if m != 0 {
            cur = Self::t_pow(-m).compose(&cur);
            word.push(Letter::T(m));
        }
        let s = Self::s();
        let central = (0..4).find(|&j| s.pow(2 * j) == cur).expect("remainder is central");
        for _ in 0..2 * central {
            word.push(Letter::S);
        }
        word
    }
}

impl fmt::Display for Mp2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign > 0 { "+" } else { "-" };
        write!(f, "(({},{};{},{}), {s}sqrt(c tau + d))", self.a, self.b, self.c, self.d)
    }
}
