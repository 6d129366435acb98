use std::ops::Mul;

use num_complex::Complex64;

use crate::exactmath::Cyclotomic;

/// Square matrix over a cyclotomic field. Column `j` is the image of the
/// basis vector `v_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycMatrix {
    n: usize,
    entries: Vec<Cyclotomic>,
}

impl CycMatrix {
    pub fn zero(order: u32, n: usize) -> Self {
        CycMatrix { n, entries: vec![Cyclotomic::zero(order); n * n] }
    }

    pub fn identity(order: u32, n: usize) -> Self {
        let mut m = Self::zero(order, n);
        for i in 0..n {
            m.entries[i * n + i] = Cyclotomic::one(order);
        }
        m
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> Cyclotomic) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        CycMatrix { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> &Cyclotomic {
        &self.entries[row * self.n + col]
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        CycMatrix { n: self.n, entries: self.entries.iter().map(Cyclotomic::conj).collect() }
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).conj())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let order = self.entries[0].order();
        let mut acc = Self::identity(order, self.n);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn to_complex(&self) -> Vec<Vec<Complex64>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j).to_complex()).collect()).collect()
    }
}

impl Mul for &CycMatrix {
    type Output = CycMatrix;
    fn mul(self, rhs: &CycMatrix) -> CycMatrix {
        assert_eq!(self.n, rhs.n);
        let order = self.entries[0].order();
        let n = self.n;
        CycMatrix::from_fn(n, |i, j| {
            (0..n).fold(Cyclotomic::zero(order), |acc, k| {
                let a = self.get(i, k);
                let b = rhs.get(k, j);
                if a.is_zero() || b.is_zero() {
                    acc
                } else {
                    acc + a * b
                }
            })
        })
    }
}
