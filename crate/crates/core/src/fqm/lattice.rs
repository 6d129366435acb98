use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::Rational;

/// An even nondegenerate integral lattice given by its Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenLattice {
    gram: Vec<Vec<i64>>,
    signature: (usize, usize),
}

impl EvenLattice {
    pub fn new(gram: Vec<Vec<i64>>) -> Result<Self> {
        let n = gram.len();
        if gram.iter().any(|r| r.len() != n) {
            return Err(Error::invalid("gram matrix must be square"));
        }
        for i in 0..n {
            if gram[i][i] % 2 != 0 {
                return Err(Error::invalid(format!("odd diagonal entry at {i}: lattice is not even")));
            }
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::invalid("gram matrix must be symmetric"));
                }
            }
        }
        let signature = signature_of(&gram).ok_or_else(|| Error::invalid("degenerate gram matrix"))?;
        Ok(EvenLattice { gram, signature })
    }

    /// `W = [[2,1],[1,2]]`, the `A2` root lattice.
    pub fn w() -> Self {
        Self::new(vec![vec![2, 1], vec![1, 2]]).expect("W is even and nondegenerate")
    }

    /// The hyperbolic plane `U`.
    pub fn u() -> Self {
        Self::new(vec![vec![0, 1], vec![1, 0]]).expect("U is even and nondegenerate")
    }

    /// `E8` via its Cartan matrix (Bourbaki labeling).
    pub fn e8() -> Self {
        let mut g = vec![vec![0i64; 8]; 8];
        let edges = [(0, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)];
        for (i, row) in g.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(i, j) in &edges {
            g[i][j] = -1;
            g[j][i] = -1;
        }
        Self::new(g).expect("E8 is even and nondegenerate")
    }

    /// `W' = -W`.
    pub fn w_prime() -> Self {
        Self::w().negated()
    }

    /// `Lambda_0 = W + U^2 + E8^2`, signature `(20, 2)` before negation.
    pub fn lambda0() -> Self {
        Self::direct_sum(&[Self::w(), Self::u(), Self::u(), Self::e8(), Self::e8()])
    }

    /// `Lambda_0' = -Lambda_0`, of signature `(2, 20)`.
    pub fn lambda0_prime() -> Self {
        Self::lambda0().negated()
    }

    pub fn negated(&self) -> Self {
        EvenLattice {
            gram: self.gram.iter().map(|r| r.iter().map(|x| -x).collect()).collect(),
            signature: (self.signature.1, self.signature.0),
        }
    }

    pub fn direct_sum(parts: &[EvenLattice]) -> Self {
        let n: usize = parts.iter().map(EvenLattice::rank).sum();
        let mut gram = vec![vec![0i64; n]; n];
        let mut off = 0;
        let (mut bp, mut bm) = (0, 0);
        for p in parts {
            for (i, row) in p.gram.iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    gram[off + i][off + j] = x;
                }
            }
            off += p.rank();
            bp += p.signature.0;
            bm += p.signature.1;
        }
        EvenLattice { gram, signature: (bp, bm) }
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    /// `(b+, b-)`.
    pub fn signature(&self) -> (usize, usize) {
        self.signature
    }

    /// `b+ - b-`.
    pub fn signature_index(&self) -> i64 {
        self.signature.0 as i64 - self.signature.1 as i64
    }

    pub fn determinant(&self) -> BigInt {
        let n = self.rank();
        let mut m: Vec<Vec<Rational>> = self
            .gram
            .iter()
            .map(|r| r.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect())
            .collect();
        let mut det = Rational::from_integer(BigInt::from(1));
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
                return BigInt::zero();
            };
            if p != c {
                m.swap(p, c);
                det = -det;
            }
            det *= &m[c][c];
            for i in c + 1..n {
                if m[i][c].is_zero() {
                    continue;
                }
                let f = &m[i][c] / &m[c][c];
                for j in c..n {
                    let v = &f * &m[c][j];
                    m[i][j] -= v;
                }
            }
        }
        det.to_integer()
    }
}

/// Sylvester inertia by congruence diagonalization over `Q`; `None` if
/// degenerate.
fn signature_of(gram: &[Vec<i64>]) -> Option<(usize, usize)> {
    let n = gram.len();
    let mut a: Vec<Vec<Rational>> =
        gram.iter().map(|r| r.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect()).collect();
    let (mut pos, mut neg) = (0, 0);
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(k, j);
                for row in a.iter_mut() {
                    row.swap(k, j);
                }
            } else {
                let j = (k + 1..n).find(|&j| !a[k][j].is_zero())?;
                // e_k <- e_k + e_j gives a_kk = 2 a_kj (a_jj = 0)
                for c in 0..n {
                    let v = a[j][c].clone();
                    a[k][c] += v;
                }
                for r in 0..n {
                    let v = a[r][j].clone();
                    a[r][k] += v;
                }
            }
        }
        let p = a[k][k].clone();
        if p.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &p;
            for j in k..n {
                let v = &f * &a[k][j];
                a[i][j] -= v;
            }
            for r in k..n {
                let v = &f * &a[r][k];
                a[r][i] -= v;
            }
        }
    }
    Some((pos, neg))
}
