use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::lattice::EvenLattice;
use super::snf::smith_normal_form;
use crate::error::{Error, Result};
use crate::exactmath::{linalg, Rational};

/// The finite quadratic module `M^v / M` of an even lattice.
///
/// Cosets are indexed `0..order()`, index 0 being the trivial class. They are
/// listed in lexicographic order of their coordinates with respect to the
/// Smith basis, so for a cyclic group of order 3 the labels are
/// `[0, g, 2g]` with `2g = -g`.
#[derive(Debug, Clone)]
pub struct DiscriminantForm {
    gram: Vec<Vec<i64>>,
    signature: (usize, usize),
    invariants: Vec<u64>,
    elements: Vec<Vec<u64>>,
    /// `y` with representative `x = G^{-1} y` in lattice coordinates.
    dual_coords: Vec<Vec<i64>>,
    reps: Vec<Vec<Rational>>,
    qvalues: Vec<Rational>,
    bvalues: Vec<Vec<Rational>>,
    add: Vec<Vec<usize>>,
    neg: Vec<usize>,
    /// Rows of `P` for the nontrivial invariants: class coordinates of `y`.
    classifier: Vec<Vec<i128>>,
}

fn frac(x: &Rational) -> Rational {
    x - x.floor()
}

impl DiscriminantForm {
    pub fn new(lat: &EvenLattice) -> Result<Self> {
        let g = lat.gram();
        let n = lat.rank();
        if lat.determinant().is_zero() {
            return Err(Error::invalid("degenerate lattice"));
        }
        let smith = smith_normal_form(g);
        let nontrivial: Vec<usize> = (0..n).filter(|&i| smith.diag[i] > 1).collect();
        let invariants: Vec<u64> = nontrivial.iter().map(|&i| smith.diag[i] as u64).collect();
        let classifier: Vec<Vec<i128>> = nontrivial.iter().map(|&i| smith.p[i].clone()).collect();
        let generators: Vec<Vec<i128>> =
            nontrivial.iter().map(|&i| (0..n).map(|r| smith.p_inv[r][i]).collect()).collect();

        let gram_q: Vec<Vec<Rational>> =
            g.iter().map(|r| r.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect()).collect();
        let gram_inv = inverse(&gram_q)?;

        let order: u64 = invariants.iter().product();
        let mut elements = Vec::with_capacity(order as usize);
        for mut k in 0..order {
            let mut a = vec![0u64; invariants.len()];
            for (slot, &d) in a.iter_mut().zip(&invariants).rev() {
                *slot = k % d;
                k /= d;
            }
            elements.push(a);
        }

        let dual_coords: Vec<Vec<i64>> = elements
            .iter()
            .map(|a| {
                (0..n)
                    .map(|r| a.iter().zip(&generators).map(|(&ai, gen)| ai as i128 * gen[r]).sum::<i128>() as i64)
                    .collect()
            })
            .collect();
        let reps: Vec<Vec<Rational>> = dual_coords
            .iter()
            .map(|y| {
                gram_inv
                    .iter()
                    .map(|row| row.iter().zip(y).map(|(c, &yi)| c * Rational::from_integer(BigInt::from(yi))).sum())
                    .collect()
            })
            .collect();
        let pair = |y1: &[i64], x2: &[Rational]| -> Rational {
            // <x1, x2> = y1 . x2 since x1 = G^{-1} y1
            y1.iter().zip(x2).map(|(&a, b)| Rational::from_integer(BigInt::from(a)) * b).sum()
        };
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        let qvalues: Vec<Rational> =
            dual_coords.iter().zip(&reps).map(|(y, x)| frac(&(pair(y, x) * &half))).collect();
        let bvalues: Vec<Vec<Rational>> =
            dual_coords.iter().map(|y| reps.iter().map(|x| frac(&pair(y, x))).collect()).collect();

        let index_of = |a: &[u64]| -> usize {
            a.iter().zip(&invariants).fold(0u64, |acc, (&ai, &d)| acc * d + ai) as usize
        };
        let add: Vec<Vec<usize>> = elements
            .iter()
            .map(|a| {
                elements
                    .iter()
                    .map(|b| {
                        let s: Vec<u64> = a.iter().zip(b).zip(&invariants).map(|((x, y), d)| (x + y) % d).collect();
                        index_of(&s)
                    })
                    .collect()
            })
            .collect();
        let neg: Vec<usize> = elements
            .iter()
            .map(|a| {
                let s: Vec<u64> = a.iter().zip(&invariants).map(|(x, d)| (d - x) % d).collect();
                index_of(&s)
            })
            .collect();

        Ok(DiscriminantForm {
            gram: g.to_vec(),
            signature: lat.signature(),
            invariants,
            elements,
            dual_coords,
            reps,
            qvalues,
            bvalues,
            add,
            neg,
            classifier,
        })
    }

    /// Gram matrix of the underlying lattice.
    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn signature(&self) -> (usize, usize) {
        self.signature
    }

    /// `b+ - b-`.
    pub fn signature_index(&self) -> i64 {
        self.signature.0 as i64 - self.signature.1 as i64
    }

    /// Invariant factors `d_i > 1` of the group.
    pub fn invariants(&self) -> &[u64] {
        &self.invariants
    }

    /// Coordinates of coset `i` in the Smith basis, `0 <= a_j < d_j`.
    pub fn coordinates(&self, i: usize) -> &[u64] {
        &self.elements[i]
    }

    /// Representative of coset `i` in `M^v`, in lattice coordinates.
    pub fn representative(&self, i: usize) -> &[Rational] {
        &self.reps[i]
    }

    /// `y = G x` for the representative `x` of coset `i`.
    pub fn dual_coordinates(&self, i: usize) -> &[i64] {
        &self.dual_coords[i]
    }

    /// `<gamma, gamma>/2 mod 1` in `[0, 1)`.
    pub fn qvalue(&self, i: usize) -> &Rational {
        &self.qvalues[i]
    }

    pub fn qvalues(&self) -> &[Rational] {
        &self.qvalues
    }

    /// `<gamma, delta> mod 1` in `[0, 1)`.
    pub fn bvalue(&self, i: usize, j: usize) -> &Rational {
        &self.bvalues[i][j]
    }

    pub fn add(&self, i: usize, j: usize) -> usize {
        self.add[i][j]
    }

    pub fn neg(&self, i: usize) -> usize {
        self.neg[i]
    }

    /// `k * gamma_i` for any integer `k`.
    pub fn mul(&self, k: i64, i: usize) -> usize {
        let a: Vec<u64> = self
            .elements[i]
            .iter()
            .zip(&self.invariants)
            .map(|(&x, &d)| (k.rem_euclid(d as i64) as u64 * x) % d)
            .collect();
        self.index_of(&a)
    }

    fn index_of(&self, a: &[u64]) -> usize {
        a.iter().zip(&self.invariants).fold(0u64, |acc, (&ai, &d)| acc * d + ai) as usize
    }

    /// Coset of the dual vector `G^{-1} y` for integral `y`.
    pub fn class_of_dual(&self, y: &[i64]) -> usize {
        let a: Vec<u64> = self
            .classifier
            .iter()
            .zip(&self.invariants)
            .map(|(row, &d)| {
                let v: i128 = row.iter().zip(y).map(|(&p, &yi)| p * yi as i128).sum();
                v.rem_euclid(d as i128) as u64
            })
            .collect();
        self.index_of(&a)
    }

    /// Smallest `N` with `N * q(gamma)` integral for all cosets.
    pub fn level(&self) -> u64 {
        self.qvalues.iter().fold(1u64, |acc, q| {
            let d = u64::try_from(q.denom()).expect("small denominator");
            acc.lcm(&d)
        })
    }

    /// Order of coset `i` in the group (`min b >= 1` with `b gamma in M`).
    pub fn element_order(&self, i: usize) -> u64 {
        self.elements[i]
            .iter()
            .zip(&self.invariants)
            .fold(1u64, |acc, (&x, &d)| acc.lcm(&(d / x.gcd(&d))))
    }
}

fn inverse(m: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let e: Vec<Rational> = (0..n).map(|i| if i == j { Rational::one() } else { Rational::zero() }).collect();
        cols.push(linalg::solve(m, &e)?);
    }
    Ok((0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect())
}
