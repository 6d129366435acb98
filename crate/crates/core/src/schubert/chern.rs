use std::fmt;

use num_bigint::BigInt;

use super::poly::{reduction_polynomial, sym3_chern_polynomial, Poly};
use super::ring::{IntersectionRing, RingClass};
use crate::error::{Error, Result};

/// Total Chern class `1 + c1 + c2 + ...` with values in an intersection ring.
#[derive(Clone, PartialEq, Eq)]
pub struct ChernSeries {
    total: RingClass,
}

impl ChernSeries {
    /// Requires degree-0 part equal to 1.
    pub fn new(total: RingClass) -> Result<Self> {
        if total.graded_part(0) != RingClass::one(total.ring()) {
            return Err(Error::invalid("Chern series must start with 1"));
        }
        Ok(ChernSeries { total })
    }

    /// From homogeneous pieces `c1, c2, ...`.
    pub fn from_classes(ring: &'static IntersectionRing, classes: &[RingClass]) -> Result<Self> {
        let mut total = RingClass::one(ring);
        for (i, c) in classes.iter().enumerate() {
            if c.graded_part(i + 1) != *c {
                return Err(Error::invalid(format!("c{} is not homogeneous of degree {}", i + 1, i + 1)));
            }
            total = &total + c;
        }
        Self::new(total)
    }

    pub fn trivial(ring: &'static IntersectionRing) -> Self {
        ChernSeries { total: RingClass::one(ring) }
    }

    pub fn ring(&self) -> &'static IntersectionRing {
        self.total.ring()
    }

    pub fn total(&self) -> &RingClass {
        &self.total
    }

    /// `c_i`; zero above the base dimension.
    pub fn c(&self, i: usize) -> RingClass {
        self.total.graded_part(i)
    }

    /// `c1, ..., c_dim`.
    pub fn classes(&self) -> Vec<RingClass> {
        (1..=self.ring().dim()).map(|i| self.c(i)).collect()
    }

    pub fn multiply(&self, other: &Self) -> Self {
        ChernSeries { total: &self.total * &other.total }
    }
}

impl fmt::Debug for ChernSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c({:?})", self.total)
    }
}

/// Multiplication in the Schubert basis of `Gr(3,6)`.
pub fn lr_multiply(x: &RingClass, y: &RingClass) -> RingClass {
    x * y
}

/// Chern series of `J^1(O(3))` on `P^5`, expanded from
/// `(1+3H) * sum_i (1+3H)^(5-i) C(6,i) (-H)^i`.
pub fn chern_jet() -> ChernSeries {
    let ring = IntersectionRing::p5();
    let h = RingClass::hyperplane_power(1);
    let one = RingClass::one(ring);
    let a = &one + &h.scale(3);
    let mut sum = RingClass::zero(ring);
    for i in 0..=5u32 {
        let binom = [1, 6, 15, 20, 15, 6, 1][i as usize];
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let term = &a.pow(5 - i) * &h.pow(i).scale(binom * sign);
        sum = &sum + &term;
    }
    ChernSeries::new(&a * &sum).expect("constant term is 1")
}

/// Multiplicative inverse, by `c'_n = -sum_{i=1..n} c_i c'_{n-i}`.
pub fn chern_invert(c: &ChernSeries) -> ChernSeries {
    let ring = c.ring();
    let mut inv = vec![RingClass::one(ring)];
    for n in 1..=ring.dim() {
        let mut acc = RingClass::zero(ring);
        for i in 1..=n {
            acc = &acc + &(&c.c(i) * &inv[n - i]);
        }
        inv.push(-&acc);
    }
    let total = inv.iter().fold(RingClass::zero(ring), |a, b| &a + b);
    ChernSeries { total }
}

/// `c(Sym^3 E)` for a rank-3 bundle in its Chern classes `e1, e2, e3`,
/// through degree 9.
pub fn sym3_universal() -> Poly<3> {
    sym3_chern_polynomial(9)
}

/// `c(Sym^3 S^*)` on `Gr(3,6)`, using `c(S^*) = 1 + s1 + s11 + s111`.
pub fn chern_sym3_dual_tautological() -> ChernSeries {
    let values = [
        RingClass::schubert(&[1]),
        RingClass::schubert(&[1, 1]),
        RingClass::schubert(&[1, 1, 1]),
    ];
    ChernSeries::new(sym3_universal().evaluate(&values)).expect("constant term is 1")
}

/// Degree of `xi^power` on the projectivisation of a rank-`rank` bundle with
/// Chern series `c_k`, reducing with `xi^rank = -(c1 xi^(rank-1) + ...)`.
pub fn proj_bundle_power(c_k: &ChernSeries, rank: u32, power: u32) -> Result<BigInt> {
    if rank == 0 || power + 1 < rank {
        return Err(Error::invalid(format!("power {power} is below rank - 1 = {}", rank as i64 - 1)));
    }
    let ring = c_k.ring();
    let r = rank as usize;
    // coefficients of xi^0 .. xi^(r-1); start from xi^(r-1)
    let mut v = vec![RingClass::zero(ring); r];
    v[r - 1] = RingClass::one(ring);
    for _ in 0..(power + 1 - rank) {
        // multiply by xi: shift up, the overflowing xi^r is rewritten
        let top = v[r - 1].clone();
        for j in (1..r).rev() {
            v[j] = v[j - 1].clone();
        }
        v[0] = RingClass::zero(ring);
        if top.is_zero() {
            continue;
        }
        for i in 1..=r.min(ring.dim()) {
            v[r - i] = &v[r - i] - &(&c_k.c(i) * &top);
        }
    }
    Ok(BigInt::from(v[r - 1].degree()))
}

/// Degree of the top-dimensional part of the Chern series of the complement
/// (which is the Segre series of the bundle itself).
pub fn segre_degree(c_complement: &ChernSeries) -> BigInt {
    BigInt::from(c_complement.c(c_complement.ring().dim()).degree())
}

/// Evaluates the closed reduction polynomial for `xi^(r-1+k)` on the given
/// Chern series.
pub fn reduction_degree(c_k: &ChernSeries, k: u32) -> BigInt {
    evaluate_in_c(&reduction_polynomial(k), c_k)
}

/// Degree of a polynomial in `c1..c9` evaluated on `c`.
pub fn evaluate_in_c(p: &Poly<9>, c: &ChernSeries) -> BigInt {
    let values: [RingClass; 9] = std::array::from_fn(|i| c.c(i + 1));
    BigInt::from(p.evaluate(&values).degree())
}

/// `c(K)` for `0 -> K -> Sym^3(V^*) -> J^1(O(3)) -> 0` on `P^5`.
pub fn kernel_p5() -> ChernSeries {
    chern_invert(&chern_jet())
}

/// `c(K')` for `0 -> K' -> Sym^3(V^* x O) -> Sym^3 S^* -> 0` on `Gr(3,6)`.
pub fn kernel_gr36() -> ChernSeries {
    chern_invert(&chern_sym3_dual_tautological())
}

/// `deg C_6` over `P^5` (rank-50 kernel) and `deg C_8` over `Gr(3,6)`
/// (rank-46 kernel), both as `xi^54`.
pub fn divisor_degree_projective(d: u64) -> Result<BigInt> {
    match d {
        6 => proj_bundle_power(&kernel_p5(), 50, 54),
        8 => proj_bundle_power(&kernel_gr36(), 46, 54),
        _ => Err(Error::invalid(format!("no Schubert computation for d = {d}"))),
    }
}

/// Same degrees through the Segre series.
pub fn divisor_degree_segre(d: u64) -> Result<BigInt> {
    match d {
        6 => Ok(segre_degree(&chern_jet())),
        8 => Ok(segre_degree(&chern_sym3_dual_tautological())),
        _ => Err(Error::invalid(format!("no Schubert computation for d = {d}"))),
    }
}
