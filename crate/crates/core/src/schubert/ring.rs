use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

/// A finite graded intersection ring with an integral basis, given by its
/// structure constants. Products are truncated above the top degree by
/// construction (there are no basis classes there).
#[derive(Debug)]
pub struct IntersectionRing {
    name: &'static str,
    labels: Vec<String>,
    grading: Vec<usize>,
    /// `table[i][j]` = nonzero `(k, c)` with `b_i b_j = sum c b_k`.
    table: Vec<Vec<Vec<(usize, i128)>>>,
    dim: usize,
    point: usize,
}

impl IntersectionRing {
    pub fn name(&self) -> &str {
        self.name
    }

    /// Complex dimension of the variety (top degree).
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn grading(&self, i: usize) -> usize {
        self.grading[i]
    }

    /// Index of the class of a point.
    pub fn point_class(&self) -> usize {
        self.point
    }

    /// `H^0, ..., H^5` on `P^5`.
    pub fn p5() -> &'static IntersectionRing {
        static RING: OnceLock<IntersectionRing> = OnceLock::new();
        RING.get_or_init(|| projective_space(5))
    }

    /// Schubert classes of `Gr(3,6)`, indexed by partitions in the 3x3 box.
    pub fn gr36() -> &'static IntersectionRing {
        static RING: OnceLock<IntersectionRing> = OnceLock::new();
        RING.get_or_init(|| grassmannian(3, 3))
    }

    /// Index of the Schubert class `sigma_lambda` (trailing zeros optional).
    pub fn schubert_index(&self, lambda: &[u8]) -> Option<usize> {
        let label = partition_label(lambda);
        self.labels.iter().position(|l| *l == label)
    }
}

fn projective_space(n: usize) -> IntersectionRing {
    let labels = (0..=n).map(|i| format!("H^{i}")).collect();
    let table = (0..=n)
        .map(|i| (0..=n).map(|j| if i + j <= n { vec![(i + j, 1)] } else { vec![] }).collect())
        .collect();
    IntersectionRing { name: "P^5", labels, grading: (0..=n).collect(), table, dim: n, point: n }
}

/// Partitions with at most `rows` parts, each at most `cols`, graded then
/// reverse-lexicographic (so `sigma_1` precedes `sigma_{1,1}`... by size).
pub fn box_partitions(rows: usize, cols: u8) -> Vec<Vec<u8>> {
    fn rec(rows: usize, max: u8, prefix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if prefix.len() == rows {
            out.push(prefix.clone());
            return;
        }
        for p in (0..=max).rev() {
            prefix.push(p);
            rec(rows, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(rows, cols, &mut Vec::new(), &mut out);
    out.sort_by_key(|p| p.iter().map(|&x| x as usize).sum::<usize>());
    out
}

fn partition_label(lambda: &[u8]) -> String {
    let parts: Vec<String> = lambda.iter().filter(|&&x| x > 0).map(|x| x.to_string()).collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        format!("s{}", parts.join(","))
    }
}

/// Littlewood–Richardson coefficient `c^nu_{lambda, mu}`: the number of
/// semistandard fillings of `nu / lambda` with content `mu` whose reading
/// word (rows top to bottom, each right to left) is a lattice word.
pub fn lr_coefficient(lambda: &[u8], mu: &[u8], nu: &[u8]) -> u64 {
    let rows = nu.len().max(lambda.len()).max(mu.len());
    let at = |p: &[u8], i: usize| p.get(i).copied().unwrap_or(0) as usize;
    if (0..rows).any(|i| at(lambda, i) > at(nu, i)) {
        return 0;
    }
    let size = |p: &[u8]| p.iter().map(|&x| x as usize).sum::<usize>();
    if size(nu) != size(lambda) + size(mu) {
        return 0;
    }
    // cells of the skew shape in reading order
    let cells: Vec<(usize, usize)> =
        (0..rows).flat_map(|i| (at(lambda, i)..at(nu, i)).rev().map(move |j| (i, j))).collect();
    let content: Vec<usize> = (0..rows).map(|i| at(mu, i)).collect();
    let mut filling = vec![vec![0usize; at(nu, 0).max(1)]; rows];
    let mut used = vec![0usize; rows];

    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        lambda_row: &dyn Fn(usize) -> usize,
        nu_row: &dyn Fn(usize) -> usize,
        content: &[usize],
        used: &mut [usize],
        filling: &mut [Vec<usize>],
    ) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (i, j) = cells[k];
        let mut total = 0;
        for v in 0..content.len() {
            if used[v] == content[v] {
                continue;
            }
            // lattice condition on the word read so far
            if v > 0 && used[v] + 1 > used[v - 1] {
                continue;
            }
            // rows weakly increase to the right
            if j + 1 < nu_row(i) && filling[i][j + 1] < v {
                continue;
            }
            // columns strictly increase downwards
            if i > 0 && j >= lambda_row(i - 1) && filling[i - 1][j] >= v {
                continue;
            }
            filling[i][j] = v;
            used[v] += 1;
            total += rec(k + 1, cells, lambda_row, nu_row, content, used, filling);
            used[v] -= 1;
        }
        total
    }
    let lambda_row = |i: usize| at(lambda, i);
    let nu_row = |i: usize| at(nu, i);
    rec(0, &cells, &lambda_row, &nu_row, &content, &mut used, &mut filling)
}

fn grassmannian(rows: usize, cols: u8) -> IntersectionRing {
    let parts = box_partitions(rows, cols);
    let size = |p: &[u8]| p.iter().map(|&x| x as usize).sum::<usize>();
    let table = parts
        .iter()
        .map(|l| {
            parts
                .iter()
                .map(|m| {
                    parts
                        .iter()
                        .enumerate()
                        .filter(|(_, n)| size(n) == size(l) + size(m))
                        .filter_map(|(k, n)| match lr_coefficient(l, m, n) {
                            0 => None,
                            c => Some((k, c as i128)),
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let point = parts.len() - 1;
    IntersectionRing {
        name: "Gr(3,6)",
        labels: parts.iter().map(|p| partition_label(p)).collect(),
        grading: parts.iter().map(|p| size(p)).collect(),
        table,
        dim: rows * cols as usize,
        point,
    }
}

/// Element of an [`IntersectionRing`] with integer coordinates.
#[derive(Clone)]
pub struct RingClass {
    ring: &'static IntersectionRing,
    coeffs: Vec<i128>,
}

impl RingClass {
    pub fn zero(ring: &'static IntersectionRing) -> Self {
        RingClass { ring, coeffs: vec![0; ring.rank()] }
    }

    pub fn one(ring: &'static IntersectionRing) -> Self {
        Self::basis(ring, 0)
    }

    pub fn basis(ring: &'static IntersectionRing, i: usize) -> Self {
        let mut c = Self::zero(ring);
        c.coeffs[i] = 1;
        c
    }

    pub fn integer(ring: &'static IntersectionRing, n: i128) -> Self {
        Self::one(ring).scale(n)
    }

    /// `sigma_lambda` on `Gr(3,6)`; panics on partitions outside the box.
    pub fn schubert(lambda: &[u8]) -> Self {
        let ring = IntersectionRing::gr36();
        Self::basis(ring, ring.schubert_index(lambda).expect("partition in the 3x3 box"))
    }

    /// `H^i` on `P^5`.
    pub fn hyperplane_power(i: usize) -> Self {
        let ring = IntersectionRing::p5();
        if i > ring.dim() {
            Self::zero(ring)
        } else {
            Self::basis(ring, i)
        }
    }

    pub fn ring(&self) -> &'static IntersectionRing {
        self.ring
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> i128 {
        self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Coefficient of the point class.
    pub fn degree(&self) -> i128 {
        self.coeffs[self.ring.point_class()]
    }

    /// Component of degree `d`.
    pub fn graded_part(&self, d: usize) -> Self {
        let mut out = Self::zero(self.ring);
        for (i, &c) in self.coeffs.iter().enumerate() {
            if self.ring.grading(i) == d {
                out.coeffs[i] = c;
            }
        }
        out
    }

    pub fn scale(&self, s: i128) -> Self {
        RingClass { ring: self.ring, coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.ring), |acc, _| &acc * self)
    }

    fn same_ring(&self, other: &Self) {
        assert!(std::ptr::eq(self.ring, other.ring), "classes live in different rings");
    }
}

impl PartialEq for RingClass {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.ring, other.ring) && self.coeffs == other.coeffs
    }
}

impl Eq for RingClass {}

impl Add for &RingClass {
    type Output = RingClass;
    fn add(self, rhs: &RingClass) -> RingClass {
        self.same_ring(rhs);
        RingClass { ring: self.ring, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &RingClass {
    type Output = RingClass;
    fn sub(self, rhs: &RingClass) -> RingClass {
        self + &(-rhs)
    }
}

impl Neg for &RingClass {
    type Output = RingClass;
    fn neg(self) -> RingClass {
        self.scale(-1)
    }
}

impl Mul for &RingClass {
    type Output = RingClass;
    fn mul(self, rhs: &RingClass) -> RingClass {
        self.same_ring(rhs);
        let mut out = RingClass::zero(self.ring);
        for (i, &a) in self.coeffs.iter().enumerate().filter(|(_, &a)| a != 0) {
            for (j, &b) in rhs.coeffs.iter().enumerate().filter(|(_, &b)| b != 0) {
                for &(k, c) in &self.ring.table[i][j] {
                    out.coeffs[k] += a * b * c;
                }
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RingClass {
            type Output = RingClass;
            fn $m(self, rhs: RingClass) -> RingClass {
                (&self).$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl fmt::Display for RingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, c)| format!("{c}*{}", self.ring.label(i)))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl fmt::Debug for RingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.ring.name(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twenty_classes() {
        let r = IntersectionRing::gr36();
        assert_eq!(r.rank(), 20);
        assert_eq!(r.dim(), 9);
        assert_eq!(r.label(r.point_class()), "s3,3,3");
    }

    #[test]
    fn pieri_square() {
        let s1 = RingClass::schubert(&[1]);
        assert_eq!(&s1 * &s1, &RingClass::schubert(&[2]) + &RingClass::schubert(&[1, 1]));
        let one = RingClass::one(IntersectionRing::gr36());
        assert_eq!(&one * &s1, s1);
    }

    #[test]
    fn plucker_degree() {
        let s1 = RingClass::schubert(&[1]);
        assert_eq!(s1.pow(9), RingClass::schubert(&[3, 3, 3]).scale(42));
    }

    #[test]
    fn known_lr_coefficient() {
        // s21 * s21 contains s321 with multiplicity 2
        assert_eq!(lr_coefficient(&[2, 1], &[2, 1], &[3, 2, 1]), 2);
        assert_eq!(lr_coefficient(&[1], &[1], &[2]), 1);
        assert_eq!(lr_coefficient(&[1], &[1], &[3]), 0);
    }

    #[test]
    fn p5_truncates() {
        let h = RingClass::hyperplane_power(1);
        assert_eq!(h.pow(5).degree(), 1);
        assert!(h.pow(6).is_zero());
    }
}
