//! Dense exact linear algebra over the rationals.

use num_traits::{One, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Row-reduces `rows` in place to reduced echelon form and returns the pivot
/// columns. Only the first `ncols` columns are used for pivoting.
fn rref(rows: &mut [Vec<Rational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational::one() / &rows[r][c];
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * y;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of a rational matrix given by rows.
pub fn rank(matrix: &[Vec<Rational>]) -> usize {
    if matrix.is_empty() {
        return 0;
    }
    let ncols = matrix[0].len();
    let mut rows = matrix.to_vec();
    rref(&mut rows, ncols).len()
}

/// Solves `matrix * x = rhs` exactly, where `matrix` has at least as many
/// rows as columns. Rank deficiency and inconsistency are reported as
/// distinct errors; there is no least-squares fallback.
pub fn solve(matrix: &[Vec<Rational>], rhs: &[Rational]) -> Result<Vec<Rational>> {
    if matrix.len() != rhs.len() {
        return Err(Error::invalid("row count does not match right-hand side"));
    }
    let ncols = matrix.first().map_or(0, Vec::len);
    let mut rows: Vec<Vec<Rational>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut rows, ncols);
    // a pivot in the augmented column means 0 = nonzero
    if rows.iter().skip(pivots.len()).any(|r| !r[ncols].is_zero()) {
        return Err(Error::Inconsistent);
    }
    if pivots.len() < ncols {
        return Err(Error::Singular { rank: pivots.len(), unknowns: ncols });
    }
    Ok((0..ncols).map(|i| rows[i][ncols].clone()).collect())
}
