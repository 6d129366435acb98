//! Integer Smith normal form with unimodular transforms.

/// Result of `P * A * Q = D` with `P`, `Q` unimodular and `D` diagonal,
/// `d_1 | d_2 | ...`, all `d_i >= 0`.
#[derive(Debug, Clone)]
pub struct Smith {
    pub diag: Vec<i128>,
    pub p: Vec<Vec<i128>>,
    pub p_inv: Vec<Vec<i128>>,
    pub q: Vec<Vec<i128>>,
}

fn identity(n: usize) -> Vec<Vec<i128>> {
    (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect()
}

/// Smith normal form of a square integer matrix.
pub fn smith_normal_form(a: &[Vec<i64>]) -> Smith {
    let n = a.len();
    let mut m: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut p = identity(n);
    let mut p_inv = identity(n);
    let mut q = identity(n);

    // row_i += f * row_t on m and p; p_inv column t -= f * column i
    let row_add = |m: &mut Vec<Vec<i128>>, p: &mut Vec<Vec<i128>>, p_inv: &mut Vec<Vec<i128>>, i: usize, t: usize, f: i128| {
        for c in 0..n {
            m[i][c] += f * m[t][c];
            p[i][c] += f * p[t][c];
        }
        for r in 0..n {
            p_inv[r][t] -= f * p_inv[r][i];
        }
    };
    let col_add = |m: &mut Vec<Vec<i128>>, q: &mut Vec<Vec<i128>>, j: usize, t: usize, f: i128| {
        for r in 0..n {
            m[r][j] += f * m[r][t];
            q[r][j] += f * q[r][t];
        }
    };

    for t in 0..n {
        loop {
            // smallest nonzero pivot in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..n {
                for j in t..n {
                    if m[i][j] != 0 && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                break;
            };
            if bi != t {
                m.swap(bi, t);
                p.swap(bi, t);
                for row in p_inv.iter_mut() {
                    row.swap(bi, t);
                }
            }
            if bj != t {
                for row in m.iter_mut() {
                    row.swap(bj, t);
                }
                for row in q.iter_mut() {
                    row.swap(bj, t);
                }
            }
            let piv = m[t][t];
            let mut dirty = false;
            for i in t + 1..n {
                if m[i][t] != 0 {
                    let f = m[i][t].div_euclid(piv);
                    row_add(&mut m, &mut p, &mut p_inv, i, t, -f);
                    dirty |= m[i][t] != 0;
                }
            }
            for j in t + 1..n {
                if m[t][j] != 0 {
                    let f = m[t][j].div_euclid(piv);
                    col_add(&mut m, &mut q, j, t, -f);
                    dirty |= m[t][j] != 0;
                }
            }
            if dirty {
                continue;
            }
            // divisibility: fold any offending row into row t
            let offender = (t + 1..n).find(|&i| (t + 1..n).any(|j| m[i][j] % piv != 0));
            match offender {
                Some(i) => row_add(&mut m, &mut p, &mut p_inv, t, i, 1),
                None => break,
            }
        }
        if m[t][t] < 0 {
            for c in 0..n {
                m[t][c] = -m[t][c];
                p[t][c] = -p[t][c];
            }
            for row in p_inv.iter_mut() {
                row[t] = -row[t];
            }
        }
    }
    Smith { diag: (0..n).map(|i| m[i][i]).collect(), p, p_inv, q }
}
