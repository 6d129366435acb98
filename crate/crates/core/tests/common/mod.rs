//! Reference Chern classes and reduction polynomials shared by the Schubert tests and the acceptance run.
#![allow(dead_code)]

use heegner_core::schubert::Poly;

pub const W3: [u32; 3] = [1, 2, 3];
pub const W9: [u32; 9] = [1, 2, 3, 4, 5, 6, 7, 8, 9];

// reference c_i(K') on Gr(3,6), monomials s1^a s11^b s111^c
#[rustfmt::skip]
pub const KPRIME: [&[(i128, [u32; 3])]; 9] = [
    &[(-10, [1, 0, 0])],
    &[(60, [2, 0, 0]), (-15, [0, 1, 0])],
    &[(-282, [3, 0, 0]), (189, [1, 1, 0]), (-27, [0, 0, 1])],
    &[(1149, [4, 0, 0]), (-1395, [2, 1, 0]), (351, [1, 0, 1]), (162, [0, 2, 0])],
    &[(-4272, [5, 0, 0]), (7911, [3, 1, 0]), (-2673, [2, 0, 1]), (-2484, [1, 2, 0]), (648, [0, 1, 1])],
    &[(14932, [6, 0, 0]), (-38268, [4, 1, 0]), (15629, [3, 0, 1]), (21898, [2, 2, 0]),
      (-10188, [1, 1, 1]), (-1570, [0, 3, 0]), (702, [0, 0, 2])],
    &[(-49996, [7, 0, 0]), (166590, [5, 1, 0]), (-77858, [4, 0, 1]), (-146032, [3, 2, 0]),
      (92052, [2, 1, 1]), (28522, [1, 3, 0]), (-11232, [1, 0, 2]), (-10206, [0, 2, 1])],
    &[(162369, [8, 0, 0]), (-673530, [6, 1, 0]), (348538, [5, 0, 1]), (819728, [4, 2, 0]),
      (-628656, [3, 1, 1]), (-293408, [2, 3, 0]), (103302, [2, 0, 2]), (189162, [1, 2, 1]),
      (14583, [0, 4, 0]), (-23490, [0, 1, 2])],
    &[(-515886, [9, 0, 0]), (2580498, [7, 1, 0]), (-1446718, [6, 0, 1]), (-4093280, [5, 2, 0]),
      (3609936, [4, 1, 1]), (2253992, [3, 3, 0]), (-717984, [3, 0, 2]), (-1983960, [2, 2, 1]),
      (-307242, [1, 4, 0]), (441774, [1, 1, 2]), (134244, [0, 3, 1]), (-18954, [0, 0, 3])],
];

fn cmono(exps: &[(usize, u32)]) -> [u32; 9] {
    let mut e = [0; 9];
    for &(i, n) in exps {
        e[i - 1] = n;
    }
    e
}

pub fn xi54_p5() -> Poly<9> {
    let t: Vec<(i128, [u32; 9])> = vec![
        (-1, cmono(&[(1, 5)])),
        (4, cmono(&[(1, 3), (2, 1)])),
        (-3, cmono(&[(1, 1), (2, 2)])),
        (-3, cmono(&[(1, 2), (3, 1)])),
        (2, cmono(&[(2, 1), (3, 1)])),
        (2, cmono(&[(1, 1), (4, 1)])),
        (-1, cmono(&[(5, 1)])),
    ];
    Poly::from_terms(W9, 5, &t)
}

pub fn xi54_gr36() -> Poly<9> {
    #[rustfmt::skip]
    let t: Vec<(i128, [u32; 9])> = vec![
        (-1, cmono(&[(1, 9)])), (8, cmono(&[(1, 7), (2, 1)])), (-7, cmono(&[(1, 6), (3, 1)])),
        (-21, cmono(&[(1, 5), (2, 2)])), (6, cmono(&[(1, 5), (4, 1)])),
        (30, cmono(&[(1, 4), (2, 1), (3, 1)])), (-5, cmono(&[(1, 4), (5, 1)])),
        (20, cmono(&[(1, 3), (2, 3)])), (-20, cmono(&[(1, 3), (2, 1), (4, 1)])),
        (-10, cmono(&[(1, 3), (3, 2)])), (4, cmono(&[(1, 3), (6, 1)])),
        (-30, cmono(&[(1, 2), (2, 2), (3, 1)])), (12, cmono(&[(1, 2), (2, 1), (5, 1)])),
        (12, cmono(&[(1, 2), (3, 1), (4, 1)])), (-3, cmono(&[(1, 2), (7, 1)])),
        (-5, cmono(&[(1, 1), (2, 4)])), (12, cmono(&[(1, 1), (2, 2), (4, 1)])),
        (12, cmono(&[(1, 1), (2, 1), (3, 2)])), (-6, cmono(&[(1, 1), (2, 1), (6, 1)])),
        (-6, cmono(&[(1, 1), (3, 1), (5, 1)])), (-3, cmono(&[(1, 1), (4, 2)])),
        (2, cmono(&[(1, 1), (8, 1)])), (4, cmono(&[(2, 3), (3, 1)])),
        (-3, cmono(&[(2, 2), (5, 1)])), (-6, cmono(&[(2, 1), (3, 1), (4, 1)])),
        (2, cmono(&[(2, 1), (7, 1)])), (-1, cmono(&[(3, 3)])), (2, cmono(&[(3, 1), (6, 1)])),
        (2, cmono(&[(4, 1), (5, 1)])), (-1, cmono(&[(9, 1)])),
    ];
    Poly::from_terms(W9, 9, &t)
}

