//! Intersection theory on `P^5` and `Gr(3,6)`: Schubert calculus, Chern
//! series and degrees of powers of the relative hyperplane class.

mod chern;
mod poly;
mod ring;

pub use chern::{
    chern_invert, chern_jet, chern_sym3_dual_tautological, divisor_degree_projective, divisor_degree_segre,
    evaluate_in_c, kernel_gr36, kernel_p5, lr_multiply, proj_bundle_power, reduction_degree, segre_degree,
    sym3_universal, ChernSeries,
};
pub use poly::{reduction_polynomial, sym3_chern_polynomial, to_elementary, Poly};
pub use ring::{box_partitions, lr_coefficient, IntersectionRing, RingClass};
