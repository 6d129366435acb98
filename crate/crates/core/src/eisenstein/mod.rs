//! Eisenstein series: level one, level three with the character `chi_-3`,
//! and the vector-valued series for the dual Weil representation of `-W`
//! built from local Euler products. The theta series of `W + E8` serves as
//! an independent oracle for the weight 5 case.

mod scalar;
mod theta;
mod vector;

pub use scalar::{eisenstein_chi, eisenstein_chi_rescaled, eisenstein_chi_with, eisenstein_level1, CharacterConvention};
pub use theta::{lattice_theta_series, theta_series_rank10};
pub use vector::{
    l_value_bernoulli_sum, l_value_ratio, local_euler_data, local_euler_factor, rep_count, rep_counts_prime_power,
    vv_eisenstein,
    vv_eisenstein_coefficient, LocalEulerData,
};
