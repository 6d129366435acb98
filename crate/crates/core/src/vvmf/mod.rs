//! Vector-valued modular forms for the dual Weil representation of `-W`:
//! Rankin–Cohen brackets, the dimension formula, the weight 11 basis, the
//! constrained solve for `Psi`, the assembly of `Theta` and exact fits in
//! the generators `alpha`, `beta` of the level 3 ring.

mod bracket;
mod dimension;
mod fit;
mod form;
mod heegner;
mod modularity;

pub use bracket::{basis_weight11, rankin_cohen, rankin_cohen_scalar, w_prime_rep};
pub use dimension::dim_formula;
pub use fit::{fit_alpha_beta, fit_alpha_beta_both, fit_monomials, monomial_basis, weight_monomials, AlphaBetaFit};
pub use form::{evaluate_series, VectorForm};
pub use heegner::{assemble_theta, solve_psi, solve_psi_with_coefficients, theta_prime, HeegnerSeries};
pub use modularity::{numeric_modularity_check, scalar_modularity_residual, scalar_multiplier};

/// `true` iff every component has vanishing constant term.
pub fn is_cuspidal(f: &VectorForm) -> bool {
    f.is_cuspidal()
}
