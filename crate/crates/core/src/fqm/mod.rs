//! Finite quadratic modules of even lattices and the Weil representation of
//! `Mp2(Z)` on their group rings.

mod discriminant;
mod heegner;
mod lattice;
mod matrix;
mod mp2;
pub mod snf;
mod weil;

pub use discriminant::DiscriminantForm;
pub use heegner::heegner_index;
pub use lattice::EvenLattice;
pub use matrix::CycMatrix;
pub use mp2::{Letter, Mp2Element};
pub use weil::WeilRep;
