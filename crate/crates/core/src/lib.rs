//! Exact computation of the generating series of degrees of special cubic
//! fourfold divisors.
//!
//! The series is assembled from vector-valued modular forms for the Weil
//! representation attached to the discriminant form of `-W` (equivalently of
//! the signature `(2,20)` lattice `-(W + U^2 + E8^2)`), and its first two
//! degrees are cross-checked by an independent intersection-theory engine.
//!
//! Module map:
//!
//! * [`exactmath`]: rationals, a fixed cyclotomic field, Bernoulli numbers,
//!   characters and small number-theory helpers.
//! * [`qseries`]: truncated q-expansions with fractional exponents.
//! * [`fqm`]: even lattices, discriminant forms and the Weil representation.
//! * [`eisenstein`]: scalar and vector-valued Eisenstein series, plus the
//!   rank-10 theta series used as an oracle.
//! * [`vvmf`]: vector-valued forms, Rankin–Cohen brackets, the weight-11
//!   basis and the assembly of the degree series.
//! * [`schubert`]: Chern/Segre classes on `P^5` and `Gr(3,6)`.

pub mod eisenstein;
pub mod error;
pub mod exactmath;
pub mod fqm;
pub mod qseries;
pub mod schubert;
pub mod vvmf;

pub use error::{Error, Result};
pub use exactmath::{Cyclotomic, Rational};

pub use fqm::{DiscriminantForm, EvenLattice, Mp2Element, WeilRep};
pub use schubert::{ChernSeries, IntersectionRing, RingClass};
pub use vvmf::{HeegnerSeries, VectorForm};
pub use qseries::QSeries;

