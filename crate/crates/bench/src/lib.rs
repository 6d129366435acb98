//! Fixtures shared by the criterion benches.

use heegner_core::exactmath::{int, rat};
use heegner_core::QSeries;

/// A dense series in `q^(1/3)` with small rational coefficients.
pub fn dense_series(prec: i64) -> QSeries {
    let terms = (0..3 * prec).map(|e| (rat(e, 3), rat((e * 7919) % 23 - 11, 1 + e % 3)));
    QSeries::from_terms(3, &int(prec), terms).expect("exponents below precision")
}
