use std::sync::Arc;

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::fqm::DiscriminantForm;
use crate::qseries::QSeries;

/// A weight-tagged vector of q-series, one per coset of a discriminant form.
///
/// Construction enforces the support condition (every exponent in the
/// `gamma` component is `-q(gamma)` mod 1) and the symmetry
/// `F_gamma = F_{-gamma}`.
#[derive(Clone, Debug)]
pub struct VectorForm {
    weight: Rational,
    form: Arc<DiscriminantForm>,
    components: Vec<QSeries>,
}

impl VectorForm {
    pub fn new(weight: Rational, form: Arc<DiscriminantForm>, components: Vec<QSeries>) -> Result<Self> {
        if components.len() != form.order() {
            return Err(Error::invalid(format!(
                "{} components for a discriminant form of order {}",
                components.len(),
                form.order()
            )));
        }
        let f = VectorForm { weight, form, components };
        f.check_support()?;
        f.check_symmetry()?;
        Ok(f)
    }

    pub fn zero(weight: Rational, form: Arc<DiscriminantForm>, prec: &Rational) -> Result<Self> {
        let den = form.level() as i64;
        let components = (0..form.order()).map(|_| QSeries::zero(den, prec)).collect::<Result<Vec<_>>>()?;
        Self::new(weight, form, components)
    }

    /// Exponents in component `gamma` must lie in `Z - q(gamma)`.
    pub fn check_support(&self) -> Result<()> {
        for (i, c) in self.components.iter().enumerate() {
            let q = self.form.qvalue(i);
            if let Some((e, _)) = c.terms().find(|(e, _)| !(e + q).is_integer()) {
                return Err(Error::invalid(format!("exponent {e} not allowed on coset {i} (q = {q})")));
            }
        }
        Ok(())
    }

    pub fn check_symmetry(&self) -> Result<()> {
        for i in 0..self.components.len() {
            let j = self.form.neg(i);
            if !self.components[i].agrees_with(&self.components[j]) {
                return Err(Error::invalid(format!("components {i} and {j} differ")));
            }
        }
        Ok(())
    }

    pub fn weight(&self) -> &Rational {
        &self.weight
    }

    pub fn form(&self) -> &DiscriminantForm {
        &self.form
    }

    pub fn form_arc(&self) -> Arc<DiscriminantForm> {
        self.form.clone()
    }

    pub fn component(&self, i: usize) -> &QSeries {
        &self.components[i]
    }

    pub fn components(&self) -> &[QSeries] {
        &self.components
    }

    /// Smallest precision among the components.
    pub fn prec(&self) -> Rational {
        self.components.iter().map(QSeries::prec).min().expect("at least one coset")
    }

    pub fn coefficient(&self, gamma: usize, n: &Rational) -> Result<Rational> {
        self.components[gamma].coefficient(n)
    }

    pub fn constant_terms(&self) -> Vec<Rational> {
        self.components.iter().map(|c| c.coefficient(&Rational::zero()).unwrap_or_else(|_| Rational::zero())).collect()
    }

    /// Componentwise map; the result is revalidated.
    pub fn map(&self, weight: Rational, f: impl Fn(&QSeries) -> QSeries) -> Result<Self> {
        Self::new(weight, self.form.clone(), self.components.iter().map(f).collect())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        VectorForm {
            weight: self.weight.clone(),
            form: self.form.clone(),
            components: self.components.iter().map(|c| c.scale(s)).collect(),
        }
    }

    /// `sum c_i F_i` for forms of a common weight and form.
    pub fn linear_combination(coeffs: &[Rational], forms: &[VectorForm]) -> Result<Self> {
        let first = forms.first().ok_or_else(|| Error::invalid("empty linear combination"))?;
        if coeffs.len() != forms.len() {
            return Err(Error::invalid("coefficient count does not match form count"));
        }
        if forms.iter().any(|f| f.weight != first.weight || f.form.order() != first.form.order()) {
            return Err(Error::invalid("forms differ in weight or type"));
        }
        let components = (0..first.components.len())
            .map(|i| {
                coeffs
                    .iter()
                    .zip(forms)
                    .map(|(c, f)| f.components[i].scale(c))
                    .reduce(|a, b| &a + &b)
                    .expect("nonempty")
            })
            .collect();
        Self::new(first.weight.clone(), first.form.clone(), components)
    }

    /// True iff every component has vanishing constant term.
    pub fn is_cuspidal(&self) -> bool {
        self.constant_terms().iter().all(Zero::is_zero)
    }

    /// Evaluates every component at `tau` by summing the truncated series.
    pub fn evaluate(&self, tau: Complex64) -> Vec<Complex64> {
        self.components.iter().map(|c| evaluate_series(c, tau)).collect()
    }
}

/// `sum c_n e(n tau)` in floating point.
pub fn evaluate_series(f: &QSeries, tau: Complex64) -> Complex64 {
    let two_pi_i = Complex64::new(0.0, 2.0 * std::f64::consts::PI);
    f.terms()
        .map(|(e, c)| {
            let e = e.to_f64().expect("finite exponent");
            let c = c.to_f64().expect("finite coefficient");
            (two_pi_i * tau * e).exp() * c
        })
        .sum()
}

/// Largest absolute coefficient in `f`, as a float.
pub(crate) fn max_abs_coefficient(f: &QSeries) -> f64 {
    f.terms().map(|(_, c)| c.to_f64().unwrap_or(f64::INFINITY).abs()).fold(0.0, f64::max)
}

