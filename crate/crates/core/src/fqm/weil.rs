use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;

use super::discriminant::DiscriminantForm;
use super::matrix::CycMatrix;
use super::mp2::{Letter, Mp2Element};
use crate::error::{Error, Result};
use crate::exactmath::{gauss_sum, jacobi_symbol, Cyclotomic, Rational, DEFAULT_ORDER};

/// The Weil representation `rho_M` (or its dual `rho_M^*`) on `C[M^v/M]`.
///
/// Matrices act on column vectors: column `gamma` is the image of
/// `v_gamma`. Computed matrices are cached per group element.
#[derive(Debug)]
pub struct WeilRep {
    form: Arc<DiscriminantForm>,
    dual: bool,
    order: u32,
    cache: Mutex<HashMap<Mp2Element, Arc<CycMatrix>>>,
}

impl WeilRep {
    pub fn new(form: Arc<DiscriminantForm>, dual: bool) -> Self {
        let order = (DEFAULT_ORDER as u64).lcm(&form.level()) as u32;
        WeilRep { form, dual, order, cache: Mutex::new(HashMap::new()) }
    }

    pub fn form(&self) -> &DiscriminantForm {
        &self.form
    }

    pub fn form_arc(&self) -> Arc<DiscriminantForm> {
        self.form.clone()
    }

    pub fn is_dual(&self) -> bool {
        self.dual
    }

    /// Order of the cyclotomic field the matrices live in.
    pub fn field_order(&self) -> u32 {
        self.order
    }

    fn e(&self, x: &Rational) -> Cyclotomic {
        Cyclotomic::e(self.order, x).expect("field order covers the level")
    }

    fn maybe_dual(&self, m: CycMatrix) -> CycMatrix {
        if self.dual {
            m.conj()
        } else {
            m
        }
    }

    /// `rho(T^k)`: diagonal `e(k q(gamma))` (conjugated for the dual).
    fn t_pow_matrix(&self, k: i64) -> CycMatrix {
        let f = &self.form;
        let k = Rational::from_integer(BigInt::from(k));
        let m = CycMatrix::from_fn(f.order(), |i, j| {
            if i == j {
                self.e(&(f.qvalue(i) * &k))
            } else {
                Cyclotomic::zero(self.order)
            }
        });
        self.maybe_dual(m)
    }

    /// `rho(S) v_gamma = sqrt(i)^(b- - b+) / sqrt|M| sum_delta e(-<gamma,delta>) v_delta`.
    fn s_matrix(&self) -> CycMatrix {
        let f = &self.form;
        let root = Cyclotomic::sqrt_int(self.order, f.order() as u64).expect("sqrt of group order");
        let phase = self.e(&Rational::new(BigInt::from(-f.signature_index()), BigInt::from(8)));
        let scalar = &phase * &root.inverse().expect("nonzero");
        let m = CycMatrix::from_fn(f.order(), |delta, gamma| &scalar * &self.e(&-f.bvalue(gamma, delta)));
        self.maybe_dual(m)
    }

    /// The matrices of the generators `(rho(T), rho(S))`.
    pub fn generator_matrices(&self) -> (CycMatrix, CycMatrix) {
        (self.t_pow_matrix(1), self.s_matrix())
    }

    fn letter_matrix(&self, l: Letter) -> CycMatrix {
        match l {
            Letter::T(k) => self.t_pow_matrix(k),
            Letter::S => self.s_matrix(),
        }
    }

    /// `rho(g)` through the deterministic `S`,`T` word of `g`.
    pub fn matrix(&self, g: &Mp2Element) -> Arc<CycMatrix> {
        if let Some(m) = self.cache.lock().expect("weil cache poisoned").get(g) {
            return m.clone();
        }
        let id = CycMatrix::identity(self.order, self.form.order());
        let m = g.word().into_iter().fold(id, |acc, l| &acc * &self.letter_matrix(l));
        let m = Arc::new(m);
        // idempotent fill: concurrent writers store equal values
        self.cache.lock().expect("weil cache poisoned").insert(*g, m.clone());
        m
    }

    /// Closed form on `Gamma_0(N)` for forms of odd order (oddity 0):
    /// `rho^*(g) v_gamma = (a/|M|) e(-b d q(gamma)) v_{d gamma}`.
    pub fn gamma0_formula(&self, g: &Mp2Element) -> Result<CycMatrix> {
        let f = &self.form;
        let n = f.level() as i64;
        if g.c.rem_euclid(n) != 0 {
            return Err(Error::invalid(format!("{g} is not in Gamma_0({n})")));
        }
        let size = f.order() as i64;
        if size % 2 == 0 {
            return Err(Error::invalid("closed form needs the 2-adic oddity; only odd-order forms are supported"));
        }
        let oddity = 0i64;
        let chi = jacobi_symbol(g.a, size)?;
        let phase_const = self.e(&Rational::new(BigInt::from((g.a - 1) * oddity), BigInt::from(8)));
        let bd = Rational::from_integer(BigInt::from(-g.b * g.d));
        let mut m = CycMatrix::zero(self.order, f.order());
        let mut cols = Vec::with_capacity(f.order());
        for gamma in 0..f.order() {
            let target = f.mul(g.d, gamma);
            let v = (&phase_const * &self.e(&(f.qvalue(gamma) * &bd))).scale(&Rational::from_integer(BigInt::from(chi)));
            cols.push((target, v));
        }
        m = CycMatrix::from_fn(m.dim(), |row, col| {
            let (target, v) = &cols[col];
            if *target == row {
                v.clone()
            } else {
                Cyclotomic::zero(self.order)
            }
        });
        // formula is for rho^*
        Ok(if self.dual { m } else { m.conj() })
    }

    /// `sum_gamma e(a q(gamma))`.
    pub fn gauss_sum(&self, a: i64) -> Result<Cyclotomic> {
        gauss_sum(a, self.form.qvalues())
    }

    /// Checks `sum_gamma e(q(gamma)) = sqrt|M| e(sign/8)` exactly.
    pub fn milgram_holds(&self) -> Result<bool> {
        let lhs = gauss_sum(1, self.form.qvalues())?;
        let rhs = &Cyclotomic::sqrt_int(DEFAULT_ORDER, self.form.order() as u64)?
            * &Cyclotomic::e(DEFAULT_ORDER, &Rational::new(BigInt::from(self.form.signature_index()), BigInt::from(8)))?;
        Ok(lhs == rhs)
    }
}
