//! End-to-end acceptance run: one PASS/FAIL line per criterion.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::Instant;

use heegner_core::eisenstein::{theta_series_rank10, vv_eisenstein};
use heegner_core::exactmath::{int, rat, Rational};
use heegner_core::fqm::{CycMatrix, Letter};
use heegner_core::schubert::*;
use heegner_core::vvmf::*;
use heegner_core::{DiscriminantForm, Error, EvenLattice, Mp2Element, QSeries, WeilRep};
use num_bigint::BigInt;
use num_complex::Complex64;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

mod common;

const PREC: i64 = 30;

fn rep(lat: EvenLattice, dual: bool) -> WeilRep {
    WeilRep::new(Arc::new(DiscriminantForm::new(&lat).unwrap()), dual)
}

fn theta_coefficients(psi: &VectorForm) {
    let theta = assemble_theta(psi).unwrap();
    assert_eq!(theta.constant_term(), int(-2));
    let deg = |d: u64| theta.degree(d).cloned().unwrap();
    assert_eq!(deg(6), BigInt::from(192));
    assert_eq!(deg(8), BigInt::from(3402));
    assert_eq!(deg(12), BigInt::from(196272));
    // q^(7/3): internal consistency with Psi_1, and which of 917568 / 915678 it is
    let c14 = deg(14);
    assert_eq!(Rational::from_integer(c14.clone()), psi.coefficient(1, &rat(7, 3)).unwrap());
    assert_eq!(c14, BigInt::from(917568));
    assert_ne!(c14, BigInt::from(915678));
    println!("    q^(7/3) coefficient = {c14} (equals the Psi_1 coefficient 917568, not 915678)");
}

fn eisenstein_reference_values() {
    let e5 = vv_eisenstein(&w_prime_rep(), 5, 4).unwrap();
    for (n, c) in [(0, 2), (1, 492), (2, 7200), (3, 39372)] {
        assert_eq!(e5.coefficient(0, &int(n)).unwrap(), int(c), "v0 q^{n}");
    }
    for (n, c) in [(1, 6), (4, 1446), (7, 14412)] {
        assert_eq!(e5.coefficient(1, &rat(n, 3)).unwrap(), int(c));
        assert_eq!(e5.coefficient(2, &rat(n, 3)).unwrap(), int(c));
    }
}

fn theta_oracle() {
    let e5 = vv_eisenstein(&w_prime_rep(), 5, 4).unwrap();
    let theta = theta_series_rank10(e5.form_arc(), 4).unwrap();
    for g in 0..3 {
        let lhs: Vec<_> = e5.component(g).terms().filter(|(e, _)| *e <= int(3)).map(|(e, c)| (e, c.clone())).collect();
        let rhs: Vec<_> =
            theta.component(g).terms().filter(|(e, _)| *e <= int(3)).map(|(e, c)| (e, c * int(2))).collect();
        assert_eq!(lhs, rhs, "component {g}");
    }
}

fn dimensions() {
    assert_eq!(dim_formula(3).unwrap(), 1);
    assert_eq!(dim_formula(5).unwrap(), 1);
    assert_eq!(dim_formula(11).unwrap(), 2);
}

fn polynomial_identities(psi: &VectorForm) {
    let fit0 = fit_alpha_beta(psi.component(0), 11, false).unwrap();
    assert_eq!(fit0.coefficients, [-2, 324, 183708, 4408992].map(int).to_vec());
    assert_eq!(fit0.solved_on.len(), 4);
    assert!(fit0.verified_on >= 25, "verified on {}", fit0.verified_on);
    let fitp = fit_alpha_beta(&theta_prime(psi), 11, true).unwrap();
    assert_eq!(fitp.coefficients, [-2, 132, -2772, 18144].map(int).to_vec());
    assert_eq!(fitp.solved_on.len(), 4);
    assert!(fitp.verified_on >= 25, "verified on {}", fitp.verified_on);
}

fn dual_path_degrees(psi: &VectorForm) {
    let theta = assemble_theta(psi).unwrap();
    let k6 = kernel_p5();
    let paths6 = [
        theta.degree(6).cloned().unwrap(),
        proj_bundle_power(&k6, 50, 54).unwrap(),
        segre_degree(&chern_jet()),
        evaluate_in_c(&common::xi54_p5(), &k6),
    ];
    assert!(paths6.iter().all(|v| *v == BigInt::from(192)), "{paths6:?}");
    let k8 = kernel_gr36();
    let paths8 = [
        theta.degree(8).cloned().unwrap(),
        proj_bundle_power(&k8, 46, 54).unwrap(),
        segre_degree(&chern_sym3_dual_tautological()),
        evaluate_in_c(&common::xi54_gr36(), &k8),
    ];
    assert!(paths8.iter().all(|v| *v == BigInt::from(3402)), "{paths8:?}");
    // the nine reference c_i(K'), coefficientwise in Z[s1, s11, s111]
    let inverse = sym3_universal().invert_unit();
    for (i, terms) in common::KPRIME.iter().enumerate() {
        assert_eq!(inverse.homogeneous(i as u32 + 1), Poly::from_terms(common::W3, 9, terms), "c{}", i + 1);
    }
    for (i, e) in [-12, 84, -448, 2016, -8064].iter().enumerate() {
        assert_eq!(k6.c(i + 1), RingClass::hyperplane_power(i + 1).scale(*e));
    }
}

fn weil_representation() {
    let a2 = EvenLattice::new(vec![vec![2, -1], vec![-1, 2]]).unwrap();
    let lattices = [EvenLattice::w(), EvenLattice::w_prime(), EvenLattice::u(), EvenLattice::e8(), EvenLattice::direct_sum(&[a2.clone(), a2])];
    for lat in lattices {
        assert!(rep(lat, false).milgram_holds().unwrap());
    }
    let r = w_prime_rep();
    let mut count = 0;
    for c in (-9..=9).step_by(3) {
        for d in -7i64..=7 {
            let found = (-12i64..=12).flat_map(|a| (-12i64..=12).map(move |b| (a, b))).find(|&(a, b)| a * d - b * c == 1);
            if let Some((a, b)) = found {
                for sign in [1, -1] {
                    let g = Mp2Element::new(a, b, c, d, sign).unwrap();
                    assert_eq!(r.gamma0_formula(&g).unwrap(), *r.matrix(&g), "{g}");
                    count += 1;
                }
            }
        }
    }
    assert!(count >= 20);
    let mut rng = ChaCha8Rng::seed_from_u64(50);
    let word = |rng: &mut ChaCha8Rng| -> Vec<Letter> {
        (0..rng.gen_range(0..12)).map(|_| if rng.gen_bool(0.5) { Letter::S } else { Letter::T(rng.gen_range(-4..=4)) }).collect()
    };
    let id = CycMatrix::identity(r.field_order(), r.form().order());
    for _ in 0..50 {
        let g = Mp2Element::from_word(&word(&mut rng));
        let h = Mp2Element::from_word(&word(&mut rng));
        let (rg, rh) = (r.matrix(&g), r.matrix(&h));
        assert_eq!(&*rg * &rg.conj_transpose(), id);
        assert_eq!(*r.matrix(&g.compose(&h)), &*rg * &*rh);
    }
}

fn numeric_modularity(psi: &VectorForm) {
    let r = w_prime_rep();
    let s = Mp2Element::s();
    let i = Complex64::new(0.0, 1.0);
    let (f0, _) = basis_weight11(PREC).unwrap();
    let a = numeric_modularity_check(&f0, &r, &s, i, 1e-6).unwrap();
    let b = numeric_modularity_check(psi, &r, &s, i, 1e-6).unwrap();
    println!("    float residuals: F0 {a:.3e}, Psi {b:.3e}");
    assert!(a < 1e-6 && b < 1e-6);
}

fn schubert_sanity() {
    assert_eq!(RingClass::schubert(&[1]).pow(9), RingClass::schubert(&[3, 3, 3]).scale(42));
    let parts = box_partitions(3, 3);
    assert_eq!(parts.len(), 20);
    for l in &parts {
        for m in &parts {
            let comp = (0..3).all(|i| l[i] + m[2 - i] == 3);
            assert_eq!(lr_multiply(&RingClass::schubert(l), &RingClass::schubert(m)).degree(), comp as i128);
        }
    }
    let rows: Vec<RingClass> = (1..=3u8).map(|a| RingClass::schubert(&[a])).collect();
    for x in &rows {
        for y in &rows {
            for z in &rows {
                assert_eq!(lr_multiply(&lr_multiply(x, y), z), lr_multiply(x, &lr_multiply(y, z)));
            }
        }
    }
}

fn series(den: i64, prec: i64) -> impl Strategy<Value = QSeries> {
    prop::collection::vec((-20i64..20, 1i64..4), (den * prec) as usize).prop_map(move |cs| {
        let terms = cs.into_iter().enumerate().map(|(e, (n, d))| (rat(e as i64, den), rat(n, d)));
        QSeries::from_terms(den, &int(prec), terms).unwrap()
    })
}

fn property_suites(psi: &VectorForm) {
    let mut runner = TestRunner::new(Config::with_cases(100));
    let s = || prop_oneof![series(1, 8), series(3, 8)];
    runner
        .run(&(s(), s(), s()), |(f, g, h)| {
            prop_assert!((&(&f * &g) * &h).agrees_with(&(&f * &(&g * &h))));
            prop_assert!((&f * &(&g + &h)).agrees_with(&(&(&f * &g) + &(&f * &h))));
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert_eq!(&f + &g, &g + &f);
            Ok(())
        })
        .expect("ring axioms");
    runner
        .run(&(s(), s()), |(f, g)| {
            let lhs = (&f * &g).derivative(1);
            let rhs = &(&f.derivative(1) * &g) + &(&f * &g.derivative(1));
            prop_assert!(lhs.agrees_with(&rhs));
            Ok(())
        })
        .expect("Leibniz rule");
    runner
        .run(&(s(), s(), 1i64..8), |(f, g, p)| {
            let p = int(p);
            let lhs = (&f * &g).truncate(&p).unwrap();
            let rhs = &f.truncate(&p).unwrap() * &g.truncate(&p).unwrap();
            prop_assert_eq!(&lhs, &rhs);
            let beyond = matches!(lhs.coefficient(&p), Err(Error::BeyondPrecision { .. }));
            prop_assert!(beyond);
            Ok(())
        })
        .expect("truncation soundness");

    // every form the pipeline builds satisfies the support and symmetry conditions
    let r = w_prime_rep();
    let (f0, f1) = basis_weight11(8).unwrap();
    let mut forms = vec![f0, f1, psi.clone()];
    for k in [3, 5, 7] {
        forms.push(vv_eisenstein(&r, k, 8).unwrap());
    }
    forms.push(theta_series_rank10(r.form_arc(), 4).unwrap());
    for f in &forms {
        f.check_support().unwrap();
        f.check_symmetry().unwrap();
    }
    // and construction rejects violations
    let form = r.form_arc();
    let p = int(3);
    let good = QSeries::from_terms(3, &p, [(rat(1, 3), int(1))]).unwrap();
    let zero = QSeries::zero(3, &p).unwrap();
    let integral = QSeries::from_terms(3, &p, [(int(1), int(1))]).unwrap();
    let w = rat(11, 1);
    assert!(VectorForm::new(w.clone(), form.clone(), vec![zero.clone(), good.clone(), good.clone()]).is_ok());
    assert!(VectorForm::new(w.clone(), form.clone(), vec![zero.clone(), integral.clone(), integral]).is_err());
    assert!(VectorForm::new(w.clone(), form.clone(), vec![good.clone(), zero.clone(), zero.clone()]).is_err());
    assert!(VectorForm::new(w, form, vec![zero.clone(), good, zero]).is_err());
}

fn main() {
    let started = Instant::now();
    let psi = solve_psi(PREC).expect("Psi at prec 30");
    let criteria: Vec<(&str, Box<dyn Fn()>)> = vec![
        ("Theta coefficients -2, 192, 3402, 196272 and q^(7/3)", Box::new(|| theta_coefficients(&psi))),
        ("E5 reference coefficients", Box::new(eisenstein_reference_values)),
        ("E5 = 2 * theta(W + E8) through q^3", Box::new(theta_oracle)),
        ("dimension formula 1, 1, 2 at k = 3, 5, 11", Box::new(dimensions)),
        ("alpha/beta identities for Psi_0 and Theta'", Box::new(|| polynomial_identities(&psi))),
        ("deg C_6 = 192 and deg C_8 = 3402 by every path", Box::new(|| dual_path_degrees(&psi))),
        ("Weil representation: Milgram, closed form, unitary homomorphism", Box::new(weil_representation)),
        ("numeric S-transformation of F0 and Psi at tau = i", Box::new(|| numeric_modularity(&psi))),
        ("Schubert kernel: s1^9, Poincare pairing, associativity", Box::new(schubert_sanity)),
        ("property suites", Box::new(|| property_suites(&psi))),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let ok = catch_unwind(AssertUnwindSafe(run)).is_ok();
        failed += usize::from(!ok);
        println!("criterion {:>2}: {} — {name} ({:.2?})", i + 1, if ok { "PASS" } else { "FAIL" }, t.elapsed());
    }
    println!("{} of {} criteria pass in {:.2?}", criteria.len() - failed, criteria.len(), started.elapsed());
    if failed > 0 {
        std::process::exit(1);
    }
}
