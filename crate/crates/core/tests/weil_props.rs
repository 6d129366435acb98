use std::sync::Arc;

use heegner_core::fqm::{CycMatrix, Letter};
use heegner_core::{DiscriminantForm, EvenLattice, Mp2Element, WeilRep};
use proptest::prelude::*;

fn rep(lat: EvenLattice, dual: bool) -> WeilRep {
    WeilRep::new(Arc::new(DiscriminantForm::new(&lat).unwrap()), dual)
}

fn a2_plus_a2() -> EvenLattice {
    let a2 = EvenLattice::new(vec![vec![2, -1], vec![-1, 2]]).unwrap();
    EvenLattice::direct_sum(&[a2.clone(), a2])
}

fn letters() -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(prop_oneof![(-4i64..=4).prop_map(Letter::T), Just(Letter::S)], 0..12)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn unitary_homomorphism(w1 in letters(), w2 in letters(), dual in any::<bool>()) {
        for lat in [EvenLattice::w_prime(), a2_plus_a2()] {
            let r = rep(lat, dual);
            let g = Mp2Element::from_word(&w1);
            let h = Mp2Element::from_word(&w2);
            let rg = r.matrix(&g);
            let rh = r.matrix(&h);
            let id = CycMatrix::identity(r.field_order(), r.form().order());
            prop_assert_eq!(&*rg * &rg.conj_transpose(), id);
            let gh = r.matrix(&g.compose(&h));
            prop_assert_eq!(gh.as_ref(), &(&*rg * &*rh));
        }
    }

    #[test]
    fn closed_form_matches_words(k1 in -5i64..=5, j in -3i64..=3, k2 in -5i64..=5, central in 0u32..4) {
        let u = Mp2Element::from_matrix(1, 0, 3, 1).unwrap();
        let g = Mp2Element::t_pow(k1)
            .compose(&u.pow(j))
            .compose(&Mp2Element::t_pow(k2))
            .compose(&u.pow(-1))
            .compose(&Mp2Element::s().pow(2 * central as i64));
        for dual in [false, true] {
            for lat in [EvenLattice::w_prime(), EvenLattice::w(), a2_plus_a2()] {
                let r = rep(lat, dual);
                prop_assert_eq!(r.gamma0_formula(&g).unwrap(), (*r.matrix(&g)).clone(), "{}", g);
            }
        }
    }
}

#[test]
fn closed_form_on_twenty_elements() {
    let r = rep(EvenLattice::w_prime(), true);
    let mut count = 0;
    for c in (-9..=9).step_by(3) {
        for d in -7i64..=7 {
            let Some((a, b)) = (-12i64..=12)
                .flat_map(|a| (-12i64..=12).map(move |b| (a, b)))
                .find(|&(a, b)| a * d - b * c == 1)
            else {
                continue;
            };
            for sign in [1, -1] {
                let g = Mp2Element::new(a, b, c, d, sign).unwrap();
                assert_eq!(r.gamma0_formula(&g).unwrap(), *r.matrix(&g), "{g}");
                count += 1;
            }
        }
    }
    assert!(count >= 20);
}

#[test]
fn milgram() {
    for lat in [EvenLattice::w_prime(), EvenLattice::w(), EvenLattice::u(), EvenLattice::e8(), a2_plus_a2(), EvenLattice::lambda0_prime()] {
        assert!(rep(lat, false).milgram_holds().unwrap());
    }
}
