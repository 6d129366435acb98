use heegner_core::exactmath::{int, rat, Rational};
use heegner_core::QSeries;
use proptest::prelude::*;

fn series(den: i64, prec: i64) -> impl Strategy<Value = QSeries> {
    prop::collection::vec((-20i64..20, 1i64..4), (den * prec) as usize).prop_map(move |cs| {
        let terms = cs
            .into_iter()
            .enumerate()
            .map(|(e, (n, d))| (rat(e as i64, den), rat(n, d)));
        QSeries::from_terms(den, &int(prec), terms).unwrap()
    })
}

fn any_den_series() -> impl Strategy<Value = QSeries> {
    prop_oneof![series(1, 10), series(3, 10)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms(f in any_den_series(), g in any_den_series(), h in any_den_series()) {
        prop_assert!((&(&f * &g) * &h).agrees_with(&(&f * &(&g * &h))));
        prop_assert!((&f * &(&g + &h)).agrees_with(&(&(&f * &g) + &(&f * &h))));
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
    }

    #[test]
    fn leibniz(f in any_den_series(), g in any_den_series()) {
        let lhs = (&f * &g).derivative(1);
        let rhs = &(&f.derivative(1) * &g) + &(&f * &g.derivative(1));
        prop_assert!(lhs.agrees_with(&rhs));
    }

    #[test]
    fn rescaling_is_multiplicative(f in any_den_series(), g in any_den_series(), r in prop_oneof![Just(rat(1, 3)), Just(int(2)), Just(rat(2, 3))]) {
        let lhs = (&f * &g).rescale_exponent(&r).unwrap();
        let rhs = &f.rescale_exponent(&r).unwrap() * &g.rescale_exponent(&r).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn truncation_soundness(f in series(3, 20), g in series(3, 20)) {
        let ten: Rational = int(10);
        let big = (&f * &g).truncate(&ten).unwrap();
        let small = (&f.truncate(&ten).unwrap() * &g.truncate(&ten).unwrap()).truncate(&ten).unwrap();
        prop_assert_eq!(big, small);
    }

    #[test]
    fn json_round_trip(f in any_den_series()) {
        let text = serde_json::to_string(&f.to_json()).unwrap();
        let back = QSeries::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert_eq!(back, f);
    }
}
