use proptest::prelude::*;
use qtet_core::criterion::{decide, DecideOptions};
use qtet_core::generate::{derive_qmixed, generate_qgeometric};
use qtet_core::pairfile::PairFile;
use qtet_core::scalar::Rational;
use qtet_core::{Error, FieldSpec, Scalar};

#[test]
fn printed_pairs_parse_back_identically() {
    let f = FieldSpec::Symbolic;
    for d in 0..=3 {
        let geo = generate_qgeometric(d, &f).unwrap();
        let mixed = derive_qmixed(&geo, &Scalar::from_int(5)).unwrap();
        for pair in [geo, mixed] {
            let text = PairFile::from_pair(&pair, Default::default()).to_json();
            assert_eq!(PairFile::parse_json(&text).unwrap().to_pair().unwrap(), pair);
        }
    }
}

#[test]
fn decide_recovers_the_geometric_pair() {
    let f = FieldSpec::Symbolic;
    for d in 1..=3 {
        let geo = generate_qgeometric(d, &f).unwrap();
        let pair = derive_qmixed(&geo, &Scalar::from_int(2)).unwrap();
        let decision = decide(&pair, &DecideOptions::default()).unwrap();
        let action = decision.action.as_ref().expect("module exists");
        assert_eq!(action.get(0, 1), geo.a());
        assert_eq!(action.get(2, 3), geo.astar(), "d = {d}");
        assert!(decision.consistent());
    }
}

#[test]
fn geometric_input_is_rejected_by_decide() {
    let geo = generate_qgeometric(2, &FieldSpec::Symbolic).unwrap();
    assert!(matches!(decide(&geo, &DecideOptions::default()), Err(Error::Precondition { .. })));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn specialized_round_trips_decide_to_exist(d in 0usize..=2, c in 2i64..40, q in 2i64..7) {
        let f = FieldSpec::specialized(Rational::from_integer(q.into())).unwrap();
        let geo = generate_qgeometric(d, &f).unwrap();
        let c = Scalar::from_int(c);
        // c = q^{2m} collides; skip those
        prop_assume!((-(d as i64)..=d as i64).all(|m| f.q_pow(2 * m) != c));
        let pair = derive_qmixed(&geo, &c).unwrap();
        let decision = decide(&pair, &DecideOptions::default()).unwrap();
        prop_assert!(decision.exists);
        prop_assert!(decision.consistent(), "{:?}", decision.checks.failures());
    }
}
