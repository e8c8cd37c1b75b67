use cws_core::algebra::BinaryVector;
use cws_core::pauli::PauliOperator;
use proptest::prelude::*;

fn op(n: usize) -> impl Strategy<Value = PauliOperator> {
    (prop::collection::vec(any::<bool>(), n), prop::collection::vec(any::<bool>(), n))
        .prop_map(|(v, u)| PauliOperator::new(BinaryVector::from_bools(&v), BinaryVector::from_bools(&u)).unwrap())
}

fn pair() -> impl Strategy<Value = (PauliOperator, PauliOperator)> {
    (1usize..=40).prop_flat_map(|n| (op(n), op(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn commutation_is_the_trace_product((a, b) in pair()) {
        prop_assert_eq!(a.commutes(&b).unwrap(), !a.phi().trace_inner_product(&b.phi()).unwrap());
    }

    #[test]
    fn product_weight_is_subadditive((a, b) in pair()) {
        prop_assert!(a.multiply(&b).unwrap().weight() <= a.weight() + b.weight());
    }

    #[test]
    fn phi_round_trips((a, _) in pair()) {
        prop_assert!(PauliOperator::phi_inv(&a.phi()).equal_up_to_phase(&a));
        prop_assert_eq!(PauliOperator::phi_inv(&a.phi()).phi(), a.phi());
    }

    #[test]
    fn strings_round_trip((a, _) in pair()) {
        let s = a.to_string();
        let back: PauliOperator = s.parse().unwrap();
        prop_assert_eq!(back.to_string(), s);
        prop_assert!(back.equal_up_to_phase(&a));
    }

    #[test]
    fn hermitian_operators_square_to_identity((a, _) in pair()) {
        let sq = a.multiply(&a).unwrap();
        prop_assert!(sq.is_identity());
        prop_assert_eq!(sq.relative_phase(), 0);
    }

    #[test]
    fn products_commute_up_to_sign((a, b) in pair()) {
        let ab = a.multiply(&b).unwrap();
        let ba = b.multiply(&a).unwrap();
        prop_assert!(ab.equal_up_to_phase(&ba));
        let same = ab.phase_exp() == ba.phase_exp();
        prop_assert_eq!(same, a.commutes(&b).unwrap());
    }
}
