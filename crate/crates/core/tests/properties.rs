use proptest::prelude::*;

use superfrob::heckesim::{apply_word, TensorState};
use superfrob::mpoly::MPoly;
use superfrob::partition::{partitions_of, Partition};
use superfrob::scalar::{ratio, LaurentScalar, ScalarFraction};
use superfrob::symring::{inner_standard, Basis, SymFunc};

fn laurent() -> impl Strategy<Value = LaurentScalar> {
    prop::collection::vec((-4i32..=4, -6i64..=6, 1i64..=3), 0..4).prop_map(|terms| {
        LaurentScalar::from_terms(terms.into_iter().map(|(e, n, d)| (e, ratio(n, d))))
    })
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentScalar> {
    laurent().prop_filter("nonzero", |x| !x.is_zero())
}

fn partition(max: usize) -> impl Strategy<Value = Partition> {
    (1..=max).prop_flat_map(|r| {
        let all = partitions_of(r);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn symfunc(max_degree: usize) -> impl Strategy<Value = SymFunc> {
    (
        prop::sample::select(Basis::ALL.to_vec()),
        prop::collection::vec((partition(max_degree), -3i64..=3, -2i32..=2), 1..4),
    )
        .prop_map(|(b, terms)| {
            SymFunc::from_terms(
                b,
                terms
                    .into_iter()
                    .map(|(p, c, e)| (p, ScalarFraction::from(LaurentScalar::monomial(ratio(c, 1), e)))),
            )
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
    }

    #[test]
    fn laurent_display_round_trips(a in laurent()) {
        let back: LaurentScalar = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in laurent(), b in laurent(), n in 1i64..5, d in 1i64..4) {
        let x = ratio(n, d);
        prop_assert_eq!((&a * &b).eval(&x).unwrap(), a.eval(&x).unwrap() * b.eval(&x).unwrap());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in laurent(), b in nonzero_laurent()) {
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn fractions_normalize(a in nonzero_laurent(), b in nonzero_laurent(), c in nonzero_laurent()) {
        let f = ScalarFraction::new(&a * &c, &b * &c).unwrap();
        let g = ScalarFraction::new(a.clone(), b.clone()).unwrap();
        prop_assert_eq!(&f, &g);
        prop_assert_eq!(&f * &g.recip().unwrap(), ScalarFraction::one());
        let back: ScalarFraction = f.to_string().parse().unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn conjugation_is_an_involution(p in partition(9)) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
    }

    #[test]
    fn basis_changes_round_trip(f in symfunc(5), target in prop::sample::select(Basis::ALL.to_vec())) {
        let there = f.convert(target);
        prop_assert_eq!(there.basis(), target);
        prop_assert_eq!(there.convert(f.basis()), f.clone());
    }

    #[test]
    fn omega_is_an_isometric_involution(f in symfunc(4), g in symfunc(4)) {
        prop_assert!(f.omega().omega().same_element(&f));
        prop_assert_eq!(inner_standard(&f.omega(), &g.omega()), inner_standard(&f, &g));
    }

    #[test]
    fn multiplication_commutes(f in symfunc(3), g in symfunc(3)) {
        prop_assert!(f.mul(&g).same_element(&g.mul(&f)));
    }

    #[test]
    fn polynomial_division(a in prop::collection::vec((0u32..3, 0u32..3, laurent()), 1..4),
                           b in prop::collection::vec((0u32..3, 0u32..3, nonzero_laurent()), 1..3)) {
        let pa = MPoly::from_terms(2, a.into_iter().map(|(i, j, c)| (vec![i, j], c)));
        let pb = MPoly::from_terms(2, b.into_iter().map(|(i, j, c)| (vec![i, j], c)));
        prop_assume!(!pb.is_zero());
        prop_assert_eq!((&pa * &pb).div_exact(&pb).unwrap(), pa);
    }

    #[test]
    fn quadratic_relation_on_states(word in prop::collection::vec(1usize..=3, 3), i in 1usize..3) {
        let v = TensorState::basis(word);
        let once = apply_word(&[i], &v, 3, 2, 1).unwrap();
        let twice = apply_word(&[i, i], &v, 3, 2, 1).unwrap();
        prop_assert_eq!(twice, once.scale(&LaurentScalar::q_minus_q_inv()).add(&v));
    }
}
