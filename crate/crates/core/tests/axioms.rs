use algcheck_core::algebra::BilinearProduct;
use algcheck_core::axioms::check_structure;
use algcheck_core::fixtures;
use algcheck_core::grading::{
    delta_from_multiplier, twist_epsilon, validate_bicharacter, validate_factor_table,
    validate_multiplier,
};
use algcheck_core::scalar::{int, ratio};
use algcheck_core::{
    check_epsilon_commutative, check_hom_associative, check_hom_leibniz, check_hom_lie,
    check_hom_poisson, check_morphism, commutator_bracket, Error, EvenLinearMap, GroupSpec,
    SignBicharacter,
};

#[test]
fn corrected_example_holds_for_all_parameters() {
    for a in [int(1), int(2), int(-3), ratio(5, 7)] {
        for e in [0, 1] {
            let p = fixtures::hom_poisson_3d(a.clone(), e);
            assert!(
                check_hom_poisson(&p, false).unwrap().holds(),
                "a={a} E=[{e}]"
            );
            assert!(!check_hom_poisson(&p, true).unwrap().holds());
        }
    }
}

#[test]
fn as_printed_example_fails_at_two_points() {
    for a in [int(1), int(2), int(-3)] {
        let r =
            check_hom_poisson(&fixtures::hom_poisson_3d_as_printed(a.clone(), 1), false).unwrap();
        let failing: Vec<_> = r
            .failing()
            .map(|s| (s.label.clone(), s.violations[0].indices.clone()))
            .collect();
        assert_eq!(
            failing,
            vec![
                ("hom-associativity".to_string(), vec![1, 1, 2]),
                ("hom-leibniz".to_string(), vec![2, 1, 1])
            ],
            "a={a}"
        );
    }
}

#[test]
fn reports_are_deterministic() {
    let a = fixtures::hom_poisson_3d_as_printed(int(2), 0);
    let first = check_hom_poisson(&a, true).unwrap();
    let second = check_hom_poisson(&a, true).unwrap();
    assert_eq!(first.full_dump(), second.full_dump());
    assert_eq!(first.to_json(), second.to_json());
}

#[test]
fn hom_lie_of_polarized_fixtures() {
    for (name, a) in fixtures::hom_associative_corpus() {
        let p = commutator_bracket(&a).unwrap();
        assert!(check_hom_lie(&p).unwrap().holds(), "{name}");
        assert!(check_hom_leibniz(&p).unwrap().holds(), "{name}");
    }
}

#[test]
fn commutative_fixtures() {
    let (g, e) = fixtures::parity_quotient_bicharacter();
    let factor = algcheck_core::CommutationFactor::Sign(e);
    for a in [
        fixtures::commutative_2d(&g, &factor),
        fixtures::sqrt2_field(&g, &factor),
        fixtures::unital_1d(),
        fixtures::group_algebra_z2(),
    ] {
        assert!(check_epsilon_commutative(&a).unwrap().holds());
        assert!(check_structure(&a, true).unwrap().holds());
    }
    assert!(!check_epsilon_commutative(&fixtures::upper_triangular())
        .unwrap()
        .holds());
}

#[test]
fn bicharacters() {
    let (g, e) = fixtures::parity_quotient_bicharacter();
    assert!(validate_bicharacter(&g, &e).unwrap().holds());
    for x in g.elements() {
        assert_eq!(e.sign(&x, &g.zero()), 1);
        assert_eq!(e.sign(&g.zero(), &x), 1);
    }
    let z3 = GroupSpec::cyclic(3).unwrap();
    assert!(validate_bicharacter(&z3, &SignBicharacter::new(vec![vec![1]]).unwrap()).is_err());
    let z2 = GroupSpec::cyclic(2).unwrap();
    for exp in [0, 1] {
        assert!(
            validate_bicharacter(&z2, &SignBicharacter::new(vec![vec![exp]]).unwrap())
                .unwrap()
                .holds()
        );
    }
}

#[test]
fn delta_of_a_multiplier_is_a_bicharacter() {
    let (g, e) = fixtures::parity_quotient_bicharacter();
    let table = algcheck_core::MultiplierTable::from_sign(&g, &e).unwrap();
    for s in [
        fixtures::sigma_asymmetric(),
        fixtures::sigma_symmetric(),
        fixtures::sigma_constant(&g, ratio(-2, 3)),
    ] {
        assert!(validate_multiplier(&g, &s, false).unwrap().holds());
        let d = delta_from_multiplier(&g, &s).unwrap();
        assert!(validate_factor_table(&g, &d).unwrap().holds());
        let twisted = twist_epsilon(&table, &d).unwrap();
        assert!(validate_factor_table(&g, &twisted).unwrap().holds());
    }
}

#[test]
fn morphisms_between_fixtures() {
    let a = fixtures::klein_group_algebra(false);
    assert!(check_morphism(a.alpha(), &a, &a).unwrap().holds());
    let b = fixtures::hom_poisson_3d(int(2), 1);
    assert!(matches!(
        check_morphism(b.alpha(), &b, &a),
        Err(Error::Shape(_))
    ));
}

#[test]
fn missing_components_are_errors() {
    let a = fixtures::rota_baxter_2d();
    assert!(matches!(
        check_hom_poisson(&a, false),
        Err(Error::MissingComponent(_))
    ));
    assert!(matches!(check_hom_lie(&a), Err(Error::MissingComponent(_))));
    let zero = a.with_mu(Some(BilinearProduct::zero(2))).unwrap();
    assert!(check_hom_associative(&zero).unwrap().holds());
    let id = EvenLinearMap::identity(a.basis());
    assert!(check_morphism(&id, &a, &a).unwrap().holds());
}
