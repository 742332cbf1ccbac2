mod common;

use algcheck_core::algebra::{BilinearProduct, GradedBasis};
use algcheck_core::fixtures;
use algcheck_core::operators::{
    check_nijenhuis_transfer, check_operator_scoped, search_diagonal_operators, OperatorKind,
    Product, ProductScope, SearchParams,
};
use algcheck_core::report::Domain;
use algcheck_core::report::Section;
use algcheck_core::scalar::{int, ratio};
use algcheck_core::{
    apply_product, check_operator, Error, EvenLinearMap, GradedAlgebra, Matrix, OperatorClaim,
    Scalar,
};
use proptest::prelude::*;

fn mirrored_centroid(a: &GradedAlgebra, claim: &OperatorClaim) -> Section {
    // beta([x, y]) = [alpha^k x, beta y]
    let br = a.bracket().unwrap();
    let ak = a.alpha().power(claim.power);
    let mut s = Section::new("mirrored", Domain::Basis);
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let (x, y) = (basis(a, i), basis(a, j));
            let lhs = claim.map.apply(&apply_product(br, &x, &y).unwrap());
            let rhs = apply_product(br, &ak.apply(&x), &claim.map.apply(&y)).unwrap();
            s.record(vec![i, j], lhs, rhs);
        }
    }
    s
}

fn basis(a: &GradedAlgebra, i: usize) -> Vec<Scalar> {
    let mut v = vec![int(0); a.dim()];
    v[i] = int(1);
    v
}

#[test]
fn centroid_elements_satisfy_the_mirrored_identity() {
    let mut seen = 0;
    for (name, a) in fixtures::hom_poisson_corpus() {
        let candidates = [int(-1), int(0), int(1), int(2)];
        for power in 0..=1 {
            let params = SearchParams {
                kind: OperatorKind::Centroid,
                power,
                weight: int(0),
                scope: ProductScope::All,
            };
            if a.dim() > 4 {
                continue;
            }
            for map in search_diagonal_operators(&a, &params, &candidates).unwrap() {
                let claim = OperatorClaim::centroid(map, power);
                assert!(mirrored_centroid(&a, &claim).holds(), "{name}");
                seen += 1;
            }
        }
    }
    assert!(seen > 20);
}

#[test]
fn square_zero_derivation_is_averaging() {
    let a = fixtures::nilpotent_3d();
    let d = a.even_map(fixtures::nilpotent_differential()).unwrap();
    assert!(d.compose(&d).matrix().is_zero());
    // derivation: d(xy) = d(x)y + x d(y)
    let mu = a.mu().unwrap();
    for i in 0..3 {
        for j in 0..3 {
            let (x, y) = (basis(&a, i), basis(&a, j));
            let lhs = d.apply(&apply_product(mu, &x, &y).unwrap());
            let l = apply_product(mu, &d.apply(&x), &y).unwrap();
            let r = apply_product(mu, &x, &d.apply(&y)).unwrap();
            let rhs: Vec<Scalar> = l.iter().zip(&r).map(|(p, q)| p + q).collect();
            assert_eq!(lhs, rhs);
        }
    }
    assert!(check_operator(&a, &OperatorClaim::averaging(d, 0))
        .unwrap()
        .holds());
}

#[test]
fn example_rota_baxter_on_the_three_dim_algebra() {
    let a = fixtures::hom_poisson_3d(int(2), 1);
    for l in [int(1), ratio(1, 2), int(-3)] {
        let r = EvenLinearMap::scalar(a.basis(), -l.clone());
        let rep = check_operator(&a, &OperatorClaim::rota_baxter(r, l)).unwrap();
        assert!(rep.section("rota-baxter(mu)").is_some());
        assert!(rep.section("rota-baxter(bracket)").is_some());
        assert!(rep.holds());
    }
}

#[test]
fn wrong_weight_is_reported() {
    let a = fixtures::rota_baxter_2d();
    let r = EvenLinearMap::scalar(a.basis(), int(-1));
    let rep = check_operator(&a, &OperatorClaim::rota_baxter(r, ratio(1, 2))).unwrap();
    assert!(!rep.holds());
    assert!(rep
        .section("rota-baxter-alpha-commutation")
        .unwrap()
        .holds());
}

#[test]
fn single_product_scope() {
    let a = fixtures::rota_baxter_2d();
    let id = EvenLinearMap::identity(a.basis());
    let claim = OperatorClaim::nijenhuis(id);
    assert!(matches!(
        check_operator_scoped(&a, &claim, ProductScope::Only(Product::Bracket)),
        Err(Error::MissingComponent(_))
    ));
    assert!(
        check_operator_scoped(&a, &claim, ProductScope::Only(Product::Mu))
            .unwrap()
            .holds()
    );
}

#[test]
fn nijenhuis_transfer_regression() {
    let a = fixtures::rota_baxter_2d();
    assert!(
        check_nijenhuis_transfer(&a, &EvenLinearMap::identity(a.basis()))
            .unwrap()
            .holds()
    );
    assert!(
        check_nijenhuis_transfer(&a, &EvenLinearMap::scalar(a.basis(), int(0)))
            .unwrap()
            .holds()
    );
    let n = EvenLinearMap::diagonal(a.basis(), vec![int(1), int(0)]).unwrap();
    let Err(Error::Gate { report, .. }) = check_nijenhuis_transfer(&a, &n) else {
        panic!("diag(1, 0) passes the gate");
    };
    let v = &report.section("nijenhuis(mu)").unwrap().violations;
    assert_eq!(v.len(), 1);
    assert_eq!(v[0].indices, vec![1, 1]);
    assert_eq!(
        (v[0].lhs.clone(), v[0].rhs.clone()),
        (vec![int(0), int(0)], vec![int(-1), int(0)])
    );
}

#[test]
fn search_finds_the_example_operator() {
    let a = fixtures::rota_baxter_2d();
    let params = SearchParams {
        kind: OperatorKind::RotaBaxter,
        power: 0,
        weight: int(1),
        scope: ProductScope::All,
    };
    let found = search_diagonal_operators(&a, &params, &[int(0), int(1), int(-1)]).unwrap();
    assert!(found.contains(&EvenLinearMap::scalar(a.basis(), int(-1))));
    assert!(found.contains(&EvenLinearMap::scalar(a.basis(), int(0))));
    assert!(search_diagonal_operators(&a, &params, &[])
        .unwrap()
        .is_empty());
}

/// Relabels basis vector `i` as `perm[i]`.
fn relabel(a: &GradedAlgebra, perm: &[usize]) -> GradedAlgebra {
    let n = a.dim();
    let mut degrees = vec![a.group().zero(); n];
    for i in 0..n {
        degrees[perm[i]] = a.basis().degree(i).clone();
    }
    let basis = GradedBasis::new(a.group(), degrees).unwrap();
    let move_product = |p: &BilinearProduct| {
        BilinearProduct::from_triples(
            n,
            p.triples()
                .map(|(i, j, k, c)| (perm[i], perm[j], perm[k], c.clone())),
        )
        .unwrap()
    };
    let alpha = EvenLinearMap::new(conjugate(a.alpha().matrix(), perm), &basis).unwrap();
    GradedAlgebra::new(
        a.group().clone(),
        a.factor().clone(),
        basis,
        a.mu().map(move_product),
        a.bracket().map(move_product),
        alpha,
    )
    .unwrap()
}

fn conjugate(m: &Matrix, perm: &[usize]) -> Matrix {
    let mut out = Matrix::zeros(m.dim());
    for i in 0..m.dim() {
        for j in 0..m.dim() {
            out.set(perm[i], perm[j], m.get(i, j).clone());
        }
    }
    out
}

fn small_rational() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, 1i64..=2).prop_map(|(p, q)| ratio(p, q))
}

fn kind() -> impl Strategy<Value = OperatorKind> {
    prop_oneof![
        Just(OperatorKind::Centroid),
        Just(OperatorKind::Averaging),
        Just(OperatorKind::RotaBaxter),
        Just(OperatorKind::Nijenhuis),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn verdicts_are_invariant_under_relabeling(
        perm in Just(vec![0usize, 1, 2]).prop_shuffle(),
        diag in proptest::collection::vec(small_rational(), 3),
        off in small_rational(),
        kind in kind(),
        power in 0u32..=2,
        weight in small_rational(),
    ) {
        let a = fixtures::hom_poisson_3d(int(2), 1);
        // e1 and e2 share a degree, so an off-diagonal entry between them is even
        let mut m = Matrix::diagonal(diag);
        m.set(0, 1, off);
        let map = a.even_map(m.clone()).unwrap();
        let claim = OperatorClaim { map, kind, power, weight: weight.clone() };
        let b = relabel(&a, &perm);
        let moved = OperatorClaim { map: b.even_map(conjugate(&m, &perm)).unwrap(), kind, power, weight };
        let r = check_operator(&a, &claim).unwrap();
        let s = check_operator(&b, &moved).unwrap();
        prop_assert_eq!(r.holds(), s.holds());
        prop_assert_eq!(r.violation_count(), s.violation_count());
    }
}
