use algcheck_core::algebra::{BilinearProduct, GradedBasis};
use algcheck_core::constructions::rota_baxter_twist;
use algcheck_core::document::{
    parse_document, parse_document_with_bound, serialize_document, AlgebraDocument, DiagnosticCode,
};
use algcheck_core::fixtures;
use algcheck_core::scalar::{int, ratio};
use algcheck_core::{
    CommutationFactor, EvenLinearMap, GradedAlgebra, GroupSpec, Matrix, Scalar, SignBicharacter,
};
use proptest::prelude::*;

const EXAMPLE: &str = include_str!("../fixtures/hom-poisson-3d.json");

fn code_of(text: &str) -> DiagnosticCode {
    parse_document(text).unwrap_err().code
}

#[test]
fn shipped_example_parses_and_holds() {
    let doc = parse_document(EXAMPLE).unwrap();
    assert_eq!(doc.algebra, fixtures::hom_poisson_3d(int(2), 1));
    assert_eq!(doc.operators.len(), 4);
    assert_eq!(serialize_document(&doc), EXAMPLE);
}

#[test]
fn each_failure_has_its_code() {
    let cases = [
        (
            EXAMPLE.replace("\"name\"", "\"name\" 1"),
            DiagnosticCode::MalformedJson,
        ),
        (
            EXAMPLE.replace("\"degrees\"", "\"unused\""),
            DiagnosticCode::UnknownField,
        ),
        (
            EXAMPLE.replace("[2, 3, 3, \"1\"]", "[2, 3, 3, 1.5]"),
            DiagnosticCode::BadScalar,
        ),
        (
            EXAMPLE.replace("\"name\": \"hom-poisson-3d\"", "\"name\": 5"),
            DiagnosticCode::WrongType,
        ),
        (
            EXAMPLE.replace("\"1/2\"", "\"x/2\""),
            DiagnosticCode::BadScalar,
        ),
        (
            EXAMPLE.replace("\"1/2\"", "\"1/0\""),
            DiagnosticCode::ZeroDenominator,
        ),
        (
            EXAMPLE.replace("[2, 3, 3, \"1\"]", "[2, 3, 4, \"1\"]"),
            DiagnosticCode::Shape,
        ),
        (
            EXAMPLE.replace("[2, 3, 3, \"1\"]", "[2, 3, 2, \"1\"]"),
            DiagnosticCode::ProductNotEven,
        ),
        (
            EXAMPLE.replace("[\"0\", \"0\", \"2\"]", "[\"1\", \"0\", \"2\"]"),
            DiagnosticCode::NotEven,
        ),
        (
            EXAMPLE.replace("[2, 2, 2, \"1/2\"]", "[2, 1, 2, \"7\"]"),
            DiagnosticCode::DuplicateEntry,
        ),
        (
            EXAMPLE.replace("\"moduli\": [2]", "\"moduli\": [0]"),
            DiagnosticCode::InvalidGroup,
        ),
        (
            EXAMPLE.replace("\"moduli\": [2]", "\"moduli\": [3]"),
            DiagnosticCode::InvalidEpsilon,
        ),
    ];
    for (text, code) in cases {
        assert_ne!(text, EXAMPLE, "{code:?} mutation did not apply");
        assert_eq!(code_of(&text), code, "{text}");
    }
    let mut v: serde_json::Value = serde_json::from_str(EXAMPLE).unwrap();
    v.as_object_mut().unwrap().remove("alpha");
    assert_eq!(code_of(&v.to_string()), DiagnosticCode::MissingField);
}

#[test]
fn degree_out_of_range_and_empty_basis() {
    let bad = EXAMPLE.replace(
        "[\n    [0],\n    [0],\n    [1]\n  ]",
        "[\n    [0],\n    [0],\n    [2]\n  ]",
    );
    assert_ne!(bad, EXAMPLE);
    let d = parse_document(&bad).unwrap_err();
    assert_eq!(d.code, DiagnosticCode::DegreeOutOfRange);
    assert_eq!(d.field, "degrees[2][0]");
    assert_eq!(d.line, 10);

    let empty = r#"{"alpha": [], "degrees": [], "epsilon": {"exponents": [[0]]}, "group": {"moduli": [2]},
        "name": "empty", "products": {}}"#;
    assert_eq!(code_of(empty), DiagnosticCode::Shape);
}

#[test]
fn group_bound_is_configurable() {
    let klein = include_str!("../fixtures/klein-group-algebra.json");
    assert!(parse_document_with_bound(klein, 4).is_ok());
    assert_eq!(
        parse_document_with_bound(klein, 3).unwrap_err().code,
        DiagnosticCode::InvalidGroup
    );
}

#[test]
fn rota_baxter_twist_serializes_its_unit() {
    let p = fixtures::rota_baxter_2d_polarized();
    let r = EvenLinearMap::scalar(p.basis(), int(-1));
    let c = rota_baxter_twist(&p, &r, &int(1)).unwrap();
    let text = serialize_document(&AlgebraDocument::new("twisted", c.algebra));
    assert!(text.contains("[1, 1, 1, \"1\"]"), "{text}");
}

#[test]
fn table_factors_round_trip() {
    let k = fixtures::klein_group_algebra(false);
    let c = algcheck_core::constructions::multiplier_twist_delta(
        &k,
        &fixtures::sigma_asymmetric(),
        &[],
    )
    .unwrap();
    assert!(matches!(c.algebra.factor(), CommutationFactor::Table(_)));
    let text = serialize_document(&AlgebraDocument::new("delta", c.algebra.clone()));
    assert!(text.contains("\"table\""));
    assert_eq!(parse_document(&text).unwrap().algebra, c.algebra);
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=9).prop_map(|(p, q)| ratio(p, q))
}

/// A random algebra over `Z2` whose products respect the grading.
fn algebra() -> impl Strategy<Value = GradedAlgebra> {
    (1usize..=4, proptest::collection::vec(0u8..2, 4), 0i64..2).prop_flat_map(|(n, parity, e)| {
        let parity: Vec<u8> = parity[..n].to_vec();
        let cells = proptest::collection::vec(proptest::option::of(scalar()), n * n * n);
        let alpha = proptest::collection::vec(scalar(), n * n);
        let with_bracket = any::<bool>();
        (Just(parity), Just(e), cells, alpha, with_bracket).prop_map(
            move |(parity, e, cells, alpha, with_bracket)| {
                let g = GroupSpec::cyclic(2).unwrap();
                let coords: Vec<Vec<i64>> = parity.iter().map(|&p| vec![p as i64]).collect();
                let refs: Vec<&[i64]> = coords.iter().map(Vec::as_slice).collect();
                let basis = GradedBasis::from_coords(&g, &refs).unwrap();
                let mut triples = Vec::new();
                for (idx, c) in cells.into_iter().enumerate() {
                    let (i, j, k) = (idx / (n * n), idx / n % n, idx % n);
                    if let Some(c) = c {
                        if (parity[i] ^ parity[j]) == parity[k] {
                            triples.push((i, j, k, c));
                        }
                    }
                }
                let mut m = Matrix::zeros(n);
                for i in 0..n {
                    for j in 0..n {
                        if parity[i] == parity[j] {
                            m.set(i, j, alpha[i * n + j].clone());
                        }
                    }
                }
                let mu = BilinearProduct::from_triples(n, triples.clone()).unwrap();
                let bracket = with_bracket.then(|| {
                    BilinearProduct::from_triples(
                        n,
                        triples.into_iter().rev().map(|(i, j, k, c)| (j, i, k, -c)),
                    )
                    .unwrap()
                });
                GradedAlgebra::new(
                    g,
                    CommutationFactor::Sign(SignBicharacter::new(vec![vec![e]]).unwrap()),
                    basis.clone(),
                    Some(mu),
                    bracket,
                    EvenLinearMap::new(m, &basis).unwrap(),
                )
                .unwrap()
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn parse_inverts_serialize(a in algebra(), name in "\\PC{0,12}", note in "[a-z \"\\\\]{0,10}") {
        let op = a.alpha().matrix().clone();
        let doc = AlgebraDocument::new(name, a).with_operator("op", op).unwrap().with_metadata("note", note);
        let text = serialize_document(&doc);
        let back = parse_document(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(serialize_document(&back), text);
    }
}
