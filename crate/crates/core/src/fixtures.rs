//! Reference algebras, operators and multipliers used by the tests, the
//! acceptance suite and the shipped fixture files.
//!
//! Basis indices are 0-based here; reports print them 1-based.

use crate::algebra::{BilinearProduct, EvenLinearMap, GradedAlgebra, GradedBasis};
use crate::axioms::commutator_bracket;
use crate::document::AlgebraDocument;
use crate::grading::{CommutationFactor, GroupSpec, MultiplierTable, SignBicharacter};
use crate::linalg::Matrix;
use crate::scalar::{int, ratio, Scalar};

type Triple = (usize, usize, usize, Scalar);

fn sign(rows: Vec<Vec<i64>>) -> CommutationFactor {
    CommutationFactor::Sign(SignBicharacter::new(rows).expect("fixture bicharacter"))
}

fn build(
    group: GroupSpec,
    factor: CommutationFactor,
    degrees: &[&[i64]],
    mu: Option<Vec<Triple>>,
    bracket: Option<Vec<Triple>>,
    alpha: Matrix,
) -> GradedAlgebra {
    let basis = GradedBasis::from_coords(&group, degrees).expect("fixture degrees");
    let n = basis.dim();
    let product = |t: Vec<Triple>| BilinearProduct::from_triples(n, t).expect("fixture product");
    let alpha = EvenLinearMap::new(alpha, &basis).expect("fixture alpha");
    GradedAlgebra::new(
        group,
        factor,
        basis,
        mu.map(product),
        bracket.map(product),
        alpha,
    )
    .expect("fixture algebra")
}

fn z2() -> GroupSpec {
    GroupSpec::cyclic(2).expect("Z2")
}

fn klein() -> GroupSpec {
    GroupSpec::new(vec![2, 2]).expect("Z2 x Z2")
}

fn diag(v: &[i64]) -> Matrix {
    Matrix::diagonal(v.iter().map(|&x| int(x)).collect())
}

/// Two-dimensional Rota-Baxter example: `Z2`-graded, `e1` even, `e2` odd,
/// `e1e1 = -e1`, `e1e2 = e2e1 = e2`, `e2e2 = e1`, `alpha = diag(1, -1)`,
/// `eps(1, 1) = -1`. Carries `mu` only.
pub fn rota_baxter_2d() -> GradedAlgebra {
    build(
        z2(),
        sign(vec![vec![1]]),
        &[&[0], &[1]],
        Some(vec![
            (0, 0, 0, int(-1)),
            (0, 1, 1, int(1)),
            (1, 0, 1, int(1)),
            (1, 1, 0, int(1)),
        ]),
        None,
        diag(&[1, -1]),
    )
}

/// The two-dimensional example with its commutator bracket `[e2, e2] = 2e1`.
pub fn rota_baxter_2d_polarized() -> GradedAlgebra {
    commutator_bracket(&rota_baxter_2d()).expect("hom-associative fixture")
}

fn hom_poisson_3d_products(a: &Scalar, corrected: bool) -> Vec<Triple> {
    let mut mu = vec![
        (0, 0, 0, int(1)),
        (0, 1, 1, int(1)),
        (0, 2, 2, a.clone()),
        (1, 0, 1, int(1)),
        (1, 2, 2, int(1)),
        (2, 0, 2, a.clone()),
    ];
    if corrected {
        mu.push((1, 1, 1, a.recip()));
    }
    mu
}

fn hom_poisson_3d_with(a: Scalar, e_exp: i64, corrected: bool) -> GradedAlgebra {
    assert!(a != int(0), "parameter a must be nonzero");
    build(
        z2(),
        sign(vec![vec![e_exp]]),
        &[&[0], &[0], &[1]],
        Some(hom_poisson_3d_products(&a, corrected)),
        Some(vec![(1, 2, 2, int(1)), (2, 1, 2, int(-1))]),
        Matrix::diagonal(vec![int(1), int(1), a]),
    )
}

/// Three-dimensional Hom-Poisson example over `Z2` with parameter `a != 0`
/// and `eps(1, 1) = (-1)^e_exp`. The cell `e2e2 = (1/a)e2` is present.
pub fn hom_poisson_3d(a: Scalar, e_exp: i64) -> GradedAlgebra {
    hom_poisson_3d_with(a, e_exp, true)
}

/// The same table with `e2e2` absent, as first printed.
pub fn hom_poisson_3d_as_printed(a: Scalar, e_exp: i64) -> GradedAlgebra {
    hom_poisson_3d_with(a, e_exp, false)
}

/// `e·e = e` in degree 0 of the trivial group, `alpha = id`, `mu` only.
pub fn unital_1d() -> GradedAlgebra {
    build(
        GroupSpec::trivial(),
        sign(vec![]),
        &[&[]],
        Some(vec![(0, 0, 0, int(1))]),
        None,
        Matrix::identity(1),
    )
}

fn degree_zero(
    group: &GroupSpec,
    factor: &CommutationFactor,
    n: usize,
    mu: Vec<Triple>,
) -> GradedAlgebra {
    let basis = GradedBasis::new(group, vec![group.zero(); n]).expect("degree-zero basis");
    GradedAlgebra::new(
        group.clone(),
        factor.clone(),
        basis.clone(),
        Some(BilinearProduct::from_triples(n, mu).expect("fixture product")),
        None,
        EvenLinearMap::identity(&basis),
    )
    .expect("degree-zero fixture")
}

/// One-dimensional unital algebra in degree 0 over the given grading.
pub fn unital_over(group: &GroupSpec, factor: &CommutationFactor) -> GradedAlgebra {
    degree_zero(group, factor, 1, vec![(0, 0, 0, int(1))])
}

/// `u·u = u`, `u·v = v·u = v`, `v·v = 0`, all in degree 0.
pub fn commutative_2d(group: &GroupSpec, factor: &CommutationFactor) -> GradedAlgebra {
    degree_zero(
        group,
        factor,
        2,
        vec![(0, 0, 0, int(1)), (0, 1, 1, int(1)), (1, 0, 1, int(1))],
    )
}

/// `K[t]/(t^2 - 2)` on the basis `1, t`, in degree 0.
pub fn sqrt2_field(group: &GroupSpec, factor: &CommutationFactor) -> GradedAlgebra {
    degree_zero(
        group,
        factor,
        2,
        vec![
            (0, 0, 0, int(1)),
            (0, 1, 1, int(1)),
            (1, 0, 1, int(1)),
            (1, 1, 0, int(2)),
        ],
    )
}

/// Upper triangular 2x2 matrices, basis `E11, E12, E22` with `E12` odd,
/// `eps(1, 1) = -1`, `alpha = id`. Carries `mu` only.
pub fn upper_triangular() -> GradedAlgebra {
    build(
        z2(),
        sign(vec![vec![1]]),
        &[&[0], &[1], &[0]],
        Some(vec![
            (0, 0, 0, int(1)),
            (0, 1, 1, int(1)),
            (1, 2, 1, int(1)),
            (2, 2, 2, int(1)),
        ]),
        None,
        Matrix::identity(3),
    )
}

fn group_algebra_z2_products() -> Vec<Triple> {
    vec![
        (0, 0, 0, int(1)),
        (0, 1, 1, int(1)),
        (1, 0, 1, int(1)),
        (1, 1, 0, int(1)),
    ]
}

/// `K[Z2]` on the basis `1, g` with `g` odd and `eps = 1`. Carries `mu` only.
pub fn group_algebra_z2_graded() -> GradedAlgebra {
    build(
        z2(),
        sign(vec![vec![0]]),
        &[&[0], &[1]],
        Some(group_algebra_z2_products()),
        None,
        Matrix::identity(2),
    )
}

/// Ungraded `K[Z2]` on the basis `1, g` as a Poisson algebra: zero
/// bracket, `alpha = id`.
pub fn group_algebra_z2() -> GradedAlgebra {
    build(
        GroupSpec::trivial(),
        sign(vec![]),
        &[&[], &[]],
        Some(group_algebra_z2_products()),
        Some(vec![]),
        Matrix::identity(2),
    )
}

/// Multiplication by the idempotent `(1 + g)/2` of `K[Z2]`, a projection
/// onto a one-dimensional ideal.
pub fn idempotent_projection() -> Matrix {
    let h = ratio(1, 2);
    Matrix::from_rows(vec![vec![h.clone(), h.clone()], vec![h.clone(), h]]).expect("2x2")
}

/// Projection of `K[Z2]` onto the unit line `K·1`, killing `g`.
pub fn unit_projection() -> Matrix {
    diag(&[1, 0])
}

/// `K[Z2]` with `mu(x, y) = e·x·y` and `alpha` the multiplication by
/// `e = (1 + g)/2`. Here `alpha` is an idempotent algebra endomorphism.
pub fn idempotent_twisted_group_algebra() -> GradedAlgebra {
    let e = idempotent_projection();
    let base = group_algebra_z2();
    let mu = base.mu().expect("mu").to_dense().postcompose(&e);
    let a = base
        .with_mu(Some(BilinearProduct::from_dense(&mu)))
        .expect("twisted mu");
    a.with_alpha(a.even_map(e).expect("degree zero"))
        .expect("alpha")
}

/// `K[Z2 x Z2]` on `e_g`, `g` in lexicographic order, graded by `g` with
/// `eps(g, h) = (-1)^(g1 h1 + g2 h2)` and the commutator bracket.
///
/// With `twisted`, `alpha(e_g) = (-1)^g1 e_g` and `mu(e_g, e_h) =
/// (-1)^(g1 + h1) e_(g+h)`; otherwise `alpha = id` and `mu(e_g, e_h) = e_(g+h)`.
pub fn klein_group_algebra(twisted: bool) -> GradedAlgebra {
    let g = klein();
    let chi = |idx: usize| if twisted && idx >= 2 { int(-1) } else { int(1) };
    let mut mu = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            let k = i ^ j;
            mu.push((i, j, k, chi(k)));
        }
    }
    let alpha = Matrix::diagonal((0..4).map(chi).collect());
    let a = build(
        g,
        sign(vec![vec![1, 0], vec![0, 1]]),
        &[&[0, 0], &[0, 1], &[1, 0], &[1, 1]],
        Some(mu),
        None,
        alpha,
    );
    commutator_bracket(&a).expect("hom-associative fixture")
}

/// Two-dimensional `Z2`-graded algebra with `theta` odd, `z` even,
/// `theta·theta = z`, `[theta, theta] = 2z`, `eps(1, 1) = -1` and
/// `alpha = diag(c, 1)`.
pub fn odd_square(c: Scalar) -> GradedAlgebra {
    build(
        z2(),
        sign(vec![vec![1]]),
        &[&[1], &[0]],
        Some(vec![(0, 0, 1, int(1))]),
        Some(vec![(0, 0, 1, int(2))]),
        Matrix::diagonal(vec![c, int(1)]),
    )
}

/// Ungraded three-dimensional algebra with `e1e1 = e2` as its only product,
/// zero bracket and `alpha = diag(2, 4, 2)`.
pub fn nilpotent_3d() -> GradedAlgebra {
    build(
        GroupSpec::trivial(),
        sign(vec![]),
        &[&[], &[], &[]],
        Some(vec![(0, 0, 1, int(1))]),
        Some(vec![]),
        diag(&[2, 4, 2]),
    )
}

/// `d(e1) = e3`, zero elsewhere: a square-zero derivation of
/// [`nilpotent_3d`] commuting with its `alpha`.
pub fn nilpotent_differential() -> Matrix {
    let mut m = Matrix::zeros(3);
    m.set(2, 0, int(1));
    m
}

/// The `Z x Z` sign `(-1)^((a1 + a2)(b1 + b2))`, stored through the parity
/// map on `Z2 x Z2`.
pub fn parity_quotient_bicharacter() -> (GroupSpec, SignBicharacter) {
    (
        klein(),
        SignBicharacter::new(vec![vec![1, 1], vec![1, 1]]).expect("parity sign"),
    )
}

/// `sigma((i1, i2), (j1, j2)) = (-1)^(i1 j2)` on `Z2 x Z2`.
pub fn sigma_asymmetric() -> MultiplierTable {
    MultiplierTable::from_fn(&klein(), |x, y| {
        if x.coords()[0] * y.coords()[1] % 2 == 1 {
            int(-1)
        } else {
            int(1)
        }
    })
    .expect("multiplier")
}

/// `sigma(x, y) = (-1)^(x1 y1)` on `Z2 x Z2`.
pub fn sigma_symmetric() -> MultiplierTable {
    MultiplierTable::from_fn(&klein(), |x, y| {
        if x.coords()[0] * y.coords()[0] % 2 == 1 {
            int(-1)
        } else {
            int(1)
        }
    })
    .expect("multiplier")
}

pub fn sigma_constant(group: &GroupSpec, c: Scalar) -> MultiplierTable {
    MultiplierTable::constant(group, c).expect("nonzero constant")
}

/// Every Hom-associative algebra in the corpus, by name.
pub fn hom_associative_corpus() -> Vec<(String, GradedAlgebra)> {
    let g = z2();
    let e = sign(vec![vec![1]]);
    let mut out = vec![
        ("rota-baxter-2d".to_string(), rota_baxter_2d()),
        ("unital-1d".to_string(), unital_1d()),
        ("upper-triangular".to_string(), upper_triangular()),
        (
            "group-algebra-z2-graded".to_string(),
            group_algebra_z2_graded(),
        ),
        ("group-algebra-z2".to_string(), group_algebra_z2()),
        (
            "idempotent-twisted-group-algebra".to_string(),
            idempotent_twisted_group_algebra(),
        ),
        (
            "klein-group-algebra".to_string(),
            klein_group_algebra(false),
        ),
        (
            "klein-group-algebra-twisted".to_string(),
            klein_group_algebra(true),
        ),
        ("odd-square".to_string(), odd_square(int(3))),
        ("nilpotent-3d".to_string(), nilpotent_3d()),
        ("commutative-2d".to_string(), commutative_2d(&g, &e)),
        ("sqrt2-field".to_string(), sqrt2_field(&g, &e)),
    ];
    for a in [int(1), int(2), int(-3)] {
        for exp in [0, 1] {
            out.push((
                format!("hom-poisson-3d(a={a},E=[{exp}])"),
                hom_poisson_3d(a.clone(), exp),
            ));
        }
    }
    out
}

/// Every Hom-Poisson algebra in the corpus, by name.
pub fn hom_poisson_corpus() -> Vec<(String, GradedAlgebra)> {
    let mut out = vec![
        (
            "rota-baxter-2d-polarized".to_string(),
            rota_baxter_2d_polarized(),
        ),
        ("group-algebra-z2".to_string(), group_algebra_z2()),
        (
            "idempotent-twisted-group-algebra".to_string(),
            idempotent_twisted_group_algebra(),
        ),
        (
            "klein-group-algebra".to_string(),
            klein_group_algebra(false),
        ),
        (
            "klein-group-algebra-twisted".to_string(),
            klein_group_algebra(true),
        ),
        ("odd-square".to_string(), odd_square(int(3))),
        ("nilpotent-3d".to_string(), nilpotent_3d()),
    ];
    for a in [int(1), int(2), int(-3)] {
        for exp in [0, 1] {
            out.push((
                format!("hom-poisson-3d(a={a},E=[{exp}])"),
                hom_poisson_3d(a.clone(), exp),
            ));
        }
    }
    out
}

fn scalar_map(a: &GradedAlgebra, c: Scalar) -> Matrix {
    EvenLinearMap::scalar(a.basis(), c).matrix().clone()
}

fn doc(name: &str, a: GradedAlgebra) -> AlgebraDocument {
    AlgebraDocument::new(name, a)
}

/// The documents shipped under `fixtures/`, keyed by file stem.
pub fn shipped_documents() -> Vec<(&'static str, AlgebraDocument)> {
    let with = |d: AlgebraDocument, ops: Vec<(&str, Matrix)>| {
        ops.into_iter().fold(d, |d, (n, m)| {
            d.with_operator(n, m).expect("fixture operator")
        })
    };
    let hp = hom_poisson_3d(int(2), 1);
    let mut swap = Matrix::zeros(3);
    swap.set(0, 1, int(1));
    swap.set(1, 0, int(1));
    swap.set(2, 2, int(1));
    let hom_poisson = with(
        doc("hom-poisson-3d", hp.clone()),
        vec![
            ("R", scalar_map(&hp, int(-1))),
            ("Id", Matrix::identity(3)),
            ("Two", scalar_map(&hp, int(2))),
            ("Swap", swap),
        ],
    )
    .with_metadata("a", "2")
    .with_metadata("R.weight", "1");
    let as_printed = doc(
        "hom-poisson-3d-as-printed",
        hom_poisson_3d_as_printed(int(2), 1),
    )
    .with_metadata("a", "2");

    let rb = rota_baxter_2d();
    let rota_baxter = with(
        doc("rota-baxter-2d", rb.clone()),
        vec![
            ("R", scalar_map(&rb, ratio(-1, 2))),
            ("Id", Matrix::identity(2)),
            ("Zero", Matrix::zeros(2)),
            ("N", diag(&[1, 0])),
        ],
    )
    .with_metadata("R.weight", "1/2");
    let pa = rota_baxter_2d_polarized();
    let polarized = with(
        doc("rota-baxter-2d-polarized", pa.clone()),
        vec![("R", scalar_map(&pa, int(-1)))],
    )
    .with_metadata("R.weight", "1");

    let klein_docs = [false, true].map(|t| {
        let name = if t {
            "klein-group-algebra-twisted"
        } else {
            "klein-group-algebra"
        };
        let a = klein_group_algebra(t);
        let alpha = a.alpha().matrix().clone();
        with(
            doc(name, a),
            vec![("Alpha", alpha), ("Id", Matrix::identity(4))],
        )
        .with_multiplier("sigma", sigma_asymmetric())
        .expect("multiplier")
        .with_multiplier("sigma-sym", sigma_symmetric())
        .expect("multiplier")
        .with_multiplier("one", sigma_constant(&klein(), int(1)))
        .expect("multiplier")
    });
    let [klein_plain, klein_twisted] = klein_docs;

    let g = z2();
    let e = sign(vec![vec![1]]);
    let ga = group_algebra_z2();
    let gtw = idempotent_twisted_group_algebra();
    let gtw_alpha = gtw.alpha().matrix().clone();
    let sq = odd_square(int(3));
    let sq_alpha = sq.alpha().matrix().clone();
    vec![
        ("hom-poisson-3d", hom_poisson),
        ("hom-poisson-3d-as-printed", as_printed),
        ("rota-baxter-2d", rota_baxter),
        ("rota-baxter-2d-polarized", polarized),
        ("klein-group-algebra", klein_plain),
        ("klein-group-algebra-twisted", klein_twisted),
        (
            "group-algebra-z2",
            with(
                doc("group-algebra-z2", ga),
                vec![
                    ("P", idempotent_projection()),
                    ("U", unit_projection()),
                    ("Id", Matrix::identity(2)),
                    ("Two", diag(&[2, 2])),
                ],
            ),
        ),
        (
            "group-algebra-z2-graded",
            doc("group-algebra-z2-graded", group_algebra_z2_graded()),
        ),
        (
            "idempotent-twisted-group-algebra",
            with(
                doc("idempotent-twisted-group-algebra", gtw),
                vec![("Alpha", gtw_alpha)],
            ),
        ),
        (
            "odd-square",
            with(doc("odd-square", sq), vec![("Alpha", sq_alpha)]).with_metadata("c", "3"),
        ),
        (
            "nilpotent-3d",
            with(
                doc("nilpotent-3d", nilpotent_3d()),
                vec![("D", nilpotent_differential())],
            ),
        ),
        ("unital-1d", doc("unital-1d", unital_1d())),
        ("unital-z2", doc("unital-z2", unital_over(&g, &e))),
        (
            "commutative-2d",
            doc("commutative-2d", commutative_2d(&g, &e)),
        ),
        ("sqrt2-field", doc("sqrt2-field", sqrt2_field(&g, &e))),
        (
            "upper-triangular",
            doc("upper-triangular", upper_triangular()),
        ),
        (
            "commutative-2d-klein",
            doc(
                "commutative-2d-klein",
                commutative_2d(&klein(), &sign(vec![vec![1, 0], vec![0, 1]])),
            ),
        ),
    ]
}
