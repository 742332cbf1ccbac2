//! Construction cases shared by the integration and acceptance tests.
#![allow(dead_code)]

use algcheck_core::constructions::{self, Construction};
use algcheck_core::fixtures;
use algcheck_core::scalar::{int, ratio};
use algcheck_core::{EvenLinearMap, GradedAlgebra, Matrix, Result, Scalar};

pub struct Case {
    pub op: &'static str,
    pub label: String,
    pub input: GradedAlgebra,
    pub result: Result<Construction>,
    /// The parameter is neutral and the output must equal the input.
    pub neutral: bool,
}

impl Case {
    fn neutral(mut self) -> Self {
        self.neutral = true;
        self
    }
}

fn case(
    op: &'static str,
    label: impl Into<String>,
    input: &GradedAlgebra,
    result: Result<Construction>,
) -> Case {
    Case {
        op,
        label: label.into(),
        input: input.clone(),
        result,
        neutral: false,
    }
}

pub fn scalar(a: &GradedAlgebra, c: Scalar) -> EvenLinearMap {
    EvenLinearMap::scalar(a.basis(), c)
}

pub fn swap_e1_e2(a: &GradedAlgebra) -> EvenLinearMap {
    let mut m = Matrix::identity(a.dim());
    m.set(0, 0, int(0));
    m.set(1, 1, int(0));
    m.set(0, 1, int(1));
    m.set(1, 0, int(1));
    a.even_map(m).unwrap()
}

/// Neutral and nontrivial parameterizations of the ten constructions.
pub fn construction_cases() -> Vec<Case> {
    let mut out = Vec::new();
    let hp = fixtures::hom_poisson_3d(int(2), 1);
    let hp0 = fixtures::hom_poisson_3d(int(-3), 0);
    let pa = fixtures::rota_baxter_2d_polarized();
    let klein = fixtures::klein_group_algebra(false);
    let klein_tw = fixtures::klein_group_algebra(true);
    let kg = klein.group().clone();

    for (name, k) in [("klein", &klein), ("klein-twisted", &klein_tw)] {
        for (sname, s) in [
            ("sigma=1", fixtures::sigma_constant(&kg, int(1))),
            ("sigma=(-1)^(x1 y1)", fixtures::sigma_symmetric()),
            ("sigma=3", fixtures::sigma_constant(&kg, int(3))),
        ] {
            out.push(case(
                "multiplier-sym",
                format!("{name}, {sname}"),
                k,
                constructions::multiplier_twist_symmetric(k, &s),
            ));
        }
        for (sname, s) in [
            ("sigma=1", fixtures::sigma_constant(&kg, int(1))),
            ("sigma=(-1)^(i1 j2)", fixtures::sigma_asymmetric()),
            ("sigma=(-1)^(x1 y1)", fixtures::sigma_symmetric()),
        ] {
            let endos = vec![("id".to_string(), EvenLinearMap::identity(k.basis()))];
            out.push(case(
                "multiplier-delta",
                format!("{name}, {sname}"),
                k,
                constructions::multiplier_twist_delta(k, &s, &endos),
            ));
        }
    }

    for (name, p) in [("3d", &hp), ("3d a=-3 E=0", &hp0), ("P(A)", &pa)] {
        out.push(
            case(
                "transport",
                format!("{name}, f=id"),
                p,
                constructions::transport_along_bijection(p, &EvenLinearMap::identity(p.basis())),
            )
            .neutral(),
        );
        out.push(case(
            "transport",
            format!("{name}, f=2id"),
            p,
            constructions::transport_along_bijection(p, &scalar(p, int(2))),
        ));
    }
    out.push(case(
        "transport",
        "3d, f=swap(e1,e2)",
        &hp,
        constructions::transport_along_bijection(&hp, &swap_e1_e2(&hp)),
    ));

    for (name, p) in [("3d", &hp), ("3d a=-3 E=0", &hp0)] {
        for (c, label) in [
            (int(1), "1"),
            (int(0), "0"),
            (int(2), "2"),
            (ratio(-1, 3), "-1/3"),
        ] {
            out.push(case(
                "centroid",
                format!("{name}, beta={label}id"),
                p,
                constructions::centroid_twist(p, &scalar(p, c)),
            ));
        }
    }

    let itga = fixtures::idempotent_twisted_group_algebra();
    for (name, p) in [("3d", &hp), ("P(A)", &pa)] {
        out.push(
            case(
                "averaging-pair",
                format!("{name}, beta=id"),
                p,
                constructions::averaging_twist_pairwise(p, &EvenLinearMap::identity(p.basis())),
            )
            .neutral(),
        );
        out.push(case(
            "averaging-pair",
            format!("{name}, beta=0"),
            p,
            constructions::averaging_twist_pairwise(p, &scalar(p, int(0))),
        ));
    }
    out.push(case(
        "averaging-pair",
        "idempotent-twisted, beta=alpha",
        &itga,
        constructions::averaging_twist_pairwise(&itga, itga.alpha()),
    ));

    let ga = fixtures::group_algebra_z2();
    out.push(
        case(
            "averaging-untwisted",
            "K[Z2], beta=id",
            &ga,
            constructions::averaging_twist_untwisted(&ga, &EvenLinearMap::identity(ga.basis())),
        )
        .neutral(),
    );
    out.push(case(
        "averaging-untwisted",
        "K[Z2], beta=0",
        &ga,
        constructions::averaging_twist_untwisted(&ga, &scalar(&ga, int(0))),
    ));
    let e = ga.even_map(fixtures::idempotent_projection()).unwrap();
    out.push(case(
        "averaging-untwisted",
        "K[Z2], beta=(1+g)/2",
        &ga,
        constructions::averaging_twist_untwisted(&ga, &e),
    ));

    out.push(
        case(
            "averaging-power",
            "3d, k=0, beta=id",
            &hp,
            constructions::averaging_twist_power(&hp, &EvenLinearMap::identity(hp.basis()), 0),
        )
        .neutral(),
    );
    let sq = fixtures::odd_square(int(3));
    out.push(case(
        "averaging-power",
        "odd-square, k=1, beta=alpha",
        &sq,
        constructions::averaging_twist_power(&sq, sq.alpha(), 1),
    ));
    out.push(case(
        "averaging-power",
        "K[Z2], k=2, beta=3id",
        &ga,
        constructions::averaging_twist_power(&ga, &scalar(&ga, int(3)), 2),
    ));

    for (name, p) in [("3d", &hp), ("P(A)", &pa)] {
        for (c, label) in [(int(1), "1"), (int(0), "0"), (int(3), "3")] {
            out.push(case(
                "nijenhuis",
                format!("{name}, N={label}id"),
                p,
                constructions::nijenhuis_twist(p, &scalar(p, c)),
            ));
        }
    }

    for (name, p) in [("3d", &hp), ("P(A)", &pa)] {
        for (l, label) in [(int(0), "0"), (int(1), "1"), (ratio(1, 2), "1/2")] {
            out.push(case(
                "rota-baxter",
                format!("{name}, R=-{label}id, weight {label}"),
                p,
                constructions::rota_baxter_twist(p, &scalar(p, -l.clone()), &l),
            ));
        }
        out.push(
            case(
                "rota-baxter",
                format!("{name}, R=0, weight 1"),
                p,
                constructions::rota_baxter_twist(p, &scalar(p, int(0)), &int(1)),
            )
            .neutral(),
        );
    }

    for (name, p) in [("3d", &hp), ("3d a=-3 E=0", &hp0)] {
        let (g, f) = (p.group(), p.factor());
        out.push(
            case(
                "tensor",
                format!("unit (x) {name}"),
                p,
                constructions::tensor_with_commutative(&fixtures::unital_over(g, f), p),
            )
            .neutral(),
        );
        out.push(case(
            "tensor",
            format!("commutative-2d (x) {name}"),
            p,
            constructions::tensor_with_commutative(&fixtures::commutative_2d(g, f), p),
        ));
        out.push(case(
            "tensor",
            format!("sqrt2 (x) {name}"),
            p,
            constructions::tensor_with_commutative(&fixtures::sqrt2_field(g, f), p),
        ));
    }
    for c in &mut out {
        let label = c.label.as_str();
        if label.ends_with("sigma=1") || label.ends_with("beta=1id") || label.ends_with("N=1id") {
            c.neutral = true;
        }
    }
    out
}

/// The ten operations covered by [`construction_cases`].
pub const OPERATIONS: [&str; 10] = [
    "multiplier-sym",
    "multiplier-delta",
    "transport",
    "centroid",
    "averaging-pair",
    "averaging-untwisted",
    "averaging-power",
    "nijenhuis",
    "rota-baxter",
    "tensor",
];

pub mod sample {
    use algcheck_core::oracle::{indices_of_degree, Homogeneous};
    use algcheck_core::scalar::ratio;
    use algcheck_core::{GradedAlgebra, Scalar};
    use rand::rngs::StdRng;
    use rand::Rng;

    pub fn rational(rng: &mut StdRng) -> Scalar {
        ratio(rng.gen_range(-6..=6), rng.gen_range(1..=5))
    }

    /// A random element of a random degree occurring in the basis.
    pub fn homogeneous(a: &GradedAlgebra, rng: &mut StdRng) -> Homogeneous {
        let i = rng.gen_range(0..a.dim());
        let degree = a.basis().degree(i).clone();
        let mut coeffs = vec![ratio(0, 1); a.dim()];
        for j in indices_of_degree(a, &degree) {
            coeffs[j] = rational(rng);
        }
        Homogeneous::new(a, degree, coeffs).unwrap()
    }
}
