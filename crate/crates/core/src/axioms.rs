//! Exhaustive axiom checkers.
//!
//! Each identity is assembled as a pair of tensors (left side, right side)
//! by composing structure constants, then compared on every basis tuple.
//! Multilinearity makes the basis verdict equal the verdict on the whole
//! algebra; `oracle` evaluates the same identities directly on vectors.

use crate::algebra::{EvenLinearMap, GradedAlgebra};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::report::{AxiomReport, Domain, Section};
use crate::tensor::{Bilinear, Trilinear};

/// The identities a graded algebra can be checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// `mu(alpha x, mu(y, z)) = mu(mu(x, y), alpha z)`
    HomAssociativity,
    /// `x(yz) = (xy)z`, the untwisted law
    Associativity,
    /// `mu(x, y) = eps(x, y) mu(y, x)`
    EpsilonCommutativity,
    /// `[x, y] = -eps(x, y) [y, x]`
    SkewSymmetry,
    /// `eps(z,x)[alpha x,[y,z]] + eps(x,y)[alpha y,[z,x]] + eps(y,z)[alpha z,[x,y]] = 0`
    HomJacobi,
    /// `{alpha x, mu(y, z)} = mu({x, y}, alpha z) + eps(x, y) mu(alpha y, {x, z})`
    HomLeibniz,
}

impl Axiom {
    pub const ALL: [Axiom; 6] = [
        Axiom::HomAssociativity,
        Axiom::Associativity,
        Axiom::EpsilonCommutativity,
        Axiom::SkewSymmetry,
        Axiom::HomJacobi,
        Axiom::HomLeibniz,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Axiom::HomAssociativity => "hom-associativity",
            Axiom::Associativity => "associativity",
            Axiom::EpsilonCommutativity => "epsilon-commutativity",
            Axiom::SkewSymmetry => "epsilon-skew-symmetry",
            Axiom::HomJacobi => "hom-jacobi",
            Axiom::HomLeibniz => "hom-leibniz",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Axiom::EpsilonCommutativity | Axiom::SkewSymmetry => 2,
            _ => 3,
        }
    }

    /// Whether `a` carries the components this identity is stated for.
    pub fn applies_to(self, a: &GradedAlgebra) -> bool {
        match self {
            Axiom::HomAssociativity | Axiom::Associativity | Axiom::EpsilonCommutativity => {
                a.mu().is_some()
            }
            Axiom::SkewSymmetry | Axiom::HomJacobi => a.bracket().is_some(),
            Axiom::HomLeibniz => a.mu().is_some() && a.bracket().is_some(),
        }
    }
}

/// Both sides of an identity as tensors.
#[derive(Debug, Clone)]
pub enum Sides {
    Pairs(Bilinear, Bilinear),
    Triples(Trilinear, Trilinear),
}

/// Builds the two sides of `axiom` on `a` from its structure constants.
pub fn axiom_sides(a: &GradedAlgebra, axiom: Axiom) -> Result<Sides> {
    let alpha = a.alpha().matrix();
    let eps = a.factor_on_basis();
    let n = a.dim();
    Ok(match axiom {
        Axiom::HomAssociativity => {
            let mu = a.require_mu()?.to_dense();
            let lhs = mu.nest_right(&mu).precompose_slot(0, alpha);
            let rhs = mu.nest_left(&mu).precompose_slot(2, alpha);
            Sides::Triples(lhs, rhs)
        }
        Axiom::Associativity => {
            let mu = a.require_mu()?.to_dense();
            Sides::Triples(mu.nest_right(&mu), mu.nest_left(&mu))
        }
        Axiom::EpsilonCommutativity => {
            let mu = a.require_mu()?.to_dense();
            let rhs = mu.swap().scale_pairs(|i, j| eps[i][j].clone());
            Sides::Pairs(mu, rhs)
        }
        Axiom::SkewSymmetry => {
            let br = a.require_bracket()?.to_dense();
            let rhs = br.swap().scale_pairs(|i, j| -eps[i][j].clone());
            Sides::Pairs(br, rhs)
        }
        Axiom::HomJacobi => {
            let br = a.require_bracket()?.to_dense();
            let t = br.nest_right(&br).precompose_slot(0, alpha);
            let first = t.scale_triples(|i, _, k| eps[k][i].clone());
            let second = t
                .permute([1, 2, 0])
                .scale_triples(|i, j, _| eps[i][j].clone());
            let third = t
                .permute([2, 0, 1])
                .scale_triples(|_, j, k| eps[j][k].clone());
            Sides::Triples(first.add(&second).add(&third), Trilinear::zeros(n))
        }
        Axiom::HomLeibniz => {
            let mu = a.require_mu()?.to_dense();
            let br = a.require_bracket()?.to_dense();
            let lhs = br.nest_right(&mu).precompose_slot(0, alpha);
            let first = mu.nest_left(&br).precompose_slot(2, alpha);
            let second = mu
                .nest_right(&br)
                .precompose_slot(0, alpha)
                .permute([1, 0, 2])
                .scale_triples(|i, j, _| eps[i][j].clone());
            Sides::Triples(lhs, first.add(&second))
        }
    })
}

pub(crate) fn read_pairs(label: &str, lhs: &Bilinear, rhs: &Bilinear) -> Section {
    let mut s = Section::new(label, Domain::Basis);
    for i in 0..lhs.dim() {
        for j in 0..lhs.dim() {
            s.record(vec![i, j], lhs.get(i, j).to_vec(), rhs.get(i, j).to_vec());
        }
    }
    s
}

pub(crate) fn read_triples(label: &str, lhs: &Trilinear, rhs: &Trilinear) -> Section {
    let mut s = Section::new(label, Domain::Basis);
    let n = lhs.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                s.record(
                    vec![i, j, k],
                    lhs.get(i, j, k).to_vec(),
                    rhs.get(i, j, k).to_vec(),
                );
            }
        }
    }
    s
}

/// Compares two maps column by column.
pub(crate) fn read_maps(label: &str, lhs: &Matrix, rhs: &Matrix) -> Section {
    let mut s = Section::new(label, Domain::Basis);
    for j in 0..lhs.dim() {
        s.record(vec![j], lhs.column(j), rhs.column(j));
    }
    s
}

pub fn check_axiom(a: &GradedAlgebra, axiom: Axiom) -> Result<AxiomReport> {
    let section = match axiom_sides(a, axiom)? {
        Sides::Pairs(l, r) => read_pairs(axiom.label(), &l, &r),
        Sides::Triples(l, r) => read_triples(axiom.label(), &l, &r),
    };
    Ok(AxiomReport::single(section))
}

pub fn check_hom_associative(a: &GradedAlgebra) -> Result<AxiomReport> {
    check_axiom(a, Axiom::HomAssociativity)
}

/// Plain associativity of `mu`, ignoring `alpha`.
pub fn check_associative(a: &GradedAlgebra) -> Result<AxiomReport> {
    check_axiom(a, Axiom::Associativity)
}

pub fn check_epsilon_commutative(a: &GradedAlgebra) -> Result<AxiomReport> {
    check_axiom(a, Axiom::EpsilonCommutativity)
}

/// Skew-symmetry on all pairs and the Hom-Jacobi identity on all triples.
pub fn check_hom_lie(a: &GradedAlgebra) -> Result<AxiomReport> {
    let mut r = check_axiom(a, Axiom::SkewSymmetry)?;
    r.extend(check_axiom(a, Axiom::HomJacobi)?);
    Ok(r)
}

pub fn check_hom_leibniz(a: &GradedAlgebra) -> Result<AxiomReport> {
    check_axiom(a, Axiom::HomLeibniz)
}

/// Hom-associativity, Hom-Lie and Hom-Leibniz; with `commutative`, also
/// epsilon-commutativity of `mu`.
pub fn check_hom_poisson(a: &GradedAlgebra, commutative: bool) -> Result<AxiomReport> {
    a.require_mu()?;
    a.require_bracket()?;
    let mut r = check_hom_associative(a)?;
    r.extend(check_hom_lie(a)?);
    r.extend(check_hom_leibniz(a)?);
    if commutative {
        r.extend(check_epsilon_commutative(a)?);
    }
    Ok(r)
}

/// Runs whichever of the structure checks apply to the components present.
pub fn check_structure(a: &GradedAlgebra, commutative: bool) -> Result<AxiomReport> {
    if a.mu().is_some() && a.bracket().is_some() {
        return check_hom_poisson(a, commutative);
    }
    let mut r = AxiomReport::new();
    if a.mu().is_some() {
        r.extend(check_hom_associative(a)?);
        if commutative {
            r.extend(check_epsilon_commutative(a)?);
        }
    }
    if a.bracket().is_some() {
        r.extend(check_hom_lie(a)?);
    }
    Ok(r)
}

/// Adds the bracket `[x, y] = mu(x, y) - eps(x, y) mu(y, x)`.
///
/// The input must be Hom-associative; otherwise the Hom-associativity
/// report is returned inside the error.
pub fn commutator_bracket(a: &GradedAlgebra) -> Result<GradedAlgebra> {
    let gate = check_hom_associative(a)?;
    if !gate.holds() {
        return Err(Error::gate("hom-associativity", gate));
    }
    let mu = a.require_mu()?.to_dense();
    let eps = a.factor_on_basis();
    let bracket = mu.sub(&mu.swap().scale_pairs(|i, j| eps[i][j].clone()));
    a.with_bracket(Some(crate::algebra::BilinearProduct::from_dense(&bracket)))
}

/// Checks that `f` intertwines the twisting maps and every product present
/// in both algebras.
pub fn check_morphism(
    f: &EvenLinearMap,
    src: &GradedAlgebra,
    dst: &GradedAlgebra,
) -> Result<AxiomReport> {
    if src.dim() != dst.dim() || f.dim() != src.dim() {
        return Err(Error::Shape(format!(
            "morphism of size {} between algebras of dimension {} and {}",
            f.dim(),
            src.dim(),
            dst.dim()
        )));
    }
    if src.group() != dst.group() {
        return Err(Error::Incompatible(
            "algebras are graded by different groups".into(),
        ));
    }
    // evenness with respect to both gradings
    let f_src = EvenLinearMap::new(f.matrix().clone(), src.basis())?;
    EvenLinearMap::new(f.matrix().clone(), dst.basis())?;
    let fm = f_src.matrix();

    let mut r = AxiomReport::new();
    r.push(read_maps(
        "morphism-alpha",
        &fm.compose(src.alpha().matrix()),
        &dst.alpha().matrix().compose(fm),
    ));
    let pairs = [
        ("morphism-mu", src.mu(), dst.mu(), "mu"),
        ("morphism-bracket", src.bracket(), dst.bracket(), "bracket"),
    ];
    for (label, p, q, name) in pairs {
        match (p, q) {
            (Some(p), Some(q)) => {
                let lhs = p.to_dense().postcompose(fm);
                let rhs = q.to_dense().precompose(fm, fm);
                r.push(read_pairs(label, &lhs, &rhs));
            }
            (None, None) => {}
            _ => {
                return Err(Error::MissingComponent(if name == "mu" {
                    "mu on only one side of the morphism"
                } else {
                    "bracket on only one side of the morphism"
                }))
            }
        }
    }
    Ok(r)
}
