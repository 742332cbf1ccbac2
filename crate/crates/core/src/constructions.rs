//! Twisting constructions. Each one checks its hypotheses, builds the new
//! algebra and re-runs the axiom checks on the result.
//!
//! A hypothesis failure is returned as [`Error::Gate`] with the failing
//! report. A construction that gets past its gates always returns the output
//! together with its certification, so a failed certification is visible
//! rather than an error.

use num_traits::{One, Zero};

use crate::algebra::{BilinearProduct, EvenLinearMap, GradedAlgebra, GradedBasis};
use crate::axioms::{
    check_associative, check_epsilon_commutative, check_hom_associative, check_hom_poisson,
    check_morphism, read_maps,
};
use crate::error::{Error, Result};
use crate::grading::{
    delta_from_multiplier, group_add, twist_epsilon, validate_multiplier, CommutationFactor,
    MultiplierTable,
};
use crate::linalg::Matrix;
use crate::operators::{check_operator, OperatorClaim};
use crate::report::AxiomReport;
use crate::scalar::Scalar;
use crate::tensor::Bilinear;

/// Every construction, by its command-line name.
pub const NAMES: [&str; 11] = [
    "xi",
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

/// The output of a construction with the evidence gathered after building it.
#[derive(Debug, Clone)]
pub struct Construction {
    pub name: String,
    pub algebra: GradedAlgebra,
    /// Axiom sweep of `algebra`.
    pub certification: AxiomReport,
    /// Morphism claims, each as a labelled `check_morphism` report.
    pub morphisms: Vec<(String, AxiomReport)>,
}

impl Construction {
    fn new(name: &str, algebra: GradedAlgebra) -> Result<Self> {
        let certification = if algebra.bracket().is_some() {
            check_hom_poisson(&algebra, false)?
        } else {
            check_hom_associative(&algebra)?
        };
        Ok(Construction {
            name: name.to_string(),
            algebra,
            certification,
            morphisms: Vec::new(),
        })
    }

    fn with_morphism(
        mut self,
        label: &str,
        f: &EvenLinearMap,
        dst: &GradedAlgebra,
    ) -> Result<Self> {
        let r = check_morphism(f, &self.algebra, dst)?;
        self.morphisms.push((label.to_string(), r));
        Ok(self)
    }

    pub fn certified(&self) -> bool {
        self.certification.holds()
    }

    pub fn morphisms_hold(&self) -> bool {
        self.morphisms.iter().all(|(_, r)| r.holds())
    }
}

fn require(gate: &str, report: AxiomReport) -> Result<()> {
    if report.holds() {
        Ok(())
    } else {
        Err(Error::gate(gate, report))
    }
}

fn hom_poisson_gate(p: &GradedAlgebra) -> Result<()> {
    require("hom-poisson input", check_hom_poisson(p, false)?)
}

fn products(p: &GradedAlgebra) -> (Option<Bilinear>, Option<Bilinear>) {
    (
        p.mu().map(BilinearProduct::to_dense),
        p.bracket().map(BilinearProduct::to_dense),
    )
}

fn rebuild(p: &GradedAlgebra, f: impl Fn(&Bilinear) -> Bilinear) -> Result<GradedAlgebra> {
    let (mu, br) = products(p);
    let mu = mu.map(|m| BilinearProduct::from_dense(&f(&m)));
    let br = br.map(|b| BilinearProduct::from_dense(&f(&b)));
    p.with_mu(mu)?.with_bracket(br)
}

/// `mu_xi(x, y) = (x xi) y` for `xi` of degree 0. The input must be both
/// associative and Hom-associative; the output keeps `mu` only.
pub fn xi_twist(a: &GradedAlgebra, xi: &[Scalar]) -> Result<Construction> {
    let mu = a.require_mu()?;
    if xi.len() != a.dim() {
        return Err(Error::Shape(format!(
            "xi has {} coordinates, expected {}",
            xi.len(),
            a.dim()
        )));
    }
    let zero = a.group().zero();
    if let Some(i) = (0..a.dim()).find(|&i| !xi[i].is_zero() && *a.basis().degree(i) != zero) {
        return Err(Error::Parameter(format!(
            "xi must have degree 0, but its component on e{} has degree {}",
            i + 1,
            a.basis().degree(i)
        )));
    }
    require("associativity", check_associative(a)?)?;
    require("hom-associativity", check_hom_associative(a)?)?;
    let dense = mu.to_dense();
    let right_xi = Matrix::from_columns(a.dim(), |i| dense.contract(&unit(a.dim(), i), xi));
    let twisted = BilinearProduct::from_dense(&dense.precompose_slot(0, &right_xi));
    let out = a.with_mu(Some(twisted))?.with_bracket(None)?;
    Construction::new("xi", out)
}

fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::from_integer(1.into());
    v
}

fn sigma_on_basis(p: &GradedAlgebra, s: &MultiplierTable) -> Result<Vec<Vec<Scalar>>> {
    if s.order() != p.group().order() {
        return Err(Error::Incompatible(format!(
            "multiplier table of order {} on a group of order {}",
            s.order(),
            p.group().order()
        )));
    }
    let idx: Vec<usize> = p
        .basis()
        .degrees()
        .iter()
        .map(|d| p.group().index_of(d))
        .collect();
    Ok(idx
        .iter()
        .map(|&a| idx.iter().map(|&b| s.get(a, b).clone()).collect())
        .collect())
}

/// Rescales both products by a symmetric, cyclically invariant multiplier.
pub fn multiplier_twist_symmetric(p: &GradedAlgebra, s: &MultiplierTable) -> Result<Construction> {
    let sig = sigma_on_basis(p, s)?;
    require(
        "symmetric multiplier",
        validate_multiplier(p.group(), s, true)?,
    )?;
    hom_poisson_gate(p)?;
    let out = rebuild(p, |b| b.scale_pairs(|i, j| sig[i][j].clone()))?;
    Construction::new("multiplier-sym", out)
}

/// Rescales both products by a multiplier and replaces the commutation
/// factor by `eps * delta`. Each listed endomorphism of the input must be
/// one, and is re-checked on the output; `alpha` is always included.
pub fn multiplier_twist_delta(
    p: &GradedAlgebra,
    s: &MultiplierTable,
    endomorphisms: &[(String, EvenLinearMap)],
) -> Result<Construction> {
    let sig = sigma_on_basis(p, s)?;
    require("multiplier", validate_multiplier(p.group(), s, false)?)?;
    hom_poisson_gate(p)?;
    let mut endos = vec![("alpha".to_string(), p.alpha().clone())];
    endos.extend(endomorphisms.iter().cloned());
    for (name, f) in &endos {
        require(&format!("endomorphism {name}"), check_morphism(f, p, p)?)?;
    }
    let delta = delta_from_multiplier(p.group(), s)?;
    let one = MultiplierTable::constant(p.group(), Scalar::one())?;
    // A symmetric multiplier leaves the factor, and its representation, alone.
    let factor = if delta == one {
        p.factor().clone()
    } else {
        CommutationFactor::Table(twist_epsilon(&p.factor().to_table(p.group())?, &delta)?)
    };
    let out = rebuild(p, |b| b.scale_pairs(|i, j| sig[i][j].clone()))?.with_factor(factor)?;
    let mut c = Construction::new("multiplier-delta", out)?;
    for (name, f) in &endos {
        let r = check_morphism(f, &c.algebra, &c.algebra)?;
        c.morphisms.push((format!("endomorphism {name}"), r));
    }
    Ok(c)
}

/// Pulls the structure of `target` back along an even bijection `f`:
/// `x·y = f^-1(f x ·' f y)`, same for the bracket, `alpha = f^-1 alpha' f`.
pub fn transport_along_bijection(
    target: &GradedAlgebra,
    f: &EvenLinearMap,
) -> Result<Construction> {
    let f = target.even_map(f.matrix().clone())?;
    let inv = f.inverse()?;
    hom_poisson_gate(target)?;
    let (fm, im) = (f.matrix(), inv.matrix());
    let moved = rebuild(target, |b| b.precompose(fm, fm).postcompose(im))?;
    let alpha = inv.compose(target.alpha()).compose(&f);
    let out = moved.with_alpha(alpha)?;
    Construction::new("transport", out)?.with_morphism("f", &f, target)
}

fn operator_gate(p: &GradedAlgebra, claim: &OperatorClaim) -> Result<()> {
    require(
        &format!("{} operator", claim.kind),
        check_operator(p, claim)?,
    )
}

/// `x*y = x·y`, `{x, y} = [beta x, y]` for an `alpha^0`-centroid element.
pub fn centroid_twist(p: &GradedAlgebra, beta: &EvenLinearMap) -> Result<Construction> {
    let br = p.require_bracket()?.to_dense();
    operator_gate(p, &OperatorClaim::centroid(beta.clone(), 0))?;
    hom_poisson_gate(p)?;
    let bracket = br.precompose_slot(0, beta.matrix());
    let out = p.with_bracket(Some(BilinearProduct::from_dense(&bracket)))?;
    Construction::new("centroid", out)?.with_morphism("beta", beta, p)
}

/// `x*y = beta x · beta y` and `{x, y} = [beta x, beta y]` for an
/// `alpha^0`-averaging operator.
pub fn averaging_twist_pairwise(p: &GradedAlgebra, beta: &EvenLinearMap) -> Result<Construction> {
    operator_gate(p, &OperatorClaim::averaging(beta.clone(), 0))?;
    hom_poisson_gate(p)?;
    let b = beta.matrix();
    let out = rebuild(p, |t| t.precompose(b, b))?;
    Construction::new("averaging-pair", out)
}

/// Starting from `alpha = id`: `x*y = beta(x)·y`, `{x, y} = [beta x, y]`,
/// and `beta` becomes the new twisting map.
pub fn averaging_twist_untwisted(p: &GradedAlgebra, beta: &EvenLinearMap) -> Result<Construction> {
    let id = Matrix::identity(p.dim());
    require(
        "untwisted input",
        AxiomReport::single(read_maps("alpha-identity", p.alpha().matrix(), &id)),
    )?;
    operator_gate(p, &OperatorClaim::averaging(beta.clone(), 0))?;
    hom_poisson_gate(p)?;
    let b = beta.matrix();
    let out = rebuild(p, |t| t.precompose_slot(0, b))?.with_alpha(beta.clone())?;
    Construction::new("averaging-untwisted", out)
}

/// `x*y = beta(x)·alpha^k(y)`, `{x, y} = [beta x, alpha^k y]` for a
/// bijective `alpha^k`-averaging operator.
pub fn averaging_twist_power(
    p: &GradedAlgebra,
    beta: &EvenLinearMap,
    k: u32,
) -> Result<Construction> {
    beta.inverse()?;
    operator_gate(p, &OperatorClaim::averaging(beta.clone(), k))?;
    hom_poisson_gate(p)?;
    let (b, ak) = (beta.matrix(), p.alpha().matrix().power(k));
    let out = rebuild(p, |t| t.precompose(b, &ak))?;
    Construction::new("averaging-power", out)?.with_morphism("beta", beta, p)
}

/// `x ·_N y = N(x)·y + x·N(y) - N(x·y)` on both products.
pub fn nijenhuis_twist(p: &GradedAlgebra, n: &EvenLinearMap) -> Result<Construction> {
    operator_gate(p, &OperatorClaim::nijenhuis(n.clone()))?;
    hom_poisson_gate(p)?;
    let (m, id) = (n.matrix(), Matrix::identity(p.dim()));
    let out = rebuild(p, |t| {
        t.precompose(m, &id)
            .add(&t.precompose(&id, m))
            .sub(&t.postcompose(m))
    })?;
    Construction::new("nijenhuis", out)?.with_morphism("N", n, p)
}

/// `x*y = R(x)·y + x·R(y) + w x·y` on both products.
pub fn rota_baxter_twist(
    p: &GradedAlgebra,
    r: &EvenLinearMap,
    weight: &Scalar,
) -> Result<Construction> {
    operator_gate(p, &OperatorClaim::rota_baxter(r.clone(), weight.clone()))?;
    hom_poisson_gate(p)?;
    let (m, id) = (r.matrix(), Matrix::identity(p.dim()));
    let out = rebuild(p, |t| {
        t.precompose(m, &id)
            .add(&t.precompose(&id, m))
            .add(&t.scale(weight))
    })?;
    Construction::new("rota-baxter", out)?.with_morphism("R", r, p)
}

/// `A ⊗ P` on the basis `a_i ⊗ x_p`, numbered `i * dim P + p`, with
/// `(a⊗x)(b⊗y) = eps(x, b) ab ⊗ xy` for both products and
/// `alpha = alpha_A ⊗ alpha_P`.
pub fn tensor_with_commutative(a: &GradedAlgebra, p: &GradedAlgebra) -> Result<Construction> {
    if a.group() != p.group() {
        return Err(Error::Incompatible(format!(
            "groups differ: {} and {}",
            a.group(),
            p.group()
        )));
    }
    let g = p.group();
    if a.factor().to_table(g)? != p.factor().to_table(g)? {
        return Err(Error::Incompatible("commutation factors differ".into()));
    }
    let mu_a = a.require_mu()?.to_dense();
    require("hom-associativity of A", check_hom_associative(a)?)?;
    require("epsilon-commutativity of A", check_epsilon_commutative(a)?)?;
    hom_poisson_gate(p)?;

    let (n, m) = (a.dim(), p.dim());
    let mut degrees = Vec::with_capacity(n * m);
    for i in 0..n {
        for q in 0..m {
            degrees.push(group_add(g, a.basis().degree(i), p.basis().degree(q))?);
        }
    }
    let basis = GradedBasis::new(g, degrees)?;
    let eps = p.factor().to_table(g)?;
    let sign = |q: usize, j: usize| {
        eps.get(
            g.index_of(p.basis().degree(q)),
            g.index_of(a.basis().degree(j)),
        )
        .clone()
    };
    let tensor = |prod: &Bilinear| {
        let mut triples = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in mu_a.get(i, j).iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for q in 0..m {
                        for r in 0..m {
                            let s = c * sign(q, j);
                            for (t, d) in prod.get(q, r).iter().enumerate() {
                                if !d.is_zero() {
                                    triples.push((i * m + q, j * m + r, k * m + t, &s * d));
                                }
                            }
                        }
                    }
                }
            }
        }
        // distinct (i, j, k) of A and (q, r, t) of P give distinct triples
        BilinearProduct::from_triples(n * m, triples)
    };
    let (mu_p, br_p) = products(p);
    let mu = mu_p.as_ref().map(tensor).transpose()?;
    let bracket = br_p.as_ref().map(tensor).transpose()?;
    let alpha = EvenLinearMap::new(a.alpha().matrix().kronecker(p.alpha().matrix()), &basis)?;
    let out = GradedAlgebra::new(g.clone(), p.factor().clone(), basis, mu, bracket, alpha)?;
    Construction::new("tensor", out)
}

/// Inputs of [`apply`]. Each construction reads the fields it needs.
#[derive(Debug, Clone, Default)]
pub struct Parameters {
    pub operator: Option<EvenLinearMap>,
    pub multiplier: Option<MultiplierTable>,
    pub weight: Scalar,
    pub power: u32,
    pub xi: Option<Vec<Scalar>>,
    /// The commutative factor of a tensor product.
    pub with: Option<GradedAlgebra>,
    pub endomorphisms: Vec<(String, EvenLinearMap)>,
}

fn need<'a, T>(value: &'a Option<T>, what: &str, name: &str) -> Result<&'a T> {
    value
        .as_ref()
        .ok_or_else(|| Error::Parameter(format!("{name} needs {what}")))
}

/// Runs the construction called `name` (one of [`NAMES`]) on `p`.
pub fn apply(name: &str, p: &GradedAlgebra, params: &Parameters) -> Result<Construction> {
    let op = || need(&params.operator, "an operator", name);
    match name {
        "xi" => xi_twist(p, need(&params.xi, "xi", name)?),
        "multiplier-sym" => {
            multiplier_twist_symmetric(p, need(&params.multiplier, "a multiplier", name)?)
        }
        "multiplier-delta" => multiplier_twist_delta(
            p,
            need(&params.multiplier, "a multiplier", name)?,
            &params.endomorphisms,
        ),
        "transport" => transport_along_bijection(p, op()?),
        "centroid" => centroid_twist(p, op()?),
        "averaging-pair" => averaging_twist_pairwise(p, op()?),
        "averaging-untwisted" => averaging_twist_untwisted(p, op()?),
        "averaging-power" => averaging_twist_power(p, op()?, params.power),
        "nijenhuis" => nijenhuis_twist(p, op()?),
        "rota-baxter" => rota_baxter_twist(p, op()?, &params.weight),
        "tensor" => tensor_with_commutative(need(&params.with, "a commutative algebra", name)?, p),
        other => Err(Error::Parameter(format!(
            "unknown construction {other:?}; expected one of {}",
            NAMES.join(", ")
        ))),
    }
}
