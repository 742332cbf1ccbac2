//! Predicates for twisting operators: centroid elements, averaging,
//! Rota-Baxter and Nijenhuis operators.
//!
//! Every kind requires the map to commute with `alpha`. The product laws are
//! checked for each product present in the algebra (both of them for a
//! Hom-Poisson algebra), unless a [`ProductScope`] narrows the check to one.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::algebra::{EvenLinearMap, GradedAlgebra};
use crate::axioms::{commutator_bracket, read_maps, read_pairs};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::report::AxiomReport;
use crate::scalar::Scalar;
use crate::tensor::Bilinear;

pub const MAX_POWER: u32 = 4;
pub const MAX_SEARCH_DIM: usize = 6;
pub const MAX_SEARCH_CANDIDATES: u128 = 250_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OperatorKind {
    Centroid,
    Averaging,
    RotaBaxter,
    Nijenhuis,
}

impl OperatorKind {
    pub fn label(self) -> &'static str {
        match self {
            OperatorKind::Centroid => "centroid",
            OperatorKind::Averaging => "averaging",
            OperatorKind::RotaBaxter => "rota-baxter",
            OperatorKind::Nijenhuis => "nijenhuis",
        }
    }
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for OperatorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "centroid" => Ok(OperatorKind::Centroid),
            "averaging" => Ok(OperatorKind::Averaging),
            "rota-baxter" => Ok(OperatorKind::RotaBaxter),
            "nijenhuis" => Ok(OperatorKind::Nijenhuis),
            other => Err(Error::Parameter(format!("unknown operator kind {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Product {
    Mu,
    Bracket,
}

impl Product {
    pub fn label(self) -> &'static str {
        match self {
            Product::Mu => "mu",
            Product::Bracket => "bracket",
        }
    }
}

/// Which products a claim is checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ProductScope {
    /// Every product the algebra carries.
    #[default]
    All,
    Only(Product),
}

/// A map together with the operator kind it is claimed to be.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorClaim {
    pub map: EvenLinearMap,
    pub kind: OperatorKind,
    /// `k` in `alpha^k`; centroid and averaging only.
    pub power: u32,
    /// Rota-Baxter only.
    pub weight: Scalar,
}

impl OperatorClaim {
    pub fn centroid(map: EvenLinearMap, power: u32) -> Self {
        OperatorClaim {
            map,
            kind: OperatorKind::Centroid,
            power,
            weight: Scalar::zero(),
        }
    }

    pub fn averaging(map: EvenLinearMap, power: u32) -> Self {
        OperatorClaim {
            map,
            kind: OperatorKind::Averaging,
            power,
            weight: Scalar::zero(),
        }
    }

    pub fn rota_baxter(map: EvenLinearMap, weight: Scalar) -> Self {
        OperatorClaim {
            map,
            kind: OperatorKind::RotaBaxter,
            power: 0,
            weight,
        }
    }

    pub fn nijenhuis(map: EvenLinearMap) -> Self {
        OperatorClaim {
            map,
            kind: OperatorKind::Nijenhuis,
            power: 0,
            weight: Scalar::zero(),
        }
    }

    fn validate(&self, a: &GradedAlgebra) -> Result<()> {
        if self.power > MAX_POWER {
            return Err(Error::Parameter(format!(
                "power {} exceeds the bound {MAX_POWER}",
                self.power
            )));
        }
        EvenLinearMap::new(self.map.matrix().clone(), a.basis())?;
        Ok(())
    }
}

/// The product laws, each an equality of two bilinear maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OperatorLaw {
    /// `b(x·y) = b(x)·alpha^k(y)`
    CentroidLeft,
    /// `b(x·y) = alpha^k(x)·b(y)`
    CentroidRight,
    /// `b(b(x)·alpha^k(y)) = b(x)·b(y)`
    AveragingLeft,
    /// `b(alpha^k(x)·b(y)) = b(x)·b(y)`
    AveragingRight,
    /// `R(x)·R(y) = R(R(x)·y + x·R(y) + w x·y)`
    RotaBaxter,
    /// `N(x)·N(y) = N(N(x)·y + x·N(y) - N(x·y))`
    Nijenhuis,
}

impl OperatorLaw {
    pub fn label(self) -> &'static str {
        match self {
            OperatorLaw::CentroidLeft => "centroid-left",
            OperatorLaw::CentroidRight => "centroid-right",
            OperatorLaw::AveragingLeft => "averaging-left",
            OperatorLaw::AveragingRight => "averaging-right",
            OperatorLaw::RotaBaxter => "rota-baxter",
            OperatorLaw::Nijenhuis => "nijenhuis",
        }
    }

    /// The laws a kind imposes on one product. Brackets only get the left
    /// forms; the right ones follow from skew-symmetry.
    pub fn for_kind(kind: OperatorKind, product: Product) -> &'static [OperatorLaw] {
        use OperatorLaw::*;
        match (kind, product) {
            (OperatorKind::Centroid, Product::Mu) => &[CentroidLeft, CentroidRight],
            (OperatorKind::Centroid, Product::Bracket) => &[CentroidLeft],
            (OperatorKind::Averaging, Product::Mu) => &[AveragingLeft, AveragingRight],
            (OperatorKind::Averaging, Product::Bracket) => &[AveragingLeft],
            (OperatorKind::RotaBaxter, _) => &[RotaBaxter],
            (OperatorKind::Nijenhuis, _) => &[Nijenhuis],
        }
    }
}

fn product_tensor(a: &GradedAlgebra, product: Product) -> Result<Bilinear> {
    Ok(match product {
        Product::Mu => a.require_mu()?.to_dense(),
        Product::Bracket => a.require_bracket()?.to_dense(),
    })
}

/// Both sides of `law` for `claim` on one product, from structure constants.
pub fn law_sides(
    a: &GradedAlgebra,
    claim: &OperatorClaim,
    law: OperatorLaw,
    product: Product,
) -> Result<(Bilinear, Bilinear)> {
    claim.validate(a)?;
    let p = product_tensor(a, product)?;
    let b = claim.map.matrix();
    let id = Matrix::identity(a.dim());
    let ak = a.alpha().matrix().power(claim.power);
    Ok(match law {
        OperatorLaw::CentroidLeft => (p.postcompose(b), p.precompose(b, &ak)),
        OperatorLaw::CentroidRight => (p.postcompose(b), p.precompose(&ak, b)),
        OperatorLaw::AveragingLeft => (p.precompose(b, &ak).postcompose(b), p.precompose(b, b)),
        OperatorLaw::AveragingRight => (p.precompose(&ak, b).postcompose(b), p.precompose(b, b)),
        OperatorLaw::RotaBaxter => {
            let inner = p
                .precompose(b, &id)
                .add(&p.precompose(&id, b))
                .add(&p.scale(&claim.weight));
            (p.precompose(b, b), inner.postcompose(b))
        }
        OperatorLaw::Nijenhuis => {
            let inner = p
                .precompose(b, &id)
                .add(&p.precompose(&id, b))
                .sub(&p.postcompose(b));
            (p.precompose(b, b), inner.postcompose(b))
        }
    })
}

pub fn check_law(
    a: &GradedAlgebra,
    claim: &OperatorClaim,
    law: OperatorLaw,
    product: Product,
) -> Result<AxiomReport> {
    let (l, r) = law_sides(a, claim, law, product)?;
    let label = format!("{}({})", law.label(), product.label());
    Ok(AxiomReport::single(read_pairs(&label, &l, &r)))
}

pub fn check_operator(a: &GradedAlgebra, claim: &OperatorClaim) -> Result<AxiomReport> {
    check_operator_scoped(a, claim, ProductScope::All)
}

pub fn check_operator_scoped(
    a: &GradedAlgebra,
    claim: &OperatorClaim,
    scope: ProductScope,
) -> Result<AxiomReport> {
    claim.validate(a)?;
    let products: Vec<Product> = match scope {
        ProductScope::Only(p) => {
            product_tensor(a, p)?;
            vec![p]
        }
        ProductScope::All => [Product::Mu, Product::Bracket]
            .into_iter()
            .filter(|p| match p {
                Product::Mu => a.mu().is_some(),
                Product::Bracket => a.bracket().is_some(),
            })
            .collect(),
    };
    let b = claim.map.matrix();
    let alpha = a.alpha().matrix();
    let mut r = AxiomReport::new();
    r.push(read_maps(
        &format!("{}-alpha-commutation", claim.kind.label()),
        &b.compose(alpha),
        &alpha.compose(b),
    ));
    for p in products {
        for &law in OperatorLaw::for_kind(claim.kind, p) {
            r.extend(check_law(a, claim, law, p)?);
        }
    }
    Ok(r)
}

/// Checks that a Nijenhuis operator of `mu` is also one for the commutator
/// bracket. Returns the bracket report; the `mu` report gates the check.
pub fn check_nijenhuis_transfer(a: &GradedAlgebra, n: &EvenLinearMap) -> Result<AxiomReport> {
    let claim = OperatorClaim::nijenhuis(n.clone());
    let gate = check_operator_scoped(a, &claim, ProductScope::Only(Product::Mu))?;
    if !gate.holds() {
        return Err(Error::gate("nijenhuis operator on mu", gate));
    }
    let polarized = commutator_bracket(a)?;
    check_operator_scoped(&polarized, &claim, ProductScope::Only(Product::Bracket))
}

/// Parameters of a diagonal search besides the map itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchParams {
    pub kind: OperatorKind,
    pub power: u32,
    pub weight: Scalar,
    pub scope: ProductScope,
}

/// All diagonal maps with entries from `candidates` that pass the claim,
/// in lexicographic order of candidate positions.
pub fn search_diagonal_operators(
    a: &GradedAlgebra,
    params: &SearchParams,
    candidates: &[Scalar],
) -> Result<Vec<EvenLinearMap>> {
    let mut values: Vec<Scalar> = Vec::new();
    for c in candidates {
        if !values.contains(c) {
            values.push(c.clone());
        }
    }
    let n = a.dim();
    let size = (values.len() as u128)
        .checked_pow(n as u32)
        .unwrap_or(u128::MAX);
    if n > MAX_SEARCH_DIM || size > MAX_SEARCH_CANDIDATES {
        return Err(Error::SearchTooLarge {
            size,
            limit: if n > MAX_SEARCH_DIM {
                0
            } else {
                MAX_SEARCH_CANDIDATES
            },
        });
    }
    if values.is_empty() {
        return Ok(Vec::new());
    }
    let mut found = Vec::new();
    let mut digits = vec![0usize; n];
    loop {
        let diag: Vec<Scalar> = digits.iter().map(|&d| values[d].clone()).collect();
        let map = EvenLinearMap::diagonal(a.basis(), diag)?;
        let claim = OperatorClaim {
            map: map.clone(),
            kind: params.kind,
            power: params.power,
            weight: params.weight.clone(),
        };
        if check_operator_scoped(a, &claim, params.scope)?.holds() {
            found.push(map);
        }
        // odometer, last position fastest
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(found);
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < values.len() {
                break;
            }
            digits[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::scalar::{int, ratio};

    #[test]
    fn minus_lambda_identity_is_rota_baxter_on_two_dim_fixture() {
        let a = fixtures::rota_baxter_2d();
        for w in [int(0), int(1), ratio(1, 2)] {
            let r = EvenLinearMap::scalar(a.basis(), -w.clone());
            let rep = check_operator(&a, &OperatorClaim::rota_baxter(r, w)).unwrap();
            assert!(rep.holds(), "{}", rep.summary());
        }
    }

    #[test]
    fn identity_is_zero_power_averaging() {
        for a in [
            fixtures::rota_baxter_2d(),
            fixtures::hom_poisson_3d(int(2), 1),
        ] {
            let claim = OperatorClaim::averaging(EvenLinearMap::identity(a.basis()), 0);
            assert!(check_operator(&a, &claim).unwrap().holds());
        }
    }

    #[test]
    fn example_rota_baxter_on_both_products() {
        let p = fixtures::hom_poisson_3d(int(2), 1);
        let r = EvenLinearMap::scalar(p.basis(), int(-1));
        let rep = check_operator(&p, &OperatorClaim::rota_baxter(r, int(1))).unwrap();
        assert!(rep.section("rota-baxter(mu)").is_some());
        assert!(rep.section("rota-baxter(bracket)").is_some());
        assert!(rep.holds());
    }

    #[test]
    fn missing_product_and_bad_power() {
        let a = fixtures::rota_baxter_2d();
        let claim = OperatorClaim::nijenhuis(EvenLinearMap::identity(a.basis()));
        assert!(matches!(
            check_operator_scoped(&a, &claim, ProductScope::Only(Product::Bracket)),
            Err(Error::MissingComponent(_))
        ));
        let too_big = OperatorClaim::averaging(EvenLinearMap::identity(a.basis()), MAX_POWER + 1);
        assert!(matches!(
            check_operator(&a, &too_big),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn non_commuting_map_fails_alpha_check() {
        // mixes e1 and e2, where alpha acts as the identity
        let a = fixtures::hom_poisson_3d(int(2), 1);
        let m = Matrix::from_rows(vec![
            vec![int(1), int(1), int(0)],
            vec![int(0), int(1), int(0)],
            vec![int(0), int(0), int(1)],
        ])
        .unwrap();
        let claim = OperatorClaim::nijenhuis(a.even_map(m).unwrap());
        let rep = check_operator(&a, &claim).unwrap();
        assert!(rep.section("nijenhuis-alpha-commutation").unwrap().holds());
        let rescaled = a
            .with_alpha(
                a.even_map(Matrix::diagonal(vec![int(1), int(3), int(2)]))
                    .unwrap(),
            )
            .unwrap();
        let rep = check_operator(&rescaled, &claim).unwrap();
        assert!(!rep.section("nijenhuis-alpha-commutation").unwrap().holds());
    }

    #[test]
    fn nijenhuis_transfer_trivial_cases() {
        let a = fixtures::rota_baxter_2d();
        for m in [
            EvenLinearMap::identity(a.basis()),
            EvenLinearMap::scalar(a.basis(), int(0)),
        ] {
            assert!(check_nijenhuis_transfer(&a, &m).unwrap().holds());
        }
    }

    #[test]
    fn nijenhuis_transfer_diag_one_zero_fails_the_gate() {
        let a = fixtures::rota_baxter_2d();
        let n = EvenLinearMap::diagonal(a.basis(), vec![int(1), int(0)]).unwrap();
        let Err(Error::Gate { report, .. }) = check_nijenhuis_transfer(&a, &n) else {
            panic!("diag(1, 0) is not a Nijenhuis operator of mu");
        };
        let s = report.section("nijenhuis(mu)").unwrap();
        assert_eq!(s.violations.len(), 1);
        let v = &s.violations[0];
        assert_eq!(v.indices, vec![1, 1]);
        assert_eq!(v.lhs, vec![int(0), int(0)]);
        assert_eq!(v.rhs, vec![int(-1), int(0)]);
    }

    #[test]
    fn diagonal_search() {
        let a = fixtures::rota_baxter_2d();
        let params = SearchParams {
            kind: OperatorKind::RotaBaxter,
            power: 0,
            weight: int(1),
            scope: ProductScope::All,
        };
        let found = search_diagonal_operators(&a, &params, &[int(0), int(1), int(-1)]).unwrap();
        assert!(found.contains(&EvenLinearMap::scalar(a.basis(), int(-1))));
        let zero_only = search_diagonal_operators(&a, &params, &[int(0)]).unwrap();
        assert_eq!(zero_only, vec![EvenLinearMap::scalar(a.basis(), int(0))]);
        assert!(search_diagonal_operators(&a, &params, &[])
            .unwrap()
            .is_empty());
        let again =
            search_diagonal_operators(&a, &params, &[int(0), int(1), int(-1), int(1)]).unwrap();
        assert_eq!(found, again);
    }

    #[test]
    fn search_refuses_large_spaces() {
        let a = fixtures::klein_group_algebra(false);
        let params = SearchParams {
            kind: OperatorKind::Nijenhuis,
            power: 0,
            weight: int(0),
            scope: ProductScope::All,
        };
        let many: Vec<Scalar> = (0..40).map(int).collect();
        assert!(matches!(
            search_diagonal_operators(&a, &params, &many),
            Err(Error::SearchTooLarge { .. })
        ));
    }
}
