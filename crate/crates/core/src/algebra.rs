//! Graded algebras given by structure constants.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::grading::{CommutationFactor, GroupElement, GroupSpec};
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::tensor::Bilinear;

/// Degrees of the basis vectors `e_1 .. e_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedBasis {
    degrees: Vec<GroupElement>,
}

impl GradedBasis {
    pub fn new(group: &GroupSpec, degrees: Vec<GroupElement>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::Shape("basis must have at least one vector".into()));
        }
        if let Some((i, d)) = degrees
            .iter()
            .enumerate()
            .find(|(_, d)| !group.is_canonical(d))
        {
            return Err(Error::Shape(format!(
                "degree {d} of e{} is not an element of {group}",
                i + 1
            )));
        }
        Ok(GradedBasis { degrees })
    }

    /// Convenience constructor from raw coordinates, reduced into canonical form.
    pub fn from_coords(group: &GroupSpec, coords: &[&[i64]]) -> Result<Self> {
        let degrees = coords
            .iter()
            .map(|c| group.reduce(c))
            .collect::<Result<_>>()?;
        Self::new(group, degrees)
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn degree(&self, i: usize) -> &GroupElement {
        &self.degrees[i]
    }

    pub fn degrees(&self) -> &[GroupElement] {
        &self.degrees
    }
}

/// A square matrix that maps each homogeneous component into itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EvenLinearMap {
    matrix: Matrix,
}

impl EvenLinearMap {
    pub fn new(matrix: Matrix, basis: &GradedBasis) -> Result<Self> {
        if matrix.dim() != basis.dim() {
            return Err(Error::Shape(format!(
                "map is {0}x{0} but the basis has dimension {1}",
                matrix.dim(),
                basis.dim()
            )));
        }
        for i in 0..matrix.dim() {
            for j in 0..matrix.dim() {
                if !matrix.get(i, j).is_zero() && basis.degree(i) != basis.degree(j) {
                    return Err(Error::NotEven {
                        row: i,
                        col: j,
                        from: basis.degree(j).to_string(),
                        to: basis.degree(i).to_string(),
                    });
                }
            }
        }
        Ok(EvenLinearMap { matrix })
    }

    pub fn identity(basis: &GradedBasis) -> Self {
        EvenLinearMap {
            matrix: Matrix::identity(basis.dim()),
        }
    }

    pub fn scalar(basis: &GradedBasis, c: Scalar) -> Self {
        EvenLinearMap {
            matrix: Matrix::scalar(basis.dim(), c),
        }
    }

    pub fn diagonal(basis: &GradedBasis, diag: Vec<Scalar>) -> Result<Self> {
        Self::new(Matrix::diagonal(diag), basis)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.matrix.apply(x)
    }

    pub fn compose(&self, other: &EvenLinearMap) -> EvenLinearMap {
        EvenLinearMap {
            matrix: self.matrix.compose(&other.matrix),
        }
    }

    pub fn power(&self, k: u32) -> EvenLinearMap {
        EvenLinearMap {
            matrix: self.matrix.power(k),
        }
    }

    pub fn inverse(&self) -> Result<EvenLinearMap> {
        Ok(EvenLinearMap {
            matrix: self.matrix.inverse()?,
        })
    }
}

/// Sparse structure constants: `e_i · e_j = sum_k c_ij^k e_k`.
///
/// Zero coefficients are never stored, so two products are equal exactly
/// when their constant maps are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BilinearProduct {
    dim: usize,
    constants: BTreeMap<(usize, usize), BTreeMap<usize, Scalar>>,
}

impl BilinearProduct {
    pub fn zero(dim: usize) -> Self {
        BilinearProduct {
            dim,
            constants: BTreeMap::new(),
        }
    }

    /// Builds a product from `(i, j, k, c)` entries; a repeated `(i, j, k)` is an error.
    pub fn from_triples(
        dim: usize,
        triples: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut p = Self::zero(dim);
        for (i, j, k, c) in triples {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::Shape(format!(
                    "structure constant ({i}, {j}, {k}) out of range for dimension {dim}"
                )));
            }
            let cell = p.constants.entry((i, j)).or_default();
            if cell.contains_key(&k) {
                return Err(Error::InvalidRepresentation(format!(
                    "structure constant ({i}, {j}, {k}) given twice"
                )));
            }
            cell.insert(k, c);
        }
        p.prune();
        Ok(p)
    }

    fn prune(&mut self) {
        for cell in self.constants.values_mut() {
            cell.retain(|_, c| !c.is_zero());
        }
        self.constants.retain(|_, cell| !cell.is_empty());
    }

    pub fn from_dense(b: &Bilinear) -> Self {
        let n = b.dim();
        let mut p = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                let cell: BTreeMap<usize, Scalar> = b
                    .get(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k, c.clone()))
                    .collect();
                if !cell.is_empty() {
                    p.constants.insert((i, j), cell);
                }
            }
        }
        p
    }

    pub fn to_dense(&self) -> Bilinear {
        let mut b = Bilinear::zeros(self.dim);
        for (&(i, j), cell) in &self.constants {
            let slot = b.get_mut(i, j);
            for (&k, c) in cell {
                slot[k] = c.clone();
            }
        }
        b
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.constants.is_empty()
    }

    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.constants
            .get(&(i, j))
            .and_then(|cell| cell.get(&k))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    /// `e_i · e_j` as a coefficient vector.
    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim];
        if let Some(cell) = self.constants.get(&(i, j)) {
            for (&k, c) in cell {
                v[k] = c.clone();
            }
        }
        v
    }

    /// Nonzero constants in lexicographic `(i, j, k)` order.
    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        self.constants
            .iter()
            .flat_map(|(&(i, j), cell)| cell.iter().map(move |(&k, c)| (i, j, k, c)))
    }

    pub fn check_even(&self, basis: &GradedBasis, group: &GroupSpec) -> Result<()> {
        for (i, j, k, _) in self.triples() {
            let sum = crate::grading::group_add(group, basis.degree(i), basis.degree(j))?;
            if &sum != basis.degree(k) {
                return Err(Error::ProductNotEven {
                    i: i + 1,
                    j: j + 1,
                    k: k + 1,
                });
            }
        }
        Ok(())
    }
}

/// Bilinear expansion `sum_ij x_i y_j c_ij^k e_k`.
pub fn apply_product(p: &BilinearProduct, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
    if x.len() != p.dim || y.len() != p.dim {
        return Err(Error::Shape(format!(
            "vectors of length {} and {} for a product of dimension {}",
            x.len(),
            y.len(),
            p.dim
        )));
    }
    let mut out = vec![Scalar::zero(); p.dim];
    for (&(i, j), cell) in &p.constants {
        if x[i].is_zero() || y[j].is_zero() {
            continue;
        }
        let xy = &x[i] * &y[j];
        for (&k, c) in cell {
            out[k] += &xy * c;
        }
    }
    Ok(out)
}

/// A graded vector space with an optional multiplication `mu`, an optional
/// bracket, a twisting map `alpha` and a commutation factor.
///
/// Equality is structural: same group, factor representation, degrees,
/// structure constants and twisting map.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedAlgebra {
    group: GroupSpec,
    factor: CommutationFactor,
    basis: GradedBasis,
    mu: Option<BilinearProduct>,
    bracket: Option<BilinearProduct>,
    alpha: EvenLinearMap,
}

impl GradedAlgebra {
    pub fn new(
        group: GroupSpec,
        factor: CommutationFactor,
        basis: GradedBasis,
        mu: Option<BilinearProduct>,
        bracket: Option<BilinearProduct>,
        alpha: EvenLinearMap,
    ) -> Result<Self> {
        match &factor {
            CommutationFactor::Sign(e) => e.check_well_defined(&group)?,
            CommutationFactor::Table(t) => {
                if t.order() != group.order() {
                    return Err(Error::Shape(
                        "commutation table does not match the group order".into(),
                    ));
                }
            }
        }
        for d in basis.degrees() {
            if !group.is_canonical(d) {
                return Err(Error::Shape(format!(
                    "degree {d} is not an element of {group}"
                )));
            }
        }
        if mu.is_none() && bracket.is_none() {
            return Err(Error::MissingComponent("at least one of mu and bracket"));
        }
        let n = basis.dim();
        for p in mu.iter().chain(bracket.iter()) {
            if p.dim() != n {
                return Err(Error::Shape(format!(
                    "product of dimension {} on a basis of {n}",
                    p.dim()
                )));
            }
            p.check_even(&basis, &group)?;
        }
        // re-validate: alpha may have been built against another basis
        let alpha = EvenLinearMap::new(alpha.matrix, &basis)?;
        Ok(GradedAlgebra {
            group,
            factor,
            basis,
            mu,
            bracket,
            alpha,
        })
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn factor(&self) -> &CommutationFactor {
        &self.factor
    }

    pub fn basis(&self) -> &GradedBasis {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn mu(&self) -> Option<&BilinearProduct> {
        self.mu.as_ref()
    }

    pub fn bracket(&self) -> Option<&BilinearProduct> {
        self.bracket.as_ref()
    }

    pub fn alpha(&self) -> &EvenLinearMap {
        &self.alpha
    }

    pub fn require_mu(&self) -> Result<&BilinearProduct> {
        self.mu.as_ref().ok_or(Error::MissingComponent("mu"))
    }

    pub fn require_bracket(&self) -> Result<&BilinearProduct> {
        self.bracket
            .as_ref()
            .ok_or(Error::MissingComponent("bracket"))
    }

    pub fn with_mu(&self, mu: Option<BilinearProduct>) -> Result<Self> {
        Self::new(
            self.group.clone(),
            self.factor.clone(),
            self.basis.clone(),
            mu,
            self.bracket.clone(),
            self.alpha.clone(),
        )
    }

    pub fn with_bracket(&self, bracket: Option<BilinearProduct>) -> Result<Self> {
        Self::new(
            self.group.clone(),
            self.factor.clone(),
            self.basis.clone(),
            self.mu.clone(),
            bracket,
            self.alpha.clone(),
        )
    }

    pub fn with_alpha(&self, alpha: EvenLinearMap) -> Result<Self> {
        Self::new(
            self.group.clone(),
            self.factor.clone(),
            self.basis.clone(),
            self.mu.clone(),
            self.bracket.clone(),
            alpha,
        )
    }

    pub fn with_factor(&self, factor: CommutationFactor) -> Result<Self> {
        Self::new(
            self.group.clone(),
            factor,
            self.basis.clone(),
            self.mu.clone(),
            self.bracket.clone(),
            self.alpha.clone(),
        )
    }

    /// Checks that `m` is even for this basis.
    pub fn even_map(&self, m: Matrix) -> Result<EvenLinearMap> {
        EvenLinearMap::new(m, &self.basis)
    }

    /// `factor(deg e_i, deg e_j)` for every basis pair.
    pub fn factor_on_basis(&self) -> Vec<Vec<Scalar>> {
        let table = self
            .factor
            .to_table(&self.group)
            .expect("factor validated at construction");
        let idx: Vec<usize> = self
            .basis
            .degrees()
            .iter()
            .map(|d| self.group.index_of(d))
            .collect();
        idx.iter()
            .map(|&a| idx.iter().map(|&b| table.get(a, b).clone()).collect())
            .collect()
    }

    /// Relabels basis vector `i` as `perm[i]` and conjugates all data accordingly.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.dim();
        let mut seen = vec![false; n];
        if perm.len() != n
            || perm
                .iter()
                .any(|&p| p >= n || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::Shape(
                "relabeling is not a permutation of the basis".into(),
            ));
        }
        let mut degrees = vec![self.group.zero(); n];
        for i in 0..n {
            degrees[perm[i]] = self.basis.degree(i).clone();
        }
        let basis = GradedBasis::new(&self.group, degrees)?;
        let move_product = |p: &BilinearProduct| {
            BilinearProduct::from_triples(
                n,
                p.triples()
                    .map(|(i, j, k, c)| (perm[i], perm[j], perm[k], c.clone())),
            )
        };
        let mu = self.mu.as_ref().map(move_product).transpose()?;
        let bracket = self.bracket.as_ref().map(move_product).transpose()?;
        let alpha = EvenLinearMap::new(relabel_matrix(self.alpha.matrix(), perm), &basis)?;
        Self::new(
            self.group.clone(),
            self.factor.clone(),
            basis,
            mu,
            bracket,
            alpha,
        )
    }
}

pub fn relabel_matrix(m: &Matrix, perm: &[usize]) -> Matrix {
    let n = m.dim();
    let mut out = Matrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            out.set(perm[i], perm[j], m.get(i, j).clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::SignBicharacter;
    use crate::scalar::{int, ratio};

    fn z2() -> GroupSpec {
        GroupSpec::cyclic(2).unwrap()
    }

    #[test]
    fn apply_product_expands_bilinearly() {
        let p = BilinearProduct::from_triples(
            2,
            [(0, 0, 0, int(1)), (0, 1, 1, int(1)), (1, 0, 1, ratio(1, 2))],
        )
        .unwrap();
        let x = [int(2), int(1)];
        let y = [int(1), int(4)];
        // 2e1·e1 + 8 e1·e2 + e2·e1 = 2e1 + 8e2 + 1/2 e2
        assert_eq!(
            apply_product(&p, &x, &y).unwrap(),
            vec![int(2), ratio(17, 2)]
        );
        assert_eq!(
            apply_product(&p, &x, &[int(0), int(0)]).unwrap(),
            vec![int(0), int(0)]
        );
        assert!(matches!(
            apply_product(&p, &x, &[int(1)]),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn duplicate_and_out_of_range_constants() {
        assert!(BilinearProduct::from_triples(2, [(0, 0, 0, int(1)), (0, 0, 0, int(2))]).is_err());
        assert!(BilinearProduct::from_triples(2, [(0, 2, 0, int(1))]).is_err());
        let p = BilinearProduct::from_triples(2, [(0, 0, 0, int(0))]).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn evenness_is_enforced() {
        let g = z2();
        let basis = GradedBasis::from_coords(&g, &[&[0], &[1]]).unwrap();
        let odd = Matrix::from_rows(vec![vec![int(0), int(1)], vec![int(0), int(0)]]).unwrap();
        assert!(matches!(
            EvenLinearMap::new(odd, &basis),
            Err(Error::NotEven { row: 0, col: 1, .. })
        ));

        let wrong = BilinearProduct::from_triples(2, [(1, 1, 1, int(1))]).unwrap();
        let r = GradedAlgebra::new(
            g.clone(),
            CommutationFactor::Sign(SignBicharacter::trivial(1)),
            basis.clone(),
            Some(wrong),
            None,
            EvenLinearMap::identity(&basis),
        );
        assert!(matches!(r, Err(Error::ProductNotEven { i: 2, j: 2, k: 2 })));
    }

    #[test]
    fn empty_basis_and_missing_products_rejected() {
        let g = z2();
        assert!(matches!(GradedBasis::new(&g, vec![]), Err(Error::Shape(_))));
        let basis = GradedBasis::from_coords(&g, &[&[0]]).unwrap();
        let r = GradedAlgebra::new(
            g,
            CommutationFactor::Sign(SignBicharacter::trivial(1)),
            basis.clone(),
            None,
            None,
            EvenLinearMap::identity(&basis),
        );
        assert!(matches!(r, Err(Error::MissingComponent(_))));
    }

    #[test]
    fn dense_round_trip() {
        let p =
            BilinearProduct::from_triples(3, [(0, 2, 1, int(3)), (2, 2, 0, ratio(-1, 5))]).unwrap();
        assert_eq!(BilinearProduct::from_dense(&p.to_dense()), p);
    }
}
