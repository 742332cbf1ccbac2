//! Finite abelian grading groups, sign bicharacters and multipliers.
//!
//! A group is a product of cyclic factors `Z_m1 x ... x Z_mr`. Elements are
//! kept in canonical form (every coordinate reduced into `[0, m_i)`) and are
//! enumerated lexicographically, last coordinate fastest. All tables over
//! `G x G` use that order.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::report::{AxiomReport, Domain, Section};
use crate::scalar::{int, Scalar};

pub const DEFAULT_GROUP_BOUND: u64 = 256;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    moduli: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    coords: Vec<u32>,
}

impl GroupElement {
    pub fn coords(&self) -> &[u32] {
        &self.coords
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(u32::to_string).collect();
        if parts.len() == 1 {
            write!(f, "{}", parts[0])
        } else {
            write!(f, "({})", parts.join(","))
        }
    }
}

impl GroupSpec {
    pub fn new(moduli: Vec<u32>) -> Result<Self> {
        Self::with_bound(moduli, DEFAULT_GROUP_BOUND)
    }

    pub fn with_bound(moduli: Vec<u32>, bound: u64) -> Result<Self> {
        if moduli.contains(&0) {
            return Err(Error::InvalidRepresentation(
                "cyclic factor modulus must be at least 1".into(),
            ));
        }
        let mut order: u64 = 1;
        for &m in &moduli {
            order = order.saturating_mul(m as u64);
        }
        if order > bound {
            return Err(Error::GroupTooLarge { order, bound });
        }
        Ok(GroupSpec { moduli })
    }

    pub fn trivial() -> Self {
        GroupSpec { moduli: Vec::new() }
    }

    pub fn cyclic(m: u32) -> Result<Self> {
        Self::new(vec![m])
    }

    pub fn moduli(&self) -> &[u32] {
        &self.moduli
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn order(&self) -> usize {
        self.moduli.iter().map(|&m| m as usize).product()
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            coords: vec![0; self.rank()],
        }
    }

    /// Reduces arbitrary integer coordinates into canonical form.
    pub fn reduce(&self, coords: &[i64]) -> Result<GroupElement> {
        if coords.len() != self.rank() {
            return Err(Error::Shape(format!(
                "element has {} coordinates, group has rank {}",
                coords.len(),
                self.rank()
            )));
        }
        Ok(GroupElement {
            coords: coords
                .iter()
                .zip(&self.moduli)
                .map(|(&c, &m)| c.rem_euclid(m as i64) as u32)
                .collect(),
        })
    }

    pub fn is_canonical(&self, a: &GroupElement) -> bool {
        a.coords.len() == self.rank() && a.coords.iter().zip(&self.moduli).all(|(&c, &m)| c < m)
    }

    pub fn element(&self, mut index: usize) -> GroupElement {
        let mut coords = vec![0u32; self.rank()];
        for (slot, &m) in coords.iter_mut().zip(&self.moduli).rev() {
            *slot = (index % m as usize) as u32;
            index /= m as usize;
        }
        GroupElement { coords }
    }

    pub fn index_of(&self, a: &GroupElement) -> usize {
        a.coords
            .iter()
            .zip(&self.moduli)
            .fold(0, |acc, (&c, &m)| acc * m as usize + c as usize)
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order()).map(|i| self.element(i))
    }

    fn check(&self, a: &GroupElement) -> Result<()> {
        if self.is_canonical(a) {
            Ok(())
        } else {
            Err(Error::Shape(format!(
                "{a} is not a canonical element of {self}"
            )))
        }
    }

    /// Addition table on canonical indices.
    pub fn addition_table(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let elems: Vec<GroupElement> = self.elements().collect();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let sum = add_unchecked(&self.moduli, &elems[i], &elems[j]);
                        self.index_of(&sum)
                    })
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.moduli.is_empty() {
            return write!(f, "trivial group");
        }
        let parts: Vec<String> = self.moduli.iter().map(|m| format!("Z{m}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

fn add_unchecked(moduli: &[u32], a: &GroupElement, b: &GroupElement) -> GroupElement {
    GroupElement {
        coords: a
            .coords
            .iter()
            .zip(&b.coords)
            .zip(moduli)
            .map(|((&x, &y), &m)| ((x as u64 + y as u64) % m as u64) as u32)
            .collect(),
    }
}

pub fn group_add(g: &GroupSpec, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
    g.check(a)?;
    g.check(b)?;
    Ok(add_unchecked(&g.moduli, a, b))
}

/// `eps(a, b) = (-1)^(a^T E b)` for a mod-2 exponent matrix `E`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignBicharacter {
    exponents: Vec<Vec<u8>>,
}

impl SignBicharacter {
    pub fn new(matrix: Vec<Vec<i64>>) -> Result<Self> {
        let r = matrix.len();
        if matrix.iter().any(|row| row.len() != r) {
            return Err(Error::Shape("exponent matrix must be square".into()));
        }
        Ok(SignBicharacter {
            exponents: matrix
                .into_iter()
                .map(|row| row.into_iter().map(|e| e.rem_euclid(2) as u8).collect())
                .collect(),
        })
    }

    pub fn trivial(rank: usize) -> Self {
        SignBicharacter {
            exponents: vec![vec![0; rank]; rank],
        }
    }

    pub fn identity(rank: usize) -> Self {
        let mut exponents = vec![vec![0; rank]; rank];
        for (i, row) in exponents.iter_mut().enumerate() {
            row[i] = 1;
        }
        SignBicharacter { exponents }
    }

    pub fn rank(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[Vec<u8>] {
        &self.exponents
    }

    /// Odd cyclic factors admit no nontrivial sign, so their rows and columns
    /// of `E` must vanish.
    pub fn check_well_defined(&self, g: &GroupSpec) -> Result<()> {
        if self.rank() != g.rank() {
            return Err(Error::Shape(format!(
                "exponent matrix is {0}x{0} but the group has rank {1}",
                self.rank(),
                g.rank()
            )));
        }
        for (i, &m) in g.moduli().iter().enumerate() {
            if m % 2 == 1
                && (0..self.rank()).any(|j| self.exponents[i][j] != 0 || self.exponents[j][i] != 0)
            {
                return Err(Error::InvalidRepresentation(format!(
                    "factor {i} has odd modulus {m} but row/column {i} of the exponent matrix is nonzero"
                )));
            }
        }
        Ok(())
    }

    pub fn sign(&self, a: &GroupElement, b: &GroupElement) -> i64 {
        let mut parity = 0u64;
        for (i, &ai) in a.coords.iter().enumerate() {
            for (j, &bj) in b.coords.iter().enumerate() {
                parity += self.exponents[i][j] as u64 * ai as u64 * bj as u64;
            }
        }
        if parity.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn value(&self, a: &GroupElement, b: &GroupElement) -> Scalar {
        int(self.sign(a, b))
    }
}

/// A total map `G x G -> Q*`, stored in canonical element order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiplierTable {
    order: usize,
    values: Vec<Scalar>,
}

impl MultiplierTable {
    pub fn new(g: &GroupSpec, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = g.order();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Shape(format!("table over {g} must be {n}x{n}")));
        }
        let values: Vec<Scalar> = rows.into_iter().flatten().collect();
        if let Some(pos) = values.iter().position(Zero::is_zero) {
            return Err(Error::InvalidRepresentation(format!(
                "table entry ({}, {}) is zero",
                g.element(pos / n),
                g.element(pos % n)
            )));
        }
        Ok(MultiplierTable { order: n, values })
    }

    pub fn from_fn(
        g: &GroupSpec,
        f: impl Fn(&GroupElement, &GroupElement) -> Scalar,
    ) -> Result<Self> {
        let elems: Vec<GroupElement> = g.elements().collect();
        let rows = elems
            .iter()
            .map(|a| elems.iter().map(|b| f(a, b)).collect())
            .collect();
        Self::new(g, rows)
    }

    pub fn constant(g: &GroupSpec, c: Scalar) -> Result<Self> {
        Self::from_fn(g, |_, _| c.clone())
    }

    pub fn from_sign(g: &GroupSpec, e: &SignBicharacter) -> Result<Self> {
        e.check_well_defined(g)?;
        Self::from_fn(g, |a, b| e.value(a, b))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, a: usize, b: usize) -> &Scalar {
        &self.values[a * self.order + b]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Scalar]> {
        self.values.chunks(self.order.max(1))
    }

    fn check_group(&self, g: &GroupSpec) -> Result<()> {
        if self.order != g.order() {
            return Err(Error::Shape(format!(
                "table has order {} but the group has order {}",
                self.order,
                g.order()
            )));
        }
        Ok(())
    }
}

/// The commutation factor of a graded algebra: either a sign bicharacter or
/// an explicit table (as produced by a multiplier twist).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CommutationFactor {
    Sign(SignBicharacter),
    Table(MultiplierTable),
}

impl CommutationFactor {
    pub fn to_table(&self, g: &GroupSpec) -> Result<MultiplierTable> {
        match self {
            CommutationFactor::Sign(e) => MultiplierTable::from_sign(g, e),
            CommutationFactor::Table(t) => {
                t.check_group(g)?;
                Ok(t.clone())
            }
        }
    }

    /// Checks the representation against `g` and the bicharacter laws.
    pub fn validate(&self, g: &GroupSpec) -> Result<AxiomReport> {
        match self {
            CommutationFactor::Sign(e) => validate_bicharacter(g, e),
            CommutationFactor::Table(t) => validate_factor_table(g, t),
        }
    }
}

fn factor_laws(g: &GroupSpec, eps: impl Fn(usize, usize) -> Scalar) -> AxiomReport {
    let n = g.order();
    let add = g.addition_table();
    let domain = Domain::Group(g.clone());
    let one = Scalar::one();

    let mut skew = Section::new("bicharacter-skew", domain.clone());
    let mut right = Section::new("bicharacter-right-additive", domain.clone());
    let mut left = Section::new("bicharacter-left-additive", domain.clone());
    let mut unit = Section::new("bicharacter-unit", domain.clone());
    let mut diagonal = Section::new("bicharacter-diagonal", domain);
    for a in 0..n {
        unit.record(
            vec![a],
            vec![eps(a, 0), eps(0, a)],
            vec![one.clone(), one.clone()],
        );
        let d = eps(a, a);
        diagonal.record(vec![a], vec![&d * &d], vec![one.clone()]);
        for b in 0..n {
            skew.record(vec![a, b], vec![eps(a, b) * eps(b, a)], vec![one.clone()]);
            for c in 0..n {
                right.record(
                    vec![a, b, c],
                    vec![eps(a, add[b][c])],
                    vec![eps(a, b) * eps(a, c)],
                );
                left.record(
                    vec![a, b, c],
                    vec![eps(add[a][b], c)],
                    vec![eps(a, c) * eps(b, c)],
                );
            }
        }
    }
    let mut report = AxiomReport::new();
    for s in [skew, right, left, unit, diagonal] {
        report.push(s);
    }
    report
}

/// Exhaustive check of the skew-symmetric bicharacter laws over all of `G`.
pub fn validate_bicharacter(g: &GroupSpec, e: &SignBicharacter) -> Result<AxiomReport> {
    e.check_well_defined(g)?;
    let elems: Vec<GroupElement> = g.elements().collect();
    Ok(factor_laws(g, |a, b| e.value(&elems[a], &elems[b])))
}

/// The same laws for a table-valued factor such as `eps * delta`.
pub fn validate_factor_table(g: &GroupSpec, t: &MultiplierTable) -> Result<AxiomReport> {
    t.check_group(g)?;
    Ok(factor_laws(g, |a, b| t.get(a, b).clone()))
}

/// Cocycle identity on all triples; with `symmetric`, also symmetry and
/// cyclic invariance of `s(x, y) s(z, x + y)`.
pub fn validate_multiplier(
    g: &GroupSpec,
    s: &MultiplierTable,
    symmetric: bool,
) -> Result<AxiomReport> {
    s.check_group(g)?;
    if s.values.iter().any(Zero::is_zero) {
        return Err(Error::InvalidRepresentation(
            "multiplier has a zero entry".into(),
        ));
    }
    let n = g.order();
    let add = g.addition_table();
    let domain = Domain::Group(g.clone());
    let v = |a: usize, b: usize| s.get(a, b);

    let mut report = AxiomReport::new();
    let mut cocycle = Section::new("multiplier-cocycle", domain.clone());
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                cocycle.record(
                    vec![x, y, z],
                    vec![v(x, add[y][z]) * v(y, z)],
                    vec![v(x, y) * v(add[x][y], z)],
                );
            }
        }
    }
    report.push(cocycle);

    if symmetric {
        let mut sym = Section::new("multiplier-symmetric", domain.clone());
        let mut cyclic = Section::new("multiplier-cyclic", domain);
        for x in 0..n {
            for y in 0..n {
                sym.record(vec![x, y], vec![v(x, y).clone()], vec![v(y, x).clone()]);
                for z in 0..n {
                    let xyz = v(x, y) * v(z, add[x][y]);
                    let yzx = v(y, z) * v(x, add[y][z]);
                    let zxy = v(z, x) * v(y, add[z][x]);
                    cyclic.record(vec![x, y, z], vec![xyz.clone(), xyz], vec![yzx, zxy]);
                }
            }
        }
        report.push(sym);
        report.push(cyclic);
    }
    Ok(report)
}

/// `delta(x, y) = s(x, y) / s(y, x)`.
pub fn delta_from_multiplier(g: &GroupSpec, s: &MultiplierTable) -> Result<MultiplierTable> {
    s.check_group(g)?;
    let n = g.order();
    let rows = (0..n)
        .map(|x| (0..n).map(|y| s.get(x, y) / s.get(y, x)).collect())
        .collect();
    MultiplierTable::new(g, rows)
}

/// Pointwise product of two tables on the same group.
pub fn twist_epsilon(e: &MultiplierTable, d: &MultiplierTable) -> Result<MultiplierTable> {
    if e.order != d.order {
        return Err(Error::Shape(
            "tables are defined on groups of different order".into(),
        ));
    }
    Ok(MultiplierTable {
        order: e.order,
        values: e.values.iter().zip(&d.values).map(|(a, b)| a * b).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    fn z2z2() -> GroupSpec {
        GroupSpec::new(vec![2, 2]).unwrap()
    }

    fn el(g: &GroupSpec, c: &[i64]) -> GroupElement {
        g.reduce(c).unwrap()
    }

    #[test]
    fn modular_addition() {
        let g = z2z2();
        assert_eq!(
            group_add(&g, &el(&g, &[1, 0]), &el(&g, &[1, 1])).unwrap(),
            el(&g, &[0, 1])
        );
        let z4 = GroupSpec::cyclic(4).unwrap();
        assert_eq!(
            group_add(&z4, &el(&z4, &[3]), &el(&z4, &[3])).unwrap(),
            el(&z4, &[2])
        );
        for a in z4.elements() {
            assert_eq!(group_add(&z4, &a, &z4.zero()).unwrap(), a);
        }
    }

    #[test]
    fn addition_rejects_bad_shapes() {
        let g = z2z2();
        let z4 = GroupSpec::cyclic(4).unwrap();
        assert!(matches!(
            group_add(&g, &z4.zero(), &g.zero()),
            Err(Error::Shape(_))
        ));
        let not_canonical = GroupElement { coords: vec![2, 0] };
        assert!(group_add(&g, &not_canonical, &g.zero()).is_err());
    }

    #[test]
    fn canonical_order_is_lexicographic() {
        let g = GroupSpec::new(vec![2, 3]).unwrap();
        let listed: Vec<String> = g.elements().map(|e| e.to_string()).collect();
        assert_eq!(
            listed,
            ["(0,0)", "(0,1)", "(0,2)", "(1,0)", "(1,1)", "(1,2)"]
        );
        for (i, e) in g.elements().enumerate() {
            assert_eq!(g.index_of(&e), i);
        }
        assert_eq!(GroupSpec::trivial().order(), 1);
    }

    #[test]
    fn group_bound_is_enforced() {
        assert!(matches!(
            GroupSpec::new(vec![16, 17]),
            Err(Error::GroupTooLarge {
                order: 272,
                bound: 256
            })
        ));
        assert!(GroupSpec::with_bound(vec![16, 17], 300).is_ok());
        assert!(GroupSpec::new(vec![0]).is_err());
        assert!(GroupSpec::new(vec![1, 2]).is_ok());
    }

    #[test]
    fn sign_bicharacters_from_examples_are_valid() {
        // {-1,+1} as Z2 with eps(1,1) = -1
        let z2 = GroupSpec::cyclic(2).unwrap();
        let e = SignBicharacter::new(vec![vec![1]]).unwrap();
        assert!(validate_bicharacter(&z2, &e).unwrap().holds());
        assert_eq!(e.sign(&el(&z2, &[1]), &el(&z2, &[1])), -1);

        // Z2^n with the identity exponent matrix
        for n in 1..=3 {
            let g = GroupSpec::new(vec![2; n]).unwrap();
            assert!(validate_bicharacter(&g, &SignBicharacter::identity(n))
                .unwrap()
                .holds());
            assert!(validate_bicharacter(&g, &SignBicharacter::trivial(n))
                .unwrap()
                .holds());
        }

        // Z x Z through its parity quotient
        let zz = SignBicharacter::new(vec![vec![1, 1], vec![1, 1]]).unwrap();
        assert!(validate_bicharacter(&z2z2(), &zz).unwrap().holds());
    }

    #[test]
    fn odd_modulus_sign_is_rejected_before_enumeration() {
        let z3 = GroupSpec::cyclic(3).unwrap();
        let e = SignBicharacter::new(vec![vec![1]]).unwrap();
        assert!(matches!(
            validate_bicharacter(&z3, &e),
            Err(Error::InvalidRepresentation(_))
        ));
        let z4 = GroupSpec::cyclic(4).unwrap();
        assert!(validate_bicharacter(&z4, &e).unwrap().holds());
    }

    #[test]
    fn non_skew_exponents_are_reported() {
        let e = SignBicharacter::new(vec![vec![0, 1], vec![0, 0]]).unwrap();
        let r = validate_bicharacter(&z2z2(), &e).unwrap();
        let skew = r.section("bicharacter-skew").unwrap();
        assert!(!skew.holds());
        // eps((1,0),(0,1)) = -1 while eps((0,1),(1,0)) = 1
        assert!(skew.violations.iter().any(|v| v.indices == vec![2, 1]));
        assert!(r.section("bicharacter-right-additive").unwrap().holds());
    }

    #[test]
    fn constant_multiplier_passes_everything() {
        let g = z2z2();
        for c in [int(1), ratio(-3, 7)] {
            let s = MultiplierTable::constant(&g, c).unwrap();
            assert!(validate_multiplier(&g, &s, true).unwrap().holds());
            let d = delta_from_multiplier(&g, &s).unwrap();
            assert!(d.values.iter().all(One::is_one));
        }
    }

    #[test]
    fn zero_entries_are_rejected() {
        let g = GroupSpec::cyclic(2).unwrap();
        let rows = vec![vec![int(1), int(0)], vec![int(1), int(1)]];
        assert!(matches!(
            MultiplierTable::new(&g, rows),
            Err(Error::InvalidRepresentation(_))
        ));
    }

    #[test]
    fn twist_with_neutral_delta_is_identity() {
        let g = z2z2();
        let e = MultiplierTable::from_sign(&g, &SignBicharacter::identity(2)).unwrap();
        let one = MultiplierTable::constant(&g, int(1)).unwrap();
        assert_eq!(twist_epsilon(&e, &one).unwrap(), e);
        let z2 = MultiplierTable::constant(&GroupSpec::cyclic(2).unwrap(), int(1)).unwrap();
        assert!(twist_epsilon(&e, &z2).is_err());
    }
}
