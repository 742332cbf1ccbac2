//! Direct evaluation of identities on vectors.
//!
//! This is the second evaluation path. Products are applied to coefficient
//! vectors with [`apply_product`], maps with matrix multiplication, and
//! commutation signs are read from the degrees of the arguments. Nothing
//! here goes through the tensor compositions of `axioms` and `operators`,
//! so the two paths check each other.

use crate::algebra::{apply_product, BilinearProduct, GradedAlgebra};
use crate::axioms::Axiom;
use crate::error::{Error, Result};
use crate::grading::{GroupElement, MultiplierTable};
use crate::operators::{OperatorClaim, OperatorLaw, Product};
use crate::scalar::Scalar;

use num_traits::Zero;

/// A homogeneous element: coefficients supported on basis vectors of one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homogeneous {
    pub degree: GroupElement,
    pub coeffs: Vec<Scalar>,
}

impl Homogeneous {
    /// Checks that every nonzero coefficient sits on a basis vector of `degree`.
    pub fn new(a: &GradedAlgebra, degree: GroupElement, coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.len() != a.dim() {
            return Err(Error::Shape(format!(
                "vector of length {} in an algebra of dimension {}",
                coeffs.len(),
                a.dim()
            )));
        }
        if !a.group().is_canonical(&degree) {
            return Err(Error::Shape(format!(
                "degree {degree} is not an element of {}",
                a.group()
            )));
        }
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() && a.basis().degree(i) != &degree {
                return Err(Error::Shape(format!(
                    "e{} does not have degree {degree}",
                    i + 1
                )));
            }
        }
        Ok(Homogeneous { degree, coeffs })
    }

    pub fn basis(a: &GradedAlgebra, i: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); a.dim()];
        coeffs[i] = Scalar::from_integer(1.into());
        Homogeneous {
            degree: a.basis().degree(i).clone(),
            coeffs,
        }
    }
}

/// Basis indices of a given degree.
pub fn indices_of_degree(a: &GradedAlgebra, degree: &GroupElement) -> Vec<usize> {
    (0..a.dim())
        .filter(|&i| a.basis().degree(i) == degree)
        .collect()
}

struct Ctx<'a> {
    a: &'a GradedAlgebra,
    table: MultiplierTable,
}

impl<'a> Ctx<'a> {
    fn new(a: &'a GradedAlgebra) -> Result<Self> {
        Ok(Ctx {
            a,
            table: a.factor().to_table(a.group())?,
        })
    }

    fn eps(&self, x: &Homogeneous, y: &Homogeneous) -> Scalar {
        let g = self.a.group();
        self.table
            .get(g.index_of(&x.degree), g.index_of(&y.degree))
            .clone()
    }

    fn alpha(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.a.alpha().apply(x)
    }
}

fn scale(c: &Scalar, v: Vec<Scalar>) -> Vec<Scalar> {
    v.into_iter().map(|x| x * c).collect()
}

fn add(u: Vec<Scalar>, v: Vec<Scalar>) -> Vec<Scalar> {
    u.into_iter().zip(v).map(|(a, b)| a + b).collect()
}

fn sub(u: Vec<Scalar>, v: Vec<Scalar>) -> Vec<Scalar> {
    u.into_iter().zip(v).map(|(a, b)| a - b).collect()
}

/// Both sides of `axiom` at the given homogeneous arguments.
pub fn eval_axiom(
    a: &GradedAlgebra,
    axiom: Axiom,
    args: &[&Homogeneous],
) -> Result<(Vec<Scalar>, Vec<Scalar>)> {
    if args.len() != axiom.arity() {
        return Err(Error::Shape(format!(
            "{} takes {} arguments, got {}",
            axiom.label(),
            axiom.arity(),
            args.len()
        )));
    }
    let c = Ctx::new(a)?;
    let zero = vec![Scalar::zero(); a.dim()];
    Ok(match axiom {
        Axiom::HomAssociativity | Axiom::Associativity => {
            let mu = a.require_mu()?;
            let (x, y, z) = (&args[0].coeffs, &args[1].coeffs, &args[2].coeffs);
            let (ax, az) = if axiom == Axiom::HomAssociativity {
                (c.alpha(x), c.alpha(z))
            } else {
                (x.clone(), z.clone())
            };
            let lhs = apply_product(mu, &ax, &apply_product(mu, y, z)?)?;
            let rhs = apply_product(mu, &apply_product(mu, x, y)?, &az)?;
            (lhs, rhs)
        }
        Axiom::EpsilonCommutativity => {
            let mu = a.require_mu()?;
            let (x, y) = (args[0], args[1]);
            let lhs = apply_product(mu, &x.coeffs, &y.coeffs)?;
            let rhs = scale(&c.eps(x, y), apply_product(mu, &y.coeffs, &x.coeffs)?);
            (lhs, rhs)
        }
        Axiom::SkewSymmetry => {
            let br = a.require_bracket()?;
            let (x, y) = (args[0], args[1]);
            let lhs = apply_product(br, &x.coeffs, &y.coeffs)?;
            let rhs = scale(&-c.eps(x, y), apply_product(br, &y.coeffs, &x.coeffs)?);
            (lhs, rhs)
        }
        Axiom::HomJacobi => {
            let br = a.require_bracket()?;
            let term = |p: &Homogeneous, q: &Homogeneous, r: &Homogeneous| -> Result<Vec<Scalar>> {
                let inner = apply_product(br, &q.coeffs, &r.coeffs)?;
                Ok(scale(
                    &c.eps(r, p),
                    apply_product(br, &c.alpha(&p.coeffs), &inner)?,
                ))
            };
            let (x, y, z) = (args[0], args[1], args[2]);
            let sum = add(add(term(x, y, z)?, term(y, z, x)?), term(z, x, y)?);
            (sum, zero)
        }
        Axiom::HomLeibniz => {
            let mu = a.require_mu()?;
            let br = a.require_bracket()?;
            let (x, y, z) = (args[0], args[1], args[2]);
            let lhs = apply_product(
                br,
                &c.alpha(&x.coeffs),
                &apply_product(mu, &y.coeffs, &z.coeffs)?,
            )?;
            let first = apply_product(
                mu,
                &apply_product(br, &x.coeffs, &y.coeffs)?,
                &c.alpha(&z.coeffs),
            )?;
            let second = apply_product(
                mu,
                &c.alpha(&y.coeffs),
                &apply_product(br, &x.coeffs, &z.coeffs)?,
            )?;
            (lhs, add(first, scale(&c.eps(x, y), second)))
        }
    })
}

fn product(a: &GradedAlgebra, p: Product) -> Result<&BilinearProduct> {
    match p {
        Product::Mu => a.require_mu(),
        Product::Bracket => a.require_bracket(),
    }
}

/// Both sides of an operator law at two vectors.
pub fn eval_law(
    a: &GradedAlgebra,
    claim: &OperatorClaim,
    law: OperatorLaw,
    which: Product,
    x: &[Scalar],
    y: &[Scalar],
) -> Result<(Vec<Scalar>, Vec<Scalar>)> {
    let p = product(a, which)?;
    let b = |v: &[Scalar]| claim.map.apply(v);
    let ak = |v: &[Scalar]| a.alpha().power(claim.power).apply(v);
    let mul = |u: &[Scalar], v: &[Scalar]| apply_product(p, u, v);
    Ok(match law {
        OperatorLaw::CentroidLeft => (b(&mul(x, y)?), mul(&b(x), &ak(y))?),
        OperatorLaw::CentroidRight => (b(&mul(x, y)?), mul(&ak(x), &b(y))?),
        OperatorLaw::AveragingLeft => (b(&mul(&b(x), &ak(y))?), mul(&b(x), &b(y))?),
        OperatorLaw::AveragingRight => (b(&mul(&ak(x), &b(y))?), mul(&b(x), &b(y))?),
        OperatorLaw::RotaBaxter => {
            let inner = add(
                add(mul(&b(x), y)?, mul(x, &b(y))?),
                scale(&claim.weight, mul(x, y)?),
            );
            (mul(&b(x), &b(y))?, b(&inner))
        }
        OperatorLaw::Nijenhuis => {
            let inner = sub(add(mul(&b(x), y)?, mul(x, &b(y))?), b(&mul(x, y)?));
            (mul(&b(x), &b(y))?, b(&inner))
        }
    })
}

/// `(beta(alpha x), alpha(beta x))`.
pub fn eval_alpha_commutation(
    a: &GradedAlgebra,
    claim: &OperatorClaim,
    x: &[Scalar],
) -> (Vec<Scalar>, Vec<Scalar>) {
    (
        claim.map.apply(&a.alpha().apply(x)),
        a.alpha().apply(&claim.map.apply(x)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::scalar::int;

    #[test]
    fn leibniz_spot_value() {
        // {alpha e2, e3 e1} = [e2, 2e3] = 2e3
        let a = fixtures::hom_poisson_3d(int(2), 1);
        let e = |i| Homogeneous::basis(&a, i);
        let (l, r) = eval_axiom(&a, Axiom::HomLeibniz, &[&e(1), &e(2), &e(0)]).unwrap();
        assert_eq!(l, vec![int(0), int(0), int(2)]);
        assert_eq!(l, r);
    }

    #[test]
    fn rejects_inhomogeneous_vectors() {
        let a = fixtures::hom_poisson_3d(int(2), 1);
        let even = a.group().zero();
        assert!(Homogeneous::new(&a, even.clone(), vec![int(1), int(1), int(0)]).is_ok());
        assert!(Homogeneous::new(&a, even, vec![int(1), int(0), int(1)]).is_err());
        assert_eq!(indices_of_degree(&a, &a.group().element(1)), vec![2]);
    }

    #[test]
    fn arity_is_checked() {
        let a = fixtures::hom_poisson_3d(int(2), 1);
        let e = Homogeneous::basis(&a, 0);
        assert!(eval_axiom(&a, Axiom::HomJacobi, &[&e, &e]).is_err());
    }
}
