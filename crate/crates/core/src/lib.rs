//! Exact verification of Hom-Poisson color algebras given by structure
//! constants over the rationals.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod axioms;
pub mod cli;
pub mod constructions;
pub mod document;
pub mod error;
pub mod fixtures;
pub mod grading;
pub mod linalg;
pub mod operators;
pub mod oracle;
pub mod report;
pub mod scalar;
pub mod tensor;

pub use algebra::{apply_product, BilinearProduct, EvenLinearMap, GradedAlgebra, GradedBasis};
pub use axioms::{
    check_epsilon_commutative, check_hom_associative, check_hom_leibniz, check_hom_lie,
    check_hom_poisson, check_morphism, commutator_bracket, Axiom,
};
pub use error::{Error, Result};
pub use grading::{CommutationFactor, GroupElement, GroupSpec, MultiplierTable, SignBicharacter};
pub use linalg::Matrix;
pub use operators::{check_operator, OperatorClaim, OperatorKind};
pub use report::AxiomReport;
pub use scalar::Scalar;
