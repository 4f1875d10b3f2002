//! Exact arithmetic over cyclotomic fields and dense exact linear algebra.

pub mod cyclotomic;
pub mod eigen;
pub mod field;
pub mod matrix;
pub mod poly;
pub mod rational;
pub(crate) mod roots;
pub mod subspace;

pub use cyclotomic::{cyc_reduce, CycNumber};
pub use eigen::{finite_order_eigendecomposition, finite_order_eigendecomposition_in, scalar_power};
pub use field::Field;
pub use matrix::{preimage, Matrix};
pub use rational::Rational;
pub use subspace::SubspaceBasis;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("no power up to {cap} is a scalar matrix")]
    NotFiniteOrder { cap: u64 },
    #[error("eigenvalues do not all lie in the field")]
    EigenvaluesNotInField,
    #[error("cannot parse coefficient {0:?}")]
    Parse(String),
}
