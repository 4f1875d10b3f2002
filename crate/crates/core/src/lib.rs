//! Exact computations with finite-dimensional coalgebras and Hopf algebras
//! over cyclotomic fields.

#![allow(clippy::needless_range_loop, clippy::type_complexity)]

pub mod catalog;
pub mod census;
pub mod coalgebra;
pub mod comatrix;
pub mod hopf;
pub mod interchange;
pub mod linalg;

pub use linalg::{CycNumber, Rational};

pub type CycMatrix = linalg::Matrix<CycNumber>;
pub type Coalgebra = coalgebra::CoalgebraSC<CycNumber>;
pub type HopfAlgebra = hopf::HopfAlgebraSC<CycNumber>;
