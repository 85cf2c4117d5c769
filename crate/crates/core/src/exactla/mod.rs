//! Exact rational linear algebra: scalars, dense matrices, subspaces and
//! multivariate polynomials.

pub mod matrix;
pub mod poly;
pub mod rational;
pub mod subspace;

pub use matrix::Matrix;
pub use poly::{pencil_at, symbolic_det, MultiPoly, DEFAULT_SYMBOLIC_DET_LIMIT};
pub use rational::{format_rational, one, parse_rational, q, qf, zero, Rational};
pub use subspace::Subspace;
