//! Exact linear algebra over ℚ.

pub mod form;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod subspace;

pub use form::{diagonalize, signature, Diagonalization, Signature};
pub use matrix::{dot, unit, vec_add, vec_is_zero, vec_scale, vec_sub, Matrix, Vector};
pub use poly::{
    charpoly, is_semisimple_operator, power_sums, rational_eigenspaces, roots_real_nonpositive, Poly,
};
pub use rational::{format_rational, frac, int, parse_rational, Rational};
pub use subspace::{
    determinant, inverse, kernel, kernel_of_rows, rank, rref, solve, subspace_intersection, Echelon,
    subspace_sum, Subspace,
};
