//! Matrix Lie algebras: structure constants, Killing form, centralizers,
//! normalizers and ideals.

mod algebra;
mod ideals;

pub use algebra::{killing_signature_on, LieAlgebra, MatrixLieAlgebra};
pub use ideals::{ideal_decomposition, IdealDecomposition};
