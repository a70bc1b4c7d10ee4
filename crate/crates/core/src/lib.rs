//! Exact-arithmetic toolkit for Lorentzian homogeneous spaces: subalgebras of
//! the Lorentz algebra, reductive decompositions, invariant metrics and the
//! classical catalog of admissible decompositions.

pub mod error;
pub mod exec;
pub mod linalg;
pub mod lorentz;
pub mod lie;
pub mod module_decomp;
pub mod catalog;
pub mod classifier;
pub mod homogeneous;
pub mod json;
pub mod report;

pub use error::{Error, Result};
