//! Classical real forms and the decompositions built from them.

pub mod contact;
pub mod families;
pub mod realify;
pub mod verify;
pub mod wolf;

pub use contact::{
    contact_decomposition, parse_eigen, semisimple_sum_decomposition, unchecked_centralizer_in_p, ContactDecomposition,
    ContactElementSpec,
};
pub use families::{build_algebra, build_algebra_with, BuiltAlgebra, ClassicalAlgebraSpec, Family};
pub use verify::{
    catalog_entries, exceptional_rows, standard_cases, verify_case, verify_cases, CaseReport, CatalogCase,
    CatalogEntry, ExceptionalRow,
};
pub use wolf::{wolf_decomposition, WolfDecomposition, WolfRow};
