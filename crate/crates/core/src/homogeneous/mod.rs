//! Reductive homogeneous spaces `G/L`: decomposition, admissibility,
//! invariant metrics and the structure of Lorentz quotients.

pub mod admissible;
pub mod decomposition;
pub mod metric;
pub mod structure;

pub use admissible::{bookkeeping, classify_admissible, is_admissible, AdmissibilityReport, Minimality, Subtype};
pub use decomposition::{coordinate_map, direct_sum, line, reductive_complement, ReductiveDecomposition};
pub use metric::{
    b_theta, check_cartan_involution, invariant_euclidean_metric, lambda_threshold, lorentz_metric, rank_one_invariant,
    InvariantForm,
};
pub use structure::{
    analyze_type_ii, analyze_type_iii, check_e0_trivial, e0_of, lorentz_space_form, product_model, three_dim_model,
    type_iii_model, E0Report, Model, ModelFixture, SpaceFormFactor, TypeIIAnalysis, TypeIIIAnalysis, TypeIIIVerdict,
};
