use crate::error::{Error, Result};
use crate::linalg::{rank, Subspace};
use crate::module_decomp::{
    irreducible_decomposition_with, Decomposition, DecompositionOptions, Representation,
};

use super::LieAlgebra;

/// Splitting of a reductive algebra into its center and minimal ideals of
/// the derived algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealDecomposition {
    pub center: Subspace,
    /// Minimal ideals of `[g, g]`, sorted by dimension then echelon basis.
    pub simple: Vec<Subspace>,
    /// Ideals left unsplit because the adjoint module did not split over ℚ.
    pub unsplit: Vec<Subspace>,
}

impl IdealDecomposition {
    /// Center (when nonzero) followed by the ideals.
    pub fn components(&self) -> Vec<Subspace> {
        let mut v = Vec::new();
        if !self.center.is_zero() {
            v.push(self.center.clone());
        }
        v.extend(self.simple.iter().cloned());
        v.extend(self.unsplit.iter().cloned());
        v
    }
}

/// Decomposes the adjoint module of the derived algebra; its invariant
/// subspaces are exactly the ideals.
pub fn ideal_decomposition(alg: &LieAlgebra) -> Result<IdealDecomposition> {
    let center = alg.center();
    let derived = alg.derived();
    let bd = alg.killing_on(&derived);
    if rank(&bd) != derived.dim() {
        return Err(Error::Degenerate(
            "Killing form degenerate on the derived algebra; not reductive".into(),
        ));
    }
    if center.dim() + derived.dim() != alg.dim() {
        return Err(Error::Degenerate("center and derived algebra do not span".into()));
    }
    let rep = Representation::adjoint(alg)
        .restrict(&derived)
        .expect("derived algebra is an ideal");
    let opts = DecompositionOptions { assume_completely_reducible: true, ..Default::default() };
    let lift = |s: &Subspace| {
        let bm = derived.basis_matrix();
        Subspace::span(alg.dim(), s.basis().iter().map(|v| bm.mul_vec(v)).collect())
    };
    match irreducible_decomposition_with(&rep, &opts)? {
        Decomposition::Completed(c) => {
            Ok(IdealDecomposition { center, simple: c.iter().map(lift).collect(), unsplit: Vec::new() })
        }
        Decomposition::Unresolved { components, unresolved } => Ok(IdealDecomposition {
            center,
            simple: components.iter().map(lift).collect(),
            unsplit: unresolved.iter().map(lift).collect(),
        }),
        Decomposition::NotCompletelyReducible { .. } => {
            Err(Error::Inconsistent("adjoint module of a semisimple algebra failed to split".into()))
        }
    }
}
