//! Decompositions with a three-dimensional simple `m_l`, one per classical
//! Wolf-space row.

use serde::{Deserialize, Serialize};

use super::families::{build_algebra, BuiltAlgebra, ClassicalAlgebraSpec};
use super::realify::{complex_i, in_block, support_subalgebra};
use crate::error::{Error, Result};
use crate::homogeneous::{direct_sum, reductive_complement, ReductiveDecomposition, Subtype};
use crate::linalg::{int, Matrix, Rational, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WolfRow {
    #[serde(rename = "su_p2")]
    SuP2,
    #[serde(rename = "so_p4")]
    SoP4,
    #[serde(rename = "sp_p1")]
    SpP1,
    #[serde(rename = "su_p2_nc")]
    SuP2Nc,
    #[serde(rename = "so_p4_nc")]
    SoP4Nc,
    #[serde(rename = "sp_p1_nc")]
    SpP1Nc,
    #[serde(rename = "su_p11_para")]
    SuP11Para,
}

impl WolfRow {
    pub const ALL: [WolfRow; 7] = [
        WolfRow::SuP2,
        WolfRow::SoP4,
        WolfRow::SpP1,
        WolfRow::SuP2Nc,
        WolfRow::SoP4Nc,
        WolfRow::SpP1Nc,
        WolfRow::SuP11Para,
    ];

    pub fn key(self) -> &'static str {
        match self {
            WolfRow::SuP2 => "su_p2",
            WolfRow::SoP4 => "so_p4",
            WolfRow::SpP1 => "sp_p1",
            WolfRow::SuP2Nc => "su_p2_nc",
            WolfRow::SoP4Nc => "so_p4_nc",
            WolfRow::SpP1Nc => "sp_p1_nc",
            WolfRow::SuP11Para => "su_p11_para",
        }
    }

    pub fn from_key(s: &str) -> Option<WolfRow> {
        WolfRow::ALL.into_iter().find(|r| r.key() == s)
    }

    pub fn description(self) -> &'static str {
        match self {
            WolfRow::SuP2 => "su(p+2) = (ℝI + su(p)) + (su(2) + ℂ^p⊗ℂ²)",
            WolfRow::SoP4 => "so(p+4) = (so(p) + so(3)) + (so(3) + ℝ^p⊗ℝ⁴)",
            WolfRow::SpP1 => "sp(p+1) = sp(p) + (sp(1) + ℍ^p)",
            WolfRow::SuP2Nc => "su(p,2) = (ℝI + su(p)) + (su(2) + ℂ^p⊗ℂ²)",
            WolfRow::SoP4Nc => "so(p,4) = (so(p) + so(3)) + (so(3) + ℝ^p⊗ℝ⁴)",
            WolfRow::SpP1Nc => "sp(p,1) = sp(p) + (sp(1) + ℍ^p)",
            WolfRow::SuP11Para => "su(p+1,1) = (ℝI + su(p)) + (su(1,1) + ℂ^p⊗ℂ^{1,1})",
        }
    }

    pub fn algebra(self, p: usize) -> ClassicalAlgebraSpec {
        match self {
            WolfRow::SuP2 => ClassicalAlgebraSpec::su_n(p + 2),
            WolfRow::SoP4 => ClassicalAlgebraSpec::so_n(p + 4),
            WolfRow::SpP1 => ClassicalAlgebraSpec::sp_n(p + 1),
            WolfRow::SuP2Nc => ClassicalAlgebraSpec::su_pq(p, 2),
            WolfRow::SoP4Nc => ClassicalAlgebraSpec::so_pq(p, 4),
            WolfRow::SpP1Nc => ClassicalAlgebraSpec::sp_pq(p, 1),
            WolfRow::SuP11Para => ClassicalAlgebraSpec::su_pq(p + 1, 1),
        }
    }

    pub fn expected_subtype(self) -> Subtype {
        if self == WolfRow::SuP11Para {
            Subtype::IbSplit
        } else {
            Subtype::IbCompact
        }
    }

    /// `(dim l, dim m_l, dim m′)` from the row formula.
    pub fn expected_dims(self, p: usize) -> (usize, usize, usize) {
        let l = match self {
            WolfRow::SuP2 | WolfRow::SuP2Nc | WolfRow::SuP11Para => p * p,
            WolfRow::SoP4 | WolfRow::SoP4Nc => p * p.saturating_sub(1) / 2 + 3,
            WolfRow::SpP1 | WolfRow::SpP1Nc => p * (2 * p + 1),
        };
        (l, 3, 4 * p)
    }
}

#[derive(Clone, Debug)]
pub struct WolfDecomposition {
    pub row: WolfRow,
    pub p: usize,
    pub built: BuiltAlgebra,
    pub dec: ReductiveDecomposition,
    /// The three-dimensional block as constructed, before any centralizer
    /// computation.
    pub block: Subspace,
}

impl WolfDecomposition {
    pub fn name(&self) -> String {
        format!("{}(p={})", self.row.key(), self.p)
    }
}

/// Builds `l` and the 3-dimensional block explicitly, then the Killing
/// complement of `l`.
pub fn wolf_decomposition(row: WolfRow, p: usize) -> Result<WolfDecomposition> {
    if p == 0 {
        return Err(Error::Range("p must be at least 1".into()));
    }
    let built = build_algebra(&row.algebra(p))?;
    let g = &built.algebra;
    let coords = |m: &Matrix| {
        g.coordinates(m).ok_or_else(|| Error::Inconsistent(format!("constructed element is not in {}", built.name)))
    };
    let (l, block) = match row {
        WolfRow::SuP2 | WolfRow::SuP2Nc | WolfRow::SuP11Para => {
            // I = diag(2i E_p, −p i E_2)
            let mut vals: Vec<Rational> = vec![int(2); p];
            vals.extend([int(-(p as i64)), int(-(p as i64))]);
            let i_elem = Matrix::diagonal(&vals).kron(&complex_i());
            let sup = support_subalgebra(g, in_block(0, 2 * p));
            let l = direct_sum(&sup, &Subspace::span(g.dim(), vec![coords(&i_elem)?]));
            (l, support_subalgebra(g, in_block(2 * p, 2 * p + 4)))
        }
        WolfRow::SoP4 | WolfRow::SoP4Nc => {
            let n = p + 4;
            let a = |i: usize, j: usize| {
                let mut m = Matrix::zeros(n, n);
                m[(p + i, p + j)] = int(1);
                m[(p + j, p + i)] = int(-1);
                m
            };
            let self_dual = [&a(0, 1) + &a(2, 3), &a(0, 2) - &a(1, 3), &a(0, 3) + &a(1, 2)];
            let anti_dual = [&a(0, 1) - &a(2, 3), &a(0, 2) + &a(1, 3), &a(0, 3) - &a(1, 2)];
            let anti = Subspace::span(g.dim(), anti_dual.iter().map(coords).collect::<Result<_>>()?);
            let sop = support_subalgebra(g, in_block(0, p));
            let block = Subspace::span(g.dim(), self_dual.iter().map(coords).collect::<Result<_>>()?);
            (direct_sum(&sop, &anti), block)
        }
        WolfRow::SpP1 | WolfRow::SpP1Nc => {
            (support_subalgebra(g, in_block(0, 4 * p)), support_subalgebra(g, in_block(4 * p, 4 * p + 4)))
        }
    };
    let dec = reductive_complement(g, &l, Some(&built.theta))?;
    Ok(WolfDecomposition { row, p, built, dec, block })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homogeneous::classify_admissible;

    #[test]
    fn su4_row() {
        let w = wolf_decomposition(WolfRow::SuP2, 2).unwrap();
        assert_eq!((w.dec.l.dim(), w.dec.m_l.dim(), w.dec.m_prime.dim()), (4, 3, 8));
        assert_eq!(w.dec.m_l, w.block);
        let r = classify_admissible(&w.dec).unwrap();
        assert_eq!(r.subtype, Subtype::IbCompact);
    }

    #[test]
    fn para_row_is_split() {
        let w = wolf_decomposition(WolfRow::SuP11Para, 1).unwrap();
        let r = classify_admissible(&w.dec).unwrap();
        assert_eq!(r.subtype, Subtype::IbSplit);
        assert_eq!(r.m_l_signature.unwrap(), crate::linalg::Signature::new(2, 1, 0));
    }
}
