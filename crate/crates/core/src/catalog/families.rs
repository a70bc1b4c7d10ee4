//! Classical real simple Lie algebras as real matrix algebras.
//!
//! Every model is stable under transpose, so `θ(X) = −Xᵀ` is the Cartan
//! involution and the basis is laid out as `k` (skew matrices) followed by
//! `p` (symmetric matrices): `θ = diag(+1, …, +1, −1, …, −1)` in coordinates.

use serde::{Deserialize, Serialize};

use super::realify::{complex_i, left, matrix_kernel, repeat, right, Unit};
use crate::error::{Error, Result};
use crate::exec::Mode;
use crate::json::ser;
use crate::lie::MatrixLieAlgebra;
use crate::linalg::{int, Matrix, Rational, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "su_pq")]
    SuPq,
    #[serde(rename = "so_pq")]
    SoPq,
    #[serde(rename = "sp2n_R")]
    Sp2nR,
    #[serde(rename = "sp_pq")]
    SpPq,
    #[serde(rename = "so_n_H")]
    SoNH,
    #[serde(rename = "su_n")]
    SuN,
    #[serde(rename = "so_n")]
    SoN,
    #[serde(rename = "sp_n")]
    SpN,
}

impl Family {
    pub const ALL: [Family; 8] =
        [Family::SuPq, Family::SoPq, Family::Sp2nR, Family::SpPq, Family::SoNH, Family::SuN, Family::SoN, Family::SpN];

    pub fn key(self) -> &'static str {
        match self {
            Family::SuPq => "su_pq",
            Family::SoPq => "so_pq",
            Family::Sp2nR => "sp2n_R",
            Family::SpPq => "sp_pq",
            Family::SoNH => "so_n_H",
            Family::SuN => "su_n",
            Family::SoN => "so_n",
            Family::SpN => "sp_n",
        }
    }

    pub fn from_key(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.key() == s)
    }

    /// Families indexed by one number `n`.
    pub fn single_parameter(self) -> bool {
        matches!(self, Family::Sp2nR | Family::SoNH | Family::SuN | Family::SoN | Family::SpN)
    }

    pub fn realification_note(self) -> &'static str {
        match self {
            Family::SuPq | Family::SuN => "ℂ^N → ℝ^{2N}: a + ib ↦ [[a, −b], [b, a]]",
            Family::SoPq | Family::SoN | Family::Sp2nR => "real matrices",
            Family::SpPq | Family::SpN | Family::SoNH => {
                "ℍ^N → ℝ^{4N}: q ↦ left multiplication in the basis (1, i, j, k)"
            }
        }
    }
}

/// A classical algebra; single-parameter families use `p = n`, `q = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassicalAlgebraSpec {
    pub family: Family,
    pub p: usize,
    pub q: usize,
}

impl ClassicalAlgebraSpec {
    pub fn new(family: Family, p: usize, q: usize) -> Self {
        ClassicalAlgebraSpec { family, p, q: if family.single_parameter() { 0 } else { q } }
    }

    pub fn su_pq(p: usize, q: usize) -> Self {
        Self::new(Family::SuPq, p, q)
    }
    pub fn so_pq(p: usize, q: usize) -> Self {
        Self::new(Family::SoPq, p, q)
    }
    pub fn sp2n_r(n: usize) -> Self {
        Self::new(Family::Sp2nR, n, 0)
    }
    pub fn sp_pq(p: usize, q: usize) -> Self {
        Self::new(Family::SpPq, p, q)
    }
    pub fn so_n_h(n: usize) -> Self {
        Self::new(Family::SoNH, n, 0)
    }
    pub fn su_n(n: usize) -> Self {
        Self::new(Family::SuN, n, 0)
    }
    pub fn so_n(n: usize) -> Self {
        Self::new(Family::SoN, n, 0)
    }
    pub fn sp_n(n: usize) -> Self {
        Self::new(Family::SpN, n, 0)
    }

    pub fn name(&self) -> String {
        let (p, q) = (self.p, self.q);
        match self.family {
            Family::SuPq => format!("su({p},{q})"),
            Family::SoPq => format!("so({p},{q})"),
            Family::Sp2nR => format!("sp({},R)", 2 * p),
            Family::SpPq => format!("sp({p},{q})"),
            Family::SoNH => format!("so*({})", 2 * p),
            Family::SuN => format!("su({p})"),
            Family::SoN => format!("so({p})"),
            Family::SpN => format!("sp({p})"),
        }
    }

    /// Real dimension from the family formula.
    pub fn expected_dim(&self) -> usize {
        let (p, q) = (self.p, self.q);
        let n = p + q;
        match self.family {
            Family::SuPq | Family::SuN => n * n - 1,
            Family::SoPq | Family::SoN => n * (n - 1) / 2,
            Family::Sp2nR => p * (2 * p + 1),
            Family::SpPq | Family::SpN => n * (2 * n + 1),
            Family::SoNH => p * (2 * p - 1),
        }
    }

    /// Dimension of the maximal compact subalgebra `k`.
    pub fn expected_k_dim(&self) -> usize {
        let (p, q) = (self.p, self.q);
        match self.family {
            Family::SuPq | Family::SuN => p * p + q * q - 1,
            Family::SoPq | Family::SoN => p * p.saturating_sub(1) / 2 + q * q.saturating_sub(1) / 2,
            Family::Sp2nR | Family::SoNH => p * p,
            Family::SpPq | Family::SpN => p * (2 * p + 1) + q * (2 * q + 1),
        }
    }

    /// Size of the real matrices.
    pub fn ambient_size(&self) -> usize {
        let n = self.p + self.q;
        match self.family {
            Family::SuPq | Family::SuN => 2 * n,
            Family::SoPq | Family::SoN => n,
            Family::Sp2nR => 2 * self.p,
            Family::SpPq | Family::SpN | Family::SoNH => 4 * n,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let (p, q) = (self.p, self.q);
        let range = |msg: String| Err(Error::Range(msg));
        match self.family {
            Family::SuPq if p == 0 || q == 0 || p + q < 2 => range(format!("su(p,q) needs p, q ≥ 1, got ({p},{q})")),
            Family::SoPq if p == 0 || q == 0 || p + q < 3 => {
                range(format!("so(p,q) needs p, q ≥ 1 and p + q ≥ 3, got ({p},{q})"))
            }
            Family::SoPq if (p * q) % 2 == 1 => range(format!(
                "so({p},{q}): pq is odd, so rk k < rk g and no compact Cartan subalgebra exists"
            )),
            Family::SpPq if p == 0 || q == 0 => range(format!("sp(p,q) needs p, q ≥ 1, got ({p},{q})")),
            Family::Sp2nR | Family::SpN if p == 0 => range("n must be at least 1".into()),
            Family::SoNH if p < 2 => range("so*(2n) needs n ≥ 2".into()),
            Family::SuN if p < 2 => range("su(n) needs n ≥ 2".into()),
            Family::SoN if p < 3 => range("so(n) needs n ≥ 3".into()),
            _ => Ok(()),
        }
    }

    /// `diag(+1 × pos, −1 × neg)`.
    fn signs(pos: usize, neg: usize) -> Vec<Rational> {
        let mut v = vec![int(1); pos];
        v.extend(vec![int(-1); neg]);
        v
    }
}

/// A built algebra with its Cartan data.
#[derive(Clone, Debug, Serialize)]
pub struct BuiltAlgebra {
    pub spec: ClassicalAlgebraSpec,
    pub name: String,
    #[serde(skip)]
    pub algebra: MatrixLieAlgebra,
    /// `θ(X) = −Xᵀ` in coordinates.
    #[serde(skip)]
    pub theta: Matrix,
    #[serde(serialize_with = "ser::subspace")]
    pub k: Subspace,
    #[serde(serialize_with = "ser::subspace")]
    pub p: Subspace,
    pub realification_note: &'static str,
}

impl BuiltAlgebra {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

/// Builds the algebra, its Cartan involution and Cartan decomposition.
pub fn build_algebra(spec: &ClassicalAlgebraSpec) -> Result<BuiltAlgebra> {
    build_algebra_with(Mode::default(), spec)
}

pub fn build_algebra_with(mode: Mode, spec: &ClassicalAlgebraSpec) -> Result<BuiltAlgebra> {
    spec.validate()?;
    let n = spec.ambient_size();
    let (p, q) = (spec.p, spec.q);
    let preserves = |form: Matrix| move |x: &Matrix| &x.transpose().matmul(&form) + &form.matmul(x);
    let commutes = |c: Matrix| move |x: &Matrix| x.commutator(&c);
    let solutions = match spec.family {
        Family::SuPq | Family::SuN => {
            let ci = repeat(&complex_i(), p + q);
            let f = Matrix::diagonal(&ClassicalAlgebraSpec::signs(p, q)).kron(&Matrix::identity(2));
            let a = commutes(ci.clone());
            let b = preserves(f);
            let tr = |x: &Matrix| Matrix::from_flat(1, 2, vec![x.trace(), x.matmul(&ci).trace()]);
            matrix_kernel(n, &[&a, &b, &tr])
        }
        Family::SoPq | Family::SoN => {
            let b = preserves(Matrix::diagonal(&ClassicalAlgebraSpec::signs(p, q)));
            matrix_kernel(n, &[&b])
        }
        Family::Sp2nR => {
            let mut omega = Matrix::zeros(n, n);
            for i in 0..p {
                omega[(i, p + i)] = int(1);
                omega[(p + i, i)] = int(-1);
            }
            let b = preserves(omega);
            matrix_kernel(n, &[&b])
        }
        Family::SpPq | Family::SpN => {
            let ri = commutes(repeat(&right(Unit::I), p + q));
            let rj = commutes(repeat(&right(Unit::J), p + q));
            let b = preserves(Matrix::diagonal(&ClassicalAlgebraSpec::signs(p, q)).kron(&Matrix::identity(4)));
            matrix_kernel(n, &[&ri, &rj, &b])
        }
        Family::SoNH => {
            let ri = commutes(repeat(&right(Unit::I), p));
            let rj = commutes(repeat(&right(Unit::J), p));
            let b = preserves(repeat(&left(Unit::J), p));
            matrix_kernel(n, &[&ri, &rj, &b])
        }
    };
    let flat = |m: &Matrix| m.as_slice().to_vec();
    let k_span =
        Subspace::span(n * n, solutions.iter().map(|x| flat(&(x - &x.transpose()))).collect());
    let p_span =
        Subspace::span(n * n, solutions.iter().map(|x| flat(&(x + &x.transpose()))).collect());
    if k_span.dim() + p_span.dim() != solutions.len() {
        return Err(Error::Inconsistent(format!("{} is not stable under transpose", spec.name())));
    }
    let mut basis: Vec<Matrix> =
        k_span.basis().iter().map(|v| Matrix::from_flat(n, n, v.clone())).collect();
    basis.extend(p_span.basis().iter().map(|v| Matrix::from_flat(n, n, v.clone())));
    let (dk, dp) = (k_span.dim(), p_span.dim());
    let algebra = MatrixLieAlgebra::from_basis_with(mode, n, basis)?;
    let dim = dk + dp;
    let units = |r: std::ops::Range<usize>| r.map(|i| crate::linalg::unit(dim, i)).collect();
    Ok(BuiltAlgebra {
        spec: *spec,
        name: spec.name(),
        theta: Matrix::diagonal(&ClassicalAlgebraSpec::signs(dk, dp)),
        k: Subspace::span(dim, units(0..dk)),
        p: Subspace::span(dim, units(dk..dim)),
        algebra,
        realification_note: spec.family.realification_note(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homogeneous::check_cartan_involution;

    #[test]
    fn small_forms() {
        for (spec, dim, dk) in [
            (ClassicalAlgebraSpec::su_pq(1, 1), 3, 1),
            (ClassicalAlgebraSpec::sp2n_r(2), 10, 4),
            (ClassicalAlgebraSpec::so_pq(2, 3), 10, 4),
            (ClassicalAlgebraSpec::sp_pq(1, 1), 10, 6),
            (ClassicalAlgebraSpec::so_n_h(2), 6, 4),
            (ClassicalAlgebraSpec::su_n(3), 8, 8),
        ] {
            let b = build_algebra(&spec).unwrap();
            assert_eq!((b.dim(), b.k.dim()), (dim, dk), "{}", b.name);
            assert_eq!((dim, dk), (spec.expected_dim(), spec.expected_k_dim()));
            check_cartan_involution(&b.algebra, &b.theta).unwrap();
        }
    }

    #[test]
    fn odd_pq_rejected() {
        assert!(matches!(build_algebra(&ClassicalAlgebraSpec::so_pq(1, 3)), Err(Error::Range(_))));
    }
}
