use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, MatrixLieAlgebra};
use crate::linalg::{
    inverse, kernel_of_rows, rank, subspace_intersection, subspace_sum, Matrix, Rational, Subspace, Vector,
};

/// `g = l ⊕ m` with `[l, m] ⊆ m`. Subspaces are in the coordinates of `g`.
///
/// `m_l = C_m(l)` and `m_prime = [l, m]`; when `key_split` holds the two
/// direct-sum to `m`.
#[derive(Clone, Debug)]
pub struct ReductiveDecomposition {
    pub g: LieAlgebra,
    pub l: Subspace,
    pub m: Subspace,
    pub m_l: Subspace,
    pub m_prime: Subspace,
    pub key_split: bool,
    /// Inverse of the frame `[l basis | m basis]`.
    frame_inv: Matrix,
}

impl ReductiveDecomposition {
    /// Decomposition with an explicitly chosen complement.
    pub fn with_complement(g: &LieAlgebra, l: &Subspace, m: &Subspace) -> Result<Self> {
        let n = g.dim();
        if l.ambient_dim() != n || m.ambient_dim() != n {
            return Err(Error::Dimension("l and m must be subspaces of g".into()));
        }
        if !g.is_subalgebra(l) {
            return Err(Error::Constraint("l is not closed under the bracket".into()));
        }
        if l.dim() + m.dim() != n || !subspace_intersection(l, m)?.is_zero() {
            return Err(Error::Dimension(format!(
                "g ≠ l ⊕ m (dim g = {n}, dim l = {}, dim m = {})",
                l.dim(),
                m.dim()
            )));
        }
        let lm = g.bracket_spaces(l, m);
        if !m.contains_subspace(&lm) {
            return Err(Error::Inconsistent("[l, m] ⊄ m".into()));
        }
        let kernel = isotropy_kernel(g, l, m);
        if !kernel.is_zero() {
            return Err(Error::Hypothesis(format!(
                "isotropy representation is not exact: {} element(s) of l act trivially on m",
                kernel.dim()
            )));
        }
        let m_l = subspace_intersection(m, &g.centralizer(l))?;
        let key_split = subspace_intersection(&m_l, &lm)?.is_zero() && m_l.dim() + lm.dim() == m.dim();
        let mut cols: Vec<Vector> = l.basis().to_vec();
        cols.extend(m.basis().iter().cloned());
        let frame_inv = inverse(&Matrix::from_columns(n, &cols))?.expect("l ⊕ m spans g");
        Ok(ReductiveDecomposition { g: g.clone(), l: l.clone(), m: m.clone(), m_l, m_prime: lm, key_split, frame_inv })
    }

    pub fn dim_l(&self) -> usize {
        self.l.dim()
    }

    pub fn dim_m(&self) -> usize {
        self.m.dim()
    }

    /// Splits `x ∈ g` into `(l-coordinates, m-coordinates)`.
    pub fn split(&self, x: &[Rational]) -> (Vector, Vector) {
        let c = self.frame_inv.mul_vec(x);
        let k = self.l.dim();
        (c[..k].to_vec(), c[k..].to_vec())
    }

    pub fn lift_l(&self, c: &[Rational]) -> Vector {
        combine(self.g.dim(), self.l.basis(), c)
    }

    pub fn lift_m(&self, c: &[Rational]) -> Vector {
        combine(self.g.dim(), self.m.basis(), c)
    }

    /// `ad_X|_m` for each basis element `X` of `l`, in `m` coordinates.
    pub fn isotropy(&self) -> Vec<Matrix> {
        self.l
            .basis()
            .iter()
            .map(|x| self.m.restrict_operator(&self.g.ad(x)).expect("[l, m] ⊆ m was verified"))
            .collect()
    }

    /// Isotropy image `j(l) ⊆ gl(m)`; its basis follows the echelon basis of `l`.
    pub fn isotropy_algebra(&self) -> Result<MatrixLieAlgebra> {
        MatrixLieAlgebra::from_basis(self.m.dim(), self.isotropy())
    }

    /// Isotropy action restricted to `sub ⊆ m`, given in `m` coordinates.
    pub fn isotropy_on(&self, elements: &Subspace, sub_m: &Subspace) -> Option<Vec<Matrix>> {
        let iso = self.isotropy();
        elements
            .basis()
            .iter()
            .map(|c| {
                let mut a = Matrix::zeros(self.m.dim(), self.m.dim());
                for (ci, ai) in c.iter().zip(&iso) {
                    a.add_scaled(ci, ai);
                }
                sub_m.restrict_operator(&a)
            })
            .collect()
    }
}

/// `m` as the Killing-orthogonal complement of `l`. With `theta` (a matrix in
/// `g` coordinates) the stabilizer must be θ-fixed.
pub fn reductive_complement(g: &LieAlgebra, l: &Subspace, theta: Option<&Matrix>) -> Result<ReductiveDecomposition> {
    if l.ambient_dim() != g.dim() {
        return Err(Error::Dimension("l must be a subspace of g".into()));
    }
    if !g.is_subalgebra(l) {
        return Err(Error::Constraint("l is not closed under the bracket".into()));
    }
    if rank(&g.killing_on(l)) != l.dim() {
        return Err(Error::Degenerate("B degenerate on l: no canonical complement".into()));
    }
    if let Some(t) = theta {
        if t.rows() != g.dim() || t.cols() != g.dim() {
            return Err(Error::Dimension("θ must act on g".into()));
        }
        if l.basis().iter().any(|x| t.mul_vec(x) != *x) {
            return Err(Error::Hypothesis("l not contained in θ-fixed subalgebra".into()));
        }
    }
    let m = l.orthogonal(g.killing());
    ReductiveDecomposition::with_complement(g, l, &m)
}

/// Elements of `l` acting trivially on `m`.
pub fn isotropy_kernel(g: &LieAlgebra, l: &Subspace, m: &Subspace) -> Subspace {
    let k = l.dim();
    let brackets: Vec<Vec<Vector>> =
        l.basis().iter().map(|x| { let a = g.ad(x); m.basis().iter().map(|v| a.mul_vec(v)).collect() }).collect();
    let mut rows = Vec::new();
    for (vi, _) in m.basis().iter().enumerate() {
        for c in 0..g.dim() {
            let row: Vector = (0..k).map(|i| brackets[i][vi][c].clone()).collect();
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    let coeffs = kernel_of_rows(rows, k);
    Subspace::span(g.dim(), coeffs.basis().iter().map(|c| combine(g.dim(), l.basis(), c)).collect())
}

pub(crate) fn combine(n: usize, basis: &[Vector], c: &[Rational]) -> Vector {
    let mut out = vec![Rational::zero(); n];
    for (ci, b) in c.iter().zip(basis) {
        if ci.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(b) {
            if !x.is_zero() {
                *o += ci * x;
            }
        }
    }
    out
}

/// Coordinate matrix of a linear map of `g` given on matrices.
pub fn coordinate_map<F>(g: &MatrixLieAlgebra, f: F) -> Result<Matrix>
where
    F: Fn(&Matrix) -> Matrix,
{
    let cols = g
        .basis()
        .iter()
        .enumerate()
        .map(|(i, b)| {
            g.coordinates(&f(b)).ok_or_else(|| Error::Inconsistent(format!("map sends basis element {i} outside g")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(g.dim(), &cols))
}

/// `l ⊕ extra` as one subspace of `g`.
pub fn direct_sum(a: &Subspace, b: &Subspace) -> Subspace {
    subspace_sum(a, b).expect("same ambient")
}

/// The line through `x`.
pub fn line(x: &[Rational]) -> Subspace {
    Subspace::span(x.len(), vec![x.to_vec()])
}

pub(crate) fn is_identity(m: &Matrix) -> bool {
    m.is_square() && (0..m.rows()).all(|i| (0..m.cols()).all(|j| m[(i, j)] == if i == j { Rational::one() } else { Rational::zero() }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn su2() -> MatrixLieAlgebra {
        let l1 = Matrix::from_i64(&[&[0, 0, 0], &[0, 0, -1], &[0, 1, 0]]);
        let l2 = Matrix::from_i64(&[&[0, 0, 1], &[0, 0, 0], &[-1, 0, 0]]);
        let l3 = Matrix::from_i64(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 0]]);
        MatrixLieAlgebra::from_basis(3, vec![l1, l2, l3]).unwrap()
    }

    #[test]
    fn trivial_stabilizer() {
        let g = su2();
        let dec = reductive_complement(&g, &Subspace::zero(3), None).unwrap();
        assert_eq!(dec.m, Subspace::full(3));
        assert_eq!(dec.m_l, Subspace::full(3));
    }

    #[test]
    fn line_stabilizer_splits() {
        let g = su2();
        let l = line(&[int(0), int(0), int(1)]);
        let dec = reductive_complement(&g, &l, None).unwrap();
        assert_eq!(dec.dim_m(), 2);
        assert!(dec.m_l.is_zero());
        assert!(dec.key_split);
        let x = vec![int(1), int(2), int(3)];
        let (a, b) = dec.split(&x);
        let back: Vector = dec.lift_l(&a).iter().zip(dec.lift_m(&b)).map(|(u, v)| u + v).collect();
        assert_eq!(back, x);
    }

    #[test]
    fn complement_must_be_invariant() {
        let g = su2();
        let l = line(&[int(0), int(0), int(1)]);
        let m = Subspace::span(3, vec![vec![int(1), int(0), int(1)], vec![int(0), int(1), int(0)]]);
        assert!(matches!(ReductiveDecomposition::with_complement(&g, &l, &m), Err(Error::Inconsistent(_))));
    }

    #[test]
    fn theta_must_fix_l() {
        let g = su2();
        let l = line(&[int(0), int(0), int(1)]);
        let theta = Matrix::diagonal(&[int(1), int(1), int(-1)]);
        assert!(matches!(reductive_complement(&g, &l, Some(&theta)), Err(Error::Hypothesis(_))));
    }
}
