use num_traits::{One, Zero};
use serde::Serialize;

use super::decomposition::{is_identity, ReductiveDecomposition};
use crate::error::{Error, Result};
use crate::json::ser;
use crate::lie::LieAlgebra;
use crate::linalg::{signature, Matrix, Rational, Signature, Subspace, Vector};

/// Symmetric bilinear form on `m`, Gram in the echelon basis of `m`.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantForm {
    #[serde(serialize_with = "ser::subspace")]
    pub domain: Subspace,
    #[serde(serialize_with = "ser::matrix")]
    pub gram: Matrix,
    pub signature: Signature,
    pub kind: &'static str,
    pub invariance_certificate: bool,
}

impl InvariantForm {
    pub fn new(dec: &ReductiveDecomposition, gram: Matrix) -> Result<Self> {
        let s = signature(&gram)?;
        Ok(InvariantForm {
            domain: dec.m.clone(),
            invariance_certificate: invariance_holds(dec, &gram),
            kind: s.kind(),
            signature: s,
            gram,
        })
    }
}

/// `G(ad_X u, v) + G(u, ad_X v) = 0` for every basis `X` of `l`.
pub fn invariance_holds(dec: &ReductiveDecomposition, gram: &Matrix) -> bool {
    dec.isotropy().iter().all(|a| (&a.transpose().matmul(gram) + &gram.matmul(a)).is_zero())
}

/// Checks that `theta` (in `g` coordinates) is an involutive automorphism
/// whose form `−B(X, θY)` is positive definite.
pub fn check_cartan_involution(g: &LieAlgebra, theta: &Matrix) -> Result<()> {
    let n = g.dim();
    if theta.rows() != n || theta.cols() != n {
        return Err(Error::Dimension("θ must act on g".into()));
    }
    if !is_identity(&theta.matmul(theta)) {
        return Err(Error::Hypothesis("θ² ≠ id".into()));
    }
    for i in 0..n {
        for j in i + 1..n {
            let lhs = theta.mul_vec(&g.structure_constant(i, j));
            let rhs = g.bracket(&theta.column(i), &theta.column(j));
            if lhs != rhs {
                return Err(Error::Hypothesis(format!("θ[b{i}, b{j}] ≠ [θb{i}, θb{j}]")));
            }
        }
    }
    let bt = b_theta(g, theta);
    if !signature(&bt)?.is_positive_definite() {
        return Err(Error::Hypothesis("B_θ not positive definite, so θ is not a Cartan involution".into()));
    }
    Ok(())
}

/// `B_θ(X, Y) = −B(X, θY)` on `g`.
pub fn b_theta(g: &LieAlgebra, theta: &Matrix) -> Matrix {
    g.killing().matmul(theta).scale(&-Rational::one())
}

/// Restriction of `B_θ` to `m`.
pub fn invariant_euclidean_metric(dec: &ReductiveDecomposition, theta: &Matrix) -> Result<InvariantForm> {
    check_cartan_involution(&dec.g, theta)?;
    if dec.l.basis().iter().any(|x| theta.mul_vec(x) != *x) {
        return Err(Error::Hypothesis("l not contained in θ-fixed subalgebra".into()));
    }
    let gram = dec.m.restrict_form(&b_theta(&dec.g, theta));
    InvariantForm::new(dec, gram)
}

fn z_in_m(dec: &ReductiveDecomposition, z: &[Rational]) -> Result<Vector> {
    if z.iter().all(Zero::is_zero) {
        return Err(Error::Constraint("Z = 0".into()));
    }
    if !dec.m_l.contains(z) {
        return Err(Error::Hypothesis("Z is not in the centralizer m_l".into()));
    }
    Ok(dec.m.coordinates(z).expect("m_l ⊆ m"))
}

/// `1 / g_m(Z, Z)`: `g_λ` is Lorentzian exactly for `λ` above it.
pub fn lambda_threshold(dec: &ReductiveDecomposition, g_m: &InvariantForm, z: &[Rational]) -> Result<Rational> {
    let zc = z_in_m(dec, z)?;
    let n = g_m.gram.bilinear(&zc, &zc);
    if n <= Rational::zero() {
        return Err(Error::Hypothesis("g_m(Z, Z) ≤ 0: g_m is not Euclidean".into()));
    }
    Ok(n.recip())
}

/// `g_λ = g_m − λ Z*⊗Z*` with `Z* = g_m(Z, ·)`.
pub fn lorentz_metric(
    dec: &ReductiveDecomposition,
    g_m: &InvariantForm,
    z: &[Rational],
    lambda: &Rational,
) -> Result<InvariantForm> {
    let zc = z_in_m(dec, z)?;
    let zs = g_m.gram.transpose().mul_vec(&zc);
    let k = zs.len();
    let mut gram = g_m.gram.clone();
    for i in 0..k {
        for j in 0..k {
            gram[(i, j)] -= lambda * &zs[i] * &zs[j];
        }
    }
    InvariantForm::new(dec, gram)
}

/// `Z*(ad_X u) = 0` for every `X ∈ l`: the rank-one term is invariant, so
/// `g_λ` is invariant for every `λ` whenever `g_m` is.
pub fn rank_one_invariant(dec: &ReductiveDecomposition, g_m: &InvariantForm, z: &[Rational]) -> Result<bool> {
    let zc = z_in_m(dec, z)?;
    let zs = g_m.gram.transpose().mul_vec(&zc);
    Ok(dec.isotropy().iter().all(|a| a.transpose().mul_vec(&zs).iter().all(Zero::is_zero)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homogeneous::decomposition::reductive_complement;
    use crate::lie::MatrixLieAlgebra;
    use crate::linalg::{frac, int};

    fn su2() -> MatrixLieAlgebra {
        let l1 = Matrix::from_i64(&[&[0, 0, 0], &[0, 0, -1], &[0, 1, 0]]);
        let l2 = Matrix::from_i64(&[&[0, 0, 1], &[0, 0, 0], &[-1, 0, 0]]);
        let l3 = Matrix::from_i64(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 0]]);
        MatrixLieAlgebra::from_basis(3, vec![l1, l2, l3]).unwrap()
    }

    #[test]
    fn compact_identity_theta() {
        let g = su2();
        let dec = reductive_complement(&g, &Subspace::zero(3), None).unwrap();
        let gm = invariant_euclidean_metric(&dec, &Matrix::identity(3)).unwrap();
        assert!(gm.signature.is_positive_definite());
        let z = vec![int(1), int(0), int(0)];
        // −B(L1, L1) = 2
        assert_eq!(lambda_threshold(&dec, &gm, &z).unwrap(), frac(1, 2));
        let below = lorentz_metric(&dec, &gm, &z, &frac(1, 4)).unwrap();
        let at = lorentz_metric(&dec, &gm, &z, &frac(1, 2)).unwrap();
        let above = lorentz_metric(&dec, &gm, &z, &int(1)).unwrap();
        assert_eq!(below.signature, Signature::new(3, 0, 0));
        assert_eq!(at.signature, Signature::new(2, 0, 1));
        assert_eq!(above.signature, Signature::new(2, 1, 0));
    }

    #[test]
    fn split_sl2_theta() {
        let e = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        let f = Matrix::from_i64(&[&[0, 0], &[1, 0]]);
        let g = MatrixLieAlgebra::generated_by(2, &[e, f]).unwrap();
        let theta = crate::homogeneous::coordinate_map(&g, |x| x.transpose().scale(&int(-1))).unwrap();
        check_cartan_involution(&g, &theta).unwrap();
        assert!(check_cartan_involution(&g, &Matrix::identity(3)).is_err());
    }
}
