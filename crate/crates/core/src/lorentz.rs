//! Minkowski space ℝ^{1,n+1} in the Witt basis `(p, e₁…e_n, q)` and
//! constructors for the standard subalgebras of its Lorentz algebra.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::MatrixLieAlgebra;
use crate::linalg::{
    int, rational_eigenspaces, unit, vec_is_zero, Matrix, Rational, Subspace, Vector,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinkowskiSpace {
    n: usize,
    gram: Matrix,
}

/// Witt-basis model with `g(p,q) = 1`, `g(eᵢ,eⱼ) = δᵢⱼ`, all else zero.
pub fn minkowski(n: usize) -> MinkowskiSpace {
    let dim = n + 2;
    let mut gram = Matrix::zeros(dim, dim);
    gram[(0, dim - 1)] = int(1);
    gram[(dim - 1, 0)] = int(1);
    for i in 1..=n {
        gram[(i, i)] = int(1);
    }
    MinkowskiSpace { n, gram }
}

impl MinkowskiSpace {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.n + 2
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn p(&self) -> Vector {
        unit(self.dim(), 0)
    }

    pub fn q(&self) -> Vector {
        unit(self.dim(), self.n + 1)
    }

    /// `e_i` for `1 ≤ i ≤ n`.
    pub fn e(&self, i: usize) -> Vector {
        assert!((1..=self.n).contains(&i), "e index out of range");
        unit(self.dim(), i)
    }

    /// `E = span(e₁…e_n)`.
    pub fn euclidean_part(&self) -> Subspace {
        Subspace::span(self.dim(), (1..=self.n).map(|i| self.e(i)).collect())
    }

    pub fn inner(&self, u: &[Rational], v: &[Rational]) -> Rational {
        self.gram.bilinear(u, v)
    }

    /// `u∧v : x ↦ g(v,x)u − g(u,x)v`, i.e. `u vᵀG − v uᵀG`.
    pub fn bivector(&self, u: &[Rational], v: &[Rational]) -> Matrix {
        bivector_with(&self.gram, u, v)
    }

    /// `Xᵀ·G + G·X = 0`.
    pub fn is_skew(&self, x: &Matrix) -> bool {
        is_skew_for(&self.gram, x)
    }

    /// Timelike vector `p − q` with `g = −2`; Type I algebras in standard
    /// position fix it.
    pub fn timelike(&self) -> Vector {
        let mut t = self.p();
        t[self.n + 1] = int(-1);
        t
    }
}

pub fn bivector_with(gram: &Matrix, u: &[Rational], v: &[Rational]) -> Matrix {
    let gu = gram.mul_vec(u);
    let gv = gram.mul_vec(v);
    let n = gram.rows();
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let a = &u[i] * &gv[j];
            let b = &v[i] * &gu[j];
            m[(i, j)] = a - b;
        }
    }
    m
}

pub fn is_skew_for(gram: &Matrix, x: &Matrix) -> bool {
    (&x.transpose().matmul(gram) + &gram.matmul(x)).is_zero()
}

/// `so(V)` with its depth-one grading by `ad_{p∧q}`.
#[derive(Clone, Debug)]
pub struct GradedLorentzAlgebra {
    pub space: MinkowskiSpace,
    pub algebra: MatrixLieAlgebra,
    pub g_minus: Subspace,
    pub g_zero: Subspace,
    pub g_plus: Subspace,
}

/// Bivectors `u_a∧u_b` over Witt basis indices `a < b`.
pub fn so_basis(space: &MinkowskiSpace) -> Vec<Matrix> {
    let d = space.dim();
    let mut out = Vec::with_capacity(d * (d - 1) / 2);
    for a in 0..d {
        for b in a + 1..d {
            out.push(space.bivector(&unit(d, a), &unit(d, b)));
        }
    }
    out
}

pub fn lorentz_algebra(space: &MinkowskiSpace) -> GradedLorentzAlgebra {
    let algebra = MatrixLieAlgebra::from_basis(space.dim(), so_basis(space))
        .expect("bivectors span a closed algebra");
    let pq = algebra.coordinates(&space.bivector(&space.p(), &space.q())).expect("p∧q ∈ so(V)");
    let ad = algebra.ad(&pq);
    let mut spaces = rational_eigenspaces(&ad);
    let mut take = |lambda: i64| {
        spaces
            .iter()
            .position(|(r, _)| *r == int(lambda))
            .map(|i| spaces.remove(i).1)
            .unwrap_or_else(|| Subspace::zero(algebra.dim()))
    };
    let g_minus = take(-1);
    let g_zero = take(0);
    let g_plus = take(1);
    GradedLorentzAlgebra { space: space.clone(), algebra, g_minus, g_zero, g_plus }
}

impl GradedLorentzAlgebra {
    /// Degree `-1`, `0` or `1` component.
    pub fn component(&self, degree: i32) -> Option<&Subspace> {
        match degree {
            -1 => Some(&self.g_minus),
            0 => Some(&self.g_zero),
            1 => Some(&self.g_plus),
            _ => None,
        }
    }

    /// `[gⁱ, gʲ] ⊆ g^{i+j}` with `g^{±2} = 0`, on all basis pairs.
    pub fn grading_holds(&self) -> bool {
        for i in -1..=1 {
            for j in -1..=1 {
                let a = self.component(i).expect("degree");
                let b = self.component(j).expect("degree");
                let target = self.component(i + j);
                for x in a.basis() {
                    for y in b.basis() {
                        let br = self.algebra.bracket(x, y);
                        let ok = match target {
                            Some(t) => t.contains(&br),
                            None => vec_is_zero(&br),
                        };
                        if !ok {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

fn check_skew(space: &MinkowskiSpace, mats: &[Matrix], what: &str) -> Result<()> {
    for (i, m) in mats.iter().enumerate() {
        if m.rows() != space.dim() || m.cols() != space.dim() {
            return Err(Error::Dimension(format!("{what}[{i}] has the wrong size")));
        }
        if !space.is_skew(m) {
            return Err(Error::Constraint(format!("{what}[{i}] is not g-skew")));
        }
    }
    Ok(())
}

fn kills(m: &Matrix, v: &[Rational]) -> bool {
    vec_is_zero(&m.mul_vec(v))
}

/// Basis of the maximal compact `so(n+1)`, the stabilizer of `p − q`:
/// `(p+q)∧eᵢ` and `eᵢ∧eⱼ`.
pub fn maximal_compact_basis(space: &MinkowskiSpace) -> Vec<Matrix> {
    let n = space.n();
    let s: Vector = space.p().iter().zip(space.q()).map(|(a, b)| a + b).collect();
    let mut out: Vec<Matrix> = (1..=n).map(|i| space.bivector(&s, &space.e(i))).collect();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(space.bivector(&space.e(i), &space.e(j)));
        }
    }
    out
}

/// `so(E)` inside `so(V)`.
pub fn so_e_basis(space: &MinkowskiSpace) -> Vec<Matrix> {
    let n = space.n();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(space.bivector(&space.e(i), &space.e(j)));
        }
    }
    out
}

/// Type I: the subalgebra generated by `gens`, each of which must be g-skew
/// and fix the timelike vector `p − q`.
pub fn subalgebra_type1(space: &MinkowskiSpace, gens: &[Matrix]) -> Result<MatrixLieAlgebra> {
    check_skew(space, gens, "generator")?;
    let t = space.timelike();
    if let Some(i) = gens.iter().position(|g| !kills(g, &t)) {
        return Err(Error::Constraint(format!(
            "generator[{i}] moves the timelike vector p − q, so it is not in so(n+1)"
        )));
    }
    MatrixLieAlgebra::generated_by(space.dim(), gens)
}

/// Type II: `so(V(H)) + k` with `H = span(e₁…e_k)` and `k_part ⊆ so(H^⊥)`.
pub fn subalgebra_type2(
    space: &MinkowskiSpace,
    k: usize,
    k_part: &[Matrix],
) -> Result<MatrixLieAlgebra> {
    let n = space.n();
    if k < 1 || k + 1 > n {
        return Err(Error::Range(format!("Type II needs 1 ≤ k ≤ n − 1, got k = {k}, n = {n}")));
    }
    check_skew(space, k_part, "k_part")?;
    let vh: Vec<Vector> =
        std::iter::once(space.p()).chain((1..=k).map(|i| space.e(i))).chain([space.q()]).collect();
    for (i, m) in k_part.iter().enumerate() {
        if let Some(v) = vh.iter().find(|v| !kills(m, v)) {
            let name = witt_name(space, v);
            return Err(Error::Constraint(format!("k_part[{i}] acts on {name} ∈ V(H); not in so(H^⊥)")));
        }
    }
    let mut gens = Vec::new();
    for a in 0..vh.len() {
        for b in a + 1..vh.len() {
            gens.push(space.bivector(&vh[a], &vh[b]));
        }
    }
    gens.extend(k_part.iter().cloned());
    MatrixLieAlgebra::generated_by(space.dim(), &gens)
}

/// Type III: `ℝd ⊕ k` with `d = p∧q + C₀`, `C₀ ∈ so(E)` and `k_part`
/// commuting with `C₀` inside `so(E)`.
pub fn subalgebra_type3(
    space: &MinkowskiSpace,
    c0: &Matrix,
    k_part: &[Matrix],
) -> Result<MatrixLieAlgebra> {
    check_skew(space, std::slice::from_ref(c0), "C0")?;
    check_skew(space, k_part, "k_part")?;
    let (p, q) = (space.p(), space.q());
    if !kills(c0, &p) || !kills(c0, &q) {
        return Err(Error::Constraint("C0 does not lie in so(E): it moves p or q".into()));
    }
    for (i, m) in k_part.iter().enumerate() {
        if !kills(m, &p) || !kills(m, &q) {
            return Err(Error::Constraint(format!("k_part[{i}] does not lie in so(E)")));
        }
        if !m.commutator(c0).is_zero() {
            return Err(Error::Constraint(format!("[k_part[{i}], C0] ≠ 0: k must centralize C0")));
        }
    }
    let k = MatrixLieAlgebra::generated_by(space.dim(), k_part)?;
    let d = &space.bivector(&p, &q) + c0;
    let mut basis = vec![d];
    basis.extend(k.basis().iter().cloned());
    MatrixLieAlgebra::from_basis(space.dim(), basis)
}

/// `ℝp∧q + so(E) + p∧E`, the stabilizer of the line `ℝp`.
pub fn parabolic(space: &MinkowskiSpace) -> MatrixLieAlgebra {
    let (p, q) = (space.p(), space.q());
    let mut basis = vec![space.bivector(&p, &q)];
    basis.extend(so_e_basis(space));
    basis.extend((1..=space.n()).map(|i| space.bivector(&p, &space.e(i))));
    MatrixLieAlgebra::from_basis(space.dim(), basis).expect("parabolic is closed")
}

/// `{p∧X + φ(X) | X ∈ E′} + k` for `E′ = span(e_i : i ∈ e_prime)`, with
/// `phi[j]` the image of the `j`-th listed vector and `k_part ⊆ so(E″)`.
pub fn graded_nonreductive_subalgebra(
    space: &MinkowskiSpace,
    e_prime: &[usize],
    phi: &[Matrix],
    k_part: &[Matrix],
) -> Result<MatrixLieAlgebra> {
    let n = space.n();
    if e_prime.iter().any(|&i| i == 0 || i > n) {
        return Err(Error::Range("E′ indices must lie in 1..=n".into()));
    }
    if phi.len() != e_prime.len() {
        return Err(Error::Dimension("phi needs one matrix per E′ basis vector".into()));
    }
    check_skew(space, phi, "phi")?;
    check_skew(space, k_part, "k_part")?;
    let fixed: Vec<Vector> = std::iter::once(space.p())
        .chain([space.q()])
        .chain(e_prime.iter().map(|&i| space.e(i)))
        .collect();
    for (what, mats) in [("phi", phi), ("k_part", k_part)] {
        for (i, m) in mats.iter().enumerate() {
            if fixed.iter().any(|v| !kills(m, v)) {
                return Err(Error::Constraint(format!("{what}[{i}] is not in so(E″)")));
            }
        }
    }
    for i in 0..phi.len() {
        for j in i + 1..phi.len() {
            if !phi[i].commutator(&phi[j]).is_zero() {
                return Err(Error::Constraint(format!("[phi[{i}], phi[{j}]] ≠ 0: φ(E′) not commutative")));
            }
        }
        for (j, kk) in k_part.iter().enumerate() {
            if !phi[i].commutator(kk).is_zero() {
                return Err(Error::Constraint(format!("[phi[{i}], k_part[{j}]] ≠ 0: φ(E′) must commute with k")));
            }
        }
    }
    let width = space.dim() * space.dim();
    let flat = |ms: &[Matrix]| Subspace::span(width, ms.iter().map(|m| m.as_slice().to_vec()).collect());
    let phi_span = flat(phi);
    let k_span = flat(k_part);
    let meet = crate::linalg::subspace_intersection(&phi_span, &k_span)?;
    if !meet.is_zero() {
        return Err(Error::Constraint("φ(E′) ∩ k ≠ 0".into()));
    }
    let k = MatrixLieAlgebra::generated_by(space.dim(), k_part)?;
    let mut basis: Vec<Matrix> = e_prime
        .iter()
        .zip(phi)
        .map(|(&i, f)| &space.bivector(&space.p(), &space.e(i)) + f)
        .collect();
    basis.extend(k.basis().iter().cloned());
    MatrixLieAlgebra::from_basis(space.dim(), basis)
}

/// Standard-position maximal subalgebras: `so(n+1)`, `h_k` for
/// `1 ≤ k ≤ n−1`, and the parabolic.
pub fn maximal_subalgebra_instances(space: &MinkowskiSpace) -> Result<Vec<(String, MatrixLieAlgebra)>> {
    let n = space.n();
    if n < 2 {
        return Err(Error::Range("maximal subalgebra list needs n ≥ 2".into()));
    }
    let mut out = vec![(
        format!("so({})", n + 1),
        MatrixLieAlgebra::from_basis(space.dim(), maximal_compact_basis(space))?,
    )];
    for k in 1..n {
        let hperp: Vec<Matrix> = so_e_basis(space)
            .into_iter()
            .filter(|m| (1..=k).all(|i| kills(m, &space.e(i))))
            .collect();
        out.push((format!("h_{k}"), subalgebra_type2(space, k, &hperp)?));
    }
    out.push(("parabolic".to_string(), parabolic(space)));
    Ok(out)
}

/// Human-readable name of a Witt basis vector, or `v` for anything else.
fn witt_name(space: &MinkowskiSpace, v: &[Rational]) -> String {
    let nz: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
    match nz.as_slice() {
        [0] => "p".into(),
        [i] if *i == space.n() + 1 => "q".into(),
        [i] => format!("e{i}"),
        _ => "v".into(),
    }
}

/// `true` when every element of `alg` preserves the line through `v`.
pub fn preserves_line(alg: &MatrixLieAlgebra, v: &[Rational]) -> bool {
    let line = Subspace::span(v.len(), vec![v.to_vec()]);
    alg.basis().iter().all(|m| line.contains(&m.mul_vec(v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{signature, Signature};

    #[test]
    fn spaces() {
        assert_eq!(minkowski(0).gram(), &Matrix::from_i64(&[&[0, 1], &[1, 0]]));
        assert_eq!(signature(minkowski(2).gram()).unwrap(), Signature::new(3, 1, 0));
        assert_eq!(signature(minkowski(5).gram()).unwrap(), Signature::new(6, 1, 0));
    }

    #[test]
    fn bivector_convention() {
        let s = minkowski(2);
        let pq = s.bivector(&s.p(), &s.q());
        assert_eq!(pq.mul_vec(&s.p()), s.p());
        assert_eq!(pq.mul_vec(&s.q()), s.q().iter().map(|x| -x).collect::<Vec<_>>());
        assert!(vec_is_zero(&pq.mul_vec(&s.e(1))));
        assert!(s.bivector(&s.e(1), &s.e(1)).is_zero());
        let r = s.bivector(&s.e(1), &s.e(2));
        assert!(s.is_skew(&r));
        assert!(crate::linalg::rational_eigenspaces(&r).iter().all(|(l, _)| l.is_zero()));
    }

    #[test]
    fn grading_dims() {
        for (n, dims) in [(0, (0, 1, 0)), (2, (2, 2, 2)), (3, (3, 4, 3))] {
            let g = lorentz_algebra(&minkowski(n));
            assert_eq!((g.g_minus.dim(), g.g_zero.dim(), g.g_plus.dim()), dims);
            assert!(g.grading_holds());
        }
    }

    #[test]
    fn constructors() {
        let s2 = minkowski(2);
        let t1 = subalgebra_type1(&s2, &maximal_compact_basis(&s2)).unwrap();
        assert_eq!(t1.dim(), 3);
        let s3 = minkowski(3);
        let k = vec![s3.bivector(&s3.e(2), &s3.e(3))];
        assert_eq!(subalgebra_type2(&s3, 1, &k).unwrap().dim(), 4);
        let c0 = s2.bivector(&s2.e(1), &s2.e(2));
        let t3 = subalgebra_type3(&s2, &c0, &[]).unwrap();
        assert_eq!(t3.dim(), 1);
        assert_eq!(t3.basis()[0], &s2.bivector(&s2.p(), &s2.q()) + &c0);
        let par = parabolic(&s2);
        assert_eq!(par.dim(), 4);
        assert!(preserves_line(&par, &s2.p()));
        let r = graded_nonreductive_subalgebra(&s3, &[1], &[s3.bivector(&s3.e(2), &s3.e(3))], &[]).unwrap();
        assert_eq!(r.dim(), 1);
        let bad = subalgebra_type3(&s3, &s3.bivector(&s3.e(1), &s3.e(2)), &[s3.bivector(&s3.e(1), &s3.e(3))]);
        assert!(matches!(bad, Err(Error::Constraint(_))));
    }

    #[test]
    fn maximal_dims() {
        let inst = maximal_subalgebra_instances(&minkowski(2)).unwrap();
        let dims: Vec<usize> = inst.iter().map(|(_, a)| a.dim()).collect();
        assert_eq!(dims, vec![3, 3, 4]);
        let inst = maximal_subalgebra_instances(&minkowski(4)).unwrap();
        assert_eq!(inst.iter().find(|(n, _)| n == "h_2").unwrap().1.dim(), 7);
    }
}
