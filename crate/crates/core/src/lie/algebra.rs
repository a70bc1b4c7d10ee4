use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exec::Mode;
use crate::linalg::{
    charpoly, is_semisimple_operator, kernel_of_rows, rank, roots_real_nonpositive, signature,
    vec_is_zero, Matrix, Rational, Signature, Subspace, Vector,
};

/// A finite-dimensional Lie algebra given by its structure constants.
///
/// `ad[i]` is the matrix of `ad_{b_i}` in the basis, so column `j` holds the
/// coordinates of `[b_i, b_j]`. Jacobi is not enforced here; see
/// [`LieAlgebra::jacobi_violation`].
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    dim: usize,
    ad: Vec<Matrix>,
    killing: Matrix,
}

impl LieAlgebra {
    /// Builds from `table[i][j]` = coordinates of `[b_i, b_j]`; only the
    /// upper triangle `i < j` is read, the rest follows by antisymmetry.
    pub fn from_structure_constants(dim: usize, table: &[Vec<Vector>]) -> Result<Self> {
        Self::from_structure_constants_with(Mode::default(), dim, table)
    }

    pub fn from_structure_constants_with(
        mode: Mode,
        dim: usize,
        table: &[Vec<Vector>],
    ) -> Result<Self> {
        if table.len() != dim || table.iter().any(|r| r.len() != dim) {
            return Err(Error::Dimension("structure table must be dim × dim".into()));
        }
        let mut ad = vec![Matrix::zeros(dim, dim); dim];
        for i in 0..dim {
            for j in i + 1..dim {
                let c = &table[i][j];
                if c.len() != dim {
                    return Err(Error::Dimension(format!("entry [{i}][{j}] has wrong length")));
                }
                for (k, x) in c.iter().enumerate() {
                    if !x.is_zero() {
                        ad[i][(k, j)] = x.clone();
                        ad[j][(k, i)] = -x.clone();
                    }
                }
            }
        }
        Ok(Self::from_ad(mode, ad))
    }

    pub(crate) fn from_ad(mode: Mode, ad: Vec<Matrix>) -> Self {
        let dim = ad.len();
        let killing = killing_from_ad(mode, &ad);
        LieAlgebra { dim, ad, killing }
    }

    /// Zero algebra.
    pub fn trivial() -> Self {
        LieAlgebra { dim: 0, ad: Vec::new(), killing: Matrix::zeros(0, 0) }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `ad_{b_i}` in basis coordinates.
    pub fn ad_basis(&self, i: usize) -> &Matrix {
        &self.ad[i]
    }

    /// `ad_x` for an element given in coordinates.
    pub fn ad(&self, x: &[Rational]) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (xi, a) in x.iter().zip(&self.ad) {
            m.add_scaled(xi, a);
        }
        m
    }

    /// Structure constants `c_{ij}` as a coordinate vector.
    pub fn structure_constant(&self, i: usize, j: usize) -> Vector {
        self.ad[i].column(j)
    }

    /// Full table `table[i][j] = [b_i, b_j]`.
    pub fn structure_table(&self) -> Vec<Vec<Vector>> {
        (0..self.dim).map(|i| (0..self.dim).map(|j| self.structure_constant(i, j)).collect()).collect()
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let mut out = vec![Rational::zero(); self.dim];
        for (xi, a) in x.iter().zip(&self.ad) {
            if xi.is_zero() {
                continue;
            }
            for (o, v) in out.iter_mut().zip(a.mul_vec(y)) {
                if !v.is_zero() {
                    *o += xi * v;
                }
            }
        }
        out
    }

    pub fn killing(&self) -> &Matrix {
        &self.killing
    }

    /// `B(x, y)`.
    pub fn killing_value(&self, x: &[Rational], y: &[Rational]) -> Rational {
        self.killing.bilinear(x, y)
    }

    /// Gram of the Killing form of `self` on the echelon basis of `sub`.
    pub fn killing_on(&self, sub: &Subspace) -> Matrix {
        sub.restrict_form(&self.killing)
    }

    /// First basis triple violating Jacobi, if any.
    pub fn jacobi_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                // ad_[bi,bj] = [ad_bi, ad_bj]
                let lhs = self.ad(&self.structure_constant(i, j));
                let rhs = self.ad[i].commutator(&self.ad[j]);
                if lhs != rhs {
                    let diff = &lhs - &rhs;
                    let k = (0..n).find(|&k| !vec_is_zero(&diff.column(k))).unwrap_or(0);
                    return Some((i, j, k));
                }
            }
        }
        None
    }

    /// `B([x,y],z) + B(y,[x,z]) = 0` on all basis triples.
    pub fn killing_is_invariant(&self) -> bool {
        // equivalently ad_xᵀ·B + B·ad_x = 0 for each basis x
        self.ad.iter().all(|a| (&a.transpose().matmul(&self.killing) + &self.killing.matmul(a)).is_zero())
    }

    /// `{x : [x, t] = 0 ∀ t ∈ target}`.
    pub fn centralizer(&self, target: &Subspace) -> Subspace {
        let mut rows = Vec::new();
        for t in target.basis() {
            rows.extend(self.ad(t).to_rows());
        }
        kernel_of_rows(rows, self.dim)
    }

    pub fn centralizer_of(&self, x: &[Rational]) -> Subspace {
        self.centralizer(&Subspace::span(self.dim, vec![x.to_vec()]))
    }

    /// `{x : [x, sub] ⊆ sub}`.
    pub fn normalizer(&self, sub: &Subspace) -> Subspace {
        let ann = sub.annihilator();
        let mut rows = Vec::new();
        for s in sub.basis() {
            let ads = self.ad(s);
            for w in ann.basis() {
                // wᵀ·ad_s·x = 0 ⇔ [s, x] has no component outside sub
                rows.push(ads.transpose().mul_vec(w));
            }
        }
        kernel_of_rows(rows, self.dim)
    }

    pub fn center(&self) -> Subspace {
        self.centralizer(&Subspace::full(self.dim))
    }

    /// `[g, g]`.
    pub fn derived(&self) -> Subspace {
        let mut vs = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let c = self.structure_constant(i, j);
                if !vec_is_zero(&c) {
                    vs.push(c);
                }
            }
        }
        Subspace::span(self.dim, vs)
    }

    /// `[a, b]` as a subspace.
    pub fn bracket_spaces(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vs = Vec::new();
        for x in a.basis() {
            let adx = self.ad(x);
            for y in b.basis() {
                vs.push(adx.mul_vec(y));
            }
        }
        Subspace::span(self.dim, vs)
    }

    pub fn is_subalgebra(&self, sub: &Subspace) -> bool {
        let b = sub.basis();
        (0..b.len()).all(|i| (i + 1..b.len()).all(|j| sub.contains(&self.bracket(&b[i], &b[j]))))
    }

    /// `[sub, self] ⊆ sub`.
    pub fn is_ideal(&self, sub: &Subspace) -> bool {
        sub.basis().iter().all(|x| {
            let adx = self.ad(x);
            (0..self.dim).all(|j| sub.contains(&adx.column(j)))
        })
    }

    pub fn is_abelian(&self) -> bool {
        self.ad.iter().all(Matrix::is_zero)
    }

    /// Nondegenerate Killing form (Cartan's criterion).
    pub fn is_semisimple(&self) -> bool {
        self.dim > 0 && rank(&self.killing) == self.dim
    }

    pub fn killing_signature(&self) -> Signature {
        signature(&self.killing).expect("Killing form is symmetric")
    }

    /// Negative definite restriction of the Killing form, which in a
    /// semisimple parent characterizes compactly embedded subalgebras.
    pub fn is_compact_subalgebra(&self, sub: &Subspace) -> Result<bool> {
        if !self.is_semisimple() {
            return Err(Error::NotSemisimple(
                "compactness criterion needs a nondegenerate Killing form".into(),
            ));
        }
        if sub.is_zero() {
            return Ok(true);
        }
        let s = signature(&self.killing_on(sub))?;
        Ok(s.is_negative_definite())
    }

    /// `ℝx` is a compact subalgebra: `ad_x` is semisimple with purely
    /// imaginary spectrum, i.e. `ad_x` semisimple and every eigenvalue of
    /// `ad_x²` real and nonpositive. Exact, via Hermite forms.
    pub fn is_compact_element(&self, x: &[Rational]) -> bool {
        let a = self.ad(x);
        is_semisimple_operator(&a) && roots_real_nonpositive(&charpoly(&a.matmul(&a)))
    }

    /// Intrinsic algebra structure on a subalgebra, in its echelon basis.
    pub fn restrict(&self, sub: &Subspace) -> Result<LieAlgebra> {
        let b = sub.basis();
        let k = b.len();
        let mut ad = vec![Matrix::zeros(k, k); k];
        for i in 0..k {
            for j in i + 1..k {
                let c = sub
                    .coordinates(&self.bracket(&b[i], &b[j]))
                    .ok_or(Error::NotClosed { i, j })?;
                for (r, x) in c.into_iter().enumerate() {
                    if !x.is_zero() {
                        ad[j][(r, i)] = -x.clone();
                        ad[i][(r, j)] = x;
                    }
                }
            }
        }
        Ok(LieAlgebra::from_ad(Mode::Sequential, ad))
    }

    /// Action of a subspace of elements on an invariant subspace, in the
    /// echelon coordinates of the latter: one matrix per basis vector of `on`.
    pub fn restricted_action(&self, elements: &Subspace, on: &Subspace) -> Result<Vec<Matrix>> {
        elements
            .basis()
            .iter()
            .map(|x| {
                on.restrict_operator(&self.ad(x))
                    .ok_or_else(|| Error::Inconsistent("subspace not invariant under action".into()))
            })
            .collect()
    }

    /// Closure of a set of elements under the bracket.
    pub fn generated_subalgebra(&self, gens: &[Vector]) -> Subspace {
        let mut span = Subspace::span(self.dim, gens.to_vec());
        loop {
            let next = crate::linalg::subspace_sum(&span, &self.bracket_spaces(&span, &span))
                .expect("same ambient");
            if next.dim() == span.dim() {
                return span;
            }
            span = next;
        }
    }
}

/// `B_ij = tr(ad_i ad_j)` summed over the nonzero entries of `ad_i`.
fn killing_from_ad(mode: Mode, ad: &[Matrix]) -> Matrix {
    let n = ad.len();
    let nz: Vec<Vec<(usize, usize, Rational)>> = ad
        .iter()
        .map(|a| {
            let mut v = Vec::new();
            for r in 0..a.rows() {
                for c in 0..a.cols() {
                    if !a[(r, c)].is_zero() {
                        v.push((r, c, a[(r, c)].clone()));
                    }
                }
            }
            v
        })
        .collect();
    let rows: Vec<Vec<Rational>> = mode.map_range(n, |i| {
        (0..n)
            .map(|j| {
                if j < i {
                    return Rational::zero();
                }
                nz[i]
                    .iter()
                    .filter(|(r, c, _)| !ad[j][(*c, *r)].is_zero())
                    .map(|(r, c, v)| v * &ad[j][(*c, *r)])
                    .sum()
            })
            .collect()
    });
    let mut b = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            b[(i, j)] = rows[i][j].clone();
            b[(j, i)] = rows[i][j].clone();
        }
    }
    b
}

/// Coordinates relative to a fixed list of independent matrices.
#[derive(Clone, Debug)]
struct CoordinateMap {
    width: usize,
    pivots: Vec<usize>,
    /// Reduced rows, sparse.
    reduced: Vec<Vec<(usize, Rational)>>,
    /// `reduced = transform · flat(basis)`.
    transform: Vec<Vector>,
}

impl CoordinateMap {
    fn new(flat: &[Vector], width: usize) -> Result<Self> {
        let k = flat.len();
        let mut rows: Vec<Vector> = flat
            .iter()
            .enumerate()
            .map(|(i, f)| {
                let mut r = f.clone();
                r.extend((0..k).map(|j| if i == j { Rational::from_integer(1.into()) } else { Rational::zero() }));
                r
            })
            .collect();
        let pivots = crate::linalg::subspace::rref_rows(&mut rows, width + k);
        if let Some(pos) = pivots.iter().position(|&p| p >= width) {
            // a pivot in the identity block means a combination of the
            // matrices vanishes; name the last element involved
            let row = &rows[pos];
            let index = (0..k).rev().find(|&j| !row[width + j].is_zero()).unwrap_or(0);
            return Err(Error::DependentBasis { index });
        }
        let reduced = rows
            .iter()
            .map(|r| r[..width].iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect())
            .collect();
        let transform = rows.iter().map(|r| r[width..].to_vec()).collect();
        Ok(CoordinateMap { width, pivots, reduced, transform })
    }

    fn coordinates(&self, x: &[Rational]) -> Option<Vector> {
        debug_assert_eq!(x.len(), self.width);
        let a: Vec<Rational> = self.pivots.iter().map(|&p| x[p].clone()).collect();
        let mut resid = x.to_vec();
        for (ai, row) in a.iter().zip(&self.reduced) {
            if ai.is_zero() {
                continue;
            }
            for (c, v) in row {
                resid[*c] -= ai * v;
            }
        }
        if !vec_is_zero(&resid) {
            return None;
        }
        let k = self.transform.len();
        let mut out = vec![Rational::zero(); k];
        for (ai, t) in a.iter().zip(&self.transform) {
            if ai.is_zero() {
                continue;
            }
            for (o, v) in out.iter_mut().zip(t) {
                if !v.is_zero() {
                    *o += ai * v;
                }
            }
        }
        Some(out)
    }
}

/// A Lie algebra of `n × n` matrices with a fixed basis.
#[derive(Clone, Debug)]
pub struct MatrixLieAlgebra {
    ambient: usize,
    basis: Vec<Matrix>,
    coords: CoordinateMap,
    algebra: LieAlgebra,
}

impl MatrixLieAlgebra {
    /// Verifies independence and closure, then computes structure constants
    /// and the Killing form.
    pub fn from_basis(ambient: usize, basis: Vec<Matrix>) -> Result<Self> {
        Self::from_basis_with(Mode::default(), ambient, basis)
    }

    pub fn from_basis_with(mode: Mode, ambient: usize, basis: Vec<Matrix>) -> Result<Self> {
        if let Some(b) = basis.iter().find(|b| b.rows() != ambient || b.cols() != ambient) {
            return Err(Error::Dimension(format!(
                "basis matrix is {}x{}, expected {ambient}x{ambient}",
                b.rows(),
                b.cols()
            )));
        }
        let flat: Vec<Vector> = basis.iter().map(|b| b.as_slice().to_vec()).collect();
        let coords = CoordinateMap::new(&flat, ambient * ambient)?;
        let n = basis.len();
        let columns: Vec<Result<Vec<Vector>>> = mode.map_range(n, |i| {
            (i + 1..n)
                .map(|j| {
                    let br = basis[i].commutator(&basis[j]);
                    coords.coordinates(br.as_slice()).ok_or(Error::NotClosed { i, j })
                })
                .collect()
        });
        let mut ad = vec![Matrix::zeros(n, n); n];
        for (i, col) in columns.into_iter().enumerate() {
            for (off, c) in col?.into_iter().enumerate() {
                let j = i + 1 + off;
                for (k, x) in c.into_iter().enumerate() {
                    if !x.is_zero() {
                        ad[j][(k, i)] = -x.clone();
                        ad[i][(k, j)] = x;
                    }
                }
            }
        }
        let algebra = LieAlgebra::from_ad(mode, ad);
        Ok(MatrixLieAlgebra { ambient, basis, coords, algebra })
    }

    /// Bracket closure of the span of `gens`; the basis is the echelon basis
    /// of the closure in flattened-matrix coordinates.
    pub fn generated_by(ambient: usize, gens: &[Matrix]) -> Result<Self> {
        let width = ambient * ambient;
        let mut span = Subspace::span(width, gens.iter().map(|g| g.as_slice().to_vec()).collect());
        loop {
            let mats: Vec<Matrix> =
                span.basis().iter().map(|v| Matrix::from_flat(ambient, ambient, v.clone())).collect();
            let mut vs = span.basis().to_vec();
            for i in 0..mats.len() {
                for j in i + 1..mats.len() {
                    vs.push(mats[i].commutator(&mats[j]).into_flat());
                }
            }
            let next = Subspace::span(width, vs);
            if next.dim() == span.dim() {
                return Self::from_basis(ambient, mats);
            }
            span = next;
        }
    }

    pub fn ambient_size(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    /// Coordinates of a matrix, `None` if it is outside the algebra.
    pub fn coordinates(&self, m: &Matrix) -> Option<Vector> {
        if m.rows() != self.ambient || m.cols() != self.ambient {
            return None;
        }
        self.coords.coordinates(m.as_slice())
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        self.coordinates(m).is_some()
    }

    /// Matrix of the element with the given coordinates.
    pub fn element(&self, c: &[Rational]) -> Matrix {
        let mut m = Matrix::zeros(self.ambient, self.ambient);
        for (ci, b) in c.iter().zip(&self.basis) {
            m.add_scaled(ci, b);
        }
        m
    }

    /// Matrices of the echelon basis of `sub`.
    pub fn elements(&self, sub: &Subspace) -> Vec<Matrix> {
        sub.basis().iter().map(|v| self.element(v)).collect()
    }

    /// Subspace spanned by matrices that must lie in the algebra.
    pub fn span_of(&self, mats: &[Matrix]) -> Result<Subspace> {
        let vs = mats
            .iter()
            .enumerate()
            .map(|(i, m)| {
                self.coordinates(m)
                    .ok_or_else(|| Error::Inconsistent(format!("matrix {i} is not in the algebra")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Subspace::span(self.dim(), vs))
    }

    /// Subalgebra spanned by `sub` as a matrix algebra in its own right.
    pub fn subalgebra(&self, sub: &Subspace) -> Result<MatrixLieAlgebra> {
        MatrixLieAlgebra::from_basis(self.ambient, self.elements(sub))
    }
}

impl std::ops::Deref for MatrixLieAlgebra {
    type Target = LieAlgebra;
    fn deref(&self) -> &LieAlgebra {
        &self.algebra
    }
}

/// Basis-coordinate signature of a sub-Killing form.
pub fn killing_signature_on(alg: &LieAlgebra, sub: &Subspace) -> Signature {
    signature(&alg.killing_on(sub)).expect("restriction of a symmetric form is symmetric")
}
