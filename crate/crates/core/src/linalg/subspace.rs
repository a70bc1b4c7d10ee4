use num_traits::{One, Zero};

use super::matrix::{dot, vec_is_zero, Matrix, Vector};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Reduces `rows` in place to reduced row echelon form, dropping zero rows.
/// Returns the pivot column of each remaining row.
pub fn rref_rows(rows: &mut Vec<Vector>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(sel) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = rows[r][c].recip();
        if !inv.is_one() {
            for x in rows[r].iter_mut().skip(c) {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let (head, tail) = rows.split_at_mut(r);
        let (pivot_row, rest) = tail.split_first_mut().expect("row r exists");
        for other in head.iter_mut().chain(rest.iter_mut()) {
            let f = other[c].clone();
            if f.is_zero() {
                continue;
            }
            for (x, p) in other.iter_mut().zip(pivot_row.iter()).skip(c) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Reduced row echelon form of a matrix and its pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut rows = m.to_rows();
    let pivots = rref_rows(&mut rows, m.cols());
    let mut out = Matrix::zeros(m.rows(), m.cols());
    for (i, row) in rows.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            out[(i, j)] = x.clone();
        }
    }
    (out, pivots)
}

pub fn rank(m: &Matrix) -> usize {
    let mut rows = m.to_rows();
    rref_rows(&mut rows, m.cols()).len()
}

/// Null space basis from reduced rows: one vector per free column.
fn null_basis(reduced: &[Vector], pivots: &[usize], cols: usize) -> Vec<Vector> {
    let mut is_pivot = vec![None; cols];
    for (i, &p) in pivots.iter().enumerate() {
        is_pivot[p] = Some(i);
    }
    let mut out = Vec::new();
    for free in (0..cols).filter(|&c| is_pivot[c].is_none()) {
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (i, &p) in pivots.iter().enumerate() {
            let x = &reduced[i][free];
            if !x.is_zero() {
                v[p] = -x.clone();
            }
        }
        out.push(v);
    }
    out
}

/// Null space `{v : m·v = 0}`.
pub fn kernel(m: &Matrix) -> Subspace {
    kernel_of_rows(m.to_rows(), m.cols())
}

/// Null space of the matrix with the given rows.
pub fn kernel_of_rows(mut rows: Vec<Vector>, cols: usize) -> Subspace {
    let pivots = rref_rows(&mut rows, cols);
    Subspace::span(cols, null_basis(&rows, &pivots, cols))
}

/// A particular solution of `m·x = rhs`, or `None` when inconsistent.
pub fn solve(m: &Matrix, rhs: &[Rational]) -> Result<Option<Vector>> {
    if rhs.len() != m.rows() {
        return Err(Error::Dimension(format!(
            "rhs has length {}, matrix has {} rows",
            rhs.len(),
            m.rows()
        )));
    }
    let cols = m.cols();
    let mut rows: Vec<Vector> = (0..m.rows())
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.push(rhs[i].clone());
            r
        })
        .collect();
    let pivots = rref_rows(&mut rows, cols + 1);
    if pivots.last() == Some(&cols) {
        return Ok(None);
    }
    let mut x = vec![Rational::zero(); cols];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = rows[i][cols].clone();
    }
    Ok(Some(x))
}

/// Determinant by fraction-carrying elimination.
pub fn determinant(m: &Matrix) -> Result<Rational> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    let mut a = m.to_rows();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(sel) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Ok(Rational::zero());
        };
        if sel != c {
            a.swap(sel, c);
            det = -det;
        }
        let piv = a[c][c].clone();
        det *= &piv;
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] / &piv;
            for j in c..n {
                let t = &f * &a[c][j];
                a[i][j] -= t;
            }
        }
    }
    Ok(det)
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(m: &Matrix) -> Result<Option<Matrix>> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    let mut rows: Vec<Vector> = (0..n)
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    let pivots = rref_rows(&mut rows, 2 * n);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Ok(None);
    }
    let mut inv = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            inv[(i, j)] = rows[i][n + j].clone();
        }
    }
    Ok(Some(inv))
}

/// A linear subspace of ℚ^n stored by its canonical reduced echelon basis,
/// so equal subspaces compare equal structurally.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, (0..ambient).map(|i| super::matrix::unit(ambient, i)).collect())
    }

    pub fn span(ambient: usize, mut vectors: Vec<Vector>) -> Self {
        assert!(vectors.iter().all(|v| v.len() == ambient), "vector length != ambient");
        let pivots = rref_rows(&mut vectors, ambient);
        Subspace { ambient, basis: vectors, pivots }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Canonical echelon basis.
    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors as the columns of an `ambient × dim` matrix.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(self.ambient, &self.basis)
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v ∉ self`.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vector> {
        assert_eq!(v.len(), self.ambient);
        let coords: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut r = v.to_vec();
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (x, y) in r.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x -= c * y;
                }
            }
        }
        vec_is_zero(&r).then_some(coords)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Vectors annihilating the subspace under the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        kernel_of_rows(self.basis.clone(), self.ambient)
    }

    /// Orthogonal complement under the bilinear form with Gram `form`:
    /// `{w : form(v, w) = 0 ∀ v ∈ self}`.
    pub fn orthogonal(&self, form: &Matrix) -> Subspace {
        let rows: Vec<Vector> = self
            .basis
            .iter()
            .map(|v| form.transpose().mul_vec(v))
            .collect();
        kernel_of_rows(rows, self.ambient)
    }

    /// Complement spanned by standard unit vectors at non-pivot positions.
    pub fn standard_complement(&self) -> Subspace {
        let n = self.ambient;
        let vs = (0..n)
            .filter(|c| !self.pivots.contains(c))
            .map(|c| super::matrix::unit(n, c))
            .collect();
        Subspace::span(n, vs)
    }

    /// Image of the subspace under a linear map.
    pub fn image(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient);
        Subspace::span(m.rows(), self.basis.iter().map(|v| m.mul_vec(v)).collect())
    }

    /// True when `m` maps the subspace into itself.
    pub fn is_invariant(&self, m: &Matrix) -> bool {
        self.basis.iter().all(|v| self.contains(&m.mul_vec(v)))
    }

    /// Gram matrix of a bilinear form restricted to the echelon basis.
    pub fn restrict_form(&self, form: &Matrix) -> Matrix {
        let k = self.dim();
        let mut g = Matrix::zeros(k, k);
        for i in 0..k {
            let fi = form.transpose().mul_vec(&self.basis[i]);
            for j in 0..k {
                g[(i, j)] = dot(&fi, &self.basis[j]);
            }
        }
        g
    }

    /// Matrix of `m` restricted to the (invariant) subspace in echelon coordinates.
    pub fn restrict_operator(&self, m: &Matrix) -> Option<Matrix> {
        let k = self.dim();
        let mut r = Matrix::zeros(k, k);
        for (j, v) in self.basis.iter().enumerate() {
            let c = self.coordinates(&m.mul_vec(v))?;
            for (i, x) in c.into_iter().enumerate() {
                r[(i, j)] = x;
            }
        }
        Some(r)
    }

    /// Lexicographic key used for canonical ordering of subspace lists.
    pub fn sort_key(&self) -> (usize, &[Vector]) {
        (self.dim(), &self.basis)
    }
}

/// Incrementally built semi-echelon basis: each row has a unit pivot and
/// vanishes at the pivots of all earlier rows.
#[derive(Clone, Debug)]
pub struct Echelon {
    width: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(width: usize) -> Self {
        Echelon { width, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Residue of `v` after elimination against the stored rows.
    pub fn reduce(&self, v: &[Rational]) -> Vector {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, r) in v.iter_mut().zip(row).skip(p) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        vec_is_zero(&self.reduce(v))
    }

    /// Adds `v` if it is independent of the stored rows; reports whether it was.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.width);
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip();
        for x in r.iter_mut().skip(p) {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        self.rows.push(r);
        self.pivots.push(p);
        true
    }

    pub fn into_subspace(self) -> Subspace {
        Subspace::span(self.width, self.rows)
    }
}

fn check_ambient(a: &Subspace, b: &Subspace) -> Result<()> {
    if a.ambient != b.ambient {
        return Err(Error::Dimension(format!(
            "ambient dimensions {} and {} differ",
            a.ambient, b.ambient
        )));
    }
    Ok(())
}

pub fn subspace_sum(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    check_ambient(a, b)?;
    let vs = a.basis.iter().chain(&b.basis).cloned().collect();
    Ok(Subspace::span(a.ambient, vs))
}

/// Intersection as the kernel of the stacked annihilators.
pub fn subspace_intersection(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    check_ambient(a, b)?;
    let rows = a.annihilator().basis.into_iter().chain(b.annihilator().basis).collect();
    Ok(kernel_of_rows(rows, a.ambient))
}
