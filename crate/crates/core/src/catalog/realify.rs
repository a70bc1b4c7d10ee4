//! Real matrix models of complex and quaternionic matrices.
//!
//! A complex entry `a + ib` becomes the 2×2 block `[[a, −b], [b, a]]`; a
//! quaternion `q` acting on column vectors of `ℍ^N` becomes the 4×4 matrix of
//! left multiplication by `q` in the basis `(1, i, j, k)`. Quaternionic
//! matrices are exactly the real `4N × 4N` matrices commuting with right
//! multiplication by `i` and `j`.

use num_traits::Zero;

use crate::lie::MatrixLieAlgebra;
use crate::linalg::{int, kernel_of_rows, Matrix, Rational, Subspace, Vector};

/// Quaternion units `1, i, j, k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Unit {
    One,
    I,
    J,
    K,
}

/// `e_a e_b = sign · e_c` for quaternion units.
fn unit_product(a: usize, b: usize) -> (i64, usize) {
    const TABLE: [[(i64, usize); 4]; 4] = [
        [(1, 0), (1, 1), (1, 2), (1, 3)],
        [(1, 1), (-1, 0), (1, 3), (-1, 2)],
        [(1, 2), (-1, 3), (-1, 0), (1, 1)],
        [(1, 3), (1, 2), (-1, 1), (-1, 0)],
    ];
    TABLE[a][b]
}

/// Left multiplication `x ↦ u·x` on `ℍ = ℝ⁴`.
pub fn left(u: Unit) -> Matrix {
    let a = u as usize;
    let mut m = Matrix::zeros(4, 4);
    for b in 0..4 {
        let (s, c) = unit_product(a, b);
        m[(c, b)] = int(s);
    }
    m
}

/// Right multiplication `x ↦ x·u` on `ℍ = ℝ⁴`.
pub fn right(u: Unit) -> Matrix {
    let b = u as usize;
    let mut m = Matrix::zeros(4, 4);
    for a in 0..4 {
        let (s, c) = unit_product(a, b);
        m[(c, a)] = int(s);
    }
    m
}

/// The complex unit `i` as a 2×2 block.
pub fn complex_i() -> Matrix {
    Matrix::from_i64(&[&[0, -1], &[1, 0]])
}

/// `block` repeated `n` times along the diagonal.
pub fn repeat(block: &Matrix, n: usize) -> Matrix {
    Matrix::identity(n).kron(block)
}

/// `diag(values) ⊗ block`.
pub fn diag_kron(values: &[Rational], block: &Matrix) -> Matrix {
    Matrix::diagonal(values).kron(block)
}

/// Solution space `{X ∈ gl(n, ℝ) : f(X) = 0 for every f}` as flattened
/// matrices. Each `f` must be linear.
pub fn matrix_kernel(n: usize, maps: &[&dyn Fn(&Matrix) -> Matrix]) -> Vec<Matrix> {
    let width = n * n;
    // image of every elementary matrix under every map
    let images: Vec<Vec<Matrix>> = (0..width)
        .map(|t| {
            let mut e = Matrix::zeros(n, n);
            e[(t / n, t % n)] = int(1);
            maps.iter().map(|f| f(&e)).collect()
        })
        .collect();
    let mut rows = Vec::new();
    for f in 0..maps.len() {
        for entry in 0..images.first().map_or(0, |im| im[f].rows() * im[f].cols()) {
            let row: Vector = images.iter().map(|im| im[f].as_slice()[entry].clone()).collect();
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    kernel_of_rows(rows, width).basis().iter().map(|v| Matrix::from_flat(n, n, v.clone())).collect()
}

/// Elements of `alg` whose matrices vanish outside the entries allowed by
/// `allowed(row, col)`.
pub fn support_subalgebra<F: Fn(usize, usize) -> bool>(alg: &MatrixLieAlgebra, allowed: F) -> Subspace {
    let n = alg.ambient_size();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if allowed(i, j) {
                continue;
            }
            let row: Vector = alg.basis().iter().map(|b| b[(i, j)].clone()).collect();
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    kernel_of_rows(rows, alg.dim())
}

/// `allowed` predicate for a diagonal block of real indices `[lo, hi)`.
pub fn in_block(lo: usize, hi: usize) -> impl Fn(usize, usize) -> bool {
    move |i, j| (lo..hi).contains(&i) && (lo..hi).contains(&j)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_relations() {
        let (i, j, k) = (left(Unit::I), left(Unit::J), left(Unit::K));
        assert_eq!(i.matmul(&j), k);
        assert_eq!(i.matmul(&i), Matrix::identity(4).scale(&int(-1)));
        for u in [Unit::I, Unit::J, Unit::K] {
            for v in [Unit::I, Unit::J, Unit::K] {
                assert!(left(u).commutator(&right(v)).is_zero());
            }
        }
        // right multiplication reverses order
        assert_eq!(right(Unit::J).matmul(&right(Unit::I)), right(Unit::K));
    }

    #[test]
    fn kernel_of_skew_condition() {
        let skew = |x: &Matrix| x + &x.transpose();
        let sol = matrix_kernel(3, &[&skew]);
        assert_eq!(sol.len(), 3);
    }
}
