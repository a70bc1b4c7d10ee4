//! Symmetric bilinear forms: Lagrange diagonalization and Sylvester signature.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::Matrix;
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
}

impl Signature {
    pub fn new(n_plus: usize, n_minus: usize, n_zero: usize) -> Self {
        Signature { n_plus, n_minus, n_zero }
    }

    pub fn dim(&self) -> usize {
        self.n_plus + self.n_minus + self.n_zero
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.n_zero == 0
    }

    /// Exactly one negative direction, no null directions.
    pub fn is_lorentzian(&self) -> bool {
        self.n_minus == 1 && self.n_zero == 0
    }

    pub fn is_positive_definite(&self) -> bool {
        self.n_minus == 0 && self.n_zero == 0
    }

    pub fn is_negative_definite(&self) -> bool {
        self.n_plus == 0 && self.n_zero == 0
    }

    /// Short label: `euclidean`, `lorentzian`, `degenerate` or `indefinite`.
    pub fn kind(&self) -> &'static str {
        if self.n_zero > 0 {
            "degenerate"
        } else if self.n_minus == 0 {
            "euclidean"
        } else if self.n_minus == 1 {
            "lorentzian"
        } else {
            "indefinite"
        }
    }
}

/// `Pᵀ·A·P = diag(d)` with `P` invertible; columns of `basis` are the
/// diagonalizing vectors.
#[derive(Clone, Debug)]
pub struct Diagonalization {
    pub diagonal: Vec<Rational>,
    pub basis: Matrix,
}

impl Diagonalization {
    pub fn signature(&self) -> Signature {
        let mut s = Signature::new(0, 0, 0);
        for d in &self.diagonal {
            if d.is_zero() {
                s.n_zero += 1;
            } else if d.is_positive() {
                s.n_plus += 1;
            } else {
                s.n_minus += 1;
            }
        }
        s
    }

    pub fn vector(&self, i: usize) -> Vec<Rational> {
        self.basis.column(i)
    }
}

/// Symmetric Gaussian elimination by simultaneous row and column operations.
pub fn diagonalize(gram: &Matrix) -> Result<Diagonalization> {
    if !gram.is_square() {
        return Err(Error::NotSquare { rows: gram.rows(), cols: gram.cols() });
    }
    if !gram.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = gram.rows();
    let mut a = gram.clone();
    let mut p = Matrix::identity(n);
    for k in 0..n {
        if a[(k, k)].is_zero() {
            if let Some(i) = (k + 1..n).find(|&i| !a[(i, i)].is_zero()) {
                swap_sym(&mut a, &mut p, k, i);
            } else if let Some((i, j)) = (k..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !a[(i, j)].is_zero())
            {
                // e_i ← e_i + e_j turns the diagonal entry into 2·a_ij ≠ 0
                add_sym(&mut a, &mut p, i, j, &Rational::from_integer(1.into()));
                swap_sym(&mut a, &mut p, k, i);
            } else {
                break;
            }
        }
        let piv = a[(k, k)].clone();
        for j in k + 1..n {
            if a[(k, j)].is_zero() {
                continue;
            }
            let f = -(&a[(k, j)] / &piv);
            add_sym(&mut a, &mut p, j, k, &f);
        }
    }
    let diagonal = (0..n).map(|i| a[(i, i)].clone()).collect();
    Ok(Diagonalization { diagonal, basis: p })
}

/// Basis change `e_i ← e_i + f·e_j` applied congruently.
fn add_sym(a: &mut Matrix, p: &mut Matrix, i: usize, j: usize, f: &Rational) {
    let n = a.rows();
    for c in 0..n {
        let t = f * &a[(j, c)];
        a[(i, c)] += t;
    }
    for r in 0..n {
        let t = f * &a[(r, j)];
        a[(r, i)] += t;
    }
    for r in 0..n {
        let t = f * &p[(r, j)];
        p[(r, i)] += t;
    }
}

fn swap_sym(a: &mut Matrix, p: &mut Matrix, i: usize, j: usize) {
    let n = a.rows();
    for c in 0..n {
        let t = a[(i, c)].clone();
        a[(i, c)] = a[(j, c)].clone();
        a[(j, c)] = t;
    }
    for r in 0..n {
        let t = a[(r, i)].clone();
        a[(r, i)] = a[(r, j)].clone();
        a[(r, j)] = t;
        let t = p[(r, i)].clone();
        p[(r, i)] = p[(r, j)].clone();
        p[(r, j)] = t;
    }
}

pub fn signature(gram: &Matrix) -> Result<Signature> {
    Ok(diagonalize(gram)?.signature())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::int;

    #[test]
    fn signature_examples() {
        let d = Matrix::diagonal(&[int(1), int(1), int(-1)]);
        assert_eq!(signature(&d).unwrap(), Signature::new(2, 1, 0));
        let witt = Matrix::from_i64(&[&[0, 0, 0, 1], &[0, 1, 0, 0], &[0, 0, 1, 0], &[1, 0, 0, 0]]);
        assert_eq!(signature(&witt).unwrap(), Signature::new(3, 1, 0));
        assert_eq!(signature(&Matrix::zeros(2, 2)).unwrap(), Signature::new(0, 0, 2));
        assert_eq!(signature(&Matrix::from_i64(&[&[0, 1], &[0, 0]])), Err(Error::NotSymmetric));
    }

    #[test]
    fn diagonalizing_basis_is_congruence() {
        let g = Matrix::from_i64(&[&[0, 2, 1], &[2, 0, 3], &[1, 3, 0]]);
        let dg = diagonalize(&g).unwrap();
        assert_eq!(g.congruence(&dg.basis), Matrix::diagonal(&dg.diagonal));
    }
}
