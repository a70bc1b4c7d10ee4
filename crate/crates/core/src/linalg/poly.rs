//! Univariate polynomials over ℚ, coefficients stored lowest degree first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::Matrix;
use super::rational::Rational;
use super::subspace::{kernel, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(pub Vec<Rational>);

impl Poly {
    pub fn new(mut c: Vec<Rational>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Poly(c)
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `x − a`.
    pub fn linear_root(a: &Rational) -> Self {
        Poly(vec![-a.clone(), Rational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.0.last()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let inv = l.recip();
                Poly(self.0.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly(Vec::new());
        }
        let mut out = vec![Rational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    /// Euclidean division `self = q·d + r`.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.leading().expect("nonzero").clone();
        let mut r = self.0.clone();
        let mut q = vec![Rational::zero(); self.0.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let f = r.last().expect("nonempty") / &lead;
            if !f.is_zero() {
                for (i, c) in d.0.iter().enumerate() {
                    r[k + i] -= &f * c;
                }
                q[k] = f;
            }
            r.pop();
        }
        (Poly::new(q), Poly::new(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Product of the distinct irreducible factors, monic.
    pub fn squarefree_part(&self) -> Poly {
        if self.degree().unwrap_or(0) == 0 {
            return Poly::constant(Rational::one());
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let n = m.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.0.iter().rev() {
            acc = acc.matmul(m);
            for i in 0..n {
                acc[(i, i)] += c;
            }
        }
        acc
    }

    /// Distinct rational roots in increasing order.
    pub fn rational_roots(&self) -> Vec<Rational> {
        let sf = self.squarefree_part();
        if sf.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let mut ints = integer_coefficients(&sf);
        let mut roots = Vec::new();
        // strip the root 0
        let shift = ints.iter().take_while(|c| c.is_zero()).count();
        if shift > 0 {
            roots.push(Rational::zero());
            ints.drain(..shift);
        }
        if ints.len() > 1 {
            let a0 = ints[0].abs();
            let an = ints.last().expect("nonempty").abs();
            let bound = cauchy_bound(&ints);
            let nums = divisors(&a0);
            let dens = divisors(&an);
            let poly = Poly::new(ints.iter().cloned().map(Rational::from_integer).collect());
            for a in &nums {
                for b in &dens {
                    if !a.gcd(b).is_one() {
                        continue;
                    }
                    let cand = Rational::new(a.clone(), b.clone());
                    if cand > bound {
                        continue;
                    }
                    for r in [cand.clone(), -cand] {
                        if poly.eval(&r).is_zero() {
                            roots.push(r);
                        }
                    }
                }
            }
        }
        roots.sort();
        roots.dedup();
        roots
    }
}

/// Scales to primitive integer coefficients.
fn integer_coefficients(p: &Poly) -> Vec<BigInt> {
    let l = p.0.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.0.iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.into_iter().map(|c| c / &g).collect()
    }
}

fn cauchy_bound(ints: &[BigInt]) -> Rational {
    let lead = Rational::from_integer(ints.last().expect("nonempty").abs());
    let m = ints[..ints.len() - 1]
        .iter()
        .map(|c| Rational::from_integer(c.abs()) / &lead)
        .max()
        .unwrap_or_else(Rational::zero);
    m + Rational::one()
}

const TRIAL_LIMIT: u64 = 1 << 20;

/// Positive divisors by trial division.
///
/// Callers pass coefficients of squarefree parts of characteristic
/// polynomials, which stay small for the algebras handled here. A cofactor
/// left after `TRIAL_LIMIT` is treated as prime.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut rest = n;
    let mut d = BigInt::from(2u32);
    while &d * &d <= rest {
        let mut e = 0;
        while (&rest % &d).is_zero() {
            rest /= &d;
            e += 1;
        }
        if e > 0 {
            factors.push((d.clone(), e));
        }
        d += 1u32;
        if d > BigInt::from(TRIAL_LIMIT) {
            break;
        }
    }
    if !rest.is_one() {
        factors.push((rest, 1));
    }
    let mut out = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for x in &out {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(x * &pk);
                pk *= &p;
            }
        }
        out = next;
    }
    out.sort();
    out
}

/// Power sums `Σ rᵏ` over the roots (with multiplicity), `k = 0..count`,
/// by Newton's identities.
pub fn power_sums(f: &Poly, count: usize) -> Vec<Rational> {
    let f = f.monic();
    let d = f.degree().unwrap_or(0);
    // e-coefficients: f = xᵈ + a_{d−1}xᵈ⁻¹ + … ; Newton with a_{d−i}
    let a = |i: usize| -> Rational { if i <= d { f.0[d - i].clone() } else { Rational::zero() } };
    let mut p: Vec<Rational> = Vec::with_capacity(count);
    for k in 0..count {
        if k == 0 {
            p.push(Rational::from_integer(BigInt::from(d)));
            continue;
        }
        let mut s = -a(k) * Rational::from_integer(BigInt::from(k));
        for i in 1..k {
            s -= a(i) * &p[k - i];
        }
        p.push(s);
    }
    p
}

/// True when every complex root of `f` is real and `≤ 0`, decided exactly by
/// the Hermite forms `Σ rⁱ⁺ʲ` and `Σ (−r) rⁱ⁺ʲ` over the distinct roots.
pub fn roots_real_nonpositive(f: &Poly) -> bool {
    let s = f.squarefree_part();
    let d = match s.degree() {
        None => return true,
        Some(d) => d,
    };
    if d == 0 {
        return true;
    }
    let ps = power_sums(&s, 2 * d);
    let mut h = Matrix::zeros(d, d);
    let mut w = Matrix::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            h[(i, j)] = ps[i + j].clone();
            w[(i, j)] = -ps[i + j + 1].clone();
        }
    }
    let sh = super::form::signature(&h).expect("Hankel matrix is symmetric");
    let sw = super::form::signature(&w).expect("Hankel matrix is symmetric");
    sh.n_minus == 0 && sw.n_minus == 0
}

/// Characteristic polynomial `det(xI − m)` by Faddeev–LeVerrier.
pub fn charpoly(m: &Matrix) -> Poly {
    assert!(m.is_square());
    let n = m.rows();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut mk = Matrix::zeros(n, n);
    for k in 1..=n {
        let mut next = m.matmul(&mk);
        for i in 0..n {
            next[(i, i)] += &coeffs[n - k + 1];
        }
        mk = next;
        let t = m.matmul(&mk).trace();
        coeffs[n - k] = -t / Rational::from_integer(BigInt::from(k));
    }
    Poly::new(coeffs)
}

/// Rational eigenvalues with their eigenspaces, eigenvalues ascending.
pub fn rational_eigenspaces(m: &Matrix) -> Vec<(Rational, Subspace)> {
    let n = m.rows();
    charpoly(m)
        .rational_roots()
        .into_iter()
        .map(|r| {
            let mut shifted = m.clone();
            for i in 0..n {
                shifted[(i, i)] -= &r;
            }
            let space = kernel(&shifted);
            (r, space)
        })
        .collect()
}

/// Diagonalizable over ℂ: the squarefree part of the characteristic
/// polynomial annihilates `m` exactly when the minimal polynomial is squarefree.
pub fn is_semisimple_operator(m: &Matrix) -> bool {
    assert!(m.is_square());
    if m.rows() == 0 {
        return true;
    }
    charpoly(m).squarefree_part().eval_matrix(m).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::{frac, int};

    #[test]
    fn hermite_root_location() {
        // (x+1)(x+4)x: real, nonpositive
        let f = Poly::linear_root(&int(-1)).mul(&Poly::linear_root(&int(-4))).mul(&Poly::linear_root(&int(0)));
        assert!(roots_real_nonpositive(&f));
        // x² + 1 has complex roots
        assert!(!roots_real_nonpositive(&Poly::new(vec![int(1), int(0), int(1)])));
        // a positive root
        assert!(!roots_real_nonpositive(&Poly::linear_root(&int(2)).mul(&Poly::linear_root(&int(-1)))));
        let ps = power_sums(&Poly::linear_root(&int(2)).mul(&Poly::linear_root(&int(3))), 4);
        assert_eq!(ps, vec![int(2), int(5), int(13), int(35)]);
    }

    #[test]
    fn roots_of_products() {
        let p = Poly::linear_root(&frac(1, 2))
            .mul(&Poly::linear_root(&int(-3)))
            .mul(&Poly::linear_root(&int(-3)))
            .mul(&Poly::new(vec![int(1), int(0), int(1)]));
        assert_eq!(p.rational_roots(), vec![int(-3), frac(1, 2)]);
        let q = Poly::new(vec![int(0), int(0), int(2)]);
        assert_eq!(q.rational_roots(), vec![int(0)]);
    }

    #[test]
    fn charpoly_matches_det() {
        let m = Matrix::from_i64(&[&[2, 1, 0], &[0, 2, 0], &[0, 0, -1]]);
        // (x-2)^2 (x+1) = x^3 - 3x^2 + 4
        assert_eq!(charpoly(&m), Poly::new(vec![int(4), int(0), int(-3), int(1)]));
    }

    #[test]
    fn spectral_examples() {
        let d = Matrix::diagonal(&[int(1), int(0), int(-1)]);
        let es = rational_eigenspaces(&d);
        assert_eq!(es.iter().map(|(r, s)| (r.clone(), s.dim())).collect::<Vec<_>>(),
            vec![(int(-1), 1), (int(0), 1), (int(1), 1)]);
        let rot = Matrix::from_i64(&[&[0, -1], &[1, 0]]);
        assert!(rational_eigenspaces(&rot).is_empty());
        assert!(is_semisimple_operator(&rot));
        assert!(is_semisimple_operator(&Matrix::identity(3)));
        assert!(!is_semisimple_operator(&Matrix::from_i64(&[&[0, 1], &[0, 0]])));
    }
}
