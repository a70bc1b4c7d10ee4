//! Invariant subspaces of matrix representations over ℚ.
//!
//! Complete reducibility is decided through the enveloping associative
//! algebra `A`: in characteristic zero its Jacobson radical is the radical of
//! the trace form `tr(xy)`, and `A` is semisimple exactly when the module is
//! completely reducible. Splitting then works inside the commutant
//! `End_A(V)`, whose elements commute with the action so their Fitting
//! decompositions are invariant.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{
    charpoly, kernel_of_rows, signature, subspace_sum, Echelon, Matrix, Rational, Subspace, Vector,
};

/// Largest representation dimension accepted by the decomposition engine.
pub const MAX_DIM: usize = 32;

/// Seed used when `LORHOM_SEED` is unset.
pub const DEFAULT_SEED: u64 = 0x5EED_2024;

/// A representation given by one action matrix per algebra basis element.
#[derive(Clone, Debug)]
pub struct Representation {
    dim: usize,
    action: Vec<Matrix>,
}

impl Representation {
    pub fn new(dim: usize, action: Vec<Matrix>) -> Result<Self> {
        if let Some(a) = action.iter().find(|a| a.rows() != dim || a.cols() != dim) {
            return Err(Error::Dimension(format!(
                "action matrix is {}x{}, expected {dim}x{dim}",
                a.rows(),
                a.cols()
            )));
        }
        Ok(Representation { dim, action })
    }

    pub fn adjoint(alg: &LieAlgebra) -> Self {
        Representation { dim: alg.dim(), action: (0..alg.dim()).map(|i| alg.ad_basis(i).clone()).collect() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    /// `ρ([b_i,b_j]) = [ρ(b_i), ρ(b_j)]` on all basis pairs.
    pub fn preserves_brackets(&self, alg: &LieAlgebra) -> bool {
        let n = alg.dim();
        if self.action.len() != n {
            return false;
        }
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                let c = alg.structure_constant(i, j);
                let mut lhs = Matrix::zeros(self.dim, self.dim);
                for (ck, a) in c.iter().zip(&self.action) {
                    lhs.add_scaled(ck, a);
                }
                lhs == self.action[i].commutator(&self.action[j])
            })
        })
    }

    /// Restriction to an invariant subspace, in its echelon coordinates.
    pub fn restrict(&self, sub: &Subspace) -> Option<Representation> {
        let action = self.action.iter().map(|a| sub.restrict_operator(a)).collect::<Option<Vec<_>>>()?;
        Some(Representation { dim: sub.dim(), action })
    }

    pub fn is_invariant(&self, sub: &Subspace) -> bool {
        self.action.iter().all(|a| sub.is_invariant(a))
    }

    /// Linearly independent action matrices; enough for every linear
    /// condition that must hold for all of them.
    fn independent_action(&self) -> Vec<Matrix> {
        let mut ech = Echelon::new(self.dim * self.dim);
        self.action.iter().filter(|a| ech.insert(a.as_slice())).cloned().collect()
    }
}

/// Joint kernel of the action.
pub fn fixed_space(rep: &Representation) -> Subspace {
    let rows = rep.action.iter().flat_map(Matrix::to_rows).collect();
    kernel_of_rows(rows, rep.dim)
}

/// Smallest invariant subspace containing `v`.
pub fn cyclic_submodule(rep: &Representation, v: &[Rational]) -> Subspace {
    let mut ech = Echelon::new(rep.dim);
    let mut queue = Vec::new();
    if ech.insert(v) {
        queue.push(v.to_vec());
    }
    while let Some(w) = queue.pop() {
        for a in &rep.action {
            let aw = a.mul_vec(&w);
            if ech.insert(&aw) {
                queue.push(aw);
            }
        }
    }
    ech.into_subspace()
}

/// Enveloping associative algebra (with identity) as a list of matrices.
pub fn enveloping_algebra(rep: &Representation) -> Vec<Matrix> {
    let d = rep.dim;
    let gens = rep.independent_action();
    let mut ech = Echelon::new(d * d);
    let mut basis = Vec::new();
    let mut queue = Vec::new();
    for m in std::iter::once(Matrix::identity(d)).chain(gens.iter().cloned()) {
        if ech.insert(m.as_slice()) {
            basis.push(m.clone());
            queue.push(m);
        }
    }
    while let Some(x) = queue.pop() {
        for g in &gens {
            let y = g.matmul(&x);
            if ech.insert(y.as_slice()) {
                basis.push(y.clone());
                queue.push(y);
            }
        }
    }
    basis
}

fn trace_product(x: &Matrix, y: &Matrix) -> Rational {
    let n = x.rows();
    let mut t = Rational::zero();
    for i in 0..n {
        for j in 0..n {
            let (a, b) = (&x[(i, j)], &y[(j, i)]);
            if !a.is_zero() && !b.is_zero() {
                t += a * b;
            }
        }
    }
    t
}

/// Jacobson radical of the enveloping algebra, as matrices.
pub fn enveloping_radical(rep: &Representation) -> Vec<Matrix> {
    let a = enveloping_algebra(rep);
    let k = a.len();
    let rows: Vec<Vector> = (0..k).map(|i| (0..k).map(|j| trace_product(&a[i], &a[j])).collect()).collect();
    let rad = kernel_of_rows(rows, k);
    rad.basis()
        .iter()
        .map(|c| {
            let mut m = Matrix::zeros(rep.dim, rep.dim);
            for (ci, x) in c.iter().zip(&a) {
                m.add_scaled(ci, x);
            }
            m
        })
        .collect()
}

/// Commutant `End_A(V)`: matrices commuting with every action matrix.
pub fn commutant(rep: &Representation) -> Vec<Matrix> {
    let d = rep.dim;
    let mut rows = Vec::new();
    for a in rep.independent_action() {
        // (T a − a T)_{rs} as a linear form in T_{ij}, unknown index i*d+j
        for r in 0..d {
            for s in 0..d {
                let mut row = vec![Rational::zero(); d * d];
                for t in 0..d {
                    if !a[(t, s)].is_zero() {
                        row[r * d + t] += &a[(t, s)];
                    }
                    if !a[(r, t)].is_zero() {
                        row[t * d + s] -= &a[(r, t)];
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    kernel_of_rows(rows, d * d)
        .basis()
        .iter()
        .map(|v| Matrix::from_flat(d, d, v.clone()))
        .collect()
}

/// An invariant complement of the invariant subspace `sub`, found by solving
/// for `Q : V → sub` with `Q·a = ρ(a)·Q` and `Q|_sub = id`; its kernel is the
/// complement. `None` when no invariant complement exists.
pub fn invariant_complement(rep: &Representation, sub: &Subspace) -> Option<Subspace> {
    let d = rep.dim;
    let k = sub.dim();
    if k == 0 {
        return Some(Subspace::full(d));
    }
    if k == d {
        return Some(Subspace::zero(d));
    }
    let restricted = rep.restrict(sub)?;
    let basis = sub.basis_matrix();
    let unknowns = k * d;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (a, rho) in rep.action.iter().zip(&restricted.action) {
        // (Q a − ρ Q)_{rs} = 0
        for r in 0..k {
            for s in 0..d {
                let mut row = vec![Rational::zero(); unknowns];
                for t in 0..d {
                    if !a[(t, s)].is_zero() {
                        row[r * d + t] += &a[(t, s)];
                    }
                }
                for t in 0..k {
                    if !rho[(r, t)].is_zero() {
                        row[t * d + s] -= &rho[(r, t)];
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                    rhs.push(Rational::zero());
                }
            }
        }
    }
    // (Q B)_{rj} = δ_rj
    for r in 0..k {
        for j in 0..k {
            let mut row = vec![Rational::zero(); unknowns];
            for t in 0..d {
                row[r * d + t] = basis[(t, j)].clone();
            }
            rows.push(row);
            rhs.push(if r == j { Rational::one() } else { Rational::zero() });
        }
    }
    let m = Matrix::from_rows(rows).ok()?;
    let q = crate::linalg::solve(&m, &rhs).ok()??;
    let q = Matrix::from_flat(k, d, q);
    Some(crate::linalg::kernel(&q))
}

/// Outcome of [`irreducible_decomposition`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decomposition {
    /// Irreducible invariant subspaces summing directly to the whole space,
    /// sorted by dimension, then echelon basis.
    Completed(Vec<Subspace>),
    /// A proper invariant subspace without invariant complement.
    NotCompletelyReducible { witness: Subspace },
    /// Splitting stalled over ℚ: `components` are certified irreducible,
    /// `unresolved` are invariant blocks whose irreducibility is undecided.
    Unresolved { components: Vec<Subspace>, unresolved: Vec<Subspace> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TriState {
    Yes,
    No,
    Unresolved,
}

impl Decomposition {
    pub fn verdict(&self) -> TriState {
        match self {
            Decomposition::Completed(_) => TriState::Yes,
            Decomposition::NotCompletelyReducible { .. } => TriState::No,
            Decomposition::Unresolved { .. } => TriState::Unresolved,
        }
    }

    /// Every invariant block found, certified or not.
    pub fn blocks(&self) -> Vec<Subspace> {
        match self {
            Decomposition::Completed(c) => c.clone(),
            Decomposition::NotCompletelyReducible { .. } => Vec::new(),
            Decomposition::Unresolved { components, unresolved } => {
                let mut all: Vec<Subspace> = components.iter().chain(unresolved).cloned().collect();
                sort_components(&mut all);
                all
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct DecompositionOptions {
    pub seed: u64,
    /// Random commutant elements tried per block before giving up.
    pub random_attempts: usize,
    /// Skip the radical test when complete reducibility is known
    /// (e.g. adjoint modules of semisimple algebras).
    pub assume_completely_reducible: bool,
}

impl Default for DecompositionOptions {
    /// Seed from `LORHOM_SEED` when set and parseable, else [`DEFAULT_SEED`].
    fn default() -> Self {
        let seed = std::env::var("LORHOM_SEED")
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_SEED);
        DecompositionOptions { seed, random_attempts: 24, assume_completely_reducible: false }
    }
}

pub fn irreducible_decomposition(rep: &Representation) -> Result<Decomposition> {
    irreducible_decomposition_with(rep, &DecompositionOptions::default())
}

pub fn irreducible_decomposition_with(
    rep: &Representation,
    opts: &DecompositionOptions,
) -> Result<Decomposition> {
    let d = rep.dim;
    if d > MAX_DIM {
        return Err(Error::Range(format!("representation dimension {d} exceeds {MAX_DIM}")));
    }
    if d == 0 {
        return Ok(Decomposition::Completed(Vec::new()));
    }
    if !opts.assume_completely_reducible {
        let rad = enveloping_radical(rep);
        if !rad.is_empty() {
            let rows = rad.iter().flat_map(Matrix::to_rows).collect();
            let witness = kernel_of_rows(rows, d);
            return Ok(Decomposition::NotCompletelyReducible { witness });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut done = Vec::new();
    let mut stuck = Vec::new();
    let mut pending = vec![Subspace::full(d)];
    while let Some(block) = pending.pop() {
        let sub = rep.restrict(&block).expect("blocks are invariant");
        match split_block(&sub, opts, &mut rng) {
            Split::Pair(a, b) => {
                pending.push(lift(&block, &a));
                pending.push(lift(&block, &b));
            }
            Split::Irreducible => done.push(block),
            Split::Unknown => stuck.push(block),
        }
    }
    sort_components(&mut done);
    if stuck.is_empty() {
        Ok(Decomposition::Completed(done))
    } else {
        sort_components(&mut stuck);
        Ok(Decomposition::Unresolved { components: done, unresolved: stuck })
    }
}

pub fn is_completely_reducible(rep: &Representation) -> Result<TriState> {
    Ok(irreducible_decomposition(rep)?.verdict())
}

pub fn sort_components(v: &mut [Subspace]) {
    v.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
}

/// Maps a subspace given in the echelon coordinates of `block` back to the
/// ambient space.
fn lift(block: &Subspace, inner: &Subspace) -> Subspace {
    let bm = block.basis_matrix();
    Subspace::span(block.ambient_dim(), inner.basis().iter().map(|v| bm.mul_vec(v)).collect())
}

enum Split {
    Pair(Subspace, Subspace),
    Irreducible,
    Unknown,
}

/// One splitting step on a completely reducible module.
fn split_block(rep: &Representation, opts: &DecompositionOptions, rng: &mut ChaCha8Rng) -> Split {
    let d = rep.dim;
    if d <= 1 {
        return Split::Irreducible;
    }
    let end = commutant(rep);
    if end.len() == 1 {
        return Split::Irreducible;
    }
    let mut candidates: Vec<Matrix> = end.clone();
    for i in 0..end.len() {
        for j in i..end.len() {
            candidates.push(end[i].matmul(&end[j]));
        }
    }
    for t in &candidates {
        if let Some(s) = split_with(rep, t) {
            return s;
        }
    }
    for _ in 0..opts.random_attempts {
        let mut t = Matrix::zeros(d, d);
        for e in &end {
            t.add_scaled(&Rational::from_integer(rng.gen_range(-3i64..=3).into()), e);
        }
        if let Some(s) = split_with(rep, &t) {
            return s;
        }
    }
    // cyclic sweep over basis vectors and action eigenvectors
    let mut probes: Vec<Vector> = (0..d).map(|i| crate::linalg::unit(d, i)).collect();
    for a in rep.action.iter().chain(&end) {
        for (_, sp) in crate::linalg::rational_eigenspaces(a) {
            probes.extend(sp.basis().iter().cloned());
        }
    }
    for v in &probes {
        let c = cyclic_submodule(rep, v);
        if c.dim() < d {
            if let Some(comp) = invariant_complement(rep, &c) {
                return Split::Pair(c, comp);
            }
        }
    }
    if certify_division(&end) {
        Split::Irreducible
    } else {
        Split::Unknown
    }
}

/// Splits along a rational eigenvalue of a commutant element.
fn split_with(rep: &Representation, t: &Matrix) -> Option<Split> {
    let d = rep.dim;
    for lambda in charpoly(t).rational_roots() {
        let mut n = t.clone();
        for i in 0..d {
            n[(i, i)] -= &lambda;
        }
        if n.is_zero() {
            continue;
        }
        let nd = n.pow(d as u32);
        if !nd.is_zero() {
            // Fitting decomposition: both parts are nonzero and invariant
            let k = crate::linalg::kernel(&nd);
            let im = Subspace::span(d, (0..d).map(|j| nd.column(j)).collect());
            return Some(Split::Pair(k, im));
        }
        let k = crate::linalg::kernel(&n);
        if let Some(comp) = invariant_complement(rep, &k) {
            return Some(Split::Pair(k, comp));
        }
    }
    None
}

/// Division-algebra certificates for a commutant with no rational splitting
/// element: a commutative algebra generated by one element whose minimal
/// polynomial has degree ≤ 3 and no rational root is a field; a
/// noncommutative 4-dimensional algebra with center ℚ whose reduced trace
/// form is definite on pure elements is a division quaternion algebra.
fn certify_division(end: &[Matrix]) -> bool {
    let k = end.len();
    let commutative = (0..k).all(|i| (i + 1..k).all(|j| end[i].commutator(&end[j]).is_zero()));
    if commutative && k <= 3 {
        return end.iter().any(|t| {
            let mp = minimal_polynomial(t);
            mp.degree() == Some(k) && mp.rational_roots().is_empty()
        });
    }
    if !commutative && k == 4 {
        let d = end[0].rows();
        let center: Vec<&Matrix> = end
            .iter()
            .filter(|x| end.iter().all(|y| x.commutator(y).is_zero()))
            .collect();
        let mut ech = Echelon::new(d * d);
        for c in &center {
            ech.insert(c.as_slice());
        }
        if ech.len() != 1 {
            return false;
        }
        // pure part: trace-free elements
        let traces: Vec<Vector> = vec![end.iter().map(Matrix::trace).collect()];
        let pure = kernel_of_rows(traces, k);
        let mats: Vec<Matrix> = pure
            .basis()
            .iter()
            .map(|c| {
                let mut m = Matrix::zeros(d, d);
                for (ci, e) in c.iter().zip(end) {
                    m.add_scaled(ci, e);
                }
                m
            })
            .collect();
        let g: Vec<Vec<Rational>> =
            mats.iter().map(|x| mats.iter().map(|y| trace_product(x, y)).collect()).collect();
        let Ok(gm) = Matrix::from_rows(g) else { return false };
        return signature(&gm).is_ok_and(|s| s.dim() == 3 && (s.is_negative_definite() || s.is_positive_definite()));
    }
    false
}

/// Minimal polynomial by Krylov dependence of powers.
fn minimal_polynomial(t: &Matrix) -> crate::linalg::Poly {
    let d = t.rows();
    let mut powers = vec![Matrix::identity(d)];
    let mut ech = Echelon::new(d * d);
    ech.insert(powers[0].as_slice());
    loop {
        let next = t.matmul(powers.last().expect("nonempty"));
        if ech.contains(next.as_slice()) {
            // solve next = Σ c_i t^i
            let cols: Vec<Vector> = powers.iter().map(|p| p.as_slice().to_vec()).collect();
            let m = Matrix::from_columns(d * d, &cols);
            let c = crate::linalg::solve(&m, next.as_slice()).expect("shapes").expect("in span");
            let mut coeffs: Vec<Rational> = c.into_iter().map(|x| -x).collect();
            coeffs.push(Rational::one());
            return crate::linalg::Poly::new(coeffs);
        }
        ech.insert(next.as_slice());
        powers.push(next);
    }
}

/// Checks the defining properties of a completed decomposition: each block
/// invariant, direct sum equal to the whole space.
pub fn is_valid_decomposition(rep: &Representation, comps: &[Subspace]) -> bool {
    let total: usize = comps.iter().map(Subspace::dim).sum();
    let sum = comps
        .iter()
        .try_fold(Subspace::zero(rep.dim), |acc, c| subspace_sum(&acc, c))
        .map(|s| s.dim());
    total == rep.dim && sum == Ok(rep.dim) && comps.iter().all(|c| rep.is_invariant(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn so3_rep() -> Representation {
        let l1 = Matrix::from_i64(&[&[0, 0, 0], &[0, 0, -1], &[0, 1, 0]]);
        let l2 = Matrix::from_i64(&[&[0, 0, 1], &[0, 0, 0], &[-1, 0, 0]]);
        let l3 = Matrix::from_i64(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 0]]);
        Representation::new(3, vec![l1, l2, l3]).unwrap()
    }

    #[test]
    fn fixed_and_cyclic() {
        let triv = Representation::new(3, vec![Matrix::zeros(3, 3)]).unwrap();
        assert_eq!(fixed_space(&triv).dim(), 3);
        let v = vec![int(1), int(2), int(0)];
        assert_eq!(cyclic_submodule(&triv, &v).dim(), 1);
        let r = so3_rep();
        assert!(fixed_space(&r).is_zero());
        assert_eq!(cyclic_submodule(&r, &crate::linalg::unit(3, 0)).dim(), 3);
    }

    #[test]
    fn rotation_block_is_irreducible_over_q() {
        let j = Matrix::from_i64(&[&[0, -1], &[1, 0]]);
        let rep = Representation::new(2, vec![j]).unwrap();
        assert_eq!(irreducible_decomposition(&rep).unwrap(), Decomposition::Completed(vec![Subspace::full(2)]));
    }

    #[test]
    fn nilpotent_is_not_completely_reducible() {
        let n = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        let rep = Representation::new(2, vec![n]).unwrap();
        match irreducible_decomposition(&rep).unwrap() {
            Decomposition::NotCompletelyReducible { witness } => {
                assert_eq!(witness, Subspace::span(2, vec![crate::linalg::unit(2, 0)]));
                assert!(invariant_complement(&rep, &witness).is_none());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn isotypic_rotation_pair_splits() {
        // J ⊕ J on ℚ^4: commutant M_2(ℚ(i)), two 2-dim pieces
        let j = Matrix::from_i64(&[&[0, -1], &[1, 0]]);
        let jj = Matrix::block_diag(&[j.clone(), j]);
        let rep = Representation::new(4, vec![jj]).unwrap();
        let Decomposition::Completed(c) = irreducible_decomposition(&rep).unwrap() else { panic!() };
        assert_eq!(c.iter().map(Subspace::dim).collect::<Vec<_>>(), vec![2, 2]);
        assert!(is_valid_decomposition(&rep, &c));
    }

    #[test]
    fn zero_algebra_splits_into_lines() {
        let rep = Representation::new(3, vec![]).unwrap();
        let Decomposition::Completed(c) = irreducible_decomposition(&rep).unwrap() else { panic!() };
        assert_eq!(c.len(), 3);
    }
}
