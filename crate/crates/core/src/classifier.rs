//! Type I / II / III classification of totally reducible subalgebras of a
//! Lorentz algebra.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::MatrixLieAlgebra;
use crate::linalg::{
    diagonalize, kernel, kernel_of_rows, signature, vec_scale, Matrix, Rational, Subspace, Vector,
};
use crate::lorentz::{bivector_with, is_skew_for, MinkowskiSpace};
use crate::module_decomp::{
    fixed_space, irreducible_decomposition_with, Decomposition, DecompositionOptions,
    Representation, TriState,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    TypeI,
    TypeII,
    TypeIII,
    NotTotallyReducible,
    Indeterminate,
}

/// Classification result with its witnesses. Subspaces of `V` are in the
/// coordinates of the space, subspaces of `h` in the coordinates of its basis.
#[derive(Clone, Debug)]
pub struct SubalgebraClassification {
    pub verdict: Verdict,
    /// Type I: a fixed timelike line. Type II: the Lorentzian block with
    /// `dim ≥ 3`. Type III: the plane `U` spanned by the two isotropic lines.
    /// Not totally reducible: an invariant subspace without invariant
    /// complement.
    pub w: Option<Subspace>,
    /// Compact part of `h`, in `h` coordinates.
    pub k_part: Option<Subspace>,
    /// Type III: element acting as `+1` on the first isotropic line and `−1`
    /// on the second, trace-orthogonal to `k_part`; `h` coordinates.
    pub d_witness: Option<Vector>,
    /// Type III: isotropic generators `u₁`, `u₂` with `g(u₁,u₂) = 1`.
    pub isotropic_pair: Option<(Vector, Vector)>,
    /// Type III: `d − u₁∧u₂` as a matrix on `V`.
    pub c0: Option<Matrix>,
    /// Invariant blocks found on `V`.
    pub components: Vec<Subspace>,
    pub diagnostics: Vec<String>,
}

impl SubalgebraClassification {
    fn new(verdict: Verdict, components: Vec<Subspace>) -> Self {
        SubalgebraClassification {
            verdict,
            w: None,
            k_part: None,
            d_witness: None,
            isotropic_pair: None,
            c0: None,
            components,
            diagnostics: Vec::new(),
        }
    }
}

pub fn classify(space: &MinkowskiSpace, h: &MatrixLieAlgebra) -> Result<SubalgebraClassification> {
    classify_with_form(space.gram(), h)
}

/// Classification for any Lorentzian Gram matrix on the defining space.
pub fn classify_with_form(gram: &Matrix, h: &MatrixLieAlgebra) -> Result<SubalgebraClassification> {
    classify_with_options(gram, h, &DecompositionOptions::default())
}

pub fn classify_with_options(
    gram: &Matrix,
    h: &MatrixLieAlgebra,
    opts: &DecompositionOptions,
) -> Result<SubalgebraClassification> {
    let m = gram.rows();
    if h.ambient_size() != m {
        return Err(Error::Dimension(format!(
            "algebra acts on dimension {}, form has dimension {m}",
            h.ambient_size()
        )));
    }
    if !signature(gram)?.is_lorentzian() {
        return Err(Error::Hypothesis("form is not Lorentzian".into()));
    }
    if let Some(index) = h.basis().iter().position(|x| !is_skew_for(gram, x)) {
        return Err(Error::NotSkew { index });
    }
    let rep = Representation::new(m, h.basis().to_vec())?;
    let decomposition = irreducible_decomposition_with(&rep, opts)?;
    let (blocks, unresolved) = match &decomposition {
        Decomposition::NotCompletelyReducible { witness } => {
            let mut c = SubalgebraClassification::new(Verdict::NotTotallyReducible, Vec::new());
            c.w = Some(witness.clone());
            c.diagnostics.push(format!(
                "invariant subspace of dimension {} has no invariant complement",
                witness.dim()
            ));
            return Ok(c);
        }
        Decomposition::Completed(c) => (c.clone(), Vec::new()),
        Decomposition::Unresolved { unresolved, .. } => (decomposition.blocks(), unresolved.clone()),
    };

    // Type I: a fixed timelike vector
    let fixed = fixed_space(&rep);
    if !fixed.is_zero() {
        let restricted = fixed.restrict_form(gram);
        let diag = diagonalize(&restricted)?;
        if let Some(i) = diag.diagonal.iter().position(Signed::is_negative) {
            let v = fixed.basis_matrix().mul_vec(&diag.vector(i));
            let mut c = SubalgebraClassification::new(Verdict::TypeI, blocks);
            c.w = Some(Subspace::span(m, vec![v]));
            c.k_part = Some(Subspace::full(h.dim()));
            return Ok(c);
        }
    }

    // Type II: a Lorentzian block of dimension ≥ 3 onto whose so() h surjects
    for block in &blocks {
        let w = block.dim();
        if w < 3 || !signature(&block.restrict_form(gram))?.is_lorentzian() {
            continue;
        }
        let images: Vec<Vector> = h
            .basis()
            .iter()
            .map(|x| block.restrict_operator(x).expect("invariant block").into_flat())
            .collect();
        let image_dim = Subspace::span(w * w, images.clone()).dim();
        let mut c = SubalgebraClassification::new(Verdict::TypeII, blocks.clone());
        if image_dim != w * (w - 1) / 2 {
            c.verdict = Verdict::Indeterminate;
            c.diagnostics.push(format!(
                "Lorentzian block of dimension {w} but image in so(W) has dimension {image_dim}"
            ));
            return Ok(c);
        }
        // kernel of the restriction map h → so(W)
        let cols: Vec<Vector> = images;
        let res = Matrix::from_columns(w * w, &cols);
        c.w = Some(block.clone());
        c.k_part = Some(kernel(&res));
        return Ok(c);
    }

    // Type III: a pair of isotropic invariant lines with g(ℓ₁, ℓ₂) ≠ 0
    // ℓ₁ is the line with the smaller pivot, so standard position aligns it with p
    let mut lines: Vec<&Subspace> = blocks
        .iter()
        .filter(|b| b.dim() == 1 && gram.bilinear(&b.basis()[0], &b.basis()[0]).is_zero())
        .collect();
    lines.sort_by_key(|l| l.pivots()[0]);
    for (i, l1) in lines.iter().enumerate() {
        for l2 in &lines[i + 1..] {
            let u1 = l1.basis()[0].clone();
            let u2 = l2.basis()[0].clone();
            let g12 = gram.bilinear(&u1, &u2);
            if g12.is_zero() {
                continue;
            }
            let u2 = vec_scale(&u2, &g12.recip());
            return Ok(type_three(gram, h, blocks, u1, u2));
        }
    }

    // Type III with a boost whose eigenlines are not rational
    for block in &blocks {
        if block.dim() != 2 || !signature(&block.restrict_form(gram))?.is_lorentzian() {
            continue;
        }
        let mut c = type_three_plane(gram, h, blocks.clone(), block);
        c.diagnostics.push("isotropic eigenlines of the boost are not defined over ℚ".into());
        return Ok(c);
    }

    let mut c = SubalgebraClassification::new(Verdict::Indeterminate, blocks);
    if unresolved.is_empty() {
        c.diagnostics.push("no timelike fixed vector, Lorentzian block or isotropic pair found".into());
    } else {
        c.diagnostics.push(format!(
            "{} invariant block(s) could not be split over ℚ: dimensions {:?}",
            unresolved.len(),
            unresolved.iter().map(Subspace::dim).collect::<Vec<_>>()
        ));
    }
    Ok(c)
}

fn type_three(
    gram: &Matrix,
    h: &MatrixLieAlgebra,
    blocks: Vec<Subspace>,
    u1: Vector,
    u2: Vector,
) -> SubalgebraClassification {
    let m = gram.rows();
    let line = Subspace::span(m, vec![u1.clone()]);
    // α(X): X u₁ = α(X) u₁
    let pivot = line.pivots()[0];
    let alpha: Vector = h.basis().iter().map(|x| &x.mul_vec(&u1)[pivot] / &u1[pivot]).collect();
    let d = trace_orthogonal_unit(h, &alpha);
    let mut c = SubalgebraClassification::new(Verdict::TypeIII, blocks);
    let Some((d, k)) = d else {
        c.verdict = Verdict::Indeterminate;
        c.diagnostics.push("isotropic pair found but h acts trivially on it".into());
        return c;
    };
    let dm = h.element(&d);
    let c0 = &dm - &bivector_with(gram, &u1, &u2);
    c.w = Some(Subspace::span(m, vec![u1.clone(), u2.clone()]));
    c.k_part = Some(k);
    c.d_witness = Some(d);
    c.c0 = Some(c0);
    c.isotropic_pair = Some((u1, u2));
    c
}

fn type_three_plane(
    gram: &Matrix,
    h: &MatrixLieAlgebra,
    blocks: Vec<Subspace>,
    plane: &Subspace,
) -> SubalgebraClassification {
    // restriction to the plane is one-dimensional (so(1,1)); normalize by
    // the first nonzero coordinate of the restriction
    let images: Vec<Vector> = h
        .basis()
        .iter()
        .map(|x| plane.restrict_operator(x).expect("invariant block").into_flat())
        .collect();
    let idx = (0..4).find(|&e| images.iter().any(|v| !v[e].is_zero())).unwrap_or(0);
    let alpha: Vector = images.iter().map(|v| v[idx].clone()).collect();
    let mut c = SubalgebraClassification::new(Verdict::TypeIII, blocks);
    match trace_orthogonal_unit(h, &alpha) {
        Some((d, k)) => {
            let dm = h.element(&d);
            // part of d acting on the plane
            let p = plane_projector(gram, plane);
            let du = dm.matmul(&p);
            c.c0 = Some(&dm - &du);
            c.w = Some(plane.clone());
            c.k_part = Some(k);
            c.d_witness = Some(d);
        }
        None => {
            c.verdict = Verdict::Indeterminate;
            c.diagnostics.push("Lorentzian plane is fixed by h".into());
        }
    }
    c
}

/// g-orthogonal projector onto a nondegenerate subspace.
fn plane_projector(gram: &Matrix, sub: &Subspace) -> Matrix {
    let b = sub.basis_matrix();
    let g = sub.restrict_form(gram);
    let ginv = crate::linalg::inverse(&g).expect("square").expect("nondegenerate");
    b.matmul(&ginv).matmul(&b.transpose().matmul(gram))
}

/// The element `d` of `h` with `α(d) = 1` that is orthogonal to
/// `k = ker α` under the trace form, together with `k`.
fn trace_orthogonal_unit(h: &MatrixLieAlgebra, alpha: &[Rational]) -> Option<(Vector, Subspace)> {
    let n = h.dim();
    let j = alpha.iter().position(|a| !a.is_zero())?;
    let k = kernel_of_rows(vec![alpha.to_vec()], n);
    let mut d0 = vec![Rational::zero(); n];
    d0[j] = alpha[j].recip();
    if k.is_zero() {
        return Some((d0, k));
    }
    // solve for κ ∈ k with tr((d0 − κ) Y) = 0 ∀ Y ∈ k
    let kb: Vec<Matrix> = h.elements(&k);
    let dm = h.element(&d0);
    let t = |a: &Matrix, b: &Matrix| a.matmul(b).trace();
    let gram: Vec<Vec<Rational>> = kb.iter().map(|y| kb.iter().map(|x| t(x, y)).collect()).collect();
    let rhs: Vec<Rational> = kb.iter().map(|y| t(&dm, y)).collect();
    let gm = Matrix::from_rows(gram).ok()?;
    let coeffs = crate::linalg::solve(&gm, &rhs).ok()??;
    let mut d = d0;
    for (cf, kv) in coeffs.iter().zip(k.basis()) {
        for (x, y) in d.iter_mut().zip(kv) {
            *x -= cf * y;
        }
    }
    Some((d, k))
}

/// Defining-representation complete reducibility, tri-state.
pub fn is_totally_reducible(space: &MinkowskiSpace, h: &MatrixLieAlgebra) -> Result<TriState> {
    let rep = Representation::new(space.dim(), h.basis().to_vec())?;
    Ok(irreducible_decomposition_with(&rep, &DecompositionOptions::default())?.verdict())
}

/// True when `c0 − expected` lies in the span of the matrices of `k`.
pub fn c0_matches(h: &MatrixLieAlgebra, k: &Subspace, c0: &Matrix, expected: &Matrix) -> bool {
    let diff = c0 - expected;
    if diff.is_zero() {
        return true;
    }
    let width = c0.rows() * c0.cols();
    let span = Subspace::span(width, h.elements(k).iter().map(|m| m.as_slice().to_vec()).collect());
    span.contains(diff.as_slice())
}

/// `d` acts as `+1` on `u₁` and `−1` on `u₂`.
pub fn d_acts_as_boost(h: &MatrixLieAlgebra, c: &SubalgebraClassification) -> bool {
    match (&c.d_witness, &c.isotropic_pair) {
        (Some(d), Some((u1, u2))) => {
            let dm = h.element(d);
            dm.mul_vec(u1) == *u1 && dm.mul_vec(u2) == vec_scale(u2, &-Rational::one())
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lorentz::{maximal_compact_basis, minkowski, parabolic, subalgebra_type1, subalgebra_type2, subalgebra_type3};

    #[test]
    fn three_types() {
        let s = minkowski(2);
        let t1 = subalgebra_type1(&s, &maximal_compact_basis(&s)).unwrap();
        let c = classify(&s, &t1).unwrap();
        assert_eq!(c.verdict, Verdict::TypeI);
        assert_eq!(c.w.unwrap(), Subspace::span(4, vec![s.timelike()]));

        let s3 = minkowski(3);
        let k = vec![s3.bivector(&s3.e(2), &s3.e(3))];
        let t2 = subalgebra_type2(&s3, 1, &k).unwrap();
        let c = classify(&s3, &t2).unwrap();
        assert_eq!(c.verdict, Verdict::TypeII);
        assert_eq!(c.w.unwrap().dim(), 3);
        assert_eq!(c.k_part.unwrap().dim(), 1);

        let c0 = s.bivector(&s.e(1), &s.e(2));
        let t3 = subalgebra_type3(&s, &c0, &[]).unwrap();
        let c = classify(&s, &t3).unwrap();
        assert_eq!(c.verdict, Verdict::TypeIII);
        assert_eq!(c.c0.as_ref().unwrap(), &c0);
        assert!(d_acts_as_boost(&t3, &c));
    }

    #[test]
    fn parabolic_is_not_totally_reducible() {
        let s = minkowski(2);
        let c = classify(&s, &parabolic(&s)).unwrap();
        assert_eq!(c.verdict, Verdict::NotTotallyReducible);
        assert_eq!(is_totally_reducible(&s, &parabolic(&s)).unwrap(), TriState::No);
    }
}
