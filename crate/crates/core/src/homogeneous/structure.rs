//! Structure of a reductive Lorentz quotient from its isotropy type, and
//! model algebras realizing each case.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::decomposition::{combine, direct_sum, ReductiveDecomposition};
use crate::classifier::{classify_with_form, Verdict};
use crate::error::{Error, Result};
use crate::json::{ser, vector_strings};
use crate::lie::{LieAlgebra, MatrixLieAlgebra};
use crate::linalg::{
    inverse, kernel_of_rows, signature, unit, vec_is_zero, vec_scale, Matrix, Rational, Signature, Subspace, Vector,
};
use crate::lorentz::{bivector_with, is_skew_for};
use crate::module_decomp::{fixed_space, Representation};
use crate::report::Check;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Model {
    Minkowski,
    #[serde(rename = "deSitter")]
    DeSitter,
    #[serde(rename = "antiDeSitter")]
    AntiDeSitter,
    #[serde(rename = "SL2R_cover")]
    Sl2rCover,
    Symmetric3D,
}

/// Type II: `g = (so(W) ⊕ W) ⊕ (k ⊕ W^⊥)`.
///
/// Constants are normalized so that `[X, Y] = −c·X∧Y (+ c2·φ(X∧Y))` on `W`,
/// where `(u∧v)x = u·g(v,x) − v·g(u,x)`; with this sign `c > 0` is de Sitter.
#[derive(Clone, Debug, Serialize)]
pub struct TypeIIAnalysis {
    pub consistent: bool,
    pub model: Option<Model>,
    #[serde(serialize_with = "ser::opt_rational")]
    pub c: Option<Rational>,
    /// `dim W = 3` only: coefficient of the cross product term.
    #[serde(serialize_with = "ser::opt_rational")]
    pub c2: Option<Rational>,
    pub dim_w: usize,
    /// Subspaces of `g`.
    #[serde(serialize_with = "ser::subspace")]
    pub w: Subspace,
    #[serde(serialize_with = "ser::subspace")]
    pub u: Subspace,
    #[serde(serialize_with = "ser::subspace")]
    pub so_w: Subspace,
    #[serde(serialize_with = "ser::subspace")]
    pub k: Subspace,
    pub lorentz_ideal_killing: Option<Signature>,
    pub checks: Vec<Check>,
    pub diagnostics: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TypeIIIVerdict {
    /// `[p, q] = 0`.
    FlatFactor,
    /// `[p, q] = λd` with `λ ≠ 0` and `C0 = 0`.
    CurvedFactor,
    Inconsistent,
}

/// Type III: isotropic generators `p, q ∈ m`, boost `d ∈ l`, complement `E`.
#[derive(Clone, Debug, Serialize)]
pub struct TypeIIIAnalysis {
    pub verdict: TypeIIIVerdict,
    #[serde(serialize_with = "ser::opt_rational")]
    pub lambda: Option<Rational>,
    /// `C0` on `m`, modulo `k`.
    #[serde(serialize_with = "ser::matrix")]
    pub c0: Matrix,
    pub c0_vanishes: bool,
    #[serde(serialize_with = "ser::vector")]
    pub p: Vector,
    #[serde(serialize_with = "ser::vector")]
    pub q: Vector,
    #[serde(serialize_with = "ser::vector")]
    pub d: Vector,
    #[serde(serialize_with = "ser::subspace")]
    pub e: Subspace,
    #[serde(serialize_with = "ser::subspace")]
    pub k: Subspace,
    pub checks: Vec<Check>,
    pub diagnostics: Vec<String>,
}

/// Fixed vectors of `k` on the complement `E` of the Lorentzian part.
#[derive(Clone, Debug, Serialize)]
pub struct E0Report {
    pub trivial: bool,
    pub dim_e: usize,
    pub dim_e0: usize,
    /// A fixed vector, in `g` coordinates.
    #[serde(serialize_with = "ser::opt_vector")]
    pub witness: Option<Vector>,
}

fn check_metric(dec: &ReductiveDecomposition, metric: &Matrix) -> Result<()> {
    let n = dec.dim_m();
    if metric.rows() != n || metric.cols() != n {
        return Err(Error::Dimension(format!("metric must be {n}×{n}, got {}×{}", metric.rows(), metric.cols())));
    }
    if !metric.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if !signature(metric)?.is_lorentzian() {
        return Err(Error::Hypothesis("metric on m is not Lorentzian".into()));
    }
    if let Some(i) = dec.isotropy().iter().position(|a| !is_skew_for(metric, a)) {
        return Err(Error::Hypothesis(format!("metric is not invariant under basis element {i} of l")));
    }
    Ok(())
}

/// Fixed space of the isotropy action of `elements` (l coordinates) on the
/// invariant `sub` (m coordinates), returned in m coordinates.
fn fixed_on(dec: &ReductiveDecomposition, elements: &Subspace, sub: &Subspace) -> Result<Subspace> {
    let actions = dec
        .isotropy_on(elements, sub)
        .ok_or_else(|| Error::Inconsistent("complement is not invariant under k".into()))?;
    let rep = Representation::new(sub.dim(), actions)?;
    let fixed = fixed_space(&rep);
    Ok(Subspace::span(sub.ambient_dim(), fixed.basis().iter().map(|c| combine(sub.ambient_dim(), sub.basis(), c)).collect()))
}

/// Elements of `l` (l coordinates) acting trivially on `sub` (m coordinates).
fn acting_trivially_on(dec: &ReductiveDecomposition, sub: &Subspace) -> Subspace {
    let iso = dec.isotropy();
    let k = dec.dim_l();
    let mut rows = Vec::new();
    for u in sub.basis() {
        let images: Vec<Vector> = iso.iter().map(|a| a.mul_vec(u)).collect();
        for c in 0..dec.dim_m() {
            let row: Vector = images.iter().map(|v| v[c].clone()).collect();
            if !vec_is_zero(&row) {
                rows.push(row);
            }
        }
    }
    kernel_of_rows(rows, k)
}

fn lift_l(dec: &ReductiveDecomposition, sub: &Subspace) -> Subspace {
    Subspace::span(dec.g.dim(), sub.basis().iter().map(|c| dec.lift_l(c)).collect())
}

fn lift_m(dec: &ReductiveDecomposition, sub: &Subspace) -> Subspace {
    Subspace::span(dec.g.dim(), sub.basis().iter().map(|c| dec.lift_m(c)).collect())
}

fn fmt_vector(v: &[Rational]) -> String {
    format!("[{}]", vector_strings(v).join(", "))
}

fn no_fixed_vector(dec: &ReductiveDecomposition, fixed_m: &Subspace, what: &str) -> Result<()> {
    if let Some(v) = fixed_m.basis().first() {
        return Err(Error::Hypothesis(format!(
            "k fixes a nonzero vector of {what}: {}",
            fmt_vector(&dec.lift_m(v))
        )));
    }
    Ok(())
}

/// Analysis of a reductive quotient whose isotropy is of Type II.
/// `metric` is the invariant Lorentzian Gram matrix on `m`.
pub fn analyze_type_ii(dec: &ReductiveDecomposition, metric: &Matrix) -> Result<TypeIIAnalysis> {
    check_metric(dec, metric)?;
    let h = dec.isotropy_algebra()?;
    let cls = classify_with_form(metric, &h)?;
    if cls.verdict != Verdict::TypeII {
        return Err(Error::Hypothesis(format!("isotropy is {:?}, not TypeII", cls.verdict)));
    }
    let w_m = cls.w.clone().expect("Type II carries W");
    let u_m = w_m.orthogonal(metric);
    let k_l = cls.k_part.clone().expect("Type II carries k");
    no_fixed_vector(dec, &fixed_on(dec, &k_l, &u_m)?, "W^⊥")?;
    let sow_l = acting_trivially_on(dec, &u_m);

    let g = &dec.g;
    let w = lift_m(dec, &w_m);
    let u = lift_m(dec, &u_m);
    let so_w = lift_l(dec, &sow_l);
    let k = lift_l(dec, &k_l);
    let ideal1 = direct_sum(&so_w, &w);
    let ideal2 = direct_sum(&k, &u);
    let mut checks = vec![
        Check::new(
            "l = so(W) ⊕ k",
            so_w.dim() + k.dim() == dec.dim_l(),
            format!("{} + {} vs dim l = {}", so_w.dim(), k.dim(), dec.dim_l()),
        ),
        Check::new("[W, W] ⊆ so(W) ⊕ W", ideal1.contains_subspace(&g.bracket_spaces(&w, &w)), ""),
        Check::new("[W, W^⊥] = 0", g.bracket_spaces(&w, &u).is_zero(), ""),
        Check::new("[k, W^⊥] ⊆ W^⊥", u.contains_subspace(&g.bracket_spaces(&k, &u)), ""),
        Check::new("[W^⊥, W^⊥] ⊆ k ⊕ W^⊥", ideal2.contains_subspace(&g.bracket_spaces(&u, &u)), ""),
        Check::new("[so(W) ⊕ W, k ⊕ W^⊥] = 0", g.bracket_spaces(&ideal1, &ideal2).is_zero(), ""),
    ];
    let mut diagnostics = Vec::new();
    let consistent = checks.iter().all(Check::passed);
    let mut out = TypeIIAnalysis {
        consistent,
        model: None,
        c: None,
        c2: None,
        dim_w: w.dim(),
        w,
        u,
        so_w,
        k,
        lorentz_ideal_killing: None,
        checks: Vec::new(),
        diagnostics: Vec::new(),
    };
    if !consistent {
        diagnostics.push("bracket relations fail: not an effective Type II homogeneous structure".into());
        out.checks = checks;
        out.diagnostics = diagnostics;
        return Ok(out);
    }

    // [w_a, w_b] = c1·(w_a∧w_b) + c2·φ(w_a∧w_b), in the echelon basis of W
    let gw = w_m.restrict_form(metric);
    let dw = w_m.dim();
    let iso = dec.isotropy();
    let mut c1: Option<Rational> = None;
    let mut c2: Option<Rational> = None;
    let mut proportional = true;
    let ginv = inverse(&gw)?.expect("W is nondegenerate");
    for a in 0..dw {
        for b in a + 1..dw {
            let x = g.bracket(&dec.lift_m(&w_m.basis()[a]), &dec.lift_m(&w_m.basis()[b]));
            let (xl, xm) = dec.split(&x);
            let mut act = Matrix::zeros(dec.dim_m(), dec.dim_m());
            for (ci, ai) in xl.iter().zip(&iso) {
                act.add_scaled(ci, ai);
            }
            let on_w = w_m.restrict_operator(&act).expect("W is invariant");
            let beta = bivector_with(&gw, &unit(dw, a), &unit(dw, b));
            proportional &= match_multiple(&on_w, &beta, &mut c1);
            let xw = w_m.coordinates(&xm).expect("[W, W] ⊆ so(W) ⊕ W was checked");
            let phi = cross(&ginv, a, b);
            proportional &= match_multiple_vec(&xw, phi.as_deref(), &mut c2);
        }
    }
    let c1 = c1.unwrap_or_else(Rational::zero);
    let c2 = c2.unwrap_or_else(Rational::zero);
    checks.push(Check::new(
        "[X, Y] has the form c1·X∧Y + c2·φ(X∧Y)",
        proportional,
        if dw > 3 { "φ = 0 for dim W > 3".to_string() } else { "φ is the cross product on W".to_string() },
    ));
    if !proportional {
        out.consistent = false;
        diagnostics.push("W-brackets are not so(W)-equivariant: not an effective Type II structure".into());
        out.checks = checks;
        out.diagnostics = diagnostics;
        return Ok(out);
    }
    let c = -c1;
    let by_c = |c: &Rational| {
        if c.is_zero() {
            Model::Minkowski
        } else if c.is_positive() {
            Model::DeSitter
        } else {
            Model::AntiDeSitter
        }
    };
    let model = if dw == 3 && !c2.is_zero() {
        if c.is_zero() {
            Model::Sl2rCover
        } else {
            Model::Symmetric3D
        }
    } else {
        by_c(&c)
    };

    let ideal_sig = signature(&g.killing_on(&ideal1))?;
    match expected_killing(model, dw) {
        Some(want) => checks.push(Check::new(
            "Killing form on so(W) ⊕ W matches the model",
            ideal_sig == want,
            format!("found {ideal_sig:?}, expected {want:?}"),
        )),
        None => checks.push(Check::indeterminate(
            "Killing form on so(W) ⊕ W matches the model",
            format!("no reference signature for {model:?}; found {ideal_sig:?}"),
        )),
    }
    if dw == 3 {
        diagnostics.push("c2 depends on the orientation of the echelon basis of W".into());
    }
    out.model = Some(model);
    out.c = Some(c);
    out.c2 = (dw == 3).then_some(c2);
    out.lorentz_ideal_killing = Some(ideal_sig);
    out.checks = checks;
    out.diagnostics = diagnostics;
    Ok(out)
}

/// Killing signature of the Lorentz ideal `so(W) ⊕ W`, `m = dim W`.
fn expected_killing(model: Model, m: usize) -> Option<Signature> {
    let so = |p: usize, q: usize| {
        // so(p, q): noncompact part p·q, compact part so(p) ⊕ so(q)
        Signature::new(p * q, p * (p - 1) / 2 + q * (q - 1) / 2, 0)
    };
    match model {
        Model::DeSitter => Some(so(1, m)),
        Model::AntiDeSitter => Some(so(2, m - 1)),
        Model::Minkowski => Some(Signature::new(m - 1, (m - 1) * (m - 2) / 2, m)),
        Model::Sl2rCover => Some(so(2, 2)),
        Model::Symmetric3D => None,
    }
}

/// `φ(e_a ∧ e_b)^k = Σ_l G^{kl} ε_{abl}` on a 3-dimensional `W`; `None`
/// when `dim W ≠ 3`.
fn cross(ginv: &Matrix, a: usize, b: usize) -> Option<Vector> {
    if ginv.rows() != 3 {
        return None;
    }
    let l = 3 - a - b;
    let sign = if (a, b) == (0, 1) || (a, b) == (1, 2) { Rational::one() } else { -Rational::one() };
    Some((0..3).map(|k| &ginv[(k, l)] * &sign).collect())
}

/// Records `x = c·base` in `c`; `false` when no such `c` exists or it
/// disagrees with an earlier value.
fn match_multiple(x: &Matrix, base: &Matrix, c: &mut Option<Rational>) -> bool {
    match_multiple_vec(x.as_slice(), Some(base.as_slice()), c)
}

fn match_multiple_vec(x: &[Rational], base: Option<&[Rational]>, c: &mut Option<Rational>) -> bool {
    let Some(base) = base else {
        return vec_is_zero(x);
    };
    let Some(i) = base.iter().position(|b| !b.is_zero()) else {
        return vec_is_zero(x);
    };
    let f = &x[i] / &base[i];
    if x != vec_scale(base, &f).as_slice() {
        return false;
    }
    match c {
        Some(prev) => *prev == f,
        None => {
            *c = Some(f);
            true
        }
    }
}

/// Analysis of a reductive quotient whose isotropy is of Type III.
pub fn analyze_type_iii(dec: &ReductiveDecomposition, metric: &Matrix) -> Result<TypeIIIAnalysis> {
    check_metric(dec, metric)?;
    let h = dec.isotropy_algebra()?;
    let cls = classify_with_form(metric, &h)?;
    if cls.verdict != Verdict::TypeIII {
        return Err(Error::Hypothesis(format!("isotropy is {:?}, not TypeIII", cls.verdict)));
    }
    let Some((u1, u2)) = cls.isotropic_pair.clone() else {
        return Err(Error::Unsupported("isotropic eigenlines of the boost are not rational".into()));
    };
    let plane = cls.w.clone().expect("Type III carries U");
    let e_m = plane.orthogonal(metric);
    let k_l = cls.k_part.clone().expect("Type III carries k");
    no_fixed_vector(dec, &fixed_on(dec, &k_l, &e_m)?, "E")?;
    let d_l = cls.d_witness.clone().expect("Type III carries d");
    let c0 = cls.c0.clone().expect("Type III carries C0");

    let g = &dec.g;
    let p = dec.lift_m(&u1);
    let q = dec.lift_m(&u2);
    let d = dec.lift_l(&d_l);
    let e = lift_m(dec, &e_m);
    let k = lift_l(dec, &k_l);
    let pq = g.bracket(&p, &q);
    let (pq_l, pq_m) = dec.split(&pq);
    let mut checks = vec![Check::new("[p, q] ∈ l", vec_is_zero(&pq_m), "")];

    // λ from the action of [p, q] on p
    let iso = dec.isotropy();
    let mut act = Matrix::zeros(dec.dim_m(), dec.dim_m());
    for (ci, ai) in pq_l.iter().zip(&iso) {
        act.add_scaled(ci, ai);
    }
    let image = act.mul_vec(&u1);
    let mut lambda = None;
    let eigen = match_multiple_vec(&image, Some(&u1), &mut lambda);
    let lambda = if eigen { Some(lambda.unwrap_or_else(Rational::zero)) } else { None };
    checks.push(Check::new("[p, q] acts on p by a scalar λ", eigen, ""));
    if let Some(l) = &lambda {
        let rest: Vector = pq_l.iter().zip(&d_l).map(|(x, y)| x - l * y).collect();
        checks.push(Check::new("[p, q] − λd ∈ k", k_l.contains(&rest), ""));
    }
    let line = |v: &Vector| Subspace::span(g.dim(), vec![v.clone()]);
    checks.push(Check::new("[p, E] = 0", g.bracket_spaces(&line(&p), &e).is_zero(), ""));
    checks.push(Check::new("[q, E] = 0", g.bracket_spaces(&line(&q), &e).is_zero(), ""));
    checks.push(Check::new("[E, E] ⊆ k ⊕ E", direct_sum(&k, &e).contains_subspace(&g.bracket_spaces(&e, &e)), ""));
    // ad_[p,q] on E is λ·C0 when [p,q] = λd + (k part); C0 is only defined modulo k
    let on_e = e_m.restrict_operator(&act);
    let pq_kills_e = on_e.as_ref().is_some_and(Matrix::is_zero);
    let c0_vanishes = c0.is_zero();
    checks.push(Check::new(
        "λ = 0 or C0 = 0",
        pq_kills_e && lambda.as_ref().is_some_and(|l| l.is_zero() || c0_vanishes),
        format!(
            "λ = {}, C0 {}",
            lambda.as_ref().map(crate::linalg::format_rational).unwrap_or_else(|| "undefined".into()),
            if c0_vanishes { "= 0" } else { "≠ 0" }
        ),
    ));
    let mut diagnostics = Vec::new();
    let verdict = if !checks.iter().all(Check::passed) {
        diagnostics.push("structure relations fail: not an effective Type III homogeneous structure".into());
        TypeIIIVerdict::Inconsistent
    } else if lambda.as_ref().is_some_and(Zero::is_zero) {
        TypeIIIVerdict::FlatFactor
    } else {
        TypeIIIVerdict::CurvedFactor
    };
    Ok(TypeIIIAnalysis { verdict, lambda, c0, c0_vanishes, p, q, d, e, k, checks, diagnostics })
}

/// Whether `k` fixes a nonzero vector of `E`, the complement of the
/// Lorentzian block (Type II) or of the isotropic plane (Type III).
pub fn check_e0_trivial(dec: &ReductiveDecomposition, metric: &Matrix) -> Result<E0Report> {
    check_metric(dec, metric)?;
    let h = dec.isotropy_algebra()?;
    let cls = classify_with_form(metric, &h)?;
    if !matches!(cls.verdict, Verdict::TypeII | Verdict::TypeIII) {
        return Err(Error::Hypothesis(format!("E is defined for Type II or III isotropy, found {:?}", cls.verdict)));
    }
    let e_m = cls.w.clone().expect("W or U present").orthogonal(metric);
    let k_l = cls.k_part.clone().expect("k present");
    let fixed = fixed_on(dec, &k_l, &e_m)?;
    Ok(E0Report {
        trivial: fixed.is_zero(),
        dim_e: e_m.dim(),
        dim_e0: fixed.dim(),
        witness: fixed.basis().first().map(|v| dec.lift_m(v)),
    })
}

/// `E0` directly on a Lorentzian vector space: fixed vectors of `k` in the
/// complement of the Lorentzian block or isotropic plane of `h`.
pub fn e0_of(gram: &Matrix, h: &MatrixLieAlgebra) -> Result<Subspace> {
    let cls = classify_with_form(gram, h)?;
    if !matches!(cls.verdict, Verdict::TypeII | Verdict::TypeIII) {
        return Err(Error::Hypothesis(format!("E is defined for Type II or III subalgebras, found {:?}", cls.verdict)));
    }
    let e = cls.w.expect("W or U present").orthogonal(gram);
    let k = h.elements(&cls.k_part.expect("k present"));
    let actions = k.iter().map(|x| e.restrict_operator(x).expect("E is invariant")).collect();
    let fixed = fixed_space(&Representation::new(e.dim(), actions)?);
    Ok(Subspace::span(gram.rows(), fixed.basis().iter().map(|c| combine(gram.rows(), e.basis(), c)).collect()))
}

/// A Lie algebra with a chosen reductive split and invariant metric on `m`.
#[derive(Clone, Debug)]
pub struct ModelFixture {
    pub g: LieAlgebra,
    pub l: Subspace,
    pub m: Subspace,
    pub metric: Matrix,
}

impl ModelFixture {
    pub fn decomposition(&self) -> Result<ReductiveDecomposition> {
        ReductiveDecomposition::with_complement(&self.g, &self.l, &self.m)
    }
}

/// `so(G) ⋉ W` with `[X, Y] = −c·X∧Y + c2·φ(X∧Y)` on `W`. `signs` is the
/// diagonal of `G`; `c2` needs `dim W = 3`.
#[derive(Clone, Debug)]
pub struct SpaceFormFactor {
    pub signs: Vec<i64>,
    pub c: Rational,
    pub c2: Rational,
}

impl SpaceFormFactor {
    pub fn lorentzian(dim: usize, c: Rational) -> Self {
        let mut signs = vec![1; dim];
        signs[0] = -1;
        SpaceFormFactor { signs, c, c2: Rational::zero() }
    }

    pub fn riemannian(dim: usize, c: Rational) -> Self {
        SpaceFormFactor { signs: vec![1; dim], c, c2: Rational::zero() }
    }

    fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.signs.len();
        (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
    }
}

/// Product of space-form algebras: `l` is spanned by the rotations,
/// `m` by the translations, the metric is `⊕ G`.
pub fn product_model(factors: &[SpaceFormFactor]) -> Result<ModelFixture> {
    let sizes: Vec<usize> = factors.iter().map(|f| f.pairs().len() + f.signs.len()).collect();
    let n: usize = sizes.iter().sum();
    let mut table = vec![vec![vec![Rational::zero(); n]; n]; n];
    let mut l_idx = Vec::new();
    let mut m_idx = Vec::new();
    let mut grams = Vec::new();
    let mut offset = 0;
    for (f, size) in factors.iter().zip(&sizes) {
        let dw = f.signs.len();
        if dw == 0 {
            return Err(Error::Dimension("empty factor".into()));
        }
        if !f.c2.is_zero() && dw != 3 {
            return Err(Error::Constraint("c2 needs a 3-dimensional factor".into()));
        }
        let gram = Matrix::diagonal(&f.signs.iter().map(|&s| Rational::from_integer(s.into())).collect::<Vec<_>>());
        let ginv = inverse(&gram)?.ok_or_else(|| Error::Degenerate("factor metric is degenerate".into()))?;
        let pairs = f.pairs();
        let nb = pairs.len();
        let beta: Vec<Matrix> = pairs.iter().map(|&(a, b)| bivector_with(&gram, &unit(dw, a), &unit(dw, b))).collect();
        // coordinates of a G-skew matrix in the bivector basis
        let coords = |m: &Matrix| -> Vector {
            pairs.iter().map(|&(a, b)| &m[(a, b)] / &gram[(b, b)]).collect()
        };
        let mut put = |i: usize, j: usize, v: &[Rational], base: usize| {
            for (t, x) in v.iter().enumerate() {
                table[offset + i][offset + j][offset + base + t] = x.clone();
            }
        };
        for i in 0..nb {
            for j in i + 1..nb {
                put(i, j, &coords(&beta[i].commutator(&beta[j])), 0);
            }
            for c in 0..dw {
                put(i, nb + c, &beta[i].mul_vec(&unit(dw, c)), nb);
            }
        }
        for (pi, &(a, b)) in pairs.iter().enumerate() {
            let mut rot = vec![Rational::zero(); nb];
            rot[pi] = -f.c.clone();
            put(nb + a, nb + b, &rot, 0);
            if let Some(phi) = cross(&ginv, a, b) {
                put(nb + a, nb + b, &vec_scale(&phi, &f.c2), nb);
            }
        }
        l_idx.extend((0..nb).map(|i| offset + i));
        m_idx.extend((nb..*size).map(|i| offset + i));
        grams.push(gram);
        offset += size;
    }
    let g = LieAlgebra::from_structure_constants(n, &table)?;
    let l = Subspace::span(n, l_idx.iter().map(|&i| unit(n, i)).collect());
    let m = Subspace::span(n, m_idx.iter().map(|&i| unit(n, i)).collect());
    Ok(ModelFixture { g, l, m, metric: Matrix::block_diag(&grams) })
}

/// Space form of dimension `dim ≥ 3` with curvature sign of `c`.
pub fn lorentz_space_form(dim: usize, c: Rational) -> Result<ModelFixture> {
    product_model(&[SpaceFormFactor::lorentzian(dim, c)])
}

/// The three-dimensional family `[X, Y] = −c1·X∧Y + c2·φ(X∧Y)`.
pub fn three_dim_model(c1: Rational, c2: Rational) -> Result<ModelFixture> {
    let mut f = SpaceFormFactor::lorentzian(3, c1);
    f.c2 = c2;
    product_model(&[f])
}

/// `l = ℝd ⊕ k`, `m = ℝp ⊕ ℝq ⊕ E` with `d` acting as `p∧q + C0`, `k` on
/// `E`, `[p, q] = λd` and all other brackets in `m` zero. Jacobi holds
/// exactly when `λ·C0 = 0`.
pub fn type_iii_model(c0: &Matrix, k: &[Matrix], lambda: Rational) -> Result<ModelFixture> {
    let ne = c0.rows();
    if !c0.is_square() {
        return Err(Error::NotSquare { rows: c0.rows(), cols: c0.cols() });
    }
    let id = Matrix::identity(ne);
    if let Some(index) = std::iter::once(c0).chain(k).position(|x| !is_skew_for(&id, x)) {
        return Err(Error::NotSkew { index });
    }
    if k.iter().any(|x| !c0.commutator(x).is_zero()) {
        return Err(Error::Constraint("C0 must commute with k".into()));
    }
    let kalg = MatrixLieAlgebra::from_basis(ne, k.to_vec())?;
    let r = k.len();
    let n = 1 + r + 2 + ne;
    let (id_d, id_p, id_q) = (0, 1 + r, 2 + r);
    let id_e = |i: usize| 3 + r + i;
    let mut table = vec![vec![vec![Rational::zero(); n]; n]; n];
    let e_vec = |v: Vector| {
        let mut out = vec![Rational::zero(); n];
        for (i, x) in v.into_iter().enumerate() {
            out[id_e(i)] = x;
        }
        out
    };
    table[id_d][id_p] = unit(n, id_p);
    table[id_d][id_q] = vec_scale(&unit(n, id_q), &-Rational::one());
    for i in 0..ne {
        table[id_d][id_e(i)] = e_vec(c0.mul_vec(&unit(ne, i)));
    }
    for a in 0..r {
        for b in a + 1..r {
            let c = kalg.coordinates(&k[a].commutator(&k[b])).expect("k is closed");
            let mut out = vec![Rational::zero(); n];
            for (t, x) in c.into_iter().enumerate() {
                out[1 + t] = x;
            }
            table[1 + a][1 + b] = out;
        }
        for i in 0..ne {
            table[1 + a][id_e(i)] = e_vec(k[a].mul_vec(&unit(ne, i)));
        }
    }
    table[id_p][id_q] = vec_scale(&unit(n, id_d), &lambda);
    let g = LieAlgebra::from_structure_constants(n, &table)?;
    let l = Subspace::span(n, (0..=r).map(|i| unit(n, i)).collect());
    let m = Subspace::span(n, (id_p..n).map(|i| unit(n, i)).collect());
    let mut metric = Matrix::zeros(2 + ne, 2 + ne);
    metric[(0, 1)] = Rational::one();
    metric[(1, 0)] = Rational::one();
    for i in 0..ne {
        metric[(2 + i, 2 + i)] = Rational::one();
    }
    Ok(ModelFixture { g, l, m, metric })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn e_wedge(n: usize, a: usize, b: usize) -> Matrix {
        bivector_with(&Matrix::identity(n), &unit(n, a), &unit(n, b))
    }

    #[test]
    fn space_forms_by_sign() {
        for (c, want) in [(-1, Model::AntiDeSitter), (0, Model::Minkowski), (1, Model::DeSitter)] {
            let f = lorentz_space_form(4, int(c)).unwrap();
            assert!(f.g.jacobi_violation().is_none());
            let a = analyze_type_ii(&f.decomposition().unwrap(), &f.metric).unwrap();
            assert_eq!(a.model, Some(want), "c = {c}");
            assert_eq!(a.c, Some(int(c)));
            assert!(a.checks.iter().all(Check::passed), "{:?}", a.checks);
        }
    }

    #[test]
    fn three_dim_family() {
        let cases = [
            (0, 1, Model::Sl2rCover),
            (1, 1, Model::Symmetric3D),
            (0, 0, Model::Minkowski),
            (-2, 0, Model::AntiDeSitter),
        ];
        for (c1, c2, want) in cases {
            let f = three_dim_model(int(c1), int(c2)).unwrap();
            assert!(f.g.jacobi_violation().is_none());
            let a = analyze_type_ii(&f.decomposition().unwrap(), &f.metric).unwrap();
            assert_eq!(a.model, Some(want));
            assert_eq!((a.c.unwrap(), a.c2.unwrap()), (int(c1), int(c2)));
        }
    }

    #[test]
    fn riemannian_factor_splits_off() {
        let f = product_model(&[SpaceFormFactor::lorentzian(3, int(1)), SpaceFormFactor::riemannian(3, int(1))]).unwrap();
        let a = analyze_type_ii(&f.decomposition().unwrap(), &f.metric).unwrap();
        assert_eq!(a.model, Some(Model::DeSitter));
        assert_eq!((a.dim_w, a.u.dim(), a.so_w.dim(), a.k.dim()), (3, 3, 3, 3));
    }

    #[test]
    fn flat_line_factor_is_a_hypothesis_failure() {
        let f = product_model(&[SpaceFormFactor::lorentzian(3, int(1)), SpaceFormFactor::riemannian(1, int(0))]).unwrap();
        let dec = f.decomposition().unwrap();
        let err = analyze_type_ii(&dec, &f.metric).unwrap_err();
        assert!(matches!(err, Error::Hypothesis(ref s) if s.contains("W^⊥")), "{err}");
        let e0 = check_e0_trivial(&dec, &f.metric).unwrap();
        assert!(!e0.trivial);
        assert_eq!(e0.witness, Some(unit(f.g.dim(), f.g.dim() - 1)));
    }

    #[test]
    fn type_iii_dichotomy() {
        let flat = type_iii_model(&e_wedge(4, 0, 1), &[&e_wedge(4, 0, 1) + &e_wedge(4, 2, 3).scale(&int(2))], int(0)).unwrap();
        assert!(flat.g.jacobi_violation().is_none());
        let a = analyze_type_iii(&flat.decomposition().unwrap(), &flat.metric).unwrap();
        assert_eq!(a.verdict, TypeIIIVerdict::FlatFactor);

        let curved = type_iii_model(&Matrix::zeros(2, 2), &[e_wedge(2, 0, 1)], int(1)).unwrap();
        assert!(curved.g.jacobi_violation().is_none());
        let a = analyze_type_iii(&curved.decomposition().unwrap(), &curved.metric).unwrap();
        assert_eq!(a.verdict, TypeIIIVerdict::CurvedFactor);
        assert_eq!(a.lambda, Some(int(1)));

        let broken = type_iii_model(&e_wedge(4, 0, 1), &[&e_wedge(4, 0, 1) + &e_wedge(4, 2, 3).scale(&int(2))], int(1)).unwrap();
        assert!(broken.g.jacobi_violation().is_some());
        let a = analyze_type_iii(&broken.decomposition().unwrap(), &broken.metric).unwrap();
        assert_eq!(a.verdict, TypeIIIVerdict::Inconsistent);
        assert!(a.checks.iter().any(|c| c.name == "λ = 0 or C0 = 0" && !c.passed()));
    }

    #[test]
    fn e0_on_vector_space() {
        use crate::lorentz::{minkowski, subalgebra_type3};
        let s = minkowski(3);
        let c0 = Matrix::zeros(5, 5);
        let full = vec![s.bivector(&s.e(1), &s.e(2)), s.bivector(&s.e(1), &s.e(3)), s.bivector(&s.e(2), &s.e(3))];
        let h = subalgebra_type3(&s, &c0, &full).unwrap();
        assert!(e0_of(s.gram(), &h).unwrap().is_zero());
        let h = subalgebra_type3(&s, &c0, &full[..1]).unwrap();
        assert_eq!(e0_of(s.gram(), &h).unwrap(), Subspace::span(5, vec![s.e(3)]));
        let h = subalgebra_type3(&s, &c0, &[]).unwrap();
        assert_eq!(e0_of(s.gram(), &h).unwrap().dim(), 3);
    }
}
