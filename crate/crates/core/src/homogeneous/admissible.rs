use serde::Serialize;

use super::decomposition::{direct_sum, line, ReductiveDecomposition};
use crate::error::{Error, Result};
use crate::json::ser;
use crate::linalg::{signature, vec_add, vec_sub, Signature, Subspace, Vector};
use crate::report::Check;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Subtype {
    Ia,
    #[serde(rename = "Ib_compact")]
    IbCompact,
    #[serde(rename = "Ib_split")]
    IbSplit,
    Ic,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Minimality {
    Holds,
    Fails { condition: String },
    Unverified { reason: String },
}

#[derive(Clone, Debug, Serialize)]
pub struct AdmissibilityReport {
    pub admissible: bool,
    pub subtype: Subtype,
    /// Compact direction in `m_l`, in `g` coordinates.
    #[serde(serialize_with = "ser::opt_vector")]
    pub z_witness: Option<Vector>,
    pub minimality: Minimality,
    pub dim_l: usize,
    pub dim_m_l: usize,
    pub dim_m_prime: usize,
    /// Killing signature of `m_l` as an algebra in its own right.
    pub m_l_signature: Option<Signature>,
    pub checks: Vec<Check>,
    pub diagnostics: Vec<String>,
}

/// `m_l ≠ 0`, for a stabilizer passing the compactness criterion.
pub fn is_admissible(dec: &ReductiveDecomposition) -> Result<bool> {
    let compact = match dec.g.is_compact_subalgebra(&dec.l) {
        Ok(c) => c,
        Err(Error::NotSemisimple(_)) => {
            return Err(Error::Hypothesis("compactness criterion needs a semisimple g".into()));
        }
        Err(e) => return Err(e),
    };
    if !compact {
        return Err(Error::Hypothesis(
            "compactness criterion failed on l: B is not negative definite there".into(),
        ));
    }
    Ok(!dec.m_l.is_zero())
}

/// Subtype and minimality of an admissible decomposition.
pub fn classify_admissible(dec: &ReductiveDecomposition) -> Result<AdmissibilityReport> {
    let admissible = is_admissible(dec)?;
    let mut rep = AdmissibilityReport {
        admissible,
        subtype: Subtype::None,
        z_witness: None,
        minimality: Minimality::Unverified { reason: "not admissible".into() },
        dim_l: dec.l.dim(),
        dim_m_l: dec.m_l.dim(),
        dim_m_prime: dec.m_prime.dim(),
        m_l_signature: None,
        checks: Vec::new(),
        diagnostics: Vec::new(),
    };
    if !admissible {
        return Ok(rep);
    }
    let g = &dec.g;
    let ml = &dec.m_l;
    if !g.is_subalgebra(ml) {
        rep.minimality = Minimality::Unverified { reason: "m_l is not a subalgebra".into() };
        rep.diagnostics.push("[m_l, m_l] leaves m_l; the normalized split was not reached".into());
        return Ok(rep);
    }
    let intrinsic = g.restrict(ml)?;
    let center = g.center();
    if intrinsic.is_abelian() {
        if ml.dim() == 1 {
            let z = ml.basis()[0].clone();
            let central = center.contains(&z);
            if !central && g.is_compact_element(&z) {
                rep.subtype = Subtype::Ia;
                rep.z_witness = Some(z.clone());
                rep.minimality = minimality_ab(dec, &z, &mut rep.checks);
            } else {
                rep.subtype = Subtype::Ic;
                rep.z_witness = Some(z);
                rep.minimality = ic_minimality();
            }
        } else {
            let b = signature(&g.killing_on(ml))?;
            if b.n_minus > 0 {
                rep.minimality = Minimality::Fails {
                    condition: format!(
                        "abelian m_l of dim {} contains a compact non-central line; l + ℝZ is admissible",
                        ml.dim()
                    ),
                };
            } else {
                rep.subtype = Subtype::Ic;
                rep.z_witness = Some(ml.basis()[0].clone());
                rep.minimality = ic_minimality();
            }
            rep.checks.push(Check::new(
                "no compact non-central line in m_l",
                b.n_minus == 0,
                format!("Killing signature on m_l: {}", sig_text(&b)),
            ));
        }
        return Ok(rep);
    }
    if ml.dim() == 3 && intrinsic.is_semisimple() {
        let s = intrinsic.killing_signature();
        rep.m_l_signature = Some(s);
        rep.subtype = if s.is_negative_definite() { Subtype::IbCompact } else { Subtype::IbSplit };
        let cg = g.centralizer(ml);
        let cg_ok = cg == dec.l;
        rep.checks.push(Check::new("C_g(m_l) = l", cg_ok, format!("dim C_g(m_l) = {}", cg.dim())));
        match compact_direction(dec) {
            Some(z) => {
                rep.z_witness = Some(z.clone());
                let m = minimality_ab(dec, &z, &mut rep.checks);
                rep.minimality = if !cg_ok {
                    Minimality::Fails { condition: "C_g(m_l) = l".into() }
                } else {
                    m
                };
            }
            None => {
                rep.minimality = Minimality::Unverified { reason: "no compact direction found in m_l".into() };
            }
        }
        return Ok(rep);
    }
    if let Some(s) = intrinsic.is_semisimple().then(|| intrinsic.killing_signature()) {
        rep.m_l_signature = Some(s);
    }
    rep.minimality = Minimality::Fails {
        condition: format!("m_l (dim {}) is neither abelian nor a rank-one simple algebra", ml.dim()),
    };
    Ok(rep)
}

fn ic_minimality() -> Minimality {
    Minimality::Unverified { reason: "case (c) has no sufficient minimality criterion".into() }
}

/// `C_g(Z) = l ⊕ ℝZ` and `N_g(m_l) = l ⊕ m_l`.
fn minimality_ab(dec: &ReductiveDecomposition, z: &[crate::linalg::Rational], checks: &mut Vec<Check>) -> Minimality {
    let g = &dec.g;
    let cz = g.centralizer_of(z);
    let want_cz = direct_sum(&dec.l, &line(z));
    let cz_ok = cz == want_cz;
    checks.push(Check::new("C_g(Z) = l ⊕ ℝZ", cz_ok, format!("dim C_g(Z) = {}", cz.dim())));
    let n = g.normalizer(&dec.m_l);
    let want_n = direct_sum(&dec.l, &dec.m_l);
    let n_ok = n == want_n;
    checks.push(Check::new("N_g(m_l) = l ⊕ m_l", n_ok, format!("dim N_g(m_l) = {}", n.dim())));
    match (cz_ok, n_ok) {
        (true, true) => Minimality::Holds,
        (false, _) => Minimality::Fails { condition: "C_g(Z) = l ⊕ ℝZ".into() },
        (_, false) => Minimality::Fails { condition: "N_g(m_l) = l ⊕ m_l".into() },
    }
}

/// A compact element of `m_l`: basis vectors first, then pairwise sums and
/// differences.
fn compact_direction(dec: &ReductiveDecomposition) -> Option<Vector> {
    let b = dec.m_l.basis();
    let mut cands: Vec<Vector> = b.to_vec();
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            cands.push(vec_add(&b[i], &b[j]));
            cands.push(vec_sub(&b[i], &b[j]));
        }
    }
    cands.into_iter().find(|z| dec.g.is_compact_element(z))
}

pub(crate) fn sig_text(s: &Signature) -> String {
    format!("({}, {}, {})", s.n_plus, s.n_minus, s.n_zero)
}

/// Centralizer split of a decomposition: `[l, m_l] = 0` and the dimension
/// count `dim l + dim m_l + dim m′ = dim g`.
pub fn bookkeeping(dec: &ReductiveDecomposition) -> Vec<Check> {
    let lml = dec.g.bracket_spaces(&dec.l, &dec.m_l);
    let total = dec.l.dim() + dec.m_l.dim() + dec.m_prime.dim();
    vec![
        Check::new("[l, m_l] = 0", lml.is_zero(), ""),
        Check::new(
            "dim l + dim m_l + dim m' = dim g",
            total == dec.g.dim() && dec.key_split,
            format!("{} + {} + {} = {} (dim g = {})", dec.l.dim(), dec.m_l.dim(), dec.m_prime.dim(), total, dec.g.dim()),
        ),
    ]
}

/// `true` when `sub` is zero or every basis vector is compact; a cheap
/// companion to the Killing criterion used in reports.
pub fn all_basis_compact(dec: &ReductiveDecomposition, sub: &Subspace) -> bool {
    sub.basis().iter().all(|x| dec.g.is_compact_element(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homogeneous::decomposition::reductive_complement;
    use crate::lie::MatrixLieAlgebra;
    use crate::linalg::{int, Matrix};

    fn su2() -> MatrixLieAlgebra {
        let l1 = Matrix::from_i64(&[&[0, 0, 0], &[0, 0, -1], &[0, 1, 0]]);
        let l2 = Matrix::from_i64(&[&[0, 0, 1], &[0, 0, 0], &[-1, 0, 0]]);
        let l3 = Matrix::from_i64(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 0]]);
        MatrixLieAlgebra::from_basis(3, vec![l1, l2, l3]).unwrap()
    }

    #[test]
    fn group_manifold_is_ib() {
        let g = su2();
        let dec = reductive_complement(&g, &Subspace::zero(3), None).unwrap();
        let r = classify_admissible(&dec).unwrap();
        assert!(r.admissible);
        assert_eq!(r.subtype, Subtype::IbCompact);
        assert_eq!(r.minimality, Minimality::Holds);
    }

    #[test]
    fn circle_quotient_of_su2_not_admissible() {
        let g = su2();
        let dec = reductive_complement(&g, &line(&[int(0), int(0), int(1)]), None).unwrap();
        assert!(!is_admissible(&dec).unwrap());
        assert_eq!(classify_admissible(&dec).unwrap().subtype, Subtype::None);
    }

    #[test]
    fn noncompact_stabilizer_rejected() {
        let e = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        let f = Matrix::from_i64(&[&[0, 0], &[1, 0]]);
        let sl2 = MatrixLieAlgebra::generated_by(2, &[e.clone(), f.clone()]).unwrap();
        let h = sl2.coordinates(&(&e + &f)).unwrap();
        let dec = reductive_complement(&sl2, &line(&h), None).unwrap();
        assert!(matches!(is_admissible(&dec), Err(Error::Hypothesis(_))));
    }
}
