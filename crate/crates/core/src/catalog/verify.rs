//! Regression driver: every catalog case through the full homogeneous
//! verification suite.

use num_traits::{One, Zero};
use serde::Serialize;

use super::contact::{contact_decomposition, semisimple_sum_decomposition, ContactDecomposition, ContactElementSpec};
use super::families::{ClassicalAlgebraSpec, Family};
use super::wolf::{wolf_decomposition, WolfRow};
use crate::error::Result;
use crate::exec::Mode;
use crate::homogeneous::{
    bookkeeping, check_cartan_involution, classify_admissible, direct_sum, invariant_euclidean_metric, lambda_threshold,
    line, lorentz_metric, rank_one_invariant, Minimality, ReductiveDecomposition, Subtype,
};
use crate::json::ser;
use crate::linalg::{int, signature, subspace_intersection, Matrix, Rational, Signature, Vector};
use crate::report::{overall, Check, Status};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CatalogCase {
    Wolf { row: WolfRow, p: usize },
    Contact { spec: ContactElementSpec },
    Sum { specs: Vec<ContactElementSpec> },
}

impl CatalogCase {
    pub fn name(&self) -> String {
        match self {
            CatalogCase::Wolf { row, p } => format!("{}(p={p})", row.key()),
            CatalogCase::Contact { spec } => spec.name(),
            CatalogCase::Sum { specs } => specs.iter().map(ContactElementSpec::name).collect::<Vec<_>>().join(" + "),
        }
    }

    pub fn expected_subtype(&self) -> Subtype {
        match self {
            CatalogCase::Wolf { row, .. } => row.expected_subtype(),
            _ => Subtype::Ia,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Dims {
    pub g: usize,
    pub l: usize,
    pub m: usize,
    pub m_l: usize,
    pub m_prime: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct MetricSample {
    #[serde(serialize_with = "ser::rational")]
    pub lambda: Rational,
    pub signature: Signature,
    pub kind: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct MetricReport {
    #[serde(serialize_with = "ser::vector")]
    pub z: Vector,
    #[serde(serialize_with = "ser::rational")]
    pub threshold: Rational,
    pub samples: Vec<MetricSample>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseReport {
    pub name: String,
    pub case: CatalogCase,
    pub status: Status,
    pub expected_subtype: Subtype,
    pub subtype: Option<Subtype>,
    pub minimality: Option<Minimality>,
    pub dims: Option<Dims>,
    pub metric: Option<MetricReport>,
    pub checks: Vec<Check>,
    pub diagnostics: Vec<String>,
}

impl CaseReport {
    fn new(case: &CatalogCase) -> Self {
        CaseReport {
            name: case.name(),
            case: case.clone(),
            status: Status::Indeterminate,
            expected_subtype: case.expected_subtype(),
            subtype: None,
            minimality: None,
            dims: None,
            metric: None,
            checks: Vec::new(),
            diagnostics: Vec::new(),
        }
    }

    fn finish(mut self) -> Self {
        self.status = overall(&self.checks);
        self
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Runs the suite; failures are report entries, never errors.
pub fn verify_case(case: &CatalogCase) -> CaseReport {
    let mut rep = CaseReport::new(case);
    match case {
        CatalogCase::Wolf { row, p } => match wolf_decomposition(*row, *p) {
            Ok(w) => {
                let (l, ml, mp) = row.expected_dims(*p);
                let d = &w.dec;
                rep.checks.push(Check::new(
                    "dimension formula",
                    (d.l.dim(), d.m_l.dim(), d.m_prime.dim()) == (l, ml, mp)
                        && d.g.dim() == row.algebra(*p).expected_dim(),
                    format!("expected (dim l, dim m_l, dim m') = ({l}, {ml}, {mp})"),
                ));
                rep.checks.push(Check::new("m_l = constructed 3-dimensional block", d.m_l == w.block, ""));
                suite(&mut rep, &w.dec, &w.built.theta);
            }
            Err(e) => rep.checks.push(Check::new("construction", false, e.to_string())),
        },
        CatalogCase::Contact { spec } => {
            if let Err(e) = spec.validate() {
                rep.checks.push(Check::new("constraints", false, e.to_string()));
                return rep.finish();
            }
            rep.checks.push(Check::new("constraints", true, ""));
            contact_case(&mut rep, contact_decomposition(spec));
        }
        CatalogCase::Sum { specs } => {
            if let Some(e) = specs.iter().find_map(|s| s.validate().err()) {
                rep.checks.push(Check::new("constraints", false, e.to_string()));
                return rep.finish();
            }
            rep.checks.push(Check::new("constraints", true, ""));
            contact_case(&mut rep, semisimple_sum_decomposition(specs));
        }
    }
    rep.finish()
}

fn contact_case(rep: &mut CaseReport, built: Result<ContactDecomposition>) {
    let c = match built {
        Ok(c) => c,
        Err(e) => {
            let name = if e.to_string().contains("C_p(Z)") { "C_p(Z) = 0" } else { "construction" };
            rep.checks.push(Check::new(name, false, e.to_string()));
            return;
        }
    };
    let g = &c.dec.g;
    let cp = subspace_intersection(&g.centralizer_of(&c.z), &c.p).expect("same ambient");
    rep.checks.push(Check::new("C_p(Z) = 0", cp.is_zero(), format!("dim C_p(Z) = {}", cp.dim())));
    rep.checks.push(Check::new(
        "dim l formula",
        c.dec.l.dim() == c.expected_l_dim,
        format!("dim l = {}, expected {}", c.dec.l.dim(), c.expected_l_dim),
    ));
    rep.checks.push(Check::new(
        "dim m' formula",
        c.contact_m_prime.dim() == c.expected_m_prime_dim,
        format!("dim m' = {}, expected {}", c.contact_m_prime.dim(), c.expected_m_prime_dim),
    ));
    let h = direct_sum(&c.dec.l, &line(&c.z));
    rep.checks.push(Check::new(
        "[l + ℝZ, m'] ⊆ m'",
        c.contact_m_prime.contains_subspace(&g.bracket_spaces(&h, &c.contact_m_prime)),
        "",
    ));
    rep.checks.push(Check::new("C_g(Z) = l ⊕ ℝZ", g.centralizer_of(&c.z) == h, ""));
    rep.checks.push(Check::new("Z ∈ m_l", c.dec.m_l.contains(&c.z), ""));
    suite(rep, &c.dec, &c.theta);
}

/// Checks shared by every case.
fn suite(rep: &mut CaseReport, dec: &ReductiveDecomposition, theta: &Matrix) {
    let g = &dec.g;
    rep.dims = Some(Dims {
        g: g.dim(),
        l: dec.l.dim(),
        m: dec.m.dim(),
        m_l: dec.m_l.dim(),
        m_prime: dec.m_prime.dim(),
    });
    let cartan = check_cartan_involution(g, theta);
    rep.checks.push(Check::new(
        "θ is a Cartan involution",
        cartan.is_ok(),
        cartan.err().map(|e| e.to_string()).unwrap_or_default(),
    ));
    rep.checks.push(Check::new(
        "l ∩ Z(g) = 0",
        subspace_intersection(&dec.l, &g.center()).map(|s| s.is_zero()).unwrap_or(false),
        "",
    ));
    rep.checks.push(Check::new("[l, m] ⊆ m", dec.m.contains_subspace(&g.bracket_spaces(&dec.l, &dec.m)), ""));
    rep.checks.push(Check::new("m = m_l ⊕ [l, m]", dec.key_split, ""));
    rep.checks.extend(bookkeeping(dec));
    let report = match classify_admissible(dec) {
        Ok(r) => r,
        Err(e) => {
            rep.checks.push(Check::new("l compact", false, e.to_string()));
            return;
        }
    };
    rep.checks.push(Check::new("l compact", true, ""));
    rep.checks.push(Check::new("admissible", report.admissible, format!("dim m_l = {}", report.dim_m_l)));
    rep.subtype = Some(report.subtype);
    rep.checks.push(Check::new(
        "subtype",
        report.subtype == rep.expected_subtype,
        format!("found {:?}, expected {:?}", report.subtype, rep.expected_subtype),
    ));
    if matches!(rep.expected_subtype, Subtype::IbCompact | Subtype::IbSplit) {
        let s = signature(&g.killing_on(&dec.m_l));
        let want = if rep.expected_subtype == Subtype::IbCompact {
            Signature::new(0, 3, 0)
        } else {
            Signature::new(2, 1, 0)
        };
        rep.checks.push(Check::new(
            "Killing restriction to m_l",
            s.as_ref().is_ok_and(|s| *s == want),
            format!("found {s:?}, expected {want:?}"),
        ));
    }
    rep.checks.extend(report.checks.iter().cloned());
    rep.checks.push(match &report.minimality {
        Minimality::Holds => Check::new("minimality", true, ""),
        Minimality::Fails { condition } => Check::new("minimality", false, condition.clone()),
        Minimality::Unverified { reason } => Check::indeterminate("minimality", reason.clone()),
    });
    rep.minimality = Some(report.minimality.clone());
    rep.diagnostics.extend(report.diagnostics.iter().cloned());

    let Some(z) = report.z_witness.clone() else {
        rep.checks.push(Check::indeterminate("metric family", "no compact direction in m_l"));
        return;
    };
    if let Err(e) = metric_family(rep, dec, theta, z) {
        rep.checks.push(Check::new("metric family", false, e.to_string()));
    }
}

/// `g_λ` at `λ = t/2, t, 2t` for the threshold `t`.
fn metric_family(rep: &mut CaseReport, dec: &ReductiveDecomposition, theta: &Matrix, z: Vector) -> Result<()> {
    let gm = invariant_euclidean_metric(dec, theta)?;
    rep.checks.push(Check::new("g_m positive definite", gm.signature.is_positive_definite(), ""));
    let t = lambda_threshold(dec, &gm, &z)?;
    let rank_one = rank_one_invariant(dec, &gm, &z)?;
    rep.checks.push(Check::new(
        "g_λ invariant for every λ",
        gm.invariance_certificate && rank_one,
        "g_m and Z*⊗Z* are both ad_l-invariant",
    ));
    let dim = dec.m.dim();
    let half = Rational::one() / int(2);
    let expected = [
        (&t * &half, Signature::new(dim, 0, 0), "g_λ Euclidean below threshold"),
        (t.clone(), Signature::new(dim - 1, 0, 1), "g_λ degenerate at threshold"),
        (&t * int(2), Signature::new(dim - 1, 1, 0), "g_λ Lorentzian above threshold"),
    ];
    let mut samples = Vec::new();
    for (lambda, want, name) in expected {
        let f = lorentz_metric(dec, &gm, &z, &lambda)?;
        rep.checks.push(Check::new(name, f.signature == want && f.invariance_certificate, format!("{:?}", f.signature)));
        samples.push(MetricSample { lambda, signature: f.signature, kind: f.kind });
    }
    debug_assert!(!t.is_zero());
    rep.metric = Some(MetricReport { z, threshold: t, samples });
    Ok(())
}

/// Verifies all cases, fanned out by `mode`; reports are sorted by name.
pub fn verify_cases(cases: &[CatalogCase], mode: Mode) -> Vec<CaseReport> {
    let mut out = mode.map(cases, verify_case);
    out.sort_by(|a, b| a.name.cmp(&b.name));
    out
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

/// Wolf rows for small `p` and contact cases with generic eigenvalue data.
pub fn standard_cases() -> Vec<CatalogCase> {
    let mut cases = Vec::new();
    for row in [WolfRow::SuP2, WolfRow::SoP4, WolfRow::SpP1] {
        cases.extend((1..=3).map(|p| CatalogCase::Wolf { row, p }));
    }
    for row in [WolfRow::SuP2Nc, WolfRow::SpP1Nc, WolfRow::SuP11Para, WolfRow::SoP4Nc] {
        cases.extend((1..=2).map(|p| CatalogCase::Wolf { row, p }));
    }
    let contact = |alg: ClassicalAlgebraSpec, b: &[i64], c: &[i64]| CatalogCase::Contact {
        spec: ContactElementSpec::new(alg, ints(b), ints(c)),
    };
    cases.push(contact(ClassicalAlgebraSpec::su_pq(2, 1), &[1, 2], &[-3]));
    cases.push(contact(ClassicalAlgebraSpec::su_pq(2, 2), &[1, 2], &[-1, -2]));
    cases.push(contact(ClassicalAlgebraSpec::sp2n_r(2), &[1, 2], &[]));
    cases.push(contact(ClassicalAlgebraSpec::so_pq(2, 2), &[1], &[2]));
    cases.push(contact(ClassicalAlgebraSpec::sp_pq(1, 1), &[1], &[2]));
    cases.push(contact(ClassicalAlgebraSpec::so_n_h(2), &[1, 2], &[]));
    let su11 = ContactElementSpec::new(ClassicalAlgebraSpec::su_pq(1, 1), ints(&[1]), ints(&[-1]));
    let sp4 = ContactElementSpec::new(ClassicalAlgebraSpec::sp2n_r(2), ints(&[1, 2]), vec![]);
    cases.push(CatalogCase::Sum { specs: vec![su11.clone(), su11.clone()] });
    cases.push(CatalogCase::Sum { specs: vec![su11, sp4] });
    cases
}

/// Exceptional rows, carried as dimension data only.
#[derive(Clone, Debug, Serialize)]
pub struct ExceptionalRow {
    pub name: &'static str,
    pub decomposition: &'static str,
    pub dim_g: usize,
    pub dim_l: usize,
    pub dim_m_l: usize,
    pub dim_m_prime: usize,
    pub verifiable: bool,
}

pub fn exceptional_rows() -> Vec<ExceptionalRow> {
    let row = |name, decomposition, dim_g, dim_l| ExceptionalRow {
        name,
        decomposition,
        dim_g,
        dim_l,
        dim_m_l: 3,
        dim_m_prime: dim_g - dim_l - 3,
        verifiable: false,
    };
    vec![
        row("e6", "e6 = su(6) + (su(2) + ∧³ℂ⁶⊗ℂ²)", 78, 35),
        row("e7", "e7 = so(12) + (su(2) + Δ₁₂⊗ℂ²)", 133, 66),
        row("e8", "e8 = e7 + (su(2) + m')", 248, 133),
        row("f4", "f4 = sp(3) + (su(2) + m')", 52, 21),
        row("g2", "g2 = su(2) + (su(2) + m')", 14, 3),
    ]
}

/// One line of `catalog list`.
#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub kind: &'static str,
    pub description: String,
    pub parameters: &'static str,
    pub verifiable: bool,
}

pub fn catalog_entries() -> Vec<CatalogEntry> {
    let mut out: Vec<CatalogEntry> = WolfRow::ALL
        .iter()
        .map(|r| CatalogEntry {
            name: r.key().to_string(),
            kind: "wolf",
            description: r.description().to_string(),
            parameters: "--p P (P ≥ 1)",
            verifiable: true,
        })
        .collect();
    out.extend(Family::ALL.iter().map(|f| CatalogEntry {
        name: f.key().to_string(),
        kind: "contact",
        description: format!("g = l + ℝZ + m' in {}; {}", f.key(), f.realification_note()),
        parameters: if f.single_parameter() { "--p N --eigen \"z1,…,zN\"" } else { "--p P --q Q --eigen \"b…;c…\"" },
        verifiable: true,
    }));
    out.extend(exceptional_rows().into_iter().map(|r| CatalogEntry {
        name: r.name.to_string(),
        kind: "exceptional",
        description: format!(
            "{} (dims {} = {} + {} + {})",
            r.decomposition, r.dim_g, r.dim_l, r.dim_m_l, r.dim_m_prime
        ),
        parameters: "",
        verifiable: false,
    }));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corrupted_case_fails_constraints_only() {
        let spec = ContactElementSpec::new(ClassicalAlgebraSpec::su_pq(2, 1), ints(&[1, -2]), ints(&[1]));
        let r = verify_case(&CatalogCase::Contact { spec });
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.checks.len(), 1);
        assert_eq!(r.checks[0].name, "constraints");
    }

    #[test]
    fn para_row_passes() {
        let r = verify_case(&CatalogCase::Wolf { row: WolfRow::SuP11Para, p: 1 });
        assert_eq!(r.status, Status::Pass, "{:#?}", r.checks);
        assert_eq!(r.subtype, Some(Subtype::IbSplit));
    }

    #[test]
    fn generic_contact_passes() {
        let spec = ContactElementSpec::new(ClassicalAlgebraSpec::sp2n_r(2), ints(&[1, 2]), vec![]);
        let r = verify_case(&CatalogCase::Contact { spec });
        assert_eq!(r.status, Status::Pass, "{:#?}", r.checks);
    }
}
