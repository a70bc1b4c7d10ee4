//! `lorhom`: JSON reports on standard output, a one-line summary on standard
//! error, and the exit code 0 (pass / verdict computed), 1 (a check failed),
//! 2 (indeterminate) or 64 (usage or input error).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;

use lorhom::catalog::{
    catalog_entries, contact_decomposition, standard_cases, verify_cases, wolf_decomposition,
    CaseReport, CatalogCase, CatalogEntry, ClassicalAlgebraSpec, ContactElementSpec, Family, WolfRow,
};
use lorhom::classifier::{classify_with_form, SubalgebraClassification, Verdict};
use lorhom::exec::Mode;
use lorhom::homogeneous::{
    analyze_type_ii, analyze_type_iii, bookkeeping, check_e0_trivial, classify_admissible, coordinate_map,
    invariant_euclidean_metric, lambda_threshold, lorentz_metric, lorentz_space_form, rank_one_invariant,
    reductive_complement, three_dim_model, type_iii_model, AdmissibilityReport, E0Report, InvariantForm,
    ModelFixture, ReductiveDecomposition, TypeIIAnalysis, TypeIIIAnalysis,
};
use lorhom::json::{matrix_strings, parse_matrix, ser, to_pretty, AlgebraFile, StructureFile};
use lorhom::lie::MatrixLieAlgebra;
use lorhom::linalg::{int, parse_rational, unit, Matrix, Rational, Subspace, Vector};
use lorhom::lorentz::{
    lorentz_algebra, maximal_compact_basis, minkowski, parabolic, so_e_basis, subalgebra_type2, subalgebra_type3,
};
use lorhom::report::{overall, Check, Status};
use lorhom::Error;

const USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "lorhom", version, about = "Lorentz subalgebras and reductive homogeneous Lorentzian spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Type I / II / III classification of a subalgebra of so(1,n+1).
    Classify {
        /// n, for the Minkowski space of dimension n + 2 in a Witt basis.
        #[arg(long)]
        space: Option<usize>,
        /// Gram matrix of another Lorentzian form, instead of --space.
        #[arg(long)]
        gram: Option<PathBuf>,
        #[arg(long)]
        algebra: PathBuf,
    },
    /// Admissibility, subtype and minimality of a compact stabilizer.
    Admissible(PairArgs),
    /// Invariant metric g_λ = g_m − λ Z*⊗Z* on m.
    Metric {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Index of the basis element of g used as Z; defaults to the compact
        /// direction found in m_l.
        #[arg(long = "z", alias = "Z")]
        z: Option<usize>,
    },
    /// Structure of a Type II or Type III space given by structure constants.
    Analyze {
        #[arg(long = "type", value_enum)]
        kind: AnalyzeKind,
        #[arg(long)]
        input: PathBuf,
    },
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Writes input files for the other verbs.
    #[command(subcommand)]
    Construct(ConstructCommand),
}

#[derive(Args)]
struct PairArgs {
    /// The algebra g, in matrix form.
    #[arg(long)]
    g: PathBuf,
    /// The stabilizer l, as matrices lying in g.
    #[arg(long)]
    l: PathBuf,
    /// Cartan involution as a matrix in the coordinates of the g basis;
    /// defaults to X ↦ −Xᵀ when g is closed under it.
    #[arg(long)]
    theta: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum AnalyzeKind {
    #[value(name = "II")]
    II,
    #[value(name = "III")]
    III,
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// Rows and families the catalog knows about.
    List,
    /// Runs the verification suite on one row, one contact case, or `all`.
    Verify {
        name: String,
        #[command(flatten)]
        params: CaseParams,
        /// Fan cases out sequentially instead of on the worker pool.
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Args, Clone)]
struct CaseParams {
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    /// Eigenvalue data `b1,b2;c1` (or `z1,z2` for single-parameter families).
    #[arg(long, allow_hyphen_values = true)]
    eigen: Option<String>,
}

#[derive(Subcommand)]
enum ConstructCommand {
    /// so(1,n+1) in the Witt basis.
    Lorentz {
        #[arg(long)]
        space: usize,
    },
    /// Stabilizer of the isotropic line ℝp.
    Parabolic {
        #[arg(long)]
        space: usize,
    },
    /// so(n+1), the stabilizer of p − q.
    MaximalCompact {
        #[arg(long)]
        space: usize,
    },
    /// so(V(H)) + k with H = span(e1..ek); `--full` adds so(H^⊥).
    TypeII {
        #[arg(long)]
        space: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        full: bool,
    },
    /// ℝ(p∧q + C0) + k with C0 = e_i∧e_j; `--full` adds so of the rest of E.
    TypeIII {
        #[arg(long)]
        space: usize,
        /// Indices `i,j` of the rotation plane; omit for C0 = 0.
        #[arg(long)]
        c0: Option<String>,
        #[arg(long)]
        full: bool,
    },
    /// A catalog decomposition as `g.json`, `l.json` and `theta.json`.
    Decomposition {
        name: String,
        #[command(flatten)]
        params: CaseParams,
        #[arg(long)]
        out: PathBuf,
    },
    /// so(W) + W with curvature sign c.
    SpaceForm {
        #[arg(long)]
        dim: usize,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
    },
    /// Three-dimensional family with parameters (c1, c2).
    ThreeDim {
        #[arg(long, allow_hyphen_values = true)]
        c1: String,
        #[arg(long, allow_hyphen_values = true)]
        c2: String,
    },
    /// Type III model on a 4-dimensional E with C0 = e1∧e2 (or 0 with
    /// `--c0-zero`).
    TypeIIIModel {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        c0_zero: bool,
    },
}

/// Failure before any report exists.
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

type Run = std::result::Result<Outcome, Usage>;

/// A report, its exit status and its summary line.
struct Outcome {
    json: String,
    status: Status,
    summary: String,
}

impl Outcome {
    fn new<T: Serialize>(report: &T, status: Status, summary: impl Into<String>) -> Self {
        Outcome { json: to_pretty(report), status, summary: summary.into() }
    }
}

#[derive(Serialize)]
struct ErrorReport<'a> {
    verb: &'a str,
    status: Status,
    error: String,
}

/// Errors that belong to the input rather than to the mathematics.
fn is_input_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse(_)
            | Error::Dimension(_)
            | Error::NotSquare { .. }
            | Error::NotSymmetric
            | Error::DependentBasis { .. }
            | Error::NotClosed { .. }
            | Error::NotSkew { .. }
            | Error::Range(_)
    )
}

/// Mathematical failures become a failing report; input errors are usage.
fn domain(verb: &str, r: lorhom::Result<Outcome>) -> Run {
    match r {
        Ok(o) => Ok(o),
        Err(e) if is_input_error(&e) => Err(Usage(e.to_string())),
        Err(e) => {
            let status = if matches!(e, Error::Unsupported(_)) { Status::Indeterminate } else { Status::Fail };
            let summary = format!("{verb}: {e}");
            Ok(Outcome::new(&ErrorReport { verb, status, error: e.to_string() }, status, summary))
        }
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> std::result::Result<T, Usage> {
    let text = fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Usage(format!("{}: {e}", path.display())))
}

fn read_algebra(path: &Path) -> std::result::Result<MatrixLieAlgebra, Usage> {
    let file: AlgebraFile = read_json(path)?;
    Ok(file.build()?)
}

fn parse_q(s: &str) -> std::result::Result<Rational, Usage> {
    parse_rational(s).map_err(Usage::from)
}

fn exit_code(status: Status) -> u8 {
    match status {
        Status::Pass => 0,
        Status::Fail => 1,
        Status::Indeterminate => 2,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(o) => {
            print!("{}", o.json);
            eprintln!("{}", o.summary);
            ExitCode::from(exit_code(o.status))
        }
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE)
        }
    }
}

fn run(command: Command) -> Run {
    match command {
        Command::Classify { space, gram, algebra } => classify_cmd(space, gram, &algebra),
        Command::Admissible(pair) => admissible_cmd(&pair),
        Command::Metric { pair, lambda, z } => metric_cmd(&pair, &lambda, z),
        Command::Analyze { kind, input } => analyze_cmd(kind, &input),
        Command::Catalog(CatalogCommand::List) => Ok(catalog_list()),
        Command::Catalog(CatalogCommand::Verify { name, params, sequential }) => {
            catalog_verify(&name, &params, if sequential { Mode::Sequential } else { Mode::default() })
        }
        Command::Construct(c) => construct(c),
    }
}

// ---------------------------------------------------------------- classify

#[derive(Serialize)]
struct ClassifyReport {
    verb: &'static str,
    inputs: ClassifyInputs,
    verdict: Verdict,
    #[serde(serialize_with = "ser::opt_subspace")]
    w: Option<Subspace>,
    #[serde(serialize_with = "ser::opt_subspace")]
    k_part: Option<Subspace>,
    #[serde(serialize_with = "ser::opt_vector")]
    d_witness: Option<Vector>,
    #[serde(serialize_with = "ser::opt_pair")]
    isotropic_pair: Option<(Vector, Vector)>,
    #[serde(serialize_with = "ser::opt_matrix")]
    c0: Option<Matrix>,
    #[serde(serialize_with = "ser::subspaces")]
    components: Vec<Subspace>,
    diagnostics: Vec<String>,
}

#[derive(Serialize)]
struct ClassifyInputs {
    space: Option<usize>,
    gram: Option<String>,
    algebra: String,
    dim: usize,
}

fn classify_cmd(space: Option<usize>, gram: Option<PathBuf>, algebra: &Path) -> Run {
    let form = match (space, &gram) {
        (Some(n), None) => minkowski(n).gram().clone(),
        (None, Some(path)) => {
            let rows: Vec<Vec<String>> = read_json(path)?;
            parse_matrix(&rows)?
        }
        _ => return Err(Usage("give exactly one of --space and --gram".into())),
    };
    let h = read_algebra(algebra)?;
    if h.ambient_size() != form.rows() {
        return Err(Usage(format!(
            "algebra acts on dimension {}, the form has dimension {}",
            h.ambient_size(),
            form.rows()
        )));
    }
    domain(
        "classify",
        classify_with_form(&form, &h).map(|c: SubalgebraClassification| {
            let status = if c.verdict == Verdict::Indeterminate { Status::Indeterminate } else { Status::Pass };
            let summary = format!("classify: {:?} (dim h = {})", c.verdict, h.dim());
            let report = ClassifyReport {
                verb: "classify",
                inputs: ClassifyInputs {
                    space,
                    gram: gram.map(|p| p.display().to_string()),
                    algebra: algebra.display().to_string(),
                    dim: h.dim(),
                },
                verdict: c.verdict,
                w: c.w,
                k_part: c.k_part,
                d_witness: c.d_witness,
                isotropic_pair: c.isotropic_pair,
                c0: c.c0,
                components: c.components,
                diagnostics: c.diagnostics,
            };
            Outcome::new(&report, status, summary)
        }),
    )
}

// ---------------------------------------------------------------- admissible / metric

#[derive(Serialize)]
struct PairInputs {
    g: String,
    l: String,
    theta: Option<String>,
    dim_g: usize,
    dim_l: usize,
}

struct Pair {
    inputs: PairInputs,
    dec: ReductiveDecomposition,
    theta: Option<Matrix>,
}

fn load_pair(args: &PairArgs) -> std::result::Result<lorhom::Result<Pair>, Usage> {
    let g = read_algebra(&args.g)?;
    let l_file: AlgebraFile = read_json(&args.l)?;
    if l_file.ambient_size != g.ambient_size() {
        return Err(Usage("g and l act on spaces of different dimension".into()));
    }
    let coords = l_file
        .matrices()?
        .iter()
        .enumerate()
        .map(|(i, m)| g.coordinates(m).ok_or_else(|| Usage(format!("l basis element {i} is not in g"))))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let l = Subspace::span(g.dim(), coords);
    let theta = match &args.theta {
        Some(path) => {
            let rows: Vec<Vec<String>> = read_json(path)?;
            Some(parse_matrix(&rows)?)
        }
        None => coordinate_map(&g, |x| x.transpose().scale(&int(-1))).ok(),
    };
    let inputs = PairInputs {
        g: args.g.display().to_string(),
        l: args.l.display().to_string(),
        theta: args.theta.as_ref().map(|p| p.display().to_string()),
        dim_g: g.dim(),
        dim_l: l.dim(),
    };
    Ok(reductive_complement(g.algebra(), &l, theta.as_ref()).map(|dec| Pair { inputs, dec, theta }))
}

#[derive(Serialize)]
struct AdmissibleReport {
    verb: &'static str,
    inputs: PairInputs,
    status: Status,
    #[serde(serialize_with = "ser::subspace")]
    m_l: Subspace,
    #[serde(serialize_with = "ser::subspace")]
    m_prime: Subspace,
    bookkeeping: Vec<Check>,
    report: AdmissibilityReport,
}

fn admissible_cmd(args: &PairArgs) -> Run {
    let pair = load_pair(args)?;
    domain(
        "admissible",
        pair.and_then(|pair| {
            let report = classify_admissible(&pair.dec)?;
            let bk = bookkeeping(&pair.dec);
            let all: Vec<Check> = bk.iter().chain(&report.checks).cloned().collect();
            let status = overall(&all);
            let summary = format!(
                "admissible: {} subtype {:?}, dims l/m_l/m' = {}/{}/{}",
                report.admissible, report.subtype, report.dim_l, report.dim_m_l, report.dim_m_prime
            );
            let out = AdmissibleReport {
                verb: "admissible",
                inputs: pair.inputs,
                status,
                m_l: pair.dec.m_l.clone(),
                m_prime: pair.dec.m_prime.clone(),
                bookkeeping: bk,
                report,
            };
            Ok(Outcome::new(&out, status, summary))
        }),
    )
}

#[derive(Serialize)]
struct MetricOut {
    verb: &'static str,
    inputs: PairInputs,
    status: Status,
    #[serde(serialize_with = "ser::vector")]
    z: Vector,
    #[serde(serialize_with = "ser::rational")]
    lambda: Rational,
    #[serde(serialize_with = "ser::rational")]
    threshold: Rational,
    g_m: InvariantForm,
    g_lambda: InvariantForm,
    checks: Vec<Check>,
}

fn metric_cmd(args: &PairArgs, lambda: &str, z_index: Option<usize>) -> Run {
    let lambda = parse_q(lambda)?;
    let pair = load_pair(args)?;
    domain(
        "metric",
        pair.and_then(|pair| {
            let theta =
                pair.theta.clone().ok_or_else(|| Error::Hypothesis("no Cartan involution: pass --theta".into()))?;
            let dim = pair.dec.g.dim();
            let z = match z_index {
                Some(i) if i < dim => unit(dim, i),
                Some(i) => return Err(Error::Range(format!("--z {i} is outside 0..{dim}"))),
                None => classify_admissible(&pair.dec)?
                    .z_witness
                    .ok_or_else(|| Error::Hypothesis("m_l has no compact direction; pass --z".into()))?,
            };
            let gm = invariant_euclidean_metric(&pair.dec, &theta)?;
            let t = lambda_threshold(&pair.dec, &gm, &z)?;
            let gl = lorentz_metric(&pair.dec, &gm, &z, &lambda)?;
            let checks = vec![
                Check::new("g_m positive definite", gm.signature.is_positive_definite(), ""),
                Check::new(
                    "g_λ invariant for every λ",
                    gm.invariance_certificate && rank_one_invariant(&pair.dec, &gm, &z)?,
                    "",
                ),
            ];
            let status = overall(&checks);
            let summary = format!("metric: λ = {lambda}, threshold {t}, g_λ {}", gl.kind);
            let out = MetricOut {
                verb: "metric",
                inputs: pair.inputs,
                status,
                z,
                lambda,
                threshold: t,
                g_m: gm,
                g_lambda: gl,
                checks,
            };
            Ok(Outcome::new(&out, status, summary))
        }),
    )
}

// ---------------------------------------------------------------- analyze

#[derive(Serialize)]
#[serde(untagged)]
enum Analysis {
    II(Box<TypeIIAnalysis>),
    III(Box<TypeIIIAnalysis>),
}

#[derive(Serialize)]
struct AnalyzeOut {
    verb: &'static str,
    input: String,
    #[serde(rename = "type")]
    kind: &'static str,
    status: Status,
    analysis: Analysis,
    e0: Option<E0Report>,
}

fn analyze_cmd(kind: AnalyzeKind, input: &Path) -> Run {
    let file: StructureFile = read_json(input)?;
    let fixture = file.build()?;
    domain(
        "analyze",
        fixture.decomposition().and_then(|dec| {
            let (label, analysis, checks, summary) = match kind {
                AnalyzeKind::II => {
                    let a = analyze_type_ii(&dec, &fixture.metric)?;
                    let s = format!("analyze II: model {:?}, dim W = {}", a.model, a.dim_w);
                    let c = a.checks.clone();
                    ("II", Analysis::II(Box::new(a)), c, s)
                }
                AnalyzeKind::III => {
                    let a = analyze_type_iii(&dec, &fixture.metric)?;
                    let s = format!("analyze III: {:?}", a.verdict);
                    let c = a.checks.clone();
                    ("III", Analysis::III(Box::new(a)), c, s)
                }
            };
            let e0 = check_e0_trivial(&dec, &fixture.metric).ok();
            let status = overall(&checks);
            let out = AnalyzeOut { verb: "analyze", input: input.display().to_string(), kind: label, status, analysis, e0 };
            Ok(Outcome::new(&out, status, summary))
        }),
    )
}

// ---------------------------------------------------------------- catalog

#[derive(Serialize)]
struct ListOut {
    verb: &'static str,
    entries: Vec<CatalogEntry>,
}

fn catalog_list() -> Outcome {
    let entries = catalog_entries();
    let summary = format!("catalog list: {} entries", entries.len());
    Outcome::new(&ListOut { verb: "catalog-list", entries }, Status::Pass, summary)
}

/// `name` with parameters as catalog cases.
fn cases_for(name: &str, params: &CaseParams) -> std::result::Result<Vec<CatalogCase>, Usage> {
    if name == "all" {
        return Ok(standard_cases());
    }
    if let Some(row) = WolfRow::from_key(name) {
        let p = params.p.ok_or_else(|| Usage(format!("{name} needs --p")))?;
        return Ok(vec![CatalogCase::Wolf { row, p }]);
    }
    Ok(vec![CatalogCase::Contact { spec: contact_spec(name, params)? }])
}

fn contact_spec(name: &str, params: &CaseParams) -> std::result::Result<ContactElementSpec, Usage> {
    let family = Family::from_key(name).ok_or_else(|| Usage(format!("unknown catalog entry {name}")))?;
    let p = params.p.ok_or_else(|| Usage(format!("{name} needs --p")))?;
    let q = match (family.single_parameter(), params.q) {
        (true, _) => 0,
        (false, Some(q)) => q,
        (false, None) => return Err(Usage(format!("{name} needs --q"))),
    };
    let eigen = params.eigen.as_deref().ok_or_else(|| Usage(format!("{name} needs --eigen")))?;
    Ok(ContactElementSpec::parse(ClassicalAlgebraSpec::new(family, p, q), eigen)?)
}

#[derive(Serialize)]
struct VerifyOut<'a> {
    verb: &'static str,
    name: &'a str,
    status: Status,
    reports: Vec<CaseReport>,
}

fn catalog_verify(name: &str, params: &CaseParams, mode: Mode) -> Run {
    let cases = cases_for(name, params)?;
    let reports = verify_cases(&cases, mode);
    let statuses: Vec<Check> = reports.iter().map(|r| Check { name: r.name.clone(), status: r.status, detail: String::new() }).collect();
    let status = overall(&statuses);
    let summary = reports
        .iter()
        .map(|r| format!("{}: {:?} subtype {:?}", r.name, r.status, r.subtype))
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Outcome::new(&VerifyOut { verb: "catalog-verify", name, status, reports }, status, summary))
}

// ---------------------------------------------------------------- construct

fn algebra_out(alg: &MatrixLieAlgebra, what: &str) -> Outcome {
    Outcome::new(&AlgebraFile::from_algebra(alg), Status::Pass, format!("construct: {what}, dim {}", alg.dim()))
}

fn fixture_out(f: lorhom::Result<ModelFixture>, what: &str) -> Run {
    let f = f?;
    Ok(Outcome::new(&StructureFile::from_fixture(&f), Status::Pass, format!("construct: {what}, dim {}", f.g.dim())))
}

fn construct(c: ConstructCommand) -> Run {
    match c {
        ConstructCommand::Lorentz { space } => {
            Ok(algebra_out(&lorentz_algebra(&minkowski(space)).algebra, &format!("so(1,{})", space + 1)))
        }
        ConstructCommand::Parabolic { space } => Ok(algebra_out(&parabolic(&minkowski(space)), "parabolic")),
        ConstructCommand::MaximalCompact { space } => {
            let s = minkowski(space);
            Ok(algebra_out(&MatrixLieAlgebra::from_basis(s.dim(), maximal_compact_basis(&s))?, "so(n+1)"))
        }
        ConstructCommand::TypeII { space, k, full } => {
            let s = minkowski(space);
            let kp: Vec<Matrix> = if full {
                so_e_basis(&s).into_iter().filter(|m| (1..=k.min(space)).all(|i| m.mul_vec(&s.e(i)).iter().all(|x| *x == int(0)))).collect()
            } else {
                Vec::new()
            };
            Ok(algebra_out(&subalgebra_type2(&s, k, &kp)?, "Type II"))
        }
        ConstructCommand::TypeIII { space, c0, full } => {
            let s = minkowski(space);
            let used: Vec<usize> = match &c0 {
                Some(text) => text
                    .split(',')
                    .map(|t| t.trim().parse::<usize>().map_err(|e| Usage(format!("--c0 {text}: {e}"))))
                    .collect::<std::result::Result<_, _>>()?,
                None => Vec::new(),
            };
            let c0m = match used.as_slice() {
                [] => Matrix::zeros(s.dim(), s.dim()),
                [i, j] if *i >= 1 && *j >= 1 && *i <= space && *j <= space && i != j => s.bivector(&s.e(*i), &s.e(*j)),
                _ => return Err(Usage("--c0 takes two distinct indices i,j in 1..=n".into())),
            };
            let kp: Vec<Matrix> = if full {
                so_e_basis(&s).into_iter().filter(|m| used.iter().all(|&i| m.mul_vec(&s.e(i)).iter().all(|x| *x == int(0)))).collect()
            } else {
                Vec::new()
            };
            Ok(algebra_out(&subalgebra_type3(&s, &c0m, &kp)?, "Type III"))
        }
        ConstructCommand::Decomposition { name, params, out } => construct_decomposition(&name, &params, &out),
        ConstructCommand::SpaceForm { dim, c } => fixture_out(lorentz_space_form(dim, parse_q(&c)?), "space form"),
        ConstructCommand::ThreeDim { c1, c2 } => fixture_out(three_dim_model(parse_q(&c1)?, parse_q(&c2)?), "3-dim model"),
        ConstructCommand::TypeIIIModel { lambda, c0_zero } => {
            let w = |a: usize, b: usize| {
                let mut m = Matrix::zeros(4, 4);
                m[(b, a)] = int(1);
                m[(a, b)] = int(-1);
                m
            };
            let c0 = if c0_zero { Matrix::zeros(4, 4) } else { w(0, 1) };
            let k = [&w(0, 1) + &w(2, 3).scale(&int(2))];
            fixture_out(type_iii_model(&c0, &k, parse_q(&lambda)?), "Type III model")
        }
    }
}

#[derive(Serialize)]
struct Written {
    verb: &'static str,
    name: String,
    files: Vec<String>,
    dim_g: usize,
    dim_l: usize,
}

fn construct_decomposition(name: &str, params: &CaseParams, out: &Path) -> Run {
    let (label, alg, l, theta) = if let Some(row) = WolfRow::from_key(name) {
        let p = params.p.ok_or_else(|| Usage(format!("{name} needs --p")))?;
        let w = wolf_decomposition(row, p)?;
        (w.name(), w.built.algebra, w.dec.l, w.built.theta)
    } else {
        let spec = contact_spec(name, params)?;
        let c = match contact_decomposition(&spec) {
            Ok(c) => c,
            Err(e) => return domain("construct", Err(e)),
        };
        (c.name, c.algebra, c.dec.l, c.theta)
    };
    fs::create_dir_all(out).map_err(|e| Usage(format!("{}: {e}", out.display())))?;
    let l_file = AlgebraFile {
        ambient_size: alg.ambient_size(),
        basis: l.basis().iter().map(|v| matrix_strings(&alg.element(v))).collect(),
    };
    let files = [
        ("g.json", to_pretty(&AlgebraFile::from_algebra(&alg))),
        ("l.json", to_pretty(&l_file)),
        ("theta.json", to_pretty(&matrix_strings(&theta))),
    ];
    let mut written = Vec::new();
    for (file, text) in files {
        let path = out.join(file);
        fs::write(&path, text).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
        written.push(path.display().to_string());
    }
    let report = Written { verb: "construct", name: label.clone(), files: written, dim_g: alg.dim(), dim_l: l.dim() };
    Ok(Outcome::new(&report, Status::Pass, format!("construct: {label} written to {}", out.display())))
}
