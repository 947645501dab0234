//! Command-line front end. Reads a JSON model description, runs one command
//! and renders a deterministic report.
//!
//! Exit codes: 0 verified or solved, 1 identity violated, 2 input error,
//! 3 unsupported input or resource limit.

mod input;
mod report;

pub use input::{AmbientKind, FormSpec, Known, SingularitySpec, Workbench, WorkbenchInput, SCHEMA_VERSION};
pub use report::{ClassificationBlock, EntryBlock, GroebnerBlock, IdentityBlock, LedgerBlock, RecordBlock, Report};

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::detvar::{
    chart_ideal, classify_with_budget, is_smoothable, DetVarError, GermClassification, LocalSupport, PointStatus,
    ProjectivePoint,
};
use crate::grobner::{
    basis_dimension, buchberger_with_budget, standard_monomials, GroebnerError, Ideal, MonomialOrder, DEFAULT_SPAIR_BUDGET,
};
use crate::indexcalc::{
    cstar_fixed_points, cstar_smooth_index, defect, global_identity, smooth_zero_index, IdentityOutcome, IndexError,
    IndexLedger, Role, SingularPointRecord, Unknown,
};
use crate::polyalg::{Polynomial, Vars};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Unsupported(String),
    #[error("{0}")]
    Violated(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Violated(_) => 1,
            CliError::Input(_) => 2,
            CliError::Unsupported(_) => 3,
        }
    }
}

impl From<DetVarError> for CliError {
    fn from(e: DetVarError) -> Self {
        match e {
            DetVarError::Groebner(g) => g.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<GroebnerError> for CliError {
    fn from(e: GroebnerError) -> Self {
        CliError::Unsupported(e.to_string())
    }
}

impl From<IndexError> for CliError {
    fn from(e: IndexError) -> Self {
        match e {
            IndexError::TooManyUnknowns(_) => CliError::Unsupported(e.to_string()),
            IndexError::NegativeMilnorNumber { .. } => CliError::Violated(e.to_string()),
            IndexError::Groebner(g) => g.into(),
            IndexError::DetVar(d) => d.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "detsing", version, about = "Index formulas and Euler characteristics of determinantal varieties")]
struct Args {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Maximum number of S-pairs per Groebner basis computation.
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_SPAIR_BUDGET)]
    spair_budget: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify the variety and its singular points.
    Analyze { file: PathBuf },
    /// Check the global index identity (or solve its single unknown).
    Verify { file: PathBuf },
    /// Solve the identity for chi(X).
    Euler { file: PathBuf },
    /// Solve the identity for the index at one point.
    Index {
        file: PathBuf,
        /// Projective point, e.g. "[0:0:0:0:1]".
        #[arg(long)]
        at: String,
    },
    /// Inspect a Groebner basis.
    Groebner {
        file: PathBuf,
        #[arg(long, value_enum)]
        ideal: Which,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    /// Ideal of t x t minors.
    Minors,
    /// Ideal of (t-1) x (t-1) minors.
    Lower,
    /// Coefficients of an explicit form.
    Form,
}

impl Which {
    fn name(self) -> &'static str {
        match self {
            Which::Minors => "minors",
            Which::Lower => "lower",
            Which::Form => "form",
        }
    }
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let start = Instant::now();
    let (code, report, message) = match execute(&args) {
        Ok((report, code)) => (code, Some(report), None),
        Err(Failure { error, report }) => (error.exit_code(), report, Some(error.to_string())),
    };
    let stdout = match &report {
        Some(r) if args.json => r.to_json(),
        Some(r) => r.to_text(),
        None => String::new(),
    };
    let mut stderr = String::new();
    if let Some(m) = message {
        stderr.push_str(&format!("error: {}\n", m));
    }
    stderr.push_str(&format!("elapsed: {:.3} ms\n", start.elapsed().as_secs_f64() * 1e3));
    Outcome { code, stdout, stderr }
}

struct Failure {
    error: CliError,
    report: Option<Report>,
}

impl<E: Into<CliError>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure { error: e.into(), report: None }
    }
}

fn execute(args: &Args) -> Result<(Report, i32), Failure> {
    let (file, at) = match &args.command {
        Command::Analyze { file }
        | Command::Verify { file }
        | Command::Euler { file }
        | Command::Groebner { file, .. } => (file, None),
        Command::Index { file, at } => (file, Some(at.clone())),
    };
    let text = std::fs::read_to_string(file)
        .map_err(|e| CliError::Input(format!("cannot read {}: {}", file.display(), e)))?;
    let wb = Workbench::from_json(&text)?;
    let mut report = Report {
        command: match &args.command {
            Command::Analyze { .. } => "analyze",
            Command::Verify { .. } => "verify",
            Command::Euler { .. } => "euler",
            Command::Index { .. } => "index",
            Command::Groebner { .. } => "groebner",
        }
        .to_string(),
        input: file.display().to_string(),
        at,
        ideal: match &args.command {
            Command::Groebner { ideal, .. } => Some(ideal.name().to_string()),
            _ => None,
        },
        classification: None,
        ledger: None,
        identity: None,
        groebner: None,
    };
    let budget = args.spair_budget;

    if let Command::Groebner { ideal, .. } = &args.command {
        report.groebner = Some(groebner_block(&wb, *ideal, budget)?);
        return Ok((report, 0));
    }

    let cls = classify_with_budget(&wb.model, budget)?;
    report.classification = Some(classification_block(&wb, &cls));
    match &args.command {
        Command::Analyze { .. } => match &cls.local_support {
            LocalSupport::Supported { .. } => Ok((report, 0)),
            LocalSupport::Unsupported(why) => Err(Failure {
                error: CliError::Unsupported(format!("symbolic-local-unsupported: {}", why)),
                report: Some(report),
            }),
        },
        Command::Verify { .. } => {
            let (ledger, records) = build_ledger(&wb, &cls)?;
            finish_identity(report, ledger, records)
        }
        Command::Euler { .. } => {
            let (mut ledger, records) = build_ledger(&wb, &cls)?;
            ledger.chi_x = None;
            finish_identity(report, ledger, records)
        }
        Command::Index { at, .. } => {
            let point: ProjectivePoint = at.parse().map_err(|e: DetVarError| CliError::Input(e.to_string()))?;
            let (mut ledger, records) = build_ledger(&wb, &cls)?;
            if let (Some(FormSpec::Cstar), Some(w)) = (&wb.input.form, &wb.input.weights) {
                let singular = records.iter().any(|r| r.point == point);
                if !singular && point.len() == w.len() && point.coordinate_index().is_some() {
                    if let Ok(PointStatus::SmoothStratum { .. }) = wb.model.point_status(&point.to_rationals()) {
                        let value = cstar_smooth_index(&point, w, &wb.model)?;
                        ledger.insert(point.clone(), Role::FormSingularity, Some(value))?;
                        let solved = IdentityOutcome::Solved { unknown: Unknown::Index(point), value };
                        return complete(report, ledger, records, solved);
                    }
                }
            }
            if !ledger.forget_index(&point) {
                return Err(CliError::Input(format!("{} is not in the ledger", point)).into());
            }
            finish_identity(report, ledger, records)
        }
        Command::Groebner { .. } => unreachable!(),
    }
}

fn point_label(coords: &[crate::polyalg::Rational], projective: bool) -> String {
    if projective {
        ProjectivePoint::from_rationals(coords).expect("nonzero").to_string()
    } else {
        let parts: Vec<String> = coords.iter().map(ToString::to_string).collect();
        format!("({})", parts.join(", "))
    }
}

fn classification_block(wb: &Workbench, c: &GermClassification) -> ClassificationBlock {
    let projective = wb.model.ambient().is_projective();
    ClassificationBlock {
        ambient: format!("{} {}-space", if projective { "projective" } else { "affine" }, wb.model.ambient().dim()),
        variables: wb.vars.to_vec(),
        rows: wb.model.rows(),
        cols: wb.model.cols(),
        t: wb.model.t(),
        expected_codimension: c.expected_codimension,
        codimension: c.codimension,
        dim: c.dim,
        empty: c.empty,
        determinantal: c.determinantal,
        singular_locus_dim: c.singular_locus_dim,
        isolated_singularity: c.isolated_singularity,
        germ_ambient_dim: c.germ_ambient_dim,
        smoothability_bound: c.smoothability_bound,
        smoothable: c.smoothable,
        singular_points: c.singular_points.iter().map(|p| point_label(p, projective)).collect(),
        singular_points_complete: c.singular_points_complete,
        local_support: match &c.local_support {
            LocalSupport::Supported { .. } => "supported".to_string(),
            LocalSupport::Unsupported(why) => format!("unsupported: {}", why),
        },
    }
}

fn parse_point(s: &str) -> Result<ProjectivePoint, CliError> {
    s.parse().map_err(|e: DetVarError| CliError::Input(e.to_string()))
}

/// Ledger and singular-point records of a projective model with isolated rational singularities.
fn build_ledger(wb: &Workbench, cls: &GermClassification) -> Result<(IndexLedger, Vec<SingularPointRecord>), CliError> {
    let model = &wb.model;
    if !model.ambient().is_projective() {
        return Err(CliError::Input("index identities need a projective (compact) model".into()));
    }
    let Some(d) = cls.dim else {
        return Err(CliError::Input("the variety is empty".into()));
    };
    if !cls.isolated_singularity {
        return Err(CliError::Unsupported("singular locus is not isolated".into()));
    }
    if !cls.singular_points_complete {
        return Err(CliError::Unsupported("singular points are not all rational".into()));
    }
    let r = model.ambient().dim();
    let singular = cls.projective_points();

    let mut specs: Vec<(ProjectivePoint, &SingularitySpec)> = Vec::new();
    for s in &wb.input.singularities {
        let p = parse_point(&s.point)?;
        if !singular.contains(&p) {
            return Err(CliError::Input(format!("{} is not a singular point of the variety", p)));
        }
        if specs.iter().any(|(q, _)| q == &p) {
            return Err(CliError::Input(format!("{} is listed twice", p)));
        }
        specs.push((p, s));
    }
    let records: Vec<SingularPointRecord> = singular
        .iter()
        .map(|p| {
            let spec = specs.iter().find(|(q, _)| q == p).map(|(_, s)| *s);
            let n = spec.and_then(|s| s.n).unwrap_or(model.rows());
            let pp = spec.and_then(|s| s.p).unwrap_or(model.cols());
            let t = spec.and_then(|s| s.t).unwrap_or(model.t());
            SingularPointRecord {
                point: p.clone(),
                n,
                p: pp,
                t,
                d: spec.and_then(|s| s.d).unwrap_or(d),
                germ_ambient: r,
                smoothable: spec.and_then(|s| s.smoothable).unwrap_or_else(|| is_smoothable(n, pp, t, r)),
                mu: spec.and_then(|s| s.mu),
                chi_smoothing: spec.and_then(|s| s.chi_smoothing),
                chi_lower_stratum: spec.and_then(|s| s.chi_lower_stratum),
            }
        })
        .collect();

    let known = wb.known();
    let mut known_indices: Vec<(ProjectivePoint, i64)> = Vec::new();
    for (s, &i) in &known.indices {
        let p = parse_point(s)?;
        if !model.point_status(&p.to_rationals())?.on_variety() {
            return Err(CliError::Input(format!("{} is not on the variety", p)));
        }
        known_indices.push((p, i));
    }
    known_indices.sort();
    let known_at = |p: &ProjectivePoint| known_indices.iter().find(|(q, _)| q == p).map(|(_, i)| *i);

    let mut ledger = IndexLedger::new(known.chi_x);
    for p in &singular {
        ledger.insert(p.clone(), Role::VarietySingularity, known_at(p))?;
    }
    if let Some(FormSpec::Cstar) = &wb.input.form {
        let w = wb
            .input
            .weights
            .as_ref()
            .ok_or_else(|| CliError::Input("a cstar form needs `weights`".into()))?;
        let fixed = cstar_fixed_points(model, w)?;
        for (p, status) in &fixed {
            if singular.contains(p) {
                continue;
            }
            let index = match status {
                PointStatus::SmoothStratum { .. } => Some(cstar_smooth_index(p, w, model)?),
                _ => known_at(p),
            };
            ledger.insert(p.clone(), Role::FormSingularity, index)?;
        }
        for (p, i) in &known_indices {
            if !fixed.iter().any(|(q, _)| q == p) {
                return Err(CliError::Input(format!("{} is not a zero of the form", p)));
            }
            ledger.insert(p.clone(), Role::FormSingularity, Some(*i))?;
        }
    } else {
        for (p, i) in &known_indices {
            ledger.insert(p.clone(), Role::FormSingularity, Some(*i))?;
        }
    }
    Ok((ledger, records))
}

fn finish_identity(report: Report, ledger: IndexLedger, records: Vec<SingularPointRecord>) -> Result<(Report, i32), Failure> {
    let outcome = match global_identity(&ledger, &records) {
        Ok(o) => o,
        Err(e) => {
            let mut report = report;
            report.ledger = Some(ledger_block(&ledger, &records));
            return Err(Failure { error: e.into(), report: Some(report) });
        }
    };
    complete(report, ledger, records, outcome)
}

/// Substitutes a solved unknown, re-evaluates both sides and fills in the report.
fn complete(
    mut report: Report,
    mut ledger: IndexLedger,
    mut records: Vec<SingularPointRecord>,
    outcome: IdentityOutcome,
) -> Result<(Report, i32), Failure> {
    let (result, unknown, value) = match outcome {
        IdentityOutcome::Verified { .. } => ("verified", None, None),
        IdentityOutcome::Violated { .. } => ("violated", None, None),
        IdentityOutcome::Solved { unknown, value } => {
            match &unknown {
                Unknown::ChiX => ledger.chi_x = Some(value),
                Unknown::Index(p) => ledger.insert(p.clone(), Role::FormSingularity, Some(value))?,
                Unknown::Mu(p) => {
                    let rec = records.iter_mut().find(|r| &r.point == p).expect("unknown comes from a record");
                    rec.mu = Some(value as u64);
                }
            }
            ("solved", Some(unknown.to_string()), Some(value))
        }
    };
    let defect_sum = records.iter().map(defect).sum::<Result<i64, _>>()?;
    let chi_x = ledger.chi_x.expect("chi_X known after solving");
    let lhs: i64 = ledger.entries().iter().map(|e| e.index.expect("indices known after solving")).sum();
    let rhs = chi_x + defect_sum;
    report.ledger = Some(ledger_block(&ledger, &records));
    report.identity = Some(IdentityBlock { result: result.to_string(), unknown, value, lhs, rhs, chi_x, defect_sum });
    if result == "violated" {
        Err(Failure {
            error: CliError::Violated(format!("identity violated: {} != {}", lhs, rhs)),
            report: Some(report),
        })
    } else {
        Ok((report, 0))
    }
}

fn ledger_block(ledger: &IndexLedger, records: &[SingularPointRecord]) -> LedgerBlock {
    LedgerBlock {
        chi_x: ledger.chi_x,
        entries: ledger
            .entries()
            .iter()
            .map(|e| EntryBlock { point: e.point.to_string(), role: e.role.label().to_string(), index: e.index })
            .collect(),
        records: records
            .iter()
            .map(|r| RecordBlock {
                point: r.point.to_string(),
                n: r.n,
                p: r.p,
                t: r.t,
                d: r.d,
                smoothable: r.smoothable,
                mu: r.mu,
                chi_smoothing: r.resolve_chi_smoothing().ok(),
                chi_lower_stratum: r.chi_lower_stratum,
                defect: defect(r).ok(),
            })
            .collect(),
    }
}

fn groebner_block(wb: &Workbench, which: Which, budget: usize) -> Result<GroebnerBlock, CliError> {
    let model = &wb.model;
    let ideal = match which {
        Which::Minors => model.minors_ideal(model.t())?,
        Which::Lower if model.t() == 1 => {
            return Err(CliError::Input("t = 1 has no lower rank stratum".into()));
        }
        Which::Lower => model.minors_ideal(model.t() - 1)?,
        Which::Form => Ideal::new(&wb.vars, wb.form_coefficients()?),
    };
    let mut setting = "affine space".to_string();
    let mut vars = wb.vars.clone();
    let mut gens: Vec<Polynomial> = ideal.generators().to_vec();
    if model.ambient().is_projective() {
        let cls = classify_with_budget(model, budget)?;
        match cls.projective_points().first() {
            Some(p) => {
                let (chart_gens, ignore) = chart_ideal(&ideal, &p.to_rationals(), true);
                let c = ignore[0];
                let map: Vec<Option<usize>> =
                    (0..wb.vars.len()).map(|i| (i != c).then(|| if i < c { i } else { i - 1 })).collect();
                vars = wb.vars.iter().enumerate().filter(|(i, _)| *i != c).map(|(_, v)| v.clone()).collect::<Vars>();
                gens = chart_gens.iter().map(|g| g.remap(&vars, &map)).collect();
                setting = format!("the chart {} = 1 centred at {}", wb.vars[c], p);
            }
            None => setting = "the affine cone".to_string(),
        }
    }
    let order = MonomialOrder::grevlex(vars.len());
    let gb = buchberger_with_budget(&Ideal::new(&vars, gens.iter().cloned()), &order, budget)?;
    let index = match which {
        Which::Form if !model.ambient().is_projective() => smooth_zero_index(&gens).ok(),
        _ => None,
    };
    Ok(GroebnerBlock {
        ideal: which.name().to_string(),
        setting,
        variables: vars.to_vec(),
        order: "grevlex".to_string(),
        basis: gb.polynomials().iter().map(ToString::to_string).collect(),
        dimension: basis_dimension(&gb),
        quotient_dimension: standard_monomials(&gb).map(|m| m.len() as u64),
        index,
    })
}
