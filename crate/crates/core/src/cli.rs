//! Command-line front end. [`run`] parses arguments, executes one
//! subcommand and returns the text to print plus the exit code:
//! 0 when the check passes, 1 when it fails, 2 on any input error.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::{Algebra, Vector};
use crate::bialgebra::{cobracket_at, coboundary_cobracket, cocycle_residual, dual_bracket, dual_lie, pencil_residual};
use crate::catalog::{self, CatalogAlgebra, Provenance};
use crate::error::{Error, Result};
use crate::io;
use crate::numeric::{self, NumericReport, SamplePlan};
use crate::poisson::{jacobiator, multiplicativity_residual, unit_vanishing, LinearTensor, PolyTensor, QuadraticTensor};
use crate::residual::ResidualReport;
use crate::scalar::{emit_rational, parse_rational, Scalar};
use crate::yang_baxter::{ad_invariance_residual, cybe_residual, derivation_residual, quadratic_from_r, schouten, RMatrix};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Residual entries listed in a report before truncation.
const ENTRY_LIMIT: usize = 200;

#[derive(Parser, Debug)]
#[command(name = "quadpoisson", version, about = "Quadratic Poisson brackets from r-matrices over associative algebras")]
pub struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check associativity and unit axioms of an algebra.
    Validate {
        /// Catalog name such as `matrix(2)`, or an algebra JSON file.
        #[arg(long)]
        algebra: String,
    },
    /// Build the quadratic bracket `scale·[r, x⊗x]`.
    Derive {
        #[arg(long)]
        algebra: String,
        /// r-matrix JSON file, or inline shorthand like `2*i^j + j^k` for catalog algebras.
        #[arg(long)]
        r: String,
        #[arg(long, default_value = "1")]
        scale: String,
        /// Write the bracket file here.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run one identity check.
    Check {
        #[command(subcommand)]
        check: CheckCommand,
    },
    /// Cobracket `Δ_a`, its dual Lie algebra and the cocycle condition.
    Bialgebra {
        #[arg(long)]
        algebra: String,
        /// Bracket file; alternatively derive one from `--r`.
        #[arg(long, conflicts_with = "r")]
        bracket: Option<PathBuf>,
        #[arg(long)]
        r: Option<String>,
        #[arg(long, default_value = "1")]
        scale: String,
        /// Direction `a` as comma-separated rationals; defaults to the unit.
        #[arg(long)]
        at: Option<String>,
        /// Multiply by 2 (the group cobracket at the unit).
        #[arg(long)]
        doubled: bool,
        /// Write the cobracket file here.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Write the dual Lie algebra (algebra format) here.
        #[arg(long)]
        dual_output: Option<PathBuf>,
    },
    /// Built-in algebras.
    Catalog {
        #[command(subcommand)]
        action: CatalogCommand,
    },
    /// Floating-point sampling checks.
    Numeric {
        #[command(subcommand)]
        check: NumericCommand,
    },
    /// Run every worked-example fixture.
    PaperSuite,
}

#[derive(Subcommand, Debug)]
pub enum CheckCommand {
    /// Jacobi identity of a bracket file.
    Jacobi {
        #[arg(long)]
        bracket: PathBuf,
    },
    /// Compatibility of a quadratic bracket with the algebra product.
    Multiplicative {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        bracket: PathBuf,
    },
    /// Derivation property of `δ` on symmetric tensors.
    Derivation {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        bracket: PathBuf,
    },
    /// Classical Yang–Baxter equation.
    Cybe {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        r: String,
    },
    /// ad-invariance of the Schouten bracket of r.
    SchoutenInvariance {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        r: String,
    },
    /// Cocycle condition for a cobracket file or the coboundary of r.
    Cocycle {
        #[arg(long)]
        algebra: String,
        #[arg(long, conflicts_with = "r", required_unless_present = "r")]
        cobracket: Option<PathBuf>,
        #[arg(long)]
        r: Option<String>,
    },
    /// Compatibility of a quadratic bracket with a linear one.
    Pencil {
        #[arg(long)]
        bracket: PathBuf,
        /// Linear bracket file; defaults to the bracket's own `Δ_u` dual, which needs `--algebra`.
        #[arg(long, required_unless_present = "algebra")]
        linear: Option<PathBuf>,
        #[arg(long)]
        algebra: Option<String>,
    },
    /// `{x^i, Σ(x^k)²} ≡ 0` for a bracket on a 4-dimensional algebra.
    Casimir {
        #[arg(long)]
        bracket: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum CatalogCommand {
    /// List catalog names.
    List,
    /// Write an algebra (or, with `--r`, an r-matrix) file.
    Emit {
        name: String,
        #[arg(long)]
        r: Option<String>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args, Debug, Clone)]
pub struct PlanArgs {
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    /// Lower end of the coordinate sampling range.
    #[arg(long, allow_negative_numbers = true)]
    pub range_min: Option<f64>,
    /// Upper end of the coordinate sampling range.
    #[arg(long, allow_negative_numbers = true)]
    pub range_max: Option<f64>,
}

impl PlanArgs {
    fn plan(&self, default: (f64, f64)) -> Result<SamplePlan> {
        let range = (self.range_min.unwrap_or(default.0), self.range_max.unwrap_or(default.1));
        SamplePlan::new(self.seed, self.samples, range, self.tol)
    }
}

#[derive(Subcommand, Debug)]
pub enum NumericCommand {
    /// Proportionality of the invariant-field tensor to the exact bracket.
    Drinfeld {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        r: String,
        #[command(flatten)]
        plan: PlanArgs,
    },
    /// Multiplicativity at sampled invertible pairs.
    Group {
        #[arg(long)]
        algebra: String,
        #[arg(long, required_unless_present = "log", conflicts_with = "log")]
        bracket: Option<PathBuf>,
        /// Use the log bracket `xy·log|x|` (componentwise plane only).
        #[arg(long)]
        log: bool,
        #[command(flatten)]
        plan: PlanArgs,
    },
    /// Log bracket pushed through `ξ = log x, η = log y`.
    Iso {
        #[command(flatten)]
        plan: PlanArgs,
    },
}

/// What [`run`] produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

struct Report {
    check: String,
    pass: bool,
    details: Value,
    notes: Vec<String>,
    inputs: Vec<(String, String)>,
}

impl Report {
    fn to_json(&self) -> Value {
        let inputs: Vec<Value> = self
            .inputs
            .iter()
            .map(|(source, digest)| json!({ "source": source, "sha256": digest }))
            .collect();
        json!({
            "check": self.check,
            "pass": self.pass,
            "details": self.details,
            "notes": self.notes,
            "inputs": inputs,
            "version": VERSION,
        })
    }

    fn to_text(&self) -> String {
        let mut out = format!("{}: {}\n", self.check, if self.pass { "PASS" } else { "FAIL" });
        if let Value::Object(map) = &self.details {
            for (k, v) in map {
                out.push_str(&format!("  {k}: {}\n", text_value(v)));
            }
        }
        for n in &self.notes {
            out.push_str(&format!("  note: {n}\n"));
        }
        for (source, digest) in &self.inputs {
            out.push_str(&format!("  input: {source} sha256={digest}\n"));
        }
        out.push_str(&format!("  version: {VERSION}\n"));
        out
    }
}

fn text_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::IndexOutOfRange { .. } => "index_out_of_range",
        Error::DimensionMismatch { .. } => "dimension_mismatch",
        Error::ZeroDimension => "zero_dimension",
        Error::NoUnit => "no_unit",
        Error::NotAntisymmetric { .. } => "not_antisymmetric",
        Error::InvalidRational(_) => "invalid_rational",
        Error::ZeroDenominator(_) => "zero_denominator",
        Error::UnknownAlgebra(_) => "unknown_algebra",
        Error::InvalidParams(_) => "invalid_params",
        Error::InconsistentExtension { .. } => "inconsistent_extension",
        Error::DegreeMismatch { .. } => "degree_mismatch",
        Error::NotInvertible(_) => "not_invertible",
        Error::NonPositiveSample(..) => "non_positive_sample",
        Error::NoInvertibleSamples => "no_invertible_samples",
        Error::InvalidSamplePlan(_) => "invalid_sample_plan",
        Error::Format(_) => "format",
        Error::Io(_) => "io",
    }
}

fn error_output(format: Format, kind: &str, message: &str) -> Outcome {
    let stdout = match format {
        Format::Json => io::to_pretty(&json!({
            "error": { "kind": kind, "message": message },
            "version": VERSION,
        })),
        Format::Text => format!("error ({kind}): {message}\n"),
    };
    Outcome { code: 2, stdout }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    Outcome {
                        code: 0,
                        stdout: e.to_string(),
                    }
                }
                _ => {
                    let msg = e.to_string();
                    let first = msg.lines().next().unwrap_or("usage error").trim_start_matches("error: ");
                    error_output(Format::Json, "usage", first)
                }
            };
        }
    };
    let format = cli.format;
    match execute(cli.command) {
        Ok(Executed::Report(report)) => Outcome {
            code: if report.pass { 0 } else { 1 },
            stdout: match format {
                Format::Json => io::to_pretty(&report.to_json()),
                Format::Text => report.to_text(),
            },
        },
        Ok(Executed::Artifact(v)) => Outcome {
            code: 0,
            stdout: io::to_pretty(&v),
        },
        Err(e) => error_output(format, error_kind(&e), &e.to_string()),
    }
}

enum Executed {
    Report(Report),
    /// A raw file body printed instead of a report.
    Artifact(Value),
}

#[derive(Default)]
struct Inputs(Vec<(String, String)>);

impl Inputs {
    fn read(&mut self, path: &Path) -> Result<String> {
        let bytes = fs::read(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        self.0.push((path.display().to_string(), io::sha256_hex(&bytes)));
        String::from_utf8(bytes).map_err(|_| Error::Format(format!("{} is not UTF-8", path.display())))
    }

    fn note(&mut self, source: String, body: &str) {
        self.0.push((source, io::sha256_hex(body.as_bytes())));
    }

    /// Returns the algebra and whether it came from the catalog.
    fn algebra(&mut self, spec: &str) -> Result<(Algebra, bool)> {
        let path = Path::new(spec);
        if path.is_file() {
            let text = self.read(path)?;
            return Ok((io::algebra_from_json(&text)?, false));
        }
        if spec.ends_with(".json") || spec.contains('/') {
            return Err(Error::Io(format!("{spec}: no such file")));
        }
        let which: CatalogAlgebra = spec.parse()?;
        let alg = catalog::get_algebra(&which)?;
        self.note(format!("catalog:{which}"), &io::algebra_to_json(&alg).to_string());
        Ok((alg, true))
    }

    fn r(&mut self, alg: &Algebra, from_catalog: bool, spec: &str) -> Result<RMatrix> {
        let path = Path::new(spec);
        let r = if path.is_file() {
            let text = self.read(path)?;
            io::r_from_json(&text)?
        } else if spec.ends_with(".json") {
            return Err(Error::Io(format!("{spec}: no such file")));
        } else if from_catalog {
            self.note(format!("inline:{spec}"), spec);
            io::parse_r_inline(alg, spec)?
        } else {
            return Err(Error::Format(
                "inline r-matrix shorthand is accepted for catalog algebras only; pass an r-matrix file".into(),
            ));
        };
        if r.dim() != alg.dim() {
            return Err(Error::DimensionMismatch {
                expected: alg.dim(),
                found: r.dim(),
            });
        }
        Ok(r)
    }

    fn bracket(&mut self, path: &Path) -> Result<PolyTensor> {
        let text = self.read(path)?;
        io::bracket_from_json(&text)
    }

    fn quadratic(&mut self, path: &Path, dim: Option<usize>) -> Result<QuadraticTensor> {
        let qt = QuadraticTensor::new(self.bracket(path)?)?;
        if let Some(n) = dim {
            if qt.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: qt.dim(),
                });
            }
        }
        Ok(qt)
    }
}

fn write_file(path: &Path, v: &Value) -> Result<()> {
    fs::write(path, io::to_pretty(v)).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn var_name(i: usize) -> String {
    format!("x{}", i + 1)
}

fn bracket_table(pt: &PolyTensor) -> Value {
    let mut map = serde_json::Map::new();
    for ((i, j), p) in pt.entries() {
        map.insert(format!("{{{},{}}}", var_name(i), var_name(j)), Value::String(p.display_with(var_name)));
    }
    Value::Object(map)
}

fn residual_report(check: &str, report: &ResidualReport, inputs: Inputs) -> Report {
    Report {
        check: check.into(),
        pass: report.pass,
        details: json!({ "residual": io::residual_to_json(report, ENTRY_LIMIT) }),
        notes: Vec::new(),
        inputs: inputs.0,
    }
}

fn numeric_json(r: &NumericReport) -> Value {
    serde_json::to_value(r).expect("numeric reports serialize")
}

fn parse_vector(text: &str, n: usize) -> Result<Vector> {
    let v = text.split(',').map(|s| parse_rational(s.trim())).collect::<Result<Vec<Scalar>>>()?;
    if v.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: v.len(),
        });
    }
    Ok(Vector(v))
}

fn execute(command: Command) -> Result<Executed> {
    let mut inputs = Inputs::default();
    let report = match command {
        Command::Validate { algebra } => {
            let (alg, _) = inputs.algebra(&algebra)?;
            let v = alg.validate();
            let violations: Vec<Value> = v
                .violations
                .iter()
                .take(ENTRY_LIMIT)
                .map(|x| {
                    json!({
                        "identity": x.kind.to_string(),
                        "index": x.index,
                        "lhs": emit_rational(&x.lhs),
                        "rhs": emit_rational(&x.rhs),
                    })
                })
                .collect();
            Report {
                check: "validate".into(),
                pass: v.pass,
                details: json!({
                    "algebra": alg.name(),
                    "dim": alg.dim(),
                    "checked": v.checked,
                    "violations": violations,
                    "violation_count": v.violations.len(),
                    "has_unit": alg.unit().is_some(),
                }),
                notes: Vec::new(),
                inputs: inputs.0,
            }
        }
        Command::Derive { algebra, r, scale, output } => {
            let (alg, cat) = inputs.algebra(&algebra)?;
            let r = inputs.r(&alg, cat, &r)?;
            let scale = parse_rational(&scale)?;
            let qt = quadratic_from_r(&alg, &r, &scale)?;
            let body = io::bracket_to_json(&qt);
            if let Some(path) = &output {
                write_file(path, &body)?;
            }
            Report {
                check: "derive".into(),
                pass: true,
                details: json!({
                    "algebra": alg.name(),
                    "scale": emit_rational(&scale),
                    "r": io::r_to_json(&r),
                    "bracket": body,
                    "table": bracket_table(&qt),
                }),
                notes: vec!["variables x1..xn are the coordinates dual to the basis, in basis order".into()],
                inputs: inputs.0,
            }
        }
        Command::Check { check } => run_check(check, inputs)?,
        Command::Bialgebra {
            algebra,
            bracket,
            r,
            scale,
            at,
            doubled,
            output,
            dual_output,
        } => {
            let (alg, cat) = inputs.algebra(&algebra)?;
            let qt = match (bracket, r) {
                (Some(path), _) => inputs.quadratic(&path, Some(alg.dim()))?,
                (None, Some(r)) => {
                    let r = inputs.r(&alg, cat, &r)?;
                    quadratic_from_r(&alg, &r, &parse_rational(&scale)?)?
                }
                (None, None) => return Err(Error::Format("bialgebra needs --bracket or --r".into())),
            };
            let a = match at {
                Some(text) => parse_vector(&text, alg.dim())?,
                None => alg.require_unit()?.clone(),
            };
            let cb = cobracket_at(&alg, &qt, &a, doubled)?;
            let (lie, lie_report) = dual_lie(&cb);
            let cocycle = cocycle_residual(&alg.lie_structure(), &cb)?;
            let cb_json = io::cobracket_to_json(&cb);
            let lie_json = io::lie_to_json(&format!("dual of {}", alg.name()), &lie);
            if let Some(p) = &output {
                write_file(p, &cb_json)?;
            }
            if let Some(p) = &dual_output {
                write_file(p, &lie_json)?;
            }
            Report {
                check: "bialgebra".into(),
                pass: lie_report.pass && cocycle.pass,
                details: json!({
                    "cobracket": cb_json,
                    "doubled": doubled,
                    "direction": a.0.iter().map(emit_rational).collect::<Vec<_>>(),
                    "dual_lie": lie_json,
                    "dual_bracket": bracket_table(&dual_bracket(&cb)),
                    "dual_lie_residual": io::residual_to_json(&lie_report, ENTRY_LIMIT),
                    "cocycle_residual": io::residual_to_json(&cocycle, ENTRY_LIMIT),
                }),
                notes: vec![
                    "dual_lie_residual: index[0] = 0 skewness, 1 Jacobi".into(),
                    "cobracket is undoubled unless --doubled is given".into(),
                ],
                inputs: inputs.0,
            }
        }
        Command::Catalog { action } => match action {
            CatalogCommand::List => {
                let names: Vec<Value> = catalog::CATALOG_NAMES
                    .iter()
                    .map(|(n, d)| json!({ "name": n, "description": d }))
                    .collect();
                Report {
                    check: "catalog list".into(),
                    pass: true,
                    details: json!({ "algebras": names }),
                    notes: Vec::new(),
                    inputs: inputs.0,
                }
            }
            CatalogCommand::Emit { name, r, output } => {
                let which: CatalogAlgebra = name.parse()?;
                let alg = catalog::get_algebra(&which)?;
                let body = match r {
                    Some(r) => io::r_to_json(&io::parse_r_inline(&alg, &r)?),
                    None => io::algebra_to_json(&alg),
                };
                match output {
                    Some(path) => {
                        write_file(&path, &body)?;
                        Report {
                            check: "catalog emit".into(),
                            pass: true,
                            details: json!({ "name": which.to_string(), "output": path.display().to_string() }),
                            notes: Vec::new(),
                            inputs: inputs.0,
                        }
                    }
                    None => return Ok(Executed::Artifact(body)),
                }
            }
        },
        Command::Numeric { check } => run_numeric(check, inputs)?,
        Command::PaperSuite => paper_suite()?,
    };
    Ok(Executed::Report(report))
}

fn run_check(check: CheckCommand, mut inputs: Inputs) -> Result<Report> {
    Ok(match check {
        CheckCommand::Jacobi { bracket } => {
            let pt = inputs.bracket(&bracket)?;
            let j = jacobiator(&pt);
            let mut rep = residual_report("jacobi", &j.report(), inputs);
            let mut polys = serde_json::Map::new();
            for i in 0..pt.dim() {
                for k in i + 1..pt.dim() {
                    for l in k + 1..pt.dim() {
                        let p = j.get(i, k, l);
                        if !p.is_zero() {
                            polys.insert(
                                format!("({},{},{})", i + 1, k + 1, l + 1),
                                Value::String(p.display_with(var_name)),
                            );
                        }
                    }
                }
            }
            rep.details["jacobiator"] = Value::Object(polys);
            rep.notes.push("residual index: (i, j, k, monomial variables), 0-based".into());
            rep
        }
        CheckCommand::Multiplicative { algebra, bracket } => {
            let (alg, _) = inputs.algebra(&algebra)?;
            let qt = inputs.quadratic(&bracket, Some(alg.dim()))?;
            let m = multiplicativity_residual(&alg, &qt)?;
            let unit = match alg.unit() {
                Some(_) => Some(unit_vanishing(&alg, &qt)?),
                None => None,
            };
            let mut rep = residual_report("multiplicative", &m, inputs);
            rep.details["unit_vanishing"] = unit
                .as_ref()
                .map(|u| io::residual_to_json(u, ENTRY_LIMIT))
                .unwrap_or(Value::Null);
            rep.notes
                .push("residual index: (i, j, monomial variables); y = variables 0..n, z = n..2n".into());
            rep
        }
        CheckCommand::Derivation { algebra, bracket } => {
            let (alg, _) = inputs.algebra(&algebra)?;
            let qt = inputs.quadratic(&bracket, Some(alg.dim()))?;
            residual_report("derivation", &derivation_residual(&alg, &qt)?, inputs)
        }
        CheckCommand::Cybe { algebra, r } => {
            let (alg, cat) = inputs.algebra(&algebra)?;
            let r = inputs.r(&alg, cat, &r)?;
            let t = cybe_residual(&alg, &r)?;
            let values = t.nonzero().map(|((a, b, c), v)| (vec![a, b, c], v.clone())).collect::<Vec<_>>();
            let n = alg.dim();
            residual_report("cybe", &ResidualReport::from_values(values, n * n * n), inputs)
        }
        CheckCommand::SchoutenInvariance { algebra, r } => {
            let (alg, cat) = inputs.algebra(&algebra)?;
            let r = inputs.r(&alg, cat, &r)?;
            let s = schouten(&alg, &r)?;
            let mut rep = residual_report("schouten-invariance", &ad_invariance_residual(&alg, &s)?, inputs);
            rep.details["schouten_is_zero"] = Value::Bool(s.is_zero());
            rep.notes.push("residual index: (basis i of S_{e_i}, a, b, c)".into());
            rep
        }
        CheckCommand::Cocycle { algebra, cobracket, r } => {
            let (alg, cat) = inputs.algebra(&algebra)?;
            let cb = match (cobracket, r) {
                (Some(path), _) => {
                    let text = inputs.read(&path)?;
                    io::cobracket_from_json(&text)?
                }
                (None, Some(r)) => {
                    let r = inputs.r(&alg, cat, &r)?;
                    coboundary_cobracket(&alg, &r)?
                }
                (None, None) => return Err(Error::Format("cocycle needs --cobracket or --r".into())),
            };
            residual_report("cocycle", &cocycle_residual(&alg.lie_structure(), &cb)?, inputs)
        }
        CheckCommand::Pencil { bracket, linear, algebra } => {
            let qt = inputs.quadratic(&bracket, None)?;
            let lt = match (linear, algebra) {
                (Some(path), _) => LinearTensor::new(inputs.bracket(&path)?)?,
                (None, Some(spec)) => {
                    let (alg, _) = inputs.algebra(&spec)?;
                    let u = alg.require_unit()?.clone();
                    dual_bracket(&cobracket_at(&alg, &qt, &u, false)?)
                }
                (None, None) => return Err(Error::Format("pencil needs --linear or --algebra".into())),
            };
            let mixed = pencil_residual(&qt, &lt)?;
            let jq = jacobiator(&qt).report();
            let jl = jacobiator(&lt).report();
            Report {
                check: "pencil".into(),
                pass: mixed.pass && jq.pass && jl.pass,
                details: json!({
                    "mixed": io::residual_to_json(&mixed, ENTRY_LIMIT),
                    "quadratic_jacobi": io::residual_to_json(&jq, ENTRY_LIMIT),
                    "linear_jacobi": io::residual_to_json(&jl, ENTRY_LIMIT),
                    "linear": io::bracket_to_json(&lt),
                }),
                notes: vec!["pass means every member of the pencil is Poisson".into()],
                inputs: inputs.0,
            }
        }
        CheckCommand::Casimir { bracket } => {
            let qt = inputs.quadratic(&bracket, None)?;
            let polys = catalog::sphere_casimir(&qt)?;
            let mut rep = residual_report("casimir", &catalog::sphere_casimir_residual(&qt)?, inputs);
            let mut m = serde_json::Map::new();
            for (i, p) in polys.iter().enumerate() {
                m.insert(format!("{{{},N}}", var_name(i)), Value::String(p.display_with(var_name)));
            }
            rep.details["brackets_with_norm"] = Value::Object(m);
            rep
        }
    })
}

fn run_numeric(check: NumericCommand, mut inputs: Inputs) -> Result<Report> {
    Ok(match check {
        NumericCommand::Drinfeld { algebra, r, plan } => {
            let (alg, cat) = inputs.algebra(&algebra)?;
            let r = inputs.r(&alg, cat, &r)?;
            let plan = plan.plan((-2.0, 2.0))?;
            let rep = numeric::drinfeld_proportionality(&alg, &r, &plan)?;
            let constant = rep.kappa_variance.is_none_or(|v| v < 1e-18);
            Report {
                check: "numeric drinfeld".into(),
                pass: rep.pass && constant,
                details: json!({ "plan": plan, "report": numeric_json(&rep) }),
                notes: vec!["kappa measured at the first sample; variance over per-sample estimates".into()],
                inputs: inputs.0,
            }
        }
        NumericCommand::Group { algebra, bracket, log, plan } => {
            let (alg, _) = inputs.algebra(&algebra)?;
            let (rep, plan) = if log {
                if alg.dim() != 2 {
                    return Err(Error::DimensionMismatch {
                        expected: 2,
                        found: alg.dim(),
                    });
                }
                let plan = plan.plan((1e-3, 2.0))?;
                (numeric::group_multiplicativity_sample(&alg, &numeric::log_bracket, &plan)?, plan)
            } else {
                let path = bracket.expect("clap enforces --bracket without --log");
                let qt = inputs.quadratic(&path, Some(alg.dim()))?;
                let plan = plan.plan((-2.0, 2.0))?;
                let eval = numeric::polynomial_evaluator(&qt);
                (numeric::group_multiplicativity_sample(&alg, &eval, &plan)?, plan)
            };
            Report {
                check: "numeric group".into(),
                pass: rep.pass,
                details: json!({ "plan": plan, "report": numeric_json(&rep) }),
                notes: vec!["worst_point lists y then z".into()],
                inputs: inputs.0,
            }
        }
        NumericCommand::Iso { plan } => {
            let plan = plan.plan((1e-3, 2.0))?;
            let rep = numeric::iso_pushforward_check(&plan)?;
            Report {
                check: "numeric iso".into(),
                pass: rep.pass,
                details: json!({ "plan": plan, "report": numeric_json(&rep) }),
                notes: vec!["coordinate change xi = log x, eta = log y".into()],
                inputs: inputs.0,
            }
        }
    })
}

fn paper_suite() -> Result<Report> {
    let mut fixtures = Vec::new();
    let mut pass = true;
    for case in catalog::paper_examples()? {
        let outcome = catalog::run_case(&case)?;
        pass &= outcome.pass;
        let checks: Vec<Value> = outcome
            .checks
            .iter()
            .map(|c| json!({ "name": c.name, "pass": c.pass, "detail": c.detail }))
            .collect();
        let coefficients: Vec<Value> = case
            .notes
            .iter()
            .map(|n| {
                let monomial = n.monomial.iter().map(|&v| var_name(v)).collect::<Vec<_>>().join("*");
                json!({
                    "bracket": format!("{{{},{}}}", var_name(n.pair.0), var_name(n.pair.1)),
                    "monomial": monomial,
                    "printed": n.printed.as_ref().map(emit_rational),
                    "derived": emit_rational(&n.derived),
                    "provenance": n.provenance.to_string(),
                    "arbitration": n.arbitration,
                })
            })
            .collect();
        let arbitrated = case.notes.iter().filter(|n| n.provenance == Provenance::Arbitrated).count();
        fixtures.push(json!({
            "name": case.name,
            "summary": case.summary,
            "algebra": case.algebra.name(),
            "scale": emit_rational(&case.scale),
            "r": case.r.as_ref().map(io::r_to_json),
            "pass": outcome.pass,
            "checks": checks,
            "coefficients": coefficients,
            "arbitrated": arbitrated,
            "remarks": case.remarks,
        }));
    }
    Ok(Report {
        check: "paper-suite".into(),
        pass,
        details: json!({ "fixtures": fixtures }),
        notes: vec!["provenance: paper = printed and reproduced; derived = computed only; arbitrated = printed value overruled".into()],
        inputs: Vec::new(),
    })
}
