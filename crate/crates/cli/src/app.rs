//! Argument definitions and command execution.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use betamat::exact::{format_scalar, parse_scalar, ExactMatrix, ExactScalar};
use betamat::identities::{
    verify_a_involution, verify_b_inverse, verify_beta_inertia, verify_closed_form_det, verify_closed_form_inverse,
    verify_det_sign_parity, verify_k_factorization, verify_lu, verify_pascal_inertia, verify_pascal_sign,
    verify_summation_grid,
};
use betamat::linalg::{det_bareiss, inertia_symmetric, inverse_exact};
use betamat::matrices::{
    a_matrix, b_matrix, beta_matrix, beta_recip_matrix, d1_matrix, d2_matrix, generalized_beta_reduced, k_matrix,
    pascal_hadamard_inverse, BetaParams, ScaledMatrix,
};
use betamat::orthogonality::bj_orthogonal_to_identity;
use betamat::positivity::{verify_nonsingularity, verify_tp_hadamard_power};
use betamat::report::VerificationReport;
use betamat::sweeps::{nonsingularity_sweep, tp_sweep, SweepReport};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use crate::report::{
    inertia_json, interval_json, matrix_json, scalar_json, sweep_json, to_csv, verification_json, Report,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Seed used by randomized verifications when `--seed` is absent.
pub const DEFAULT_SEED: u64 = 42;

/// Random parameter sets are drawn with `n <= SWEEP_N_MAX`.
const SWEEP_N_MAX: usize = 5;
/// Sizes up to which the TP sweep also enumerates every minor.
const SWEEP_EXHAUSTIVE_MAX: usize = 4;

#[derive(Debug, Parser)]
#[command(name = "betamat", version, about = "Exact beta-function matrices: generation, analysis and verification")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit a matrix with exact rational entries.
    Gen(GenArgs),
    /// Determinant, inertia and inverse integrality of a matrix.
    Analyze(AnalyzeArgs),
    /// Check a closed form or theorem over a range of sizes or random parameters.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MatrixKind {
    Beta,
    BetaRecip,
    PascalHinv,
    K,
    A,
    B,
    D1,
    D2,
    Generalized,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    DetFormula,
    InverseFormula,
    Lu,
    KFactorization,
    AInvolution,
    BInverse,
    Summation,
    Inertia,
    Bj,
    Pascal,
    Tp,
    Nonsingular,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ParamArgs {
    /// Comma-separated rationals `p/q`.
    #[arg(long)]
    pub lambdas: Option<String>,
    /// Comma-separated rationals `p/q`.
    #[arg(long)]
    pub mus: Option<String>,
    /// Hadamard power.
    #[arg(long)]
    pub m: Option<u32>,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub kind: MatrixKind,
    /// Matrix size (alternative to `--n`).
    #[arg(value_name = "N", conflicts_with = "n")]
    pub size: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Analyze `[β(i,j)]` of this size (alternative to `--n`).
    #[arg(value_name = "N", conflicts_with_all = ["n", "matrix"])]
    pub size: Option<usize>,
    #[arg(long, conflicts_with = "matrix")]
    pub n: Option<usize>,
    /// JSON file holding an array of rows of `"p/q"` strings, or a `gen` report.
    #[arg(long)]
    pub matrix: Option<PathBuf>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub theorem: Theorem,
    /// Check this size only.
    #[arg(long, conflicts_with = "n_max")]
    pub n: Option<usize>,
    /// Check every size from 1 up to this one.
    #[arg(long)]
    pub n_max: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub samples: Option<usize>,
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Math(betamat::Error),
    #[error("i/o error on {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Math(_) => EXIT_FAILURE,
            CliError::Usage(_) | CliError::Io { .. } => EXIT_USAGE,
        }
    }
}

impl From<betamat::Error> for CliError {
    fn from(e: betamat::Error) -> Self {
        match e {
            betamat::Error::Internal(_) => CliError::Math(e),
            other => CliError::Usage(other.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Parses `argv`, runs the command and writes the report. Returns the exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli.command).and_then(|report| emit(&report, output_of(&cli.command), stdout).map(|()| report)) {
        Ok(report) => exit_code(&report),
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

/// 1 when the report records a failed check, 0 otherwise.
pub fn exit_code(report: &Report) -> i32 {
    if report.all_passed() == Some(false) {
        EXIT_FAILURE
    } else {
        EXIT_PASS
    }
}

fn output_of(command: &Command) -> &OutputArgs {
    match command {
        Command::Gen(a) => &a.output,
        Command::Analyze(a) => &a.output,
        Command::Verify(a) => &a.output,
    }
}

/// Builds the report for a parsed command without writing it.
pub fn execute(command: &Command) -> CliResult<Report> {
    match command {
        Command::Gen(a) => cmd_gen(a),
        Command::Analyze(a) => cmd_analyze(a),
        Command::Verify(a) => cmd_verify(a),
    }
}

fn emit(report: &Report, output: &OutputArgs, stdout: &mut dyn Write) -> CliResult<()> {
    let text = match output.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Csv => to_csv(report).map_err(|e| CliError::Usage(format!("csv output: {e}")))?,
    };
    match &output.out {
        Some(path) => std::fs::write(path, text).map_err(|source| io_error(path, source)),
        None => stdout.write_all(text.as_bytes()).map_err(|source| CliError::Io { path: "<stdout>".into(), source }),
    }
}

fn io_error(path: &Path, source: std::io::Error) -> CliError {
    CliError::Io { path: path.display().to_string(), source }
}

fn parse_list(flag: &str, text: &str) -> CliResult<Vec<ExactScalar>> {
    text.split(',')
        .map(|s| parse_scalar(s.trim()).map_err(|e| CliError::Usage(format!("--{flag}: {e}"))))
        .collect()
}

/// `--lambdas`, `--mus` and `--m` as a parameter set, when both lists are given.
fn beta_params(p: &ParamArgs) -> CliResult<Option<BetaParams>> {
    match (&p.lambdas, &p.mus) {
        (None, None) => Ok(None),
        (Some(l), Some(u)) => {
            let params = BetaParams::new(parse_list("lambdas", l)?, parse_list("mus", u)?, p.m.unwrap_or(1))?;
            params.mu_offsets()?;
            Ok(Some(params))
        }
        _ => Err(CliError::Usage("--lambdas and --mus must be given together".into())),
    }
}

fn insert_params(map: &mut BTreeMap<String, String>, p: &ParamArgs) {
    if let Some(l) = &p.lambdas {
        map.insert("lambdas".into(), l.clone());
    }
    if let Some(u) = &p.mus {
        map.insert("mus".into(), u.clone());
    }
    if let Some(m) = p.m {
        map.insert("m".into(), m.to_string());
    }
}

fn require_size(size: Option<usize>, n: Option<usize>) -> CliResult<usize> {
    size.or(n).ok_or_else(|| CliError::Usage("a matrix size is required (positional N or --n)".into()))
}

fn scaled_json(s: &ScaledMatrix) -> Value {
    json!({
        "left_scale": s.left_scale.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "core": matrix_json(&s.core),
        "right_scale": s.right_scale.iter().map(ToString::to_string).collect::<Vec<_>>(),
    })
}

fn cmd_gen(a: &GenArgs) -> CliResult<Report> {
    let mut parameters = BTreeMap::new();
    parameters.insert("kind".into(), kind_label(a.kind));
    insert_params(&mut parameters, &a.params);
    let results = if a.kind == MatrixKind::Generalized {
        let params = beta_params(&a.params)?
            .ok_or_else(|| CliError::Usage("generalized needs --lambdas and --mus".into()))?;
        let scaled = generalized_beta_reduced(&params)?;
        let mut r = json!({ "kind": "generalized", "n": params.n(), "reduced": scaled_json(&scaled) });
        if let Some(full) = scaled.to_exact() {
            r["entries"] = matrix_json(&full);
        }
        r
    } else {
        let n = require_size(a.size, a.n)?;
        parameters.insert("n".into(), n.to_string());
        let m = match a.kind {
            MatrixKind::Beta => beta_matrix(n),
            MatrixKind::BetaRecip => beta_recip_matrix(n),
            MatrixKind::PascalHinv => pascal_hadamard_inverse(n),
            MatrixKind::K => k_matrix(n),
            MatrixKind::A => a_matrix(n),
            MatrixKind::B => b_matrix(n),
            MatrixKind::D1 => d1_matrix(n),
            MatrixKind::D2 => d2_matrix(n),
            MatrixKind::Generalized => unreachable!("handled above"),
        }?;
        json!({ "kind": kind_label(a.kind), "n": n, "entries": matrix_json(&m) })
    };
    Ok(Report::new("gen", parameters, results, None))
}

fn kind_label(k: MatrixKind) -> String {
    k.to_possible_value().expect("no skipped variants").get_name().to_string()
}

fn theorem_label(t: Theorem) -> String {
    t.to_possible_value().expect("no skipped variants").get_name().to_string()
}

/// Reads a JSON matrix: either `[["p/q", ...], ...]` or a report whose
/// `results.entries` holds one.
pub fn read_matrix_file(path: &Path) -> CliResult<ExactMatrix> {
    let text = std::fs::read_to_string(path).map_err(|source| io_error(path, source))?;
    let value: Value =
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let rows = match value.get("results").and_then(|r| r.get("entries")) {
        Some(entries) => entries.clone(),
        None => value,
    };
    let rows: Vec<Vec<String>> = serde_json::from_value(rows)
        .map_err(|e| CliError::Usage(format!("{}: expected an array of rows of \"p/q\" strings: {e}", path.display())))?;
    Ok(ExactMatrix::from_string_rows(&rows)?)
}

fn cmd_analyze(a: &AnalyzeArgs) -> CliResult<Report> {
    let mut parameters = BTreeMap::new();
    let matrix = match &a.matrix {
        Some(path) => {
            parameters.insert("matrix".into(), path.display().to_string());
            read_matrix_file(path)?
        }
        None => {
            let n = require_size(a.size, a.n)?;
            parameters.insert("n".into(), n.to_string());
            beta_matrix(n)?
        }
    };
    let det = det_bareiss(&matrix)?;
    let inertia = if matrix.is_symmetric() { Some(inertia_json(&inertia_symmetric(&matrix)?)) } else { None };
    let singular = det == ExactScalar::from_integer(0.into());
    let inverse_is_integer = if singular { None } else { Some(inverse_exact(&matrix)?.is_integral()) };
    let results = json!({
        "n": matrix.n_rows(),
        "det": format_scalar(&det),
        "singular": singular,
        "symmetric": matrix.is_symmetric(),
        "inertia": inertia,
        "inverse_is_integer": inverse_is_integer,
    });
    Ok(Report::new("analyze", parameters, results, None))
}

fn default_n_max(t: Theorem) -> usize {
    match t {
        Theorem::DetFormula | Theorem::Inertia | Theorem::Bj => 12,
        _ => 10,
    }
}

fn sizes(a: &VerifyArgs) -> CliResult<Vec<usize>> {
    match (a.n, a.n_max) {
        (Some(0), _) | (_, Some(0)) => Err(CliError::Usage("sizes start at 1".into())),
        (Some(n), _) => Ok(vec![n]),
        (None, Some(m)) => Ok((1..=m).collect()),
        (None, None) => Ok((1..=default_n_max(a.theorem)).collect()),
    }
}

fn bj_instance(n: usize) -> CliResult<Value> {
    let r = bj_orthogonal_to_identity(&beta_matrix(n)?)?;
    let expected = n.is_multiple_of(2);
    let certificate = r.violation.as_ref().map(|v| {
        json!({
            "kind": "violation",
            "t": scalar_json(&v.t),
            "norm_at_t": interval_json(&v.norm_at_t),
            "norm_at_zero": interval_json(&v.norm_at_zero),
        })
    });
    Ok(json!({
        "identity": "bj",
        "n": n,
        "holds": r.orthogonal == expected,
        "orthogonal": r.orthogonal,
        "inertia": inertia_json(&r.inertia),
        "witness": certificate,
    }))
}

fn sized_instances(a: &VerifyArgs) -> CliResult<Vec<Value>> {
    let mut out = Vec::new();
    let v = |r: VerificationReport| verification_json(&r);
    for n in sizes(a)? {
        match a.theorem {
            Theorem::DetFormula => {
                out.push(v(verify_closed_form_det(n)?));
                out.push(v(verify_det_sign_parity(n)?));
            }
            Theorem::InverseFormula => out.push(v(verify_closed_form_inverse(n)?)),
            Theorem::Lu => out.push(v(verify_lu(n)?)),
            Theorem::KFactorization => out.push(v(verify_k_factorization(n)?)),
            Theorem::AInvolution => out.push(v(verify_a_involution(n)?)),
            Theorem::BInverse => out.push(v(verify_b_inverse(n)?)),
            Theorem::Summation => out.push(v(verify_summation_grid(n))),
            Theorem::Inertia => out.push(v(verify_beta_inertia(n)?)),
            Theorem::Pascal => {
                out.push(v(verify_pascal_sign(n)?));
                out.push(v(verify_pascal_inertia(n)?));
            }
            Theorem::Bj => out.push(bj_instance(n)?),
            Theorem::Tp | Theorem::Nonsingular => unreachable!("parameterized theorems are handled separately"),
        }
    }
    Ok(out)
}

fn cmd_verify(a: &VerifyArgs) -> CliResult<Report> {
    let mut parameters = BTreeMap::new();
    parameters.insert("theorem".into(), theorem_label(a.theorem));
    insert_params(&mut parameters, &a.params);
    let parameterized = matches!(a.theorem, Theorem::Tp | Theorem::Nonsingular);
    if !parameterized && (a.params.lambdas.is_some() || a.params.mus.is_some()) {
        return Err(CliError::Usage(format!("{} takes no --lambdas/--mus", theorem_label(a.theorem))));
    }

    if !parameterized {
        if let Some(n) = a.n {
            parameters.insert("n".into(), n.to_string());
        } else {
            parameters.insert("n_max".into(), a.n_max.unwrap_or(default_n_max(a.theorem)).to_string());
        }
        let instances = sized_instances(a)?;
        let all_passed = instances.iter().all(|i| i["holds"] == Value::Bool(true));
        let results = json!({ "theorem": theorem_label(a.theorem), "instances": instances, "all_passed": all_passed });
        return Ok(Report::new("verify", parameters, results, None));
    }

    if let Some(params) = beta_params(&a.params)? {
        let r = match a.theorem {
            Theorem::Tp => verify_tp_hadamard_power(&params)?,
            _ => verify_nonsingularity(&params)?,
        };
        let results = json!({
            "theorem": theorem_label(a.theorem),
            "instances": [verification_json(&r)],
            "all_passed": r.holds,
        });
        return Ok(Report::new("verify", parameters, results, None));
    }

    let seed = a.seed.unwrap_or(DEFAULT_SEED);
    let n_max = a.n_max.or(a.n).unwrap_or(SWEEP_N_MAX);
    let m_max = a.params.m.unwrap_or(3);
    if n_max == 0 || m_max == 0 {
        return Err(CliError::Usage("--n-max and --m must be positive".into()));
    }
    let sweep: SweepReport = match a.theorem {
        Theorem::Tp => tp_sweep(seed, a.samples.unwrap_or(50), n_max, m_max, SWEEP_EXHAUSTIVE_MAX)?,
        _ => nonsingularity_sweep(seed, a.samples.unwrap_or(200), n_max, m_max)?,
    };
    parameters.insert("samples".into(), sweep.samples.to_string());
    parameters.insert("n_max".into(), n_max.to_string());
    parameters.insert("m_max".into(), m_max.to_string());
    let results = json!({
        "theorem": theorem_label(a.theorem),
        "sweep": sweep_json(&sweep),
        "all_passed": sweep.passed(),
    });
    Ok(Report::new("verify", parameters, results, Some(seed)))
}
