//! Command-line front end for the bgcheb library: node generation, function
//! evaluation, polynomial-case classification, orthogonality checks,
//! Lebesgue-constant analysis, parameter sweeps, optimal-trimming searches,
//! and plot-ready figure data.
//!
//! Every run is deterministic: identical flags produce byte-identical
//! output, regardless of how many threads `BGCHEB_THREADS` allows.
//!
//! Exit codes: 0 on success, 1 on domain/computation errors, 2 on usage
//! errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use bgcheb::figures::{figure_data, FigureId};
use bgcheb::io::{fmt_f64, fmt_f64_rounded};
use bgcheb::lebesgue::{
    beta_bar_points, default_grid_size, delta_bar_points, find_optimal_beta, find_optimal_delta,
    growth_report_to_csv, lebesgue_constant, lebesgue_function, left_end_growth_report,
    log_growth_threshold, sweep, sweep_to_csv, SweepRule,
};
use bgcheb::ortho::{gram_matrix, inner_product, QuadratureRule, QuadratureSpec};
use bgcheb::polycases::{classify, verify_classification};
use bgcheb::{
    lobatto_companion, BgChebyshev, Error, ParamPair, ParamValue, PointKind, PointSet, Rational,
};

#[derive(Parser, Debug)]
#[command(
    name = "bgcheb",
    version,
    about = "Two-parameter generalized Chebyshev node families: points, evaluation, \
             classification, orthogonality, and Lebesgue-constant analysis"
)]
struct Cli {
    /// JSON run configuration used instead of a subcommand. The file holds
    /// the same fields as the flags, e.g.
    /// {"command": "points", "kind": "lobatto", "count": 3}.
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Option<Command>,
}

/// A full run description; the `--config` file deserializes into this.
#[derive(Subcommand, Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
enum Command {
    /// Generate a node family as CSV (one abscissa per line) or JSON.
    Points(PointsArgs),
    /// Evaluate a family member or its companion at one abscissa.
    Eval(EvalArgs),
    /// Decide exactly whether a member collapses to ±cos/±sin of a multiple
    /// angle (an algebraic polynomial case).
    Classify(ClassifyArgs),
    /// Weighted inner products of family members.
    Ortho(OrthoArgs),
    /// Lebesgue function and constant diagnostics.
    Lebesgue(LebesgueArgs),
    /// Lebesgue constants over an (n, j) grid of trimming parameters.
    Sweep(SweepArgs),
    /// Search for the trimming parameter minimizing the Lebesgue constant.
    Optimal(OptimalArgs),
    /// Emit plot-ready CSV bundles (curves, overlays, sweeps).
    Figures(FiguresArgs),
}

/// The trimming parameters shared by most commands. Exact rationals by
/// default; the float escape hatches exist to replay optimizer output and
/// disable exactness-dependent commands such as `classify`.
#[derive(Args, Debug, Clone, Serialize, Deserialize)]
struct ParamFlags {
    /// Left trimming parameter in [0, 2) as an exact rational, e.g. 1/3.
    #[arg(long, default_value = "0")]
    #[serde(default = "Rational::zero")]
    beta: Rational,

    /// Right trimming parameter in [0, 2) as an exact rational.
    #[arg(long, default_value = "0")]
    #[serde(default = "Rational::zero")]
    gamma: Rational,

    /// Float override for --beta.
    #[arg(long, conflicts_with = "beta")]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    beta_float: Option<f64>,

    /// Float override for --gamma.
    #[arg(long, conflicts_with = "gamma")]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    gamma_float: Option<f64>,
}

impl ParamFlags {
    fn pair(&self) -> bgcheb::Result<ParamPair> {
        let beta = match self.beta_float {
            Some(v) => ParamValue::Approx(v),
            None => ParamValue::Exact(self.beta.clone()),
        };
        let gamma = match self.gamma_float {
            Some(v) => ParamValue::Approx(v),
            None => ParamValue::Exact(self.gamma.clone()),
        };
        ParamPair::from_values(beta, gamma)
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum OutputFormat {
    Csv,
    Json,
}

fn default_format() -> OutputFormat {
    OutputFormat::Csv
}

#[derive(Args, Debug, Clone, Serialize, Deserialize)]
struct PointsArgs {
    /// Node family: first-kind, lobatto, extrema, equispaced-first-kind, or
    /// equispaced-lobatto.
    #[arg(long)]
    kind: PointKind,

    /// Number of nodes to emit.
    #[arg(long)]
    count: usize,

    #[command(flatten)]
    #[serde(flatten)]
    params: ParamFlags,

    /// Apply the sine map with this exponent in (0, 1] after generation;
    /// at 1 it carries the equispaced families onto the trigonometric ones.
    #[arg(long)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    map_alpha: Option<f64>,

    /// Output format.
    #[arg(long, value_enum, default_value = "csv")]
    #[serde(default = "default_format")]
    format: OutputFormat,

    /// Write here instead of stdout.
    #[arg(long)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum EvalMethod {
    /// Closed form through the arccosine.
    Direct,
    /// Three-term recurrence seeded by the first two members.
    Recurrence,
    /// The companion function vanishing at the endpoint family and ±1.
    Companion,
}

fn default_method() -> EvalMethod {
    EvalMethod::Direct
}

#[derive(Args, Debug, Clone, Serialize, Deserialize)]
struct EvalArgs {
    /// Degree index n.
    #[arg(long)]
    n: u32,

    #[command(flatten)]
    #[serde(flatten)]
    params: ParamFlags,

    /// Evaluation abscissa in [-1, 1].
    #[arg(long, allow_hyphen_values = true)]
    at: f64,

    #[arg(long, value_enum, default_value = "direct")]
    #[serde(default = "default_method")]
    method: EvalMethod,
}

#[derive(Args, Debug, Clone, Serialize, Deserialize)]
struct ClassifyArgs {
    /// Degree index n.
    #[arg(long)]
    n: u32,

    #[command(flatten)]
    #[serde(flatten)]
    params: ParamFlags,

    /// Also corroborate a collapse numerically on a grid of this many
    /// points, reporting the largest deviation.
    #[arg(long)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    verify_grid: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum RuleArg {
    /// Angle substitution + Gauss-Legendre (spectral; default).
    Substituted,
    /// Direct x-space integration on endpoint-graded panels (cross-check;
    /// about four digits).
    ClippedXSpace,
}

fn default_rule() -> RuleArg {
    RuleArg::Substituted
}

impl From<RuleArg> for QuadratureRule {
    fn from(r: RuleArg) -> Self {
        match r {
            RuleArg::Substituted => QuadratureRule::SubstitutedGaussLegendre,
            RuleArg::ClippedXSpace => QuadratureRule::ClippedXSpace,
        }
    }
}

#[derive(Args, Debug, Clone, Serialize, Deserialize)]
struct OrthoArgs {
    /// First index of a single inner product (needs --s).
    #[arg(long, requires = "s", conflicts_with = "max_index")]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    r: Option<u32>,

    /// Second index of a single inner product (needs --r).
    #[arg(long, requires = "r", conflicts_with = "max_index")]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    s: Option<u32>,

    /// Emit the whole symmetric table for indices 0..=max-index as CSV.
    #[arg(long)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    max_index: Option<u32>,

    #[command(flatten)]
    #[serde(flatten)]
    params: ParamFlags,

    /// Gauss-Legendre node budget; defaults to max(64, r + s + 16).
    #[arg(long)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    nodes: Option<usize>,

    #[arg(long, value_enum, default_value = "substituted")]
    #[serde(default = "default_rule")]
    rule: RuleArg,

    /// Write here instead of stdout.
    #[arg(long)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum FamilyArg {
    /// n points, left trim 2/n: the (n+1)-point endpoint family minus -1.
    BetaBar,
    /// n points, both trims 2/(n+1): the (n+2)-point family minus ±1.
    DeltaBar,
}

#[derive(Args, Debug, Clone, Serialize, Deserialize)]
struct LebesgueArgs {
    /// Pre-defined one-parameter family (with --n): beta-bar or delta-bar.
    #[arg(long, value_enum, requires = "n", conflicts_with = "count")]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    family: Option<FamilyArg>,

    /// Family size n (for --family, --threshold, --conjecture-table upper
    /// bound).
    #[arg(long)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<usize>,

    /// Number of nodes of an explicitly parameterized endpoint family.
    #[arg(long)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    count: Option<usize>,

    #[command(flatten)]
    #[serde(flatten)]
    params: ParamFlags,

    /// Evaluate the Lebesgue function at this abscissa instead of locating
    /// its maximum.
    #[arg(long, allow_hyphen_values = true)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    at: Option<f64>,

    /// Scan grid size for the maximum search (default 100·count + 1).
    #[arg(long)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    grid_size: Option<usize>,

    /// Print the left-endpoint growth table (argmax at -1, value 2n-1) for
    /// the beta-bar family, n = 2..=N where N is --n (default 30).
    #[arg(long)]
    #[serde(default)]
    conjecture_table: bool,

    /// Print the symmetric-trimming threshold below which the Lebesgue
    /// constant keeps logarithmic growth (needs --n).
    #[arg(long)]
    #[serde(default)]
    threshold: bool,

    /// Write here instead of stdout.
    #[arg(long)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum SweepRuleArg {
    /// One-sided trimming beta = j/(10n).
    Beta,
    /// Symmetric trimming delta = j/(10(n+1)).
    Delta,
}

impl From<SweepRuleArg> for SweepRule {
    fn from(r: SweepRuleArg) -> Self {
        match r {
            SweepRuleArg::Beta => SweepRule::Beta,
            SweepRuleArg::Delta => SweepRule::Delta,
        }
    }
}

#[derive(Args, Debug, Clone, Serialize, Deserialize)]
struct SweepArgs {
    #[arg(long, value_enum)]
    rule: SweepRuleArg,

    #[arg(long, default_value_t = 5)]
    #[serde(default = "default_n_lo")]
    n_lo: usize,

    #[arg(long, default_value_t = 40)]
    #[serde(default = "default_forty")]
    n_hi: usize,

    #[arg(long, default_value_t = 0)]
    #[serde(default)]
    j_lo: usize,

    #[arg(long, default_value_t = 40)]
    #[serde(default = "default_forty")]
    j_hi: usize,

    /// Write here instead of stdout.
    #[arg(long)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    output: Option<PathBuf>,
}

fn default_n_lo() -> usize {
    5
}

fn default_forty() -> usize {
    40
}

#[derive(Args, Debug, Clone, Serialize, Deserialize)]
struct OptimalArgs {
    #[arg(long, value_enum)]
    rule: SweepRuleArg,

    /// Family size.
    #[arg(long)]
    n: usize,

    /// Abscissa tolerance of the golden-section stage.
    #[arg(long, default_value_t = 1e-6)]
    #[serde(default = "default_tol")]
    tol: f64,
}

fn default_tol() -> f64 {
    1e-6
}

#[derive(Args, Debug, Clone, Serialize, Deserialize)]
struct FiguresArgs {
    /// Figure id: 1, 2, 3, or one of 4-left..7-right.
    #[arg(long)]
    id: FigureId,

    /// Directory for the emitted files. Without it, single-file figures go
    /// to stdout and multi-file figures land in the current directory.
    #[arg(long)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    output_dir: Option<PathBuf>,
}

/// Failures split by exit code: usage errors exit 2, everything else 1.
enum Failure {
    Usage(String),
    Run(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Run(e)
    }
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    let command = match resolve_command(cli) {
        Ok(c) => c,
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Run(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    match run(&command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Run(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

/// `BGCHEB_THREADS` caps the worker pool; unset or invalid keeps the
/// default. Results never depend on the thread count.
fn configure_threads() {
    if let Ok(v) = std::env::var("BGCHEB_THREADS") {
        if let Ok(k) = v.trim().parse::<usize>() {
            if k >= 1 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(k)
                    .build_global();
            }
        }
    }
}

fn resolve_command(cli: Cli) -> Result<Command, Failure> {
    match (cli.config, cli.command) {
        (Some(_), Some(_)) => Err(Failure::Usage(
            "--config replaces the subcommand; give one or the other".into(),
        )),
        (Some(path), None) => {
            let text = fs::read_to_string(&path).map_err(|e| {
                Failure::Usage(format!("cannot read config {}: {e}", path.display()))
            })?;
            serde_json::from_str(&text)
                .map_err(|e| Failure::Usage(format!("invalid config {}: {e}", path.display())))
        }
        (None, Some(cmd)) => Ok(cmd),
        (None, None) => Err(Failure::Usage(
            "a subcommand or --config is required; see --help".into(),
        )),
    }
}

fn run(command: &Command) -> Result<(), Failure> {
    match command {
        Command::Points(a) => emit(&run_points(a)?, a.output.as_deref()),
        Command::Eval(a) => emit(&run_eval(a)?, None),
        Command::Classify(a) => emit(&run_classify(a)?, None),
        Command::Ortho(a) => emit(&run_ortho(a)?, a.output.as_deref()),
        Command::Lebesgue(a) => emit(&run_lebesgue(a)?, a.output.as_deref()),
        Command::Sweep(a) => emit(&run_sweep(a)?, a.output.as_deref()),
        Command::Optimal(a) => emit(&run_optimal(a)?, None),
        Command::Figures(a) => run_figures(a),
    }
}

fn emit(text: &str, output: Option<&std::path::Path>) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| {
            Failure::Run(Error::domain(format!(
                "cannot write {}: {e}",
                path.display()
            )))
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run_points(a: &PointsArgs) -> Result<String, Failure> {
    let params = a.params.pair()?;
    let set = match a.kind {
        PointKind::FirstKind => PointSet::first_kind(a.count, &params)?,
        PointKind::Lobatto => PointSet::lobatto(a.count, &params)?,
        // --count is always the number of emitted nodes; the extrema of the
        // degree-(count+1) member are count points.
        PointKind::Extrema => PointSet::extrema(a.count + 1, &params)?,
        PointKind::EquispacedFirstKind => PointSet::equispaced_first_kind(a.count, &params)?,
        PointKind::EquispacedLobatto => PointSet::equispaced_lobatto(a.count, &params)?,
    };
    let set = match a.map_alpha {
        Some(alpha) => set.map_kte(alpha)?,
        None => set,
    };
    Ok(match a.format {
        OutputFormat::Csv => set.to_csv(),
        OutputFormat::Json => {
            let mut s = set.to_json()?;
            s.push('\n');
            s
        }
    })
}

fn run_eval(a: &EvalArgs) -> Result<String, Failure> {
    let params = a.params.pair()?;
    let value = match a.method {
        EvalMethod::Direct => BgChebyshev::new(a.n, &params).eval(a.at)?,
        EvalMethod::Recurrence => BgChebyshev::new(a.n, &params).eval_recurrence(a.at)?,
        EvalMethod::Companion => lobatto_companion(a.n, &params, a.at)?,
    };
    Ok(format!("{}\n", fmt_f64_rounded(value)))
}

fn run_classify(a: &ClassifyArgs) -> Result<String, Failure> {
    let params = a.params.pair()?;
    let classification = classify(a.n, &params)?;
    let mut doc =
        serde_json::to_value(&classification).map_err(|e| Failure::Run(Error::Serialization(e)))?;
    if let Some(grid) = a.verify_grid {
        let deviation = verify_classification(a.n, &params, &classification, grid)?;
        doc.as_object_mut()
            .expect("classification serializes to an object")
            .insert("max_deviation".into(), serde_json::Value::from(deviation));
    }
    let text =
        serde_json::to_string_pretty(&doc).map_err(|e| Failure::Run(Error::Serialization(e)))?;
    Ok(format!("{text}\n"))
}

fn run_ortho(a: &OrthoArgs) -> Result<String, Failure> {
    let params = a.params.pair()?;
    match (a.r, a.s, a.max_index) {
        (Some(r), Some(s), None) => {
            let mut spec = QuadratureSpec::default_for(r, s);
            if let Some(n) = a.nodes {
                spec.node_count = n;
            }
            spec.rule = a.rule.into();
            let value = inner_product(r, s, &params, &spec)?;
            Ok(format!("{}\n", fmt_f64_rounded(value)))
        }
        (None, None, Some(max_index)) => {
            let mut spec = QuadratureSpec::default_for(max_index, max_index);
            if let Some(n) = a.nodes {
                spec.node_count = n;
            }
            spec.rule = a.rule.into();
            Ok(gram_matrix(max_index, &params, &spec)?.to_csv())
        }
        _ => Err(Failure::Usage(
            "give either --r with --s, or --max-index".into(),
        )),
    }
}

fn run_lebesgue(a: &LebesgueArgs) -> Result<String, Failure> {
    if a.threshold {
        let n =
            a.n.ok_or_else(|| Failure::Usage("--threshold needs --n".into()))?;
        let t = log_growth_threshold(n)?;
        return Ok(format!("{}\n", fmt_f64_rounded(t)));
    }
    if a.conjecture_table {
        let hi = a.n.unwrap_or(30);
        let rows = left_end_growth_report(2, hi)?;
        return Ok(growth_report_to_csv(&rows));
    }

    let points = match (a.family, a.count) {
        (Some(FamilyArg::BetaBar), None) => {
            beta_bar_points(a.n.expect("clap enforces --family requires --n"))?
        }
        (Some(FamilyArg::DeltaBar), None) => {
            delta_bar_points(a.n.expect("clap enforces --family requires --n"))?
        }
        (None, Some(count)) => PointSet::lobatto(count, &a.params.pair()?)?,
        _ => {
            return Err(Failure::Usage(
                "give either --family with --n, or --count with --beta/--gamma".into(),
            ))
        }
    };

    if let Some(x) = a.at {
        let v = lebesgue_function(&points, x)?;
        return Ok(format!("{}\n", fmt_f64_rounded(v)));
    }
    let grid = a
        .grid_size
        .unwrap_or_else(|| default_grid_size(points.len()));
    let report = lebesgue_constant(&points, grid)?;
    let text =
        serde_json::to_string_pretty(&report).map_err(|e| Failure::Run(Error::Serialization(e)))?;
    Ok(format!("{text}\n"))
}

fn run_sweep(a: &SweepArgs) -> Result<String, Failure> {
    let cells = sweep(a.rule.into(), a.n_lo, a.n_hi, a.j_lo, a.j_hi)?;
    Ok(sweep_to_csv(&cells))
}

fn run_optimal(a: &OptimalArgs) -> Result<String, Failure> {
    let (value, constant) = match a.rule {
        SweepRuleArg::Beta => find_optimal_beta(a.n, a.tol)?,
        SweepRuleArg::Delta => find_optimal_delta(a.n, a.tol)?,
    };
    Ok(format!(
        "param_value,lebesgue_constant\n{},{}\n",
        fmt_f64(value),
        fmt_f64(constant)
    ))
}

fn run_figures(a: &FiguresArgs) -> Result<(), Failure> {
    let files = figure_data(a.id)?;
    if a.output_dir.is_none() && files.len() == 1 {
        print!("{}", files[0].contents);
        return Ok(());
    }
    let dir = a.output_dir.clone().unwrap_or_else(|| PathBuf::from("."));
    fs::create_dir_all(&dir).map_err(|e| {
        Failure::Run(Error::domain(format!(
            "cannot create {}: {e}",
            dir.display()
        )))
    })?;
    for file in &files {
        let path = dir.join(&file.name);
        fs::write(&path, &file.contents).map_err(|e| {
            Failure::Run(Error::domain(format!(
                "cannot write {}: {e}",
                path.display()
            )))
        })?;
        println!("{}", path.display());
    }
    Ok(())
}
