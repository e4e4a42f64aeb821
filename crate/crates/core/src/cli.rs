//! Command-line front end. `run` does all the work and returns what to print
//! and the exit code, so the binary is a thin wrapper.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::bloodflow::BfeParams;
use crate::ensemble::{fuzz, FuzzReport};
use crate::error::Error;
use crate::euler::EulerParams;
use crate::fixtures::{parse_values, SystemKind, TableKind};
use crate::reproduce::{reproduce, Reproduction};
use crate::shallow::SweParams;
use crate::system::{RiemannProblem, WaveSystem};
use crate::types::{EstimatorId, SpeedBounds};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;
pub const EXIT_TOLERANCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "riemann-bounds",
    version,
    about = "Exact Riemann solutions and wave-speed bounds"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve one Riemann problem exactly.
    Exact(ProblemArgs),
    /// Evaluate wave-speed estimators on one Riemann problem.
    Bounds {
        #[command(flatten)]
        problem: ProblemArgs,
        /// Estimator name, comma-separated list, or `all`.
        #[arg(long, default_value = "all")]
        estimator: String,
    },
    /// Recompute a reference table and diff it against the stored values.
    Reproduce {
        #[arg(long, value_enum)]
        system: SystemArg,
        #[arg(long, value_enum)]
        table: TableArg,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
    },
    /// Check the bound estimators against the exact solver on random data.
    Fuzz {
        #[arg(long, value_enum)]
        system: SystemArg,
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
    },
}

#[derive(Debug, Args)]
pub struct ProblemArgs {
    #[arg(long, value_enum)]
    pub system: SystemArg,
    /// Left state, e.g. `1,0,1` (rho,u,p) or `1,0` (h,u / A,u).
    #[arg(long, allow_hyphen_values = true)]
    pub left: String,
    #[arg(long, allow_hyphen_values = true)]
    pub right: String,
    #[arg(long)]
    pub gamma: Option<f64>,
    #[arg(long)]
    pub gravity: Option<f64>,
    #[arg(long)]
    pub beta: Option<f64>,
    #[arg(long = "rho-blood")]
    pub rho_blood: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Md)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SystemArg {
    Euler,
    Swe,
    Bfe,
}

impl From<SystemArg> for SystemKind {
    fn from(s: SystemArg) -> Self {
        match s {
            SystemArg::Euler => SystemKind::Euler,
            SystemArg::Swe => SystemKind::Swe,
            SystemArg::Bfe => SystemKind::Bfe,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableArg {
    Ic,
    #[value(name = "s_left")]
    SLeft,
    #[value(name = "s_right")]
    SRight,
}

impl From<TableArg> for TableKind {
    fn from(t: TableArg) -> Self {
        match t {
            TableArg::Ic => TableKind::Ic,
            TableArg::SLeft => TableKind::SLeft,
            TableArg::SRight => TableKind::SRight,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Md,
    Csv,
    Json,
}

/// Text for stdout and stderr plus the process exit code.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

fn error_outcome(e: &Error) -> Outcome {
    let code = match e {
        Error::InvalidState(_)
        | Error::InvalidParams(_)
        | Error::InvalidArgument(_)
        | Error::UnsupportedEstimator { .. } => EXIT_USAGE,
        _ => EXIT_DATA,
    };
    Outcome::fail(code, format!("error: {e}\n"))
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::fail(EXIT_USAGE, text)
            } else {
                Outcome::ok(text)
            };
        }
    };
    match cli.command {
        Command::Exact(p) => with_problem(&p, &[EstimatorId::Exact], true),
        Command::Bounds { problem, estimator } => match parse_estimators(&estimator) {
            Ok(ids) => with_problem(&problem, &ids, false),
            Err(e) => error_outcome(&e),
        },
        Command::Reproduce {
            system,
            table,
            format,
        } => match reproduce(system.into(), table.into()) {
            Ok(r) => {
                let code = if r.passed() { EXIT_OK } else { EXIT_TOLERANCE };
                Outcome {
                    code,
                    stdout: render_reproduction(&r, format),
                    stderr: String::new(),
                }
            }
            Err(e) => error_outcome(&e),
        },
        Command::Fuzz {
            system,
            count,
            seed,
            format,
        } => {
            let report = match system {
                SystemArg::Euler => fuzz(EulerParams::default(), count, seed),
                SystemArg::Swe => fuzz(SweParams::default(), count, seed),
                SystemArg::Bfe => fuzz(BfeParams::default(), count, seed),
            };
            match report {
                Ok(r) => Outcome::ok(render_fuzz(&r, format)),
                Err(e) => error_outcome(&e),
            }
        }
    }
}

/// `all`, one name, or a comma-separated list. An empty result means every
/// estimator the system supports.
fn parse_estimators(spec: &str) -> Result<Vec<EstimatorId>, Error> {
    if spec.trim() == "all" {
        return Ok(Vec::new());
    }
    spec.split(',').map(|s| s.trim().parse()).collect()
}

fn four(v: f64) -> String {
    let s = format!("{v:.4}");
    if s == "-0.0000" {
        "0.0000".to_string()
    } else {
        s
    }
}

fn with_problem(a: &ProblemArgs, ids: &[EstimatorId], exact_only: bool) -> Outcome {
    let system = SystemKind::from(a.system);
    let overrides = [
        ("--gamma", a.gamma.is_some(), SystemKind::Euler),
        ("--gravity", a.gravity.is_some(), SystemKind::Swe),
        ("--beta", a.beta.is_some(), SystemKind::Bfe),
        ("--rho-blood", a.rho_blood.is_some(), SystemKind::Bfe),
    ];
    for (flag, given, owner) in overrides {
        if given && owner != system {
            return Outcome::fail(
                EXIT_USAGE,
                format!("error: {flag} does not apply to system {system}\n"),
            );
        }
    }
    let result = match system {
        SystemKind::Euler => {
            let p = EulerParams {
                gamma: a.gamma.unwrap_or(EulerParams::default().gamma),
            };
            evaluate(p, a, ids, exact_only)
        }
        SystemKind::Swe => {
            let p = SweParams {
                g: a.gravity.unwrap_or(SweParams::default().g),
            };
            evaluate(p, a, ids, exact_only)
        }
        SystemKind::Bfe => {
            let d = BfeParams::default();
            let p = BfeParams {
                beta: a.beta.unwrap_or(d.beta),
                rho: a.rho_blood.unwrap_or(d.rho),
            };
            evaluate(p, a, ids, exact_only)
        }
    };
    result.unwrap_or_else(|e| error_outcome(&e))
}

#[derive(Serialize)]
struct ResultRecord {
    estimator: &'static str,
    s_left: f64,
    s_right: f64,
    pattern: Option<String>,
}

impl From<&SpeedBounds> for ResultRecord {
    fn from(b: &SpeedBounds) -> Self {
        ResultRecord {
            estimator: b.estimator.name(),
            s_left: b.s_left,
            s_right: b.s_right,
            pattern: b.pattern.map(|p| p.to_string()),
        }
    }
}

fn evaluate<S: WaveSystem>(
    params: S,
    a: &ProblemArgs,
    ids: &[EstimatorId],
    exact_only: bool,
) -> Result<Outcome, Error> {
    let left = S::state_from_values(&parse_values(&a.left)?)?;
    let right = S::state_from_values(&parse_values(&a.right)?)?;
    let problem = RiemannProblem::new(left, right, params)?;
    let ids: Vec<EstimatorId> = if ids.is_empty() {
        EstimatorId::ALL
            .iter()
            .copied()
            .filter(|&id| S::supports(id))
            .collect()
    } else {
        ids.to_vec()
    };
    let results = ids
        .iter()
        .map(|&id| problem.estimate(id))
        .collect::<Result<Vec<_>, _>>()?;
    let head = json!({
        "left": problem.left,
        "right": problem.right,
        "params": problem.params,
    });

    let sym = S::STAR_SYMBOL;
    let mut out = String::new();
    if exact_only {
        let s = problem.solve()?;
        match a.format {
            Format::Md => {
                let _ = writeln!(
                    out,
                    "{sym}_*={} u_*={} pattern={} S_L={} S_R={}",
                    four(s.star),
                    four(s.u_star),
                    s.pattern,
                    four(s.s_left),
                    four(s.s_right)
                );
            }
            Format::Csv => {
                let _ = writeln!(out, "system,{sym}_star,u_star,pattern,s_left,s_right");
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    S::NAME,
                    four(s.star),
                    four(s.u_star),
                    s.pattern,
                    four(s.s_left),
                    four(s.s_right)
                );
            }
            Format::Json => {
                let doc = json!({
                    "system": S::NAME,
                    "problem": head,
                    "results": results.iter().map(ResultRecord::from).collect::<Vec<_>>(),
                    "star": { sym: s.star, "u": s.u_star },
                });
                out = pretty(&doc);
            }
        }
        return Ok(Outcome::ok(out));
    }

    match a.format {
        Format::Md => {
            out.push_str("| estimator | S_L | S_R | pattern |\n|---|---:|---:|---|\n");
            for b in &results {
                let pat = b.pattern.map(|p| p.to_string()).unwrap_or_default();
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {} |",
                    b.estimator,
                    four(b.s_left),
                    four(b.s_right),
                    pat
                );
            }
        }
        Format::Csv => {
            out.push_str("estimator,s_left,s_right,pattern\n");
            for b in &results {
                let pat = b.pattern.map(|p| p.to_string()).unwrap_or_default();
                let _ = writeln!(
                    out,
                    "{},{},{},{}",
                    b.estimator,
                    four(b.s_left),
                    four(b.s_right),
                    pat
                );
            }
        }
        Format::Json => {
            let doc = json!({
                "system": S::NAME,
                "problem": head,
                "results": results.iter().map(ResultRecord::from).collect::<Vec<_>>(),
            });
            out = pretty(&doc);
        }
    }
    Ok(Outcome::ok(out))
}

fn pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).unwrap_or_default();
    s.push('\n');
    s
}

fn cell_text(value: Option<f64>, raw: Option<&str>) -> String {
    match (value, raw) {
        (Some(v), _) => four(v),
        (None, Some(r)) => r.to_string(),
        (None, None) => "-".to_string(),
    }
}

pub fn render_reproduction(r: &Reproduction, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Md => {
            let _ = writeln!(out, "## {} {}\n", r.system, r.table);
            let _ = writeln!(out, "| test | {} |", r.columns.join(" | "));
            let _ = writeln!(out, "|---|{}", "---:|".repeat(r.columns.len()));
            for row in &r.rows {
                let test = row.first().map(|c| c.test).unwrap_or_default();
                let cells: Vec<String> = row
                    .iter()
                    .map(|c| {
                        if c.skipped.is_some() {
                            return "skipped".to_string();
                        }
                        let mut t = cell_text(c.computed_value(), c.computed.as_deref());
                        if c.flagged {
                            t.push('*');
                        }
                        if !c.matches {
                            t.push_str(" (!)");
                        }
                        t
                    })
                    .collect();
                let _ = writeln!(out, "| {test} | {} |", cells.join(" | "));
            }
            let checked = r.cells().filter(|c| c.is_checked()).count();
            let _ = writeln!(out, "\nchecked cells: {checked}");
            let _ = writeln!(out, "max |delta|: {:.3e}", r.max_deviation());
            let mism = r.mismatches();
            let _ = writeln!(out, "mismatches: {}", mism.len());
            for c in mism {
                let _ = writeln!(
                    out,
                    "- test {} {}: reference {} computed {} |delta| {} > tol {:.1e}",
                    c.test,
                    c.column,
                    c.reference,
                    cell_text(c.computed_value(), c.computed.as_deref()),
                    c.deviation
                        .map(|d| format!("{d:.4e}"))
                        .unwrap_or_else(|| "-".into()),
                    c.tolerance
                );
            }
            let mut skipped: Vec<String> = r
                .cells()
                .filter_map(|c| {
                    c.skipped
                        .as_ref()
                        .map(|why| format!("- test {} {}: {why}", c.test, c.column))
                })
                .collect();
            skipped.dedup();
            if !skipped.is_empty() {
                let _ = writeln!(out, "skipped: {}", skipped.len());
                for s in skipped {
                    let _ = writeln!(out, "{s}");
                }
            }
            let flagged: Vec<_> = r.cells().filter(|c| c.flagged && c.is_checked()).collect();
            if !flagged.is_empty() {
                let _ = writeln!(out, "flagged (*) as failed bounds: {}", flagged.len());
                for c in flagged {
                    let verdict = match c.violates_bound {
                        Some(true) => "checker: violation",
                        Some(false) => "checker: bound holds",
                        None => "checker: n/a",
                    };
                    let _ = writeln!(
                        out,
                        "- test {} {}: {} {verdict}",
                        c.test, c.column, c.reference
                    );
                }
            }
            let _ = writeln!(out, "result: {}", if r.passed() { "PASS" } else { "FAIL" });
        }
        Format::Csv => {
            out.push_str("test,column,reference,computed,deviation,tolerance,status,flagged,violates_bound\n");
            for c in r.cells() {
                let status = if c.skipped.is_some() {
                    "skipped"
                } else if c.matches {
                    "match"
                } else {
                    "mismatch"
                };
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{}",
                    c.test,
                    c.column,
                    c.reference,
                    cell_text(
                        c.computed_value(),
                        c.computed.as_deref().filter(|_| c.is_checked())
                    ),
                    c.deviation.map(|d| format!("{d:.6e}")).unwrap_or_default(),
                    c.tolerance,
                    status,
                    c.flagged,
                    c.violates_bound.map(|v| v.to_string()).unwrap_or_default()
                );
            }
        }
        Format::Json => {
            let doc = json!({
                "system": r.system,
                "table": r.table,
                "columns": r.columns,
                "rows": r.rows,
                "max_deviation": r.max_deviation(),
                "mismatches": r.mismatches().len(),
                "passed": r.passed(),
            });
            out = pretty(&doc);
        }
    }
    out
}

pub fn render_fuzz(r: &FuzzReport, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Md => {
            let _ = writeln!(out, "system: {}", r.system);
            let _ = writeln!(out, "trials: {}", r.trials);
            let _ = writeln!(out, "seed: {}", r.seed);
            let _ = writeln!(out, "violations: {}", r.violations.len());
            for v in &r.violations {
                let _ = writeln!(
                    out,
                    "- trial {} {} {}: estimate {} exact {} (left {:?} right {:?})",
                    v.trial,
                    v.estimator,
                    v.side.as_str(),
                    v.estimate,
                    v.exact,
                    v.left,
                    v.right
                );
            }
            let _ = writeln!(out, "failures: {}", r.failures.len());
            for (t, e) in &r.failures {
                let _ = writeln!(out, "- trial {t}: {e}");
            }
        }
        Format::Csv => {
            out.push_str("trial,estimator,side,estimate,exact,left,right\n");
            for v in &r.violations {
                let join = |x: &[f64]| {
                    x.iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(";")
                };
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    v.trial,
                    v.estimator,
                    v.side.as_str(),
                    v.estimate,
                    v.exact,
                    join(&v.left),
                    join(&v.right)
                );
            }
        }
        Format::Json => out = pretty(r),
    }
    out
}
