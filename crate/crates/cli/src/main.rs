//! `harmonia`: evaluate, tabulate and verify the integral formulas from the
//! command line.
//!
//! Exit codes: 0 success, 1 verification or numerical failure, 2 usage or
//! domain error.

mod eval;
mod grid;
mod output;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use harmonia::quad::QuadSpec;
use harmonia::verify::{self, Suite, VerifyOptions};

use eval::{Kind, Params};
use grid::Grid;

const MAX_PANELS_VAR: &str = "HARMONIA_MAX_PANELS";

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Lib(harmonia::Error),
    Io(String),
    /// Verification ran but at least one gating row failed.
    Failed(usize),
}

impl CliError {
    pub fn usage(e: harmonia::Error) -> Self {
        CliError::Usage(e.to_string())
    }

    pub fn io(e: impl std::fmt::Display) -> Self {
        CliError::Io(e.to_string())
    }

    fn exit_code(&self) -> u8 {
        use harmonia::Error as E;
        match self {
            CliError::Failed(_) => 1,
            CliError::Lib(E::NotConverged { .. } | E::NonFinite { .. } | E::InexactDeflation { .. }) => 1,
            CliError::Lib(_) | CliError::Usage(_) | CliError::Io(_) => 2,
        }
    }
}

impl From<harmonia::Error> for CliError {
    fn from(e: harmonia::Error) -> Self {
        CliError::Lib(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
            CliError::Failed(n) => write!(f, "{n} verification row(s) failed"),
        }
    }
}

#[derive(Parser)]
#[command(name = "harmonia", version, about = "Generalized harmonic numbers by integral representation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug, Clone, Default)]
struct ParamArgs {
    #[arg(long)]
    k: Option<u32>,
    /// Positive real, or `inf` for Fourier limits
    #[arg(long)]
    n: Option<String>,
    #[arg(long)]
    m: Option<f64>,
    #[arg(long)]
    r: Option<u32>,
    /// Generating-function argument, |x| < 1
    #[arg(long, allow_hyphen_values = true)]
    x: Option<f64>,
    /// sin-pi-k, sin-2pi-k or cos-2pi-k
    #[arg(long)]
    variant: Option<String>,
    /// tan, cot or bernoulli-cot
    #[arg(long)]
    rep: Option<String>,
    /// even or odd (Euler sums: order parity; theorem4: power 2k or 2k+1)
    #[arg(long)]
    parity: Option<String>,
}

impl ParamArgs {
    fn to_params(&self) -> Result<Params, CliError> {
        let mut p = Params::default();
        if let Some(k) = self.k {
            p.k = Some(k);
        }
        if let Some(n) = &self.n {
            p.set("n", n)?;
        }
        p.m = self.m;
        p.r = self.r;
        p.x = self.x;
        for (name, value) in [("variant", &self.variant), ("rep", &self.rep), ("parity", &self.parity)] {
            if let Some(v) = value {
                p.set(name, v)?;
            }
        }
        Ok(p)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one formula and print a JSON object
    Compute {
        #[arg(long)]
        kind: String,
        #[command(flatten)]
        params: ParamArgs,
        /// Relative quadrature tolerance
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Run verification suites against the oracles
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 1.0)]
        tol_scale: f64,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Evaluate a formula over a parameter grid
    Table {
        #[arg(long)]
        kind: String,
        /// e.g. "k=1..4;n=1..10"
        #[arg(long)]
        grid: String,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
        /// Output file; standard output when omitted
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Follow a limit integral as n grows
    Limits {
        /// theorem1, theorem2, theorem3, theorem4 or corollary1
        #[arg(long)]
        kind: String,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value = "25,50,100,200")]
        ns: String,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
        #[arg(long)]
        tol: Option<f64>,
    },
}

fn max_panels_override() -> Result<Option<usize>, CliError> {
    match std::env::var(MAX_PANELS_VAR) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&p| p >= 1)
            .map(Some)
            .ok_or_else(|| CliError::Usage(format!("{MAX_PANELS_VAR} must be a positive integer, got {v:?}"))),
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => Err(CliError::Usage(format!("{MAX_PANELS_VAR}: {e}"))),
    }
}

fn quad_spec(tol: Option<f64>) -> Result<QuadSpec, CliError> {
    let mut spec = QuadSpec::default();
    if let Some(tol) = tol {
        let abs_tol = spec.abs_tol.min(tol);
        spec = spec.with_tolerances(tol, abs_tol);
    }
    if let Some(p) = max_panels_override()? {
        spec = spec.with_max_panels(p);
    }
    spec.validate().map_err(CliError::usage)?;
    Ok(spec)
}

fn compute(kind: &str, params: &ParamArgs, tol: Option<f64>) -> Result<(), CliError> {
    let kind: Kind = kind.parse()?;
    let spec = quad_spec(tol)?;
    let rec = eval::evaluate(kind, &params.to_params()?, &spec)?;
    println!("{}", output::compute_json(&rec)?);
    Ok(())
}

fn run_verify(suite: &str, tol_scale: f64, format: ReportFormat) -> Result<(), CliError> {
    let suite: Suite = suite.parse().map_err(CliError::usage)?;
    let mut opts = VerifyOptions::default().with_tol_scale(tol_scale);
    if let Some(p) = max_panels_override()? {
        opts.quad = opts.quad.with_max_panels(p);
        opts.large_n_panels = opts.large_n_panels.max(p);
    }
    let rows = verify::run(suite, &opts).map_err(CliError::usage)?;
    let failed = rows.iter().filter(|r| !r.ok()).count();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match format {
        ReportFormat::Text => {
            for r in &rows {
                writeln!(out, "{r}").map_err(CliError::io)?;
            }
            let info = rows.iter().filter(|r| !r.gating).count();
            writeln!(out, "summary: {} rows, {failed} failed, {info} informative", rows.len())
                .map_err(CliError::io)?;
        }
        ReportFormat::Csv => output::verify_csv(&mut out, &rows)?,
        ReportFormat::Json => writeln!(out, "{}", output::verify_json(suite.name(), tol_scale, &rows)?)
            .map_err(CliError::io)?,
    }
    out.flush().map_err(CliError::io)?;
    if failed > 0 {
        return Err(CliError::Failed(failed));
    }
    Ok(())
}

fn evaluate_grid(kind: Kind, grid: &Grid, base: &Params, spec: &QuadSpec) -> Result<Vec<eval::Record>, CliError> {
    grid.points()
        .into_iter()
        .map(|point| {
            let mut p = base.clone();
            for (name, value) in point {
                p.set(name, value)?;
            }
            eval::evaluate(kind, &p, spec)
        })
        .collect()
}

/// Parameter columns: the grid axes plus anything the kind filled in by default.
fn columns(rows: &[eval::Record]) -> Vec<&'static str> {
    let mut cols: Vec<&'static str> = rows.iter().flat_map(|r| r.params.keys().copied()).collect();
    cols.sort_unstable();
    cols.dedup();
    cols
}

fn table(kind: &str, grid: &str, format: TableFormat, out: Option<&PathBuf>, tol: Option<f64>) -> Result<(), CliError> {
    let kind: Kind = kind.parse()?;
    let grid = Grid::parse(grid)?;
    let spec = quad_spec(tol)?;
    let rows = evaluate_grid(kind, &grid, &Params::default(), &spec)?;
    let sink: Box<dyn Write> = match out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?,
        )),
        None => Box::new(io::stdout().lock()),
    };
    write_table(sink, kind, &rows, format)
}

fn write_table(mut sink: Box<dyn Write>, kind: Kind, rows: &[eval::Record], format: TableFormat) -> Result<(), CliError> {
    match format {
        TableFormat::Csv => output::table_csv(&mut sink, &columns(rows), rows)?,
        TableFormat::Json => writeln!(sink, "{}", output::table_json(kind.name(), rows)?).map_err(CliError::io)?,
    }
    sink.flush().map_err(CliError::io)
}

fn limits(kind: &str, params: &ParamArgs, ns: &str, format: ReportFormat, tol: Option<f64>) -> Result<(), CliError> {
    let kind: Kind = kind.parse()?;
    if !kind.is_limit_integral() {
        return Err(CliError::Usage(format!("{} is not a limit integral", kind.name())));
    }
    if params.n.is_some() {
        return Err(CliError::Usage("limits takes --ns, not --n".into()));
    }
    let mut base = params.to_params()?;
    if base.k.is_none() {
        base.k = Some(0);
    }
    let spec = quad_spec(tol)?;
    let grid = Grid::parse(&format!("n={ns}"))?;
    let rows = evaluate_grid(kind, &grid, &base, &spec)?;
    let stdout = Box::new(io::stdout().lock());
    match format {
        ReportFormat::Csv => write_table(stdout, kind, &rows, TableFormat::Csv),
        ReportFormat::Json => write_table(stdout, kind, &rows, TableFormat::Json),
        ReportFormat::Text => {
            let mut out = stdout;
            let mut previous: Option<f64> = None;
            for r in &rows {
                let limit = r.limit.unwrap_or(f64::NAN);
                let err = (r.value - limit).abs();
                let n = r.params.get("n").map(ToString::to_string).unwrap_or_default();
                write!(
                    out,
                    "{} n={n} value={} limit={} error={}",
                    kind.name(),
                    output::fmt_num(r.value),
                    output::fmt_num(limit),
                    output::fmt_num(err)
                )
                .map_err(CliError::io)?;
                if let Some(p) = previous {
                    write!(out, " shrink={}", output::fmt_num(p / err)).map_err(CliError::io)?;
                }
                writeln!(out).map_err(CliError::io)?;
                previous = Some(err);
            }
            out.flush().map_err(CliError::io)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Compute { kind, params, tol } => compute(kind, params, *tol),
        Command::Verify { suite, tol_scale, format } => run_verify(suite, *tol_scale, *format),
        Command::Table { kind, grid, format, out, tol } => table(kind, grid, *format, out.as_ref(), *tol),
        Command::Limits { kind, params, ns, format, tol } => limits(kind, params, ns, *format, *tol),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("harmonia: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
