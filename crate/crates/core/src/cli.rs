//! Command-line front end behind the `fracwave` binary.
//!
//! Exit codes: 0 success, 1 failed verification, 2 bad configuration,
//! 3 numerical failure, 4 I/O failure. `FRACWAVE_THREADS` caps the worker
//! pool.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::acceptance::{self, CRITERIA};
use crate::differint::differintegral;
use crate::error::Error;
use crate::field::Axis;
use crate::figures::{self, FigureGrid};
use crate::grid::GridFunction;
use crate::numeric::Order;

pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;
pub const EXIT_IO: i32 = 4;

pub const THREADS_ENV: &str = "FRACWAVE_THREADS";

#[derive(Debug, Parser)]
#[command(name = "fracwave", version, about = "Differintegrals, fractional Fourier series and fractional wave equations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Apply S^alpha (alpha > 0 integrates, alpha < 0 differentiates) to a built-in function.
    Differint(DifferintArgs),
    /// Regenerate the field data of a figure as CSV and/or SVG.
    Figures(FiguresArgs),
    /// Run the acceptance suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BuiltinFn {
    Const,
    Sin,
    /// Smooth bump on the middle half of [x0, x1].
    Bump,
    Exp,
}

#[derive(Debug, clap::Args)]
struct DifferintArgs {
    #[arg(long = "fn", value_enum)]
    function: BuiltinFn,
    #[arg(long, allow_negative_numbers = true)]
    alpha: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    x0: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    x1: f64,
    #[arg(long, default_value_t = 1e-3)]
    step: f64,
    /// CSV destination; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Svg,
    Both,
}

#[derive(Debug, clap::Args)]
struct FiguresArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=7))]
    id: u8,
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Both)]
    format: Format,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    x0: f64,
    #[arg(long, default_value_t = 4.0 * std::f64::consts::PI, allow_negative_numbers = true)]
    x1: f64,
    #[arg(long, default_value_t = 201)]
    nx: usize,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    t0: f64,
    #[arg(long, default_value_t = 4.0 * std::f64::consts::PI, allow_negative_numbers = true)]
    t1: f64,
    #[arg(long, default_value_t = 201)]
    nt: usize,
    /// Step of the initial-data grid behind figures 1-4.
    #[arg(long, default_value_t = 1e-3)]
    ic_step: f64,
}

#[derive(Debug, clap::Args)]
struct VerifyArgs {
    /// Multiplies every upper-bound tolerance.
    #[arg(long, default_value_t = 1.0)]
    tol_scale: f64,
    /// Print criterion ids and names without running them.
    #[arg(long)]
    list: bool,
}

/// A failure mapped to an exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn config(message: impl Into<String>) -> Self {
        Failure { code: EXIT_CONFIG, message: message.into() }
    }

    fn numeric(e: Error) -> Self {
        Failure { code: EXIT_NUMERIC, message: e.to_string() }
    }

    fn io(path: &Path, e: io::Error) -> Self {
        Failure { code: EXIT_IO, message: format!("{}: {e}", path.display()) }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    if let Err(f) = configure_threads() {
        eprintln!("error: {}", f.message);
        return f.code;
    }
    let result = match cli.command {
        Command::Differint(a) => cmd_differint(a),
        Command::Figures(a) => cmd_figures(a),
        Command::Verify(a) => cmd_verify(a),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var(THREADS_ENV) else { return Ok(()) };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Failure::config(format!("{THREADS_ENV} must be a positive integer, got {raw:?}")))?;
    // a pool may already exist when called twice in one process
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

/// Fails early if a file could not be created at `path` later.
fn check_writable_parent(path: &Path) -> Result<(), Failure> {
    let parent = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    if !parent.is_dir() {
        return Err(Failure::config(format!("output directory {} does not exist", parent.display())));
    }
    if path.is_dir() {
        return Err(Failure::config(format!("{} is a directory", path.display())));
    }
    Ok(())
}

fn builtin(function: BuiltinFn, x0: f64, x1: f64) -> impl Fn(f64) -> f64 {
    let (c, r) = (0.5 * (x0 + x1), 0.25 * (x1 - x0));
    move |x| match function {
        BuiltinFn::Const => 1.0,
        BuiltinFn::Sin => x.sin(),
        BuiltinFn::Exp => x.exp(),
        BuiltinFn::Bump => {
            let s = (x - c) / r;
            if s.abs() < 1.0 {
                (-1.0 / (1.0 - s * s)).exp()
            } else {
                0.0
            }
        }
    }
}

fn cmd_differint(a: DifferintArgs) -> Result<i32, Failure> {
    let alpha = Order::new(a.alpha).map_err(|e| Failure::config(e.to_string()))?;
    if !(-2.0..=4.0).contains(&alpha.value()) {
        return Err(Failure::config(format!("--alpha must lie in [-2, 4], got {}", alpha.value())));
    }
    if !(a.step > 0.0) || !(a.x1 > a.x0) || !a.x0.is_finite() || !a.x1.is_finite() {
        return Err(Failure::config("need x0 < x1 and a positive step"));
    }
    if (a.x1 - a.x0) / a.step > 2e6 {
        return Err(Failure::config("grid would exceed 2e6 samples"));
    }
    if let Some(out) = &a.out {
        check_writable_parent(out)?;
    }
    let f = builtin(a.function, a.x0, a.x1);
    let grid = GridFunction::with_step(a.x0, a.x1, a.step, |x| Complex64::new(f(x), 0.0))
        .map_err(|e| Failure::config(e.to_string()))?;
    let result = differintegral(&grid, alpha).map_err(Failure::numeric)?;

    let mut csv = Vec::new();
    result.write_csv(&mut csv).map_err(Failure::numeric)?;
    match &a.out {
        Some(path) => fs::write(path, &csv).map_err(|e| Failure::io(path, e))?,
        None => io::stdout().write_all(&csv).map_err(|e| Failure::io(Path::new("<stdout>"), e))?,
    }

    match index_law_summary(&grid, alpha) {
        Ok(Some(line)) => eprintln!("{line}"),
        Ok(None) => {}
        Err(e) => eprintln!("index law check skipped: {e}"),
    }
    Ok(0)
}

/// `S^{α/2} S^{α/2} f` against `S^α f` for integrals; `D^{|α|} S^{|α|} f`
/// against `f` for derivatives.
fn index_law_summary(f: &GridFunction, alpha: Order) -> crate::Result<Option<String>> {
    let a = alpha.value();
    if a == 0.0 {
        return Ok(None);
    }
    if a > 0.0 {
        let half = Order::new(a / 2.0)?;
        let two = differintegral(&differintegral(f, half)?, half)?;
        let one = differintegral(f, alpha)?;
        Ok(Some(format!("index law: sup |S^{} S^{} f - S^{a} f| = {:.3e}", a / 2.0, a / 2.0, two.sup_distance(&one))))
    } else {
        let b = Order::new(-a)?;
        let back = differintegral(&differintegral(f, b)?, alpha)?;
        Ok(Some(format!("index law: sup |S^{a} S^{} f - f| = {:.3e}", -a, back.sup_distance(f))))
    }
}

fn cmd_figures(a: FiguresArgs) -> Result<i32, Failure> {
    let config = |e: Error| Failure::config(e.to_string());
    let grid = FigureGrid {
        x: Axis::linspace(a.x0, a.x1, a.nx).map_err(config)?,
        t: Axis::linspace(a.t0, a.t1, a.nt).map_err(config)?,
        ic_step: a.ic_step,
    };
    if !(a.ic_step > 0.0) {
        return Err(Failure::config("--ic-step must be positive"));
    }
    if a.out_dir.exists() && !a.out_dir.is_dir() {
        return Err(Failure::config(format!("{} is not a directory", a.out_dir.display())));
    }
    let fig = figures::render(a.id, &grid).map_err(|e| match e {
        Error::Domain(_) | Error::InvalidGrid(_) | Error::OrderRange { .. } => Failure::config(e.to_string()),
        other => Failure::numeric(other),
    })?;

    fs::create_dir_all(&a.out_dir).map_err(|e| Failure::io(&a.out_dir, e))?;
    let stem = a.out_dir.join(format!("figure{}", a.id));
    if matches!(a.format, Format::Csv | Format::Both) {
        let path = stem.with_extension("csv");
        let csv = fig.csv().map_err(Failure::numeric)?;
        fs::write(&path, csv).map_err(|e| Failure::io(&path, e))?;
        eprintln!("wrote {}", path.display());
    }
    if matches!(a.format, Format::Svg | Format::Both) {
        let path = stem.with_extension("svg");
        fs::write(&path, fig.svg()).map_err(|e| Failure::io(&path, e))?;
        eprintln!("wrote {}", path.display());
    }
    eprintln!("{} masked cells of {}", fig.field.masked_count(), a.nx * a.nt);
    Ok(0)
}

fn cmd_verify(a: VerifyArgs) -> Result<i32, Failure> {
    if !(a.tol_scale > 0.0 && a.tol_scale.is_finite()) {
        return Err(Failure::config("--tol-scale must be positive"));
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let io_err = |e| Failure::io(Path::new("<stdout>"), e);
    if a.list {
        for c in CRITERIA {
            writeln!(out, "{:02} {}", c.id, c.name).map_err(io_err)?;
        }
        return Ok(0);
    }
    let mut failed = 0;
    for c in CRITERIA {
        let r = acceptance::run_one(c.id, a.tol_scale).expect("listed criterion");
        writeln!(out, "{r}").map_err(io_err)?;
        out.flush().map_err(io_err)?;
        failed += usize::from(!r.passed());
    }
    writeln!(out, "summary passed={} failed={failed} tol_scale={}", CRITERIA.len() - failed, a.tol_scale)
        .map_err(io_err)?;
    Ok(if failed == 0 { 0 } else { EXIT_VERIFY_FAILED })
}
