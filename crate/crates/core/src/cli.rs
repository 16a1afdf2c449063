//! Command-line front end. Every subcommand renders a CSV table with a
//! one-line header; numbers use scientific notation with nine significant
//! digits and missing values are empty fields.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::bessel::{self, BesselSolution};
use crate::error::Error;
use crate::frac_ops::{caputo_numeric, caputo_power, QuadConfig};
use crate::hypergeom::{conf_hyper_frac, gauss_hyper_frac, HypergeomParams};
use crate::legendre::{legendre_coeffs, legendre_ode_solve, LegendreProblem, Parity, SERIES_X_MAX};
use crate::roots::RootScan;
use crate::vector_calc::{
    heat_solution_assemble, laplace_residual_3d, laplacian_spherical, radial_eigen_exponents, SeparableField3D,
    SphericalPoint,
};

/// Environment variable that overrides the default series caps.
pub const MAX_TERMS_ENV: &str = "FRACSPEC_MAX_TERMS";

#[derive(Debug, Parser)]
#[command(name = "fracspec", version, about = "Fractional calculus solvers emitting CSV data")]
pub struct RunConfig {
    /// Write the CSV here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Print the default parameters of every subcommand and exit.
    #[arg(long)]
    pub show_defaults: bool,

    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Even or odd solution of the fractional Legendre equation on a grid.
    #[command(allow_negative_numbers = true)]
    Legendre(LegendreArgs),
    /// Radial solution of the fractional Bessel equation on a grid.
    #[command(allow_negative_numbers = true)]
    Bessel(BesselArgs),
    /// The order nu as a function of (alpha, rho) from the index equation.
    #[command(allow_negative_numbers = true)]
    BesselSurface(SurfaceArgs),
    /// Fractional confluent hypergeometric series.
    #[command(allow_negative_numbers = true)]
    ConfHyper(ConfHyperArgs),
    /// Fractional Gauss hypergeometric series.
    #[command(allow_negative_numbers = true)]
    GaussHyper(GaussHyperArgs),
    /// Caputo derivative of x^beta, closed form against quadrature.
    #[command(allow_negative_numbers = true)]
    Caputo(CaputoArgs),
    /// Residual of an assembled solution of the fractional Laplace equation.
    #[command(allow_negative_numbers = true)]
    LaplaceCheck(LaplaceArgs),
    /// Residual of an assembled mode of the fractional heat equation.
    #[command(allow_negative_numbers = true)]
    HeatCheck(HeatArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ParityArg {
    Even,
    Odd,
}

impl From<ParityArg> for Parity {
    fn from(p: ParityArg) -> Parity {
        match p {
            ParityArg::Even => Parity::Even,
            ParityArg::Odd => Parity::Odd,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LegendreMethod {
    Series,
    Ode,
}

#[derive(Debug, Clone, Args)]
pub struct LegendreArgs {
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
    #[arg(long, default_value_t = 6.0)]
    pub lambda: f64,
    #[arg(long, value_enum, default_value_t = ParityArg::Even)]
    pub parity: ParityArg,
    /// Azimuthal order; nonzero values need `--method ode`.
    #[arg(long, default_value_t = 0)]
    pub m: u32,
    #[arg(long, value_enum, default_value_t = LegendreMethod::Series)]
    pub method: LegendreMethod,
    #[arg(long, default_value_t = -0.95)]
    pub xmin: f64,
    #[arg(long, default_value_t = 0.95)]
    pub xmax: f64,
    /// Number of grid intervals.
    #[arg(long, default_value_t = 100)]
    pub steps: usize,
    /// Series length.
    #[arg(long, env = MAX_TERMS_ENV, default_value_t = 2000)]
    pub terms: usize,
}

#[derive(Debug, Clone, Args)]
pub struct BesselArgs {
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
    #[arg(long, default_value_t = 0.0)]
    pub nu: f64,
    #[arg(long, default_value_t = 1.0)]
    pub k: f64,
    /// Index root to use; defaults to the largest nonnegative root.
    #[arg(long)]
    pub rho: Option<f64>,
    #[arg(long, default_value_t = -10.0)]
    pub rho_scan_min: f64,
    #[arg(long, default_value_t = 10.0)]
    pub rho_scan_max: f64,
    #[arg(long, default_value_t = 0.0)]
    pub rmin: f64,
    #[arg(long, default_value_t = 10.0)]
    pub rmax: f64,
    #[arg(long, default_value_t = 100)]
    pub steps: usize,
    /// Index of the last series coefficient.
    #[arg(long, env = MAX_TERMS_ENV, default_value_t = 120)]
    pub terms: usize,
}

#[derive(Debug, Clone, Args)]
pub struct SurfaceArgs {
    #[arg(long, default_value_t = 0.5)]
    pub alpha_min: f64,
    #[arg(long, default_value_t = 1.0)]
    pub alpha_max: f64,
    #[arg(long, default_value_t = 0.0)]
    pub rho_min: f64,
    #[arg(long, default_value_t = 5.0)]
    pub rho_max: f64,
    /// Number of grid intervals along each axis.
    #[arg(long, default_value_t = 50)]
    pub steps: usize,
}

#[derive(Debug, Clone, Args)]
pub struct ConfHyperArgs {
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,
    #[arg(long, default_value_t = 1.0)]
    pub c: f64,
    #[arg(long, default_value_t = 0.0)]
    pub zmin: f64,
    #[arg(long, default_value_t = 1.0)]
    pub zmax: f64,
    #[arg(long, default_value_t = 10)]
    pub steps: usize,
    #[arg(long, env = MAX_TERMS_ENV, default_value_t = crate::hypergeom::DEFAULT_MAX_TERMS)]
    pub max_terms: usize,
}

#[derive(Debug, Clone, Args)]
pub struct GaussHyperArgs {
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,
    #[arg(long, default_value_t = 1.0)]
    pub b: f64,
    #[arg(long, default_value_t = 1.0)]
    pub c: f64,
    #[arg(long, default_value_t = 0.0)]
    pub zmin: f64,
    #[arg(long, default_value_t = 0.9)]
    pub zmax: f64,
    #[arg(long, default_value_t = 9)]
    pub steps: usize,
    #[arg(long, env = MAX_TERMS_ENV, default_value_t = crate::hypergeom::DEFAULT_MAX_TERMS)]
    pub max_terms: usize,
    /// Leave divergent points empty instead of failing.
    #[arg(long)]
    pub skip_divergent: bool,
}

#[derive(Debug, Clone, Args)]
pub struct CaputoArgs {
    #[arg(long, default_value_t = 0.5)]
    pub alpha: f64,
    #[arg(long, default_value_t = 2.0)]
    pub beta: f64,
    #[arg(long, default_value_t = 0.1)]
    pub xmin: f64,
    #[arg(long, default_value_t = 2.0)]
    pub xmax: f64,
    #[arg(long, default_value_t = 19)]
    pub steps: usize,
}

#[derive(Debug, Clone, Args)]
pub struct LaplaceArgs {
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
    #[arg(long, default_value_t = 6.0)]
    pub lambda: f64,
    #[arg(long, value_enum, default_value_t = ParityArg::Even)]
    pub parity: ParityArg,
    #[arg(long, default_value_t = 20)]
    pub points: usize,
    #[arg(long, env = MAX_TERMS_ENV, default_value_t = 2000)]
    pub terms: usize,
    /// Largest acceptable residual.
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
}

#[derive(Debug, Clone, Args)]
pub struct HeatArgs {
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
    #[arg(long, default_value_t = 0.0)]
    pub nu: f64,
    #[arg(long, default_value_t = 1.0)]
    pub k: f64,
    /// Diffusivity `a` in `u_t = a² Δu`.
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,
    #[arg(long, default_value_t = 1.0)]
    pub amplitude: f64,
    #[arg(long, default_value_t = 0.0)]
    pub phase: f64,
    #[arg(long, default_value_t = 0.5)]
    pub t: f64,
    #[arg(long, default_value_t = 20)]
    pub points: usize,
    #[arg(long, env = MAX_TERMS_ENV, default_value_t = 120)]
    pub terms: usize,
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid argument: {0}")]
    Validation(String),

    #[error("{context}: {source}")]
    Numeric {
        context: String,
        #[source]
        source: Error,
    },

    #[error("check failed: {0}")]
    CheckFailed(String),

    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 2 for rejected parameters, 3 for numerical failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) | CliError::Io(_) => 2,
            CliError::Numeric { source, .. } => match source {
                Error::Domain(_) | Error::DegenerateParameter(_) | Error::SingularPoint(_) => 2,
                _ => 3,
            },
            CliError::CheckFailed(_) => 3,
        }
    }
}

fn numeric(context: impl Into<String>) -> impl FnOnce(Error) -> CliError {
    let context = context.into();
    move |source| CliError::Numeric { context, source }
}

/// Rendered data plus diagnostics meant for the error stream. A failed
/// residual check still carries its data.
#[derive(Debug, Default)]
pub struct Output {
    pub csv: String,
    pub notes: Vec<String>,
    pub failure: Option<CliError>,
}

/// Formats a value with nine significant digits; `None` is an empty field.
pub fn format_value(v: Option<f64>) -> String {
    match v {
        Some(v) if v.is_finite() => format!("{v:.8e}"),
        _ => String::new(),
    }
}

struct Csv(String);

impl Csv {
    fn new(columns: &[&str]) -> Self {
        Csv(columns.join(",") + "\n")
    }

    fn row(&mut self, values: &[Option<f64>]) {
        let fields: Vec<String> = values.iter().map(|&v| format_value(v)).collect();
        let _ = writeln!(self.0, "{}", fields.join(","));
    }
}

/// `steps + 1` evenly spaced points from `lo` to `hi`.
fn grid(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    (0..=steps)
        .map(|i| {
            if i == steps {
                hi
            } else {
                lo + (hi - lo) * i as f64 / steps as f64
            }
        })
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), CliError> {
    if cond {
        Ok(())
    } else {
        Err(CliError::Validation(msg()))
    }
}

fn check_alpha(alpha: f64) -> Result<(), CliError> {
    ensure(alpha > 0.0 && alpha <= 1.0, || {
        format!("--alpha must lie in (0, 1], got {alpha}")
    })
}

fn check_range(name: &str, lo: f64, hi: f64, steps: usize) -> Result<(), CliError> {
    ensure(lo.is_finite() && hi.is_finite() && lo <= hi, || {
        format!("--{name}min must not exceed --{name}max, got [{lo}, {hi}]")
    })?;
    ensure(steps >= 1, || "--steps must be at least 1".to_string())
}

/// Executes a parsed configuration.
pub fn run(config: &RunConfig) -> Result<Output, CliError> {
    if config.show_defaults {
        return Ok(Output {
            csv: show_defaults(),
            ..Output::default()
        });
    }
    match &config.command {
        None => Err(CliError::Validation(
            "a subcommand is required (see --help)".to_string(),
        )),
        Some(Command::Legendre(a)) => run_legendre(a),
        Some(Command::Bessel(a)) => run_bessel(a),
        Some(Command::BesselSurface(a)) => run_surface(a),
        Some(Command::ConfHyper(a)) => run_conf_hyper(a),
        Some(Command::GaussHyper(a)) => run_gauss_hyper(a),
        Some(Command::Caputo(a)) => run_caputo(a),
        Some(Command::LaplaceCheck(a)) => run_laplace(a),
        Some(Command::HeatCheck(a)) => run_heat(a),
    }
}

/// Default values of every subcommand, one line per subcommand.
pub fn show_defaults() -> String {
    let cmd = RunConfig::command();
    let mut out = String::new();
    for sub in cmd.get_subcommands() {
        let mut line = sub.get_name().to_string();
        for arg in sub.get_arguments() {
            let Some(long) = arg.get_long() else { continue };
            let defaults = arg.get_default_values();
            if defaults.is_empty() {
                continue;
            }
            let vals: Vec<String> = defaults.iter().map(|v| v.to_string_lossy().into_owned()).collect();
            let _ = write!(line, " --{long} {}", vals.join(","));
        }
        let _ = writeln!(out, "{line}");
    }
    let _ = writeln!(
        out,
        "# {MAX_TERMS_ENV} overrides the series caps (--terms, --max-terms)"
    );
    out
}

fn run_legendre(a: &LegendreArgs) -> Result<Output, CliError> {
    check_alpha(a.alpha)?;
    check_range("x", a.xmin, a.xmax, a.steps)?;
    ensure(a.terms >= 2, || format!("--terms must be at least 2, got {}", a.terms))?;
    let limit = match a.method {
        LegendreMethod::Series => SERIES_X_MAX,
        LegendreMethod::Ode => 1.0,
    };
    let inside = |x: f64| match a.method {
        LegendreMethod::Series => x.abs() <= limit,
        LegendreMethod::Ode => x.abs() < limit,
    };
    ensure(inside(a.xmin) && inside(a.xmax), || {
        format!(
            "grid [{}, {}] leaves the domain |x| {} {limit} of the {:?} solver",
            a.xmin,
            a.xmax,
            if a.method == LegendreMethod::Series { "<=" } else { "<" },
            a.method
        )
    })?;
    ensure(a.m == 0 || a.method == LegendreMethod::Ode, || {
        "--m other than 0 needs --method ode".to_string()
    })?;
    let prob = LegendreProblem::new(a.alpha, a.lambda, a.parity.into(), a.terms)
        .map_err(numeric("legendre"))?
        .with_m_azimuthal(a.m);
    let xs = grid(a.xmin, a.xmax, a.steps);
    let context = || format!("legendre (alpha = {}, lambda = {}, m = {})", a.alpha, a.lambda, a.m);
    let (values, notes) = match a.method {
        LegendreMethod::Series => {
            let s = legendre_coeffs(&prob).map_err(numeric(context()))?;
            let mut notes = Vec::new();
            if let Some(n) = s.terminates_at {
                notes.push(format!("series terminates at degree {n}"));
            }
            let mut vals = Vec::with_capacity(xs.len());
            let mut worst_tail = 0.0_f64;
            for &x in &xs {
                let v = s.eval(x).map_err(numeric(context()))?;
                worst_tail = worst_tail.max(v.tail_bound);
                vals.push(v.value);
            }
            notes.push(format!("largest tail bound {worst_tail:.3e}"));
            (vals, notes)
        }
        LegendreMethod::Ode => (legendre_ode_solve(&prob, &xs).map_err(numeric(context()))?, Vec::new()),
    };
    Ok(table_xy(&["x", "p"], &xs, &values, notes))
}

fn table_xy(columns: &[&str], xs: &[f64], ys: &[f64], notes: Vec<String>) -> Output {
    let mut csv = Csv::new(columns);
    for (&x, &y) in xs.iter().zip(ys) {
        csv.row(&[Some(x), Some(y)]);
    }
    Output {
        csv: csv.0,
        notes,
        failure: None,
    }
}

fn run_bessel(a: &BesselArgs) -> Result<Output, CliError> {
    check_alpha(a.alpha)?;
    ensure(a.nu >= 0.0, || format!("--nu must be >= 0, got {}", a.nu))?;
    ensure(a.k > 0.0, || format!("--k must be > 0, got {}", a.k))?;
    ensure(a.rmin >= 0.0, || format!("--rmin must be >= 0, got {}", a.rmin))?;
    check_range("r", a.rmin, a.rmax, a.steps)?;
    ensure(a.rho_scan_min < a.rho_scan_max, || {
        "--rho-scan-min must be below --rho-scan-max".to_string()
    })?;
    let context = format!("bessel (nu = {}, alpha = {})", a.nu, a.alpha);
    let scan = RootScan::new(a.rho_scan_min, a.rho_scan_max).map_err(numeric(&context))?;
    let roots = bessel::solve_rho(a.nu, a.alpha, &scan).map_err(numeric(&context))?;
    let mut notes = vec![format!(
        "index roots: {}",
        roots.iter().map(|r| format!("{r:.10}")).collect::<Vec<_>>().join(", ")
    )];
    let rho = match a.rho {
        Some(r) => r,
        None => bessel::default_rho(&roots).ok_or_else(|| CliError::Numeric {
            context: context.clone(),
            source: Error::NoRoot {
                lo: a.rho_scan_min.max(0.0),
                hi: a.rho_scan_max,
            },
        })?,
    };
    notes.push(format!("using rho = {rho:.10}"));
    let sol = BesselSolution::new(a.alpha, a.nu, a.k, rho, a.terms).map_err(numeric(&context))?;
    let rs = grid(a.rmin, a.rmax, a.steps);
    let vals = rs
        .iter()
        .map(|&r| sol.eval(r))
        .collect::<Result<Vec<_>, _>>()
        .map_err(numeric(&context))?;
    Ok(table_xy(&["r", "R"], &rs, &vals, notes))
}

fn run_surface(a: &SurfaceArgs) -> Result<Output, CliError> {
    check_alpha(a.alpha_min)?;
    check_alpha(a.alpha_max)?;
    ensure(a.alpha_min <= a.alpha_max, || {
        "--alpha-min must not exceed --alpha-max".to_string()
    })?;
    check_range("rho-", a.rho_min, a.rho_max, a.steps)?;
    let alphas = grid(a.alpha_min, a.alpha_max, a.steps);
    let rhos = grid(a.rho_min, a.rho_max, a.steps);
    let surface = bessel::nu_surface(&alphas, &rhos);
    let mut csv = Csv::new(&["alpha", "rho", "nu"]);
    let mut missing = 0;
    for (alpha, row) in alphas.iter().zip(&surface) {
        for (rho, nu) in rhos.iter().zip(row) {
            missing += usize::from(nu.is_none());
            csv.row(&[Some(*alpha), Some(*rho), *nu]);
        }
    }
    let notes = if missing > 0 {
        vec![format!("{missing} cells sit on gamma poles and are left empty")]
    } else {
        Vec::new()
    };
    Ok(Output {
        csv: csv.0,
        notes,
        failure: None,
    })
}

fn hyper_params(alpha: f64, a: f64, b: f64, c: f64, max_terms: usize) -> Result<HypergeomParams, CliError> {
    check_alpha(alpha)?;
    ensure(max_terms >= 1, || "--max-terms must be at least 1".to_string())?;
    let p = HypergeomParams::new(a, b, c, alpha)
        .map_err(numeric("hypergeometric parameters"))?
        .with_max_terms(max_terms);
    p.validate()
        .map_err(numeric(format!("hypergeometric parameters (c = {c})")))?;
    Ok(p)
}

fn run_conf_hyper(a: &ConfHyperArgs) -> Result<Output, CliError> {
    let p = hyper_params(a.alpha, a.a, 0.0, a.c, a.max_terms)?;
    ensure(a.zmin >= 0.0, || format!("--zmin must be >= 0, got {}", a.zmin))?;
    check_range("z", a.zmin, a.zmax, a.steps)?;
    let zs = grid(a.zmin, a.zmax, a.steps);
    let mut ys = Vec::with_capacity(zs.len());
    for &z in &zs {
        let s = conf_hyper_frac(&p, z).map_err(numeric(format!(
            "conf-hyper (a = {}, c = {}, alpha = {}, z = {z})",
            a.a, a.c, a.alpha
        )))?;
        ys.push(s.value);
    }
    Ok(table_xy(&["z", "y"], &zs, &ys, Vec::new()))
}

fn run_gauss_hyper(a: &GaussHyperArgs) -> Result<Output, CliError> {
    let p = hyper_params(a.alpha, a.a, a.b, a.c, a.max_terms)?;
    ensure(a.zmin >= 0.0, || format!("--zmin must be >= 0, got {}", a.zmin))?;
    check_range("z", a.zmin, a.zmax, a.steps)?;
    let mut csv = Csv::new(&["z", "y"]);
    let mut notes = Vec::new();
    for z in grid(a.zmin, a.zmax, a.steps) {
        match gauss_hyper_frac(&p, z) {
            Ok(s) => csv.row(&[Some(z), Some(s.value)]),
            Err(e @ Error::NoConvergence { .. }) if a.skip_divergent => {
                notes.push(format!("z = {z}: {e}"));
                csv.row(&[Some(z), None]);
            }
            Err(e) => {
                return Err(numeric(format!(
                    "gauss-hyper (a = {}, b = {}, c = {}, alpha = {}, z = {z})",
                    a.a, a.b, a.c, a.alpha
                ))(e))
            }
        }
    }
    Ok(Output {
        csv: csv.0,
        notes,
        failure: None,
    })
}

fn run_caputo(a: &CaputoArgs) -> Result<Output, CliError> {
    check_alpha(a.alpha)?;
    ensure(a.beta >= 0.0, || format!("--beta must be >= 0, got {}", a.beta))?;
    ensure(a.xmin >= 0.0, || format!("--xmin must be >= 0, got {}", a.xmin))?;
    check_range("x", a.xmin, a.xmax, a.steps)?;
    let context = format!("caputo (alpha = {}, beta = {})", a.alpha, a.beta);
    let (coef, exponent) = caputo_power(a.beta, a.alpha).map_err(numeric(&context))?;
    let quad = if a.alpha < 1.0 {
        Some(QuadConfig::new(a.alpha).map_err(numeric(&context))?)
    } else {
        None
    };
    let mut csv = Csv::new(&["x", "exact", "numeric"]);
    for x in grid(a.xmin, a.xmax, a.steps) {
        let exact = if coef == 0.0 { 0.0 } else { coef * x.powf(exponent) };
        let num = match &quad {
            Some(cfg) if x > 0.0 => Some(caputo_numeric(|t| t.powf(a.beta), x, cfg).map_err(numeric(&context))?),
            _ => None,
        };
        csv.row(&[Some(x), Some(exact), num]);
    }
    Ok(Output {
        csv: csv.0,
        notes: Vec::new(),
        failure: None,
    })
}

/// `(s_i)` spread over `[0, 1]`, or the midpoint for a single sample.
fn fractions(n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| if n == 1 { 0.5 } else { i as f64 / (n - 1) as f64 })
}

fn run_laplace(a: &LaplaceArgs) -> Result<Output, CliError> {
    check_alpha(a.alpha)?;
    ensure(a.points >= 1, || "--points must be at least 1".to_string())?;
    ensure(a.terms >= 2, || format!("--terms must be at least 2, got {}", a.terms))?;
    let context = format!("laplace-check (alpha = {}, lambda = {})", a.alpha, a.lambda);
    let scan = RootScan::new(0.0, 10.0 + 2.0 * a.lambda.abs().sqrt()).map_err(numeric(&context))?;
    let exponents = radial_eigen_exponents(a.lambda, a.alpha, &scan).map_err(numeric(&context))?;
    let m = exponents.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let prob = LegendreProblem::new(a.alpha, a.lambda, a.parity.into(), a.terms).map_err(numeric(&context))?;
    let series = legendre_coeffs(&prob).map_err(numeric(&context))?;
    let u = SeparableField3D::laplace_mode(a.alpha, a.lambda, m, series.to_angular()).map_err(numeric(&context))?;

    let points: Vec<SphericalPoint> = fractions(a.points)
        .map(|s| SphericalPoint::new(0.5 + 1.5 * s, 0.4 + (PI - 0.8) * s, 2.0 * PI * s))
        .collect();
    let mut csv = Csv::new(&["r", "theta", "phi", "u", "residual"]);
    for p in &points {
        let res = laplacian_spherical(&u, *p).map_err(numeric(&context))?;
        csv.row(&[
            Some(p.r),
            Some(p.theta),
            Some(p.phi),
            Some(u.eval(p.r, p.theta, p.phi)),
            Some(res),
        ]);
    }
    let worst = laplace_residual_3d(&u, &points).map_err(numeric(&context))?;
    let notes = vec![format!("radial exponent m = {m:.10}, max |residual| = {worst:.3e}")];
    let failure = (worst > a.tol)
        .then(|| CliError::CheckFailed(format!("{context}: max |residual| {worst:.3e} > tol {:e}", a.tol)));
    Ok(Output {
        csv: csv.0,
        notes,
        failure,
    })
}

fn run_heat(a: &HeatArgs) -> Result<Output, CliError> {
    check_alpha(a.alpha)?;
    ensure(a.k > 0.0, || format!("--k must be > 0, got {}", a.k))?;
    ensure(a.nu >= 0.0 && a.nu.fract() == 0.0, || {
        format!("--nu must be a nonnegative integer, got {}", a.nu)
    })?;
    ensure(a.t >= 0.0, || format!("--t must be >= 0, got {}", a.t))?;
    ensure(a.points >= 1, || "--points must be at least 1".to_string())?;
    let context = format!("heat-check (alpha = {}, nu = {}, k = {})", a.alpha, a.nu, a.k);
    let mode =
        heat_solution_assemble(a.alpha, a.k, a.nu, a.amplitude, a.phase, a.a, a.terms).map_err(numeric(&context))?;
    let mut csv = Csv::new(&["t", "r", "theta", "u", "residual"]);
    let mut worst = 0.0_f64;
    for s in fractions(a.points) {
        let (r, theta) = (0.5 + 2.5 * s, 2.0 * PI * s);
        let u = mode.eval(a.t, r, theta).map_err(numeric(&context))?;
        let res = mode.residual(a.t, r, theta).map_err(numeric(&context))?;
        worst = worst.max(res.abs());
        csv.row(&[Some(a.t), Some(r), Some(theta), Some(u), Some(res)]);
    }
    let notes = vec![format!("rho = {:.10}, max |residual| = {worst:.3e}", mode.radial.rho())];
    let failure = (worst > a.tol)
        .then(|| CliError::CheckFailed(format!("{context}: max |residual| {worst:.3e} > tol {:e}", a.tol)));
    Ok(Output {
        csv: csv.0,
        notes,
        failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> RunConfig {
        RunConfig::try_parse_from(std::iter::once("fracspec").chain(args.iter().copied())).unwrap()
    }

    fn rows(out: &Output) -> Vec<Vec<String>> {
        out.csv
            .lines()
            .skip(1)
            .map(|l| l.split(',').map(str::to_string).collect())
            .collect()
    }

    #[test]
    fn formatting() {
        assert_eq!(format_value(Some(std::f64::consts::E)), "2.71828183e0");
        assert_eq!(format_value(Some(-0.0625)), "-6.25000000e-2");
        assert_eq!(format_value(None), "");
        assert_eq!(format_value(Some(f64::NAN)), "");
    }

    #[test]
    fn grid_endpoints_are_exact() {
        let g = grid(0.0, 5.0, 50);
        assert_eq!(g.len(), 51);
        assert_eq!(g[30], 3.0);
        assert_eq!(g[50], 5.0);
    }

    #[test]
    fn legendre_example() {
        let out = run(&parse(&[
            "legendre", "--alpha", "1", "--lambda", "6", "--parity", "even", "--xmin", "-0.95", "--xmax", "0.95",
            "--steps", "100",
        ]))
        .unwrap();
        assert!(out.csv.starts_with("x,p\n"));
        let r = rows(&out);
        assert_eq!(r.len(), 101);
        for row in r {
            let x: f64 = row[0].parse().unwrap();
            let p: f64 = row[1].parse().unwrap();
            assert!((p - (1.0 - 3.0 * x * x)).abs() < 1e-8);
        }
    }

    #[test]
    fn surface_example() {
        let out = run(&parse(&[
            "bessel-surface",
            "--alpha-min",
            "0.5",
            "--alpha-max",
            "1",
            "--rho-min",
            "0",
            "--rho-max",
            "5",
            "--steps",
            "50",
        ]))
        .unwrap();
        assert!(out.csv.starts_with("alpha,rho,nu\n"));
        let hit = rows(&out)
            .into_iter()
            .find(|r| r[0].parse::<f64>().unwrap() == 1.0 && r[1].parse::<f64>().unwrap() == 3.0)
            .unwrap();
        assert!((hit[2].parse::<f64>().unwrap() - 3.0).abs() < 1e-8);
    }

    #[test]
    fn conf_hyper_example() {
        let out = run(&parse(&[
            "conf-hyper",
            "--alpha",
            "1",
            "--a",
            "1",
            "--c",
            "1",
            "--zmax",
            "1",
            "--steps",
            "10",
        ]))
        .unwrap();
        let last = rows(&out).pop().unwrap();
        assert_eq!(last[0], "1.00000000e0");
        assert_eq!(last[1], "2.71828183e0");
    }

    #[test]
    fn exit_codes() {
        let bad_alpha = run(&parse(&["legendre", "--alpha", "1.5"])).unwrap_err();
        assert_eq!(bad_alpha.exit_code(), 2);
        let divergent = run(&parse(&["gauss-hyper", "--zmax", "1"])).unwrap_err();
        assert_eq!(divergent.exit_code(), 3);
        let skipped = run(&parse(&["gauss-hyper", "--zmax", "1", "--skip-divergent"])).unwrap();
        assert!(skipped.csv.ends_with("1.00000000e0,\n"));
        let no_root = run(&parse(&[
            "bessel",
            "--nu",
            "3",
            "--rho-scan-min",
            "4",
            "--rho-scan-max",
            "6",
        ]))
        .unwrap_err();
        assert_eq!(no_root.exit_code(), 3);
        assert_eq!(run(&parse(&[])).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn checks_pass_at_defaults() {
        let out = run(&parse(&["laplace-check"])).unwrap();
        assert!(out.failure.is_none(), "{:?}", out.notes);
        let out = run(&parse(&["heat-check"])).unwrap();
        assert!(out.failure.is_none(), "{:?}", out.notes);
    }

    #[test]
    fn defaults_listing_mentions_every_subcommand() {
        let s = show_defaults();
        for name in [
            "legendre",
            "bessel",
            "bessel-surface",
            "conf-hyper",
            "gauss-hyper",
            "caputo",
            "laplace-check",
            "heat-check",
        ] {
            assert!(
                s.lines().any(|l| l.starts_with(&format!("{name} "))),
                "{name} missing in\n{s}"
            );
        }
        assert!(s.contains("--alpha-min 0.5"));
    }
}
